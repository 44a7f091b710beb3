#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

namespace s2g {

/// An n-tuple of nonnegative integers K = (K_1, ..., K_n), n >= 1.
///
/// Used both to index eigenfunction families (x^K, Q_{n,K}) and as the
/// exponent vector of a monomial inside RationalPoly.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> entries);
  MultiIndex(std::initializer_list<unsigned> entries);

  /// Zero multi-index of the given length.
  static MultiIndex zeros(std::size_t n);
  /// Unit multi-index e_i of length n.
  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  unsigned operator[](std::size_t i) const { return entries_[i]; }
  unsigned& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<unsigned>& entries() const { return entries_; }

  /// |K| = sum of entries.
  unsigned order() const;

  MultiIndex operator+(const MultiIndex& other) const;

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<unsigned> entries_;
};

/// Distinct-eigenvalue index k with Sturm-Liouville branch j >= 1.
struct SpectrumIndex {
  SpectrumIndex(unsigned k_, unsigned j_);
  unsigned k;
  unsigned j;
};

/// All K of length n with |K| = k, in lexicographically descending order,
/// e.g. (n=2, k=2) gives (2,0), (1,1), (0,2).
std::vector<MultiIndex> enumerate_multi_indices(std::size_t n, unsigned k);

/// All K of length n with |K| <= k_max, grouped by ascending order.
std::vector<MultiIndex> enumerate_multi_indices_up_to(std::size_t n, unsigned k_max);

/// Exact binomial coefficient; zero when k < 0 or top < k.
mpz_class binomial(long top, long k);

/// d_k(n) = binom(n-1+k, k), the multiplicity of k/alpha^2 on Gaussian space.
mpz_class gauss_multiplicity(std::size_t n, unsigned k);

/// binom(N+k, k) - binom(N+k-2, k-2), the multiplicity of the k-th distinct
/// eigenvalue of the round sphere S^N, with binom(., negative) = 0.
mpz_class sphere_multiplicity(unsigned N, unsigned k);

}  // namespace s2g
