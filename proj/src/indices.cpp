#include "s2g/indices.hpp"

#include <numeric>
#include <stdexcept>

namespace s2g {

MultiIndex::MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("MultiIndex: length must be >= 1");
}

MultiIndex::MultiIndex(std::initializer_list<unsigned> entries)
    : MultiIndex(std::vector<unsigned>(entries)) {}

MultiIndex MultiIndex::zeros(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0u)); }

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("MultiIndex::unit: index out of range");
  std::vector<unsigned> e(n, 0u);
  e[i] = 1;
  return MultiIndex(std::move(e));
}

unsigned MultiIndex::order() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0u);
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw std::invalid_argument("MultiIndex: length mismatch");
  std::vector<unsigned> e(entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.entries_[i];
  return MultiIndex(std::move(e));
}

SpectrumIndex::SpectrumIndex(unsigned k_, unsigned j_) : k(k_), j(j_) {
  if (j == 0) throw std::invalid_argument("SpectrumIndex: branch index j must be >= 1");
}

namespace {

void fill_compositions(std::vector<unsigned>& prefix, std::size_t pos, unsigned remaining,
                       std::vector<MultiIndex>& out) {
  const std::size_t n = prefix.size();
  if (pos + 1 == n) {
    prefix[pos] = remaining;
    out.emplace_back(prefix);
    return;
  }
  for (unsigned v = remaining + 1; v-- > 0;) {
    prefix[pos] = v;
    fill_compositions(prefix, pos + 1, remaining - v, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_multi_indices(std::size_t n, unsigned k) {
  if (n == 0) throw std::invalid_argument("enumerate_multi_indices: n must be >= 1");
  std::vector<MultiIndex> out;
  std::vector<unsigned> prefix(n, 0u);
  fill_compositions(prefix, 0, k, out);
  return out;
}

std::vector<MultiIndex> enumerate_multi_indices_up_to(std::size_t n, unsigned k_max) {
  std::vector<MultiIndex> out;
  for (unsigned k = 0; k <= k_max; ++k) {
    auto level = enumerate_multi_indices(n, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

mpz_class binomial(long top, long k) {
  mpz_class r;
  if (k < 0 || top < k || top < 0) return r;  // zero
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
  return r;
}

mpz_class gauss_multiplicity(std::size_t n, unsigned k) {
  if (n == 0) throw std::invalid_argument("gauss_multiplicity: n must be >= 1");
  return binomial(static_cast<long>(n) - 1 + k, k);
}

mpz_class sphere_multiplicity(unsigned N, unsigned k) {
  if (N == 0) throw std::invalid_argument("sphere_multiplicity: N must be >= 1");
  const long Nl = N;
  const long kl = k;
  return binomial(Nl + kl, kl) - binomial(Nl + kl - 2, kl - 2);
}

}  // namespace s2g
