#include "lieph/multiindex.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieph {

MultiIndex::MultiIndex(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
  if (n > kMaxDim) throw std::invalid_argument("multiindex dimension exceeds kMaxDim");
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

MultiIndex::MultiIndex(const std::vector<int>& entries) : MultiIndex(entries.size()) {
  for (std::size_t i = 0; i < entries.size(); ++i) set(i, entries[i]);
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  MultiIndex k(n);
  k.set(i, 1);
  return k;
}

void MultiIndex::set(std::size_t i, int value) {
  if (value < 0 || value > 255) throw std::out_of_range("multiindex entry out of range");
  degree_ += value - k_[i];
  k_[i] = static_cast<std::uint8_t>(value);
}

void MultiIndex::increment(std::size_t i, int by) { set(i, k_[i] + by); }

bool MultiIndex::divides(const MultiIndex& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (k_[i] > other.k_[i]) return false;
  return true;
}

Integer MultiIndex::factorial() const {
  Integer f = 1;
  for (std::size_t i = 0; i < n_; ++i) f *= lieph::factorial(k_[i]);
  return f;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, k_[i] + o.k_[i]);
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  MultiIndex r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, k_[i] - o.k_[i]);
  return r;
}

std::vector<std::size_t> MultiIndex::word() const {
  std::vector<std::size_t> w;
  w.reserve(degree_);
  for (std::size_t i = 0; i < n_; ++i)
    for (int j = 0; j < k_[i]; ++j) w.push_back(i);
  return w;
}

std::size_t MultiIndex::hash() const {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 131 + k_[i];
  return h;
}

bool GradedOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Integer multiindex_binomial(const MultiIndex& k, const MultiIndex& k1) {
  if (k.size() != k1.size() || !k1.divides(k))
    throw std::invalid_argument("multiindex_binomial: K1 is not <= K componentwise");
  Integer r = 1;
  for (std::size_t i = 0; i < k.size(); ++i) r *= binomial(k[i], k1[i]);
  return r;
}

std::vector<MultiIndex> monomials_of_degree(std::size_t n, int degree) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  MultiIndex k(n);
  // Enumerate compositions with the first variable taking the largest share first.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      k.set(i, left);
      out.push_back(k);
      k.set(i, 0);
      return;
    }
    for (int v = left; v >= 0; --v) {
      k.set(i, v);
      self(self, i + 1, left - v);
    }
    k.set(i, 0);
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<MultiIndex> monomials_up_to(std::size_t n, int max_degree) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto layer = monomials_of_degree(n, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<MultiIndex> sub_multiindices(const MultiIndex& k) {
  std::vector<MultiIndex> out{MultiIndex(k.size())};
  for (std::size_t i = 0; i < k.size(); ++i) {
    std::size_t m = out.size();
    for (int v = 1; v <= k[i]; ++v)
      for (std::size_t j = 0; j < m; ++j) {
        MultiIndex s = out[j];
        s.set(i, v);
        out.push_back(s);
      }
  }
  return out;
}

}  // namespace lieph

namespace lieph {

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < n_; ++i) s += (i ? "," : "") + std::to_string(k_[i]);
  return s + ")";
}

}  // namespace lieph
