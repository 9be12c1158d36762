#include "lieph/pbw.hpp"

#include <algorithm>

namespace lieph {

UEnvElement UEnvElement::monomial(const MultiIndex& j, const Rational& c) {
  UEnvElement u(j.size());
  u.add_term(j, c);
  return u;
}

Rational UEnvElement::coefficient(const MultiIndex& j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UEnvElement::add_term(const MultiIndex& j, const Rational& c) {
  if (c == 0) return;
  if (n_ == 0) n_ = j.size();
  auto [it, inserted] = terms_.try_emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UEnvElement& UEnvElement::operator+=(const UEnvElement& o) {
  for (const auto& [j, c] : o.terms_) add_term(j, c);
  if (n_ == 0) n_ = o.n_;
  return *this;
}

UEnvElement& UEnvElement::operator-=(const UEnvElement& o) {
  for (const auto& [j, c] : o.terms_) add_term(j, -c);
  if (n_ == 0) n_ = o.n_;
  return *this;
}

UEnvElement& UEnvElement::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [j, v] : terms_) v *= c;
  return *this;
}

std::string pbw_monomial_text(const MultiIndex& j, const std::vector<std::string>& labels, const std::string& prefix) {
  std::string s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += prefix + (i < labels.size() ? labels[i] : std::to_string(i + 1));
    if (j[i] > 1) s += "^" + std::to_string(j[i]);
  }
  return s;
}

std::string UEnvElement::render(const std::vector<std::string>& labels, const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [j, c] : terms_) {
    Rational mag = abs(c);
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono = pbw_monomial_text(j, labels, prefix);
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

UEnvElement EnvelopingAlgebra::times_generator(const MultiIndex& j, std::size_t mu) const {
  const std::size_t n = dim();
  std::size_t last = n;
  for (std::size_t i = n; i-- > 0;)
    if (j[i] > 0) {
      last = i;
      break;
    }
  if (last == n || mu >= last) {
    MultiIndex k = j;
    k.increment(mu);
    return UEnvElement::monomial(k);
  }
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find({j, mu});
    if (it != memo_.end()) return it->second;
  }
  // x_J = x_J' x_l with l the last letter; x_l x_mu = x_mu x_l + C^la_{l mu} x_la.
  MultiIndex jp = j;
  jp.increment(last, -1);
  UEnvElement out = times_generator(times_generator(jp, mu), last);
  for (std::size_t la = 0; la < n; ++la) {
    const Rational& c = lie_.constant(la, last, mu);
    if (c != 0) out += times_generator(jp, la) * c;
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(std::make_pair(j, mu), out);
  return out;
}

UEnvElement EnvelopingAlgebra::times_generator(const UEnvElement& a, std::size_t mu) const {
  UEnvElement out(dim());
  for (const auto& [j, c] : a.terms()) out += times_generator(j, mu) * c;
  return out;
}

UEnvElement EnvelopingAlgebra::word(const std::vector<std::size_t>& w) const {
  UEnvElement out = UEnvElement::one(dim());
  for (auto mu : w) out = times_generator(out, mu);
  return out;
}

UEnvElement EnvelopingAlgebra::multiply(const UEnvElement& a, const UEnvElement& b) const {
  UEnvElement out(dim());
  for (const auto& [k, cb] : b.terms()) {
    UEnvElement t = a;
    for (auto mu : k.word()) t = times_generator(t, mu);
    out += t * cb;
  }
  return out;
}

UEnvElement u_multiply(const EnvelopingAlgebra& u, const UEnvElement& a, const UEnvElement& b) {
  return u.multiply(a, b);
}

void add_to(UTensor& t, const MultiIndex& a, const MultiIndex& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

UTensor u_coproduct(const UEnvElement& a) {
  UTensor out;
  for (const auto& [j, c] : a.terms())
    for (const auto& j1 : sub_multiindices(j)) add_to(out, j1, j - j1, c * Rational(multiindex_binomial(j, j1)));
  return out;
}

UTensor u_tensor_multiply(const EnvelopingAlgebra& u, const UTensor& s, const UTensor& t) {
  UTensor out;
  for (const auto& [sk, sc] : s)
    for (const auto& [tk, tc] : t) {
      auto left = u.multiply(UEnvElement::monomial(sk.first), UEnvElement::monomial(tk.first));
      auto right = u.multiply(UEnvElement::monomial(sk.second), UEnvElement::monomial(tk.second));
      for (const auto& [a, ca] : left.terms())
        for (const auto& [b, cb] : right.terms()) add_to(out, a, b, sc * tc * ca * cb);
    }
  return out;
}

UTensor u_tensor_flip(const UTensor& t) {
  UTensor out;
  for (const auto& [k, c] : t) add_to(out, k.second, k.first, c);
  return out;
}

UEnvElement symmetrize(const EnvelopingAlgebra& u, const MultiIndex& j) {
  // Each distinct ordering occurs J! times among the |J|! permutations.
  std::vector<std::size_t> w = j.word();
  UEnvElement sum(u.dim());
  do {
    sum += u.word(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return sum * (Rational(j.factorial()) / Rational(factorial(j.degree())));
}

}  // namespace lieph
