#include "lieph/rational.hpp"

#include <cctype>
#include <mutex>

namespace lieph {

Rational make_rational(long p, long q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("bad rational literal '" + s + "'");
    return Rational(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("bad rational literal '" + s + "'");
  Integer d(den);
  if (d == 0) throw std::domain_error("rational with zero denominator");
  Rational r(Integer(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

namespace {

// Akiyama–Tanigawa; produces B_1 = +1/2, corrected by the caller.
std::vector<Rational> akiyama_tanigawa(unsigned up_to) {
  std::vector<Rational> out(up_to + 1);
  std::vector<Rational> a(up_to + 1);
  for (unsigned m = 0; m <= up_to; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out[m] = a[0];
  }
  if (up_to >= 1) out[1] = -out[1];
  return out;
}

}  // namespace

Rational bernoulli(unsigned m) {
  static std::mutex mu;
  static std::vector<Rational> table;
  std::lock_guard<std::mutex> lock(mu);
  if (m >= table.size()) table = akiyama_tanigawa(std::max<unsigned>(m, 2 * table.size() + 8));
  return table[m];
}

Rational BernoulliTable::operator()(unsigned m) const {
  if (!custom_) return bernoulli(m);
  if (m >= values_.size()) throw std::out_of_range("Bernoulli table too short");
  return values_[m];
}

BernoulliTable BernoulliTable::sign_flipped(unsigned up_to) {
  std::vector<Rational> v(up_to + 1);
  for (unsigned m = 0; m <= up_to; ++m) v[m] = bernoulli(m);
  if (up_to >= 1) v[1] = -v[1];
  return BernoulliTable(std::move(v));
}

}  // namespace lieph
