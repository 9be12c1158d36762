#include "lieph/series.hpp"

#include <algorithm>
#include <sstream>

namespace lieph {

TruncatedSeries::TruncatedSeries(std::size_t n, int prec) : n_(n), prec_(std::max(prec, -1)) {}

TruncatedSeries TruncatedSeries::constant(std::size_t n, int prec, const Rational& c) {
  TruncatedSeries s(n, prec);
  s.add_term(MultiIndex(n), c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t n, int prec, const MultiIndex& k, const Rational& c) {
  TruncatedSeries s(n, prec);
  s.add_term(k, c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t n, int prec, std::size_t i) {
  return monomial(n, prec, MultiIndex::unit(n, i));
}

Rational TruncatedSeries::coefficient(const MultiIndex& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::drop_zero(Terms::iterator it) {
  if (it->second == 0) terms_.erase(it);
}

void TruncatedSeries::add_term(const MultiIndex& k, const Rational& c) {
  if (c == 0 || k.degree() > prec_) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    drop_zero(it);
  }
}

TruncatedSeries TruncatedSeries::truncated(int p) const {
  if (p >= prec_) return *this;
  TruncatedSeries out(n_, p);
  for (const auto& [k, c] : terms_) {
    if (k.degree() > p) break;
    out.terms_.emplace_hint(out.terms_.end(), k, c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::with_exact_prec(int p) const {
  TruncatedSeries out = truncated(p);
  out.prec_ = std::max(p, -1);
  return out;
}

int TruncatedSeries::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

int TruncatedSeries::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(*this);
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  if (o.prec_ < prec_) *this = truncated(o.prec_);
  for (const auto& [k, c] : o.terms_) {
    if (k.degree() > prec_) break;
    add_term(k, c);
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  if (o.prec_ < prec_) *this = truncated(o.prec_);
  for (const auto& [k, c] : o.terms_) {
    if (k.degree() > prec_) break;
    add_term(k, -c);
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool TruncatedSeries::equal_at(const TruncatedSeries& o, int p) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  auto a_end = terms_.end(), b_end = o.terms_.end();
  for (;;) {
    bool a_done = a == a_end || a->first.degree() > p;
    bool b_done = b == b_end || b->first.degree() > p;
    if (a_done || b_done) return a_done && b_done;
    if (a->first != b->first || a->second != b->second) return false;
    ++a;
    ++b;
  }
}

TruncatedSeries TruncatedSeries::formal_derivative(std::size_t i) const {
  TruncatedSeries out(n_, prec_ - 1);
  for (const auto& [k, c] : terms_) {
    if (k[i] == 0) continue;
    MultiIndex d = k;
    d.increment(i, -1);
    out.add_term(d, c * k[i]);
  }
  return out;
}

TruncatedSeries TruncatedSeries::negate_variables() const {
  TruncatedSeries out(*this);
  for (auto& [k, c] : out.terms_)
    if (k.degree() % 2) c = -c;
  return out;
}

Rational TruncatedSeries::eval_at_zero() const {
  if (prec_ < 0) throw InsufficientPrecision("eval_at_zero", 0, prec_);
  return coefficient(MultiIndex(n_));
}

namespace {

std::string monomial_text(const MultiIndex& k, const std::vector<std::string>& labels, const char* prefix,
                          const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    if (!s.empty()) s += sep;
    s += prefix;
    s += i < labels.size() ? labels[i] : std::to_string(i + 1);
    if (k[i] > 1) s += "^" + std::to_string(k[i]);
  }
  return s;
}

}  // namespace

std::string TruncatedSeries::render(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = abs(c);
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono = monomial_text(k, labels, "d", "*");
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int p = std::min(a.prec(), b.prec());
  TruncatedSeries out(std::max(a.nvars(), b.nvars()), p);
  for (const auto& [ka, ca] : a.terms()) {
    int room = p - ka.degree();
    if (room < 0) break;
    for (const auto& [kb, cb] : b.terms()) {
      if (kb.degree() > room) break;
      out.add_term(ka + kb, ca * cb);
    }
  }
  return out;
}

MatrixSeries::MatrixSeries(std::size_t n, int prec) : n_(n), prec_(prec), e_(n * n, TruncatedSeries(n, prec)) {}

MatrixSeries MatrixSeries::identity(std::size_t n, int prec) {
  MatrixSeries m(n, prec);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TruncatedSeries::constant(n, prec, 1);
  return m;
}

void MatrixSeries::sync_prec() {
  for (const auto& s : e_) prec_ = std::min(prec_, s.prec());
  for (auto& s : e_) s = s.truncated(prec_);
}

bool MatrixSeries::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const TruncatedSeries& s) { return s.is_zero(); });
}

MatrixSeries MatrixSeries::truncated(int p) const {
  MatrixSeries out(*this);
  out.prec_ = std::min(p, prec_);
  for (auto& s : out.e_) s = s.truncated(out.prec_);
  return out;
}

MatrixSeries& MatrixSeries::operator+=(const MatrixSeries& o) {
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  prec_ = std::min(prec_, o.prec_);
  sync_prec();
  return *this;
}

MatrixSeries& MatrixSeries::operator-=(const MatrixSeries& o) {
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  prec_ = std::min(prec_, o.prec_);
  sync_prec();
  return *this;
}

MatrixSeries& MatrixSeries::operator*=(const Rational& c) {
  for (auto& s : e_) s *= c;
  return *this;
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
  std::size_t n = a.dim();
  MatrixSeries out(n, std::min(a.prec(), b.prec()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

bool MatrixSeries::equal_at(const MatrixSeries& o, int p) const {
  std::size_t a, b;
  return !first_difference(o, p, a, b);
}

bool MatrixSeries::first_difference(const MatrixSeries& o, int p, std::size_t& a, std::size_t& b) const {
  for (a = 0; a < n_; ++a)
    for (b = 0; b < n_; ++b)
      if (!(*this)(a, b).equal_at(o(a, b), p)) return true;
  return false;
}

std::string MatrixSeries::render(const std::vector<std::string>& labels) const {
  std::ostringstream os;
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) os << (b ? " | " : "") << (*this)(a, b).render(labels);
    os << "\n";
  }
  return os.str();
}

MatrixSeries c_matrix(const LieAlgebra& lie, int N) {
  const std::size_t n = lie.dim();
  MatrixSeries c(n, N);
  for (const auto& e : lie.nonzero_entries())
    // C^lambda_{mu nu} d^nu lands in entry (lambda, mu).
    c(e.lambda, e.mu).add_term(MultiIndex::unit(n, e.nu), e.value);
  return c;
}

MatrixSeries phi_matrix(const LieAlgebra& lie, int N, const BernoulliTable& bern) {
  return matrix_power_series(c_matrix(lie, N), N, [&](unsigned m) -> Rational {
    Rational c = bern(m) / Rational(factorial(m));
    return m % 2 ? Rational(-c) : c;
  });
}

MatrixSeries phi_tilde_matrix(const LieAlgebra& lie, int N, const BernoulliTable& bern) {
  return phi_matrix(opposite(lie), N, bern);
}

MatrixSeries exp_c(const LieAlgebra& lie, int N, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("exp_c: sign must be +1 or -1");
  return matrix_power_series(c_matrix(lie, N) * Rational(sign), N,
                             [](unsigned m) -> Rational { return Rational(1) / Rational(factorial(m)); });
}

TruncatedSeries DerivationAction::apply(std::size_t mu, const TruncatedSeries& p) const {
  if (p.prec() - 1 > phi_.prec())
    throw InsufficientPrecision("derivation action: phi table", p.prec() - 1, phi_.prec());
  TruncatedSeries out(p.nvars(), p.prec() - 1);
  for (std::size_t b = 0; b < phi_.dim(); ++b) {
    const auto& f = phi_(b, mu);
    if (f.is_zero()) continue;
    TruncatedSeries d = p.formal_derivative(b);
    if (!d.is_zero()) out += d * f;
  }
  return out;
}

TruncatedSeries DerivationAction::apply_word(const std::vector<std::size_t>& word, const TruncatedSeries& p) const {
  TruncatedSeries out = p;
  for (auto mu : word) out = apply(mu, out);
  return out;
}

TruncatedSeries hopf_action_on_series(const LieAlgebra& lie, const std::vector<std::size_t>& word,
                                      const TruncatedSeries& p) {
  int len = static_cast<int>(word.size());
  if (p.prec() < len) throw InsufficientPrecision("hopf_action_on_series", len, p.prec());
  return DerivationAction(phi_matrix(lie, std::max(p.prec(), 0))).apply_word(word, p);
}

std::vector<IdentityFailure> matrix_identities_check(const LieAlgebra& lie, int N, const BernoulliTable& bern) {
  std::vector<IdentityFailure> out;
  const std::size_t n = lie.dim();
  auto o = exp_c(lie, N, 1), oinv = exp_c(lie, N, -1);
  auto phi = phi_matrix(lie, N, bern), phit = phi_tilde_matrix(lie, N, bern);
  std::size_t a, b;
  if ((o * oinv).first_difference(MatrixSeries::identity(n, N), N, a, b)) out.push_back({"O O^-1 = I", a, b});
  if ((phi * oinv).first_difference(phit, N, a, b)) out.push_back({"phi~ = phi O^-1", a, b});
  if ((phi - phit).first_difference(c_matrix(lie, N), N, a, b)) out.push_back({"phi - phi~ = C", a, b});
  return out;
}

}  // namespace lieph
