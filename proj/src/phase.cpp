#include "lieph/phase.hpp"

#include <algorithm>
#include <stdexcept>

#include "lieph/errors.hpp"

namespace lieph {

PhaseElement PhaseElement::from_u(Side side, const UEnvElement& u, int prec) {
  const std::size_t n = u.nvars();
  PhaseElement h(side, n, prec);
  for (const auto& [j, c] : u.terms()) h.add_term(j, TruncatedSeries::constant(n, prec, c));
  return h;
}

PhaseElement PhaseElement::from_series(Side side, const TruncatedSeries& p) {
  return {side, WeylElement::series(p)};
}

PhaseElement& PhaseElement::operator+=(const PhaseElement& o) {
  if (o.side_ != side_) throw std::invalid_argument("adding phase elements in different normal forms");
  body_ += o.body_;
  return *this;
}

PhaseElement& PhaseElement::operator-=(const PhaseElement& o) {
  if (o.side_ != side_) throw std::invalid_argument("subtracting phase elements in different normal forms");
  body_ -= o.body_;
  return *this;
}

PhaseElement& PhaseElement::operator*=(const Rational& c) {
  body_ *= c;
  return *this;
}

bool PhaseElement::equal_at(const PhaseElement& o, int p) const {
  if (o.side_ != side_) throw std::invalid_argument("comparing phase elements in different normal forms");
  return body_.equal_at(o.body_, p);
}

UEnvElement PhaseElement::degree_zero_part() const {
  UEnvElement u(nvars());
  for (const auto& [j, s] : terms()) u.add_term(j, s.eval_at_zero());
  return u;
}

std::string PhaseElement::render(const std::vector<std::string>& labels) const {
  if (is_zero()) return "0";
  const std::string prefix = side_ == Side::X ? "x" : "y";
  std::string out;
  for (const auto& [j, s] : terms()) {
    if (!out.empty()) out += " + ";
    std::string mono = pbw_monomial_text(j, labels, prefix);
    bool unit = s.term_count() == 1 && s.coefficient(MultiIndex(nvars())) == 1;
    if (mono.empty()) out += "(" + s.render(labels) + ")";
    else if (unit) out += mono;
    else out += mono + " * (" + s.render(labels) + ")";
  }
  return out;
}

SmashAlgebra::SmashAlgebra(LieAlgebra lie, BernoulliTable bern) : u_(std::move(lie)), bern_(std::move(bern)) {}

std::shared_ptr<const DerivationAction> SmashAlgebra::action(int p) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!action_ || action_->phi().prec() < p) {
    int q = std::max(p, action_ ? action_->phi().prec() + 2 : 0);
    action_ = std::make_shared<const DerivationAction>(phi_matrix(u_.lie(), q, bern_));
  }
  return action_;
}

const UEnvElement& SmashAlgebra::monomial_product(const MultiIndex& j, const MultiIndex& k) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = products_.find({j, k});
    if (it != products_.end()) return it->second;
  }
  UEnvElement prod = u_.multiply(UEnvElement::monomial(j), UEnvElement::monomial(k));
  std::lock_guard<std::mutex> lock(mutex_);
  return products_.emplace(std::make_pair(j, k), std::move(prod)).first->second;
}

WeylElement SmashAlgebra::multiply(const WeylElement& a, const WeylElement& b) const {
  const std::size_t n = dim();
  const int bdeg = b.x_degree();
  const int prec = std::min(a.prec() - bdeg, b.prec());
  WeylElement out(n, prec);
  if (prec < 0) return out;
  auto act = action(prec + bdeg);
  for (const auto& [ja, p] : a.terms()) {
    // P <| x_K2 for the K2 needed, built letter by letter.
    std::map<MultiIndex, TruncatedSeries, GradedOrder> acted;
    acted.emplace(MultiIndex(n), p.truncated(prec + bdeg));
    auto acted_on = [&](auto&& self, const MultiIndex& k2) -> const TruncatedSeries& {
      auto it = acted.find(k2);
      if (it != acted.end()) return it->second;
      std::size_t last = n;
      while (k2[last - 1] == 0) --last;
      MultiIndex prev = k2;
      prev.increment(last - 1, -1);
      TruncatedSeries s = act->apply(last - 1, self(self, prev));
      return acted.emplace(k2, std::move(s)).first->second;
    };
    for (const auto& [kb, q] : b.terms()) {
      TruncatedSeries qt = q.truncated(prec);
      for (const auto& k1 : sub_multiindices(kb)) {
        const TruncatedSeries& s = acted_on(acted_on, kb - k1);
        if (s.is_zero()) continue;
        TruncatedSeries coeff = s.truncated(prec) * qt;
        if (coeff.is_zero()) continue;
        coeff *= Rational(multiindex_binomial(kb, k1));
        for (const auto& [m, c] : monomial_product(ja, k1).terms()) out.add_term(m, coeff * c);
      }
    }
  }
  return out;
}

}  // namespace lieph

namespace lieph {

PhaseSpace::PhaseSpace(LieAlgebra lie, BernoulliTable bern)
    : left_(lie, bern), right_(opposite(lie), bern), bern_(std::move(bern)) {}

MatrixSeries PhaseSpace::O(int p) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = o_.lower_bound(p);
  if (it != o_.end()) return it->second.truncated(p);
  return o_.emplace(p, exp_c(lie(), p, 1)).first->second;
}

MatrixSeries PhaseSpace::Oinv(int p) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = oinv_.lower_bound(p);
  if (it != oinv_.end()) return it->second.truncated(p);
  return oinv_.emplace(p, exp_c(lie(), p, -1)).first->second;
}

PhaseElement PhaseSpace::one(int p, Side s) const { return PhaseElement::from_u(s, UEnvElement::one(dim()), p); }

PhaseElement PhaseSpace::x(std::size_t mu, int p) const {
  return PhaseElement::from_u(Side::X, UEnvElement::generator(dim(), mu), p);
}

PhaseElement PhaseSpace::y(std::size_t mu, int p) const {
  return PhaseElement::from_u(Side::Y, UEnvElement::generator(dim(), mu), p);
}

PhaseElement PhaseSpace::d(std::size_t mu, int p, Side s) const {
  return PhaseElement::from_series(s, TruncatedSeries::variable(dim(), p, mu));
}

PhaseElement PhaseSpace::O_entry(std::size_t a, std::size_t b, int p, Side s) const {
  return PhaseElement::from_series(s, O(p)(a, b));
}

PhaseElement PhaseSpace::Oinv_entry(std::size_t a, std::size_t b, int p, Side s) const {
  return PhaseElement::from_series(s, Oinv(p)(a, b));
}

PhaseElement PhaseSpace::z(std::size_t a, int p, Side s) const {
  PhaseElement out(Side::Y, dim(), p);
  for (std::size_t b = 0; b < dim(); ++b) out += multiply(O_entry(b, a, p + 1, Side::Y), y(b, p + 1));
  return to_side(out, s);
}

PhaseElement PhaseSpace::multiply(const PhaseElement& a, const PhaseElement& b) const {
  if (b.side() != a.side()) return multiply(a, to_side(b, a.side()));
  return {a.side(), algebra(a.side()).multiply(a.body(), b.body())};
}

PhaseElement PhaseSpace::commutator(const PhaseElement& a, const PhaseElement& b) const {
  return multiply(a, b) - multiply(b, a);
}

const PhaseElement& PhaseSpace::monomial_image(Side target, const MultiIndex& j, int p) const {
  auto& cache = images_[target == Side::X ? 0 : 1];
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache.find({j, p});
    if (it != cache.end()) return it->second;
  }
  const std::size_t n = dim();
  PhaseElement img;
  if (j.is_zero()) {
    img = one(p, target);
  } else {
    std::size_t last = n;
    while (j[last - 1] == 0) --last;
    MultiIndex prev = j;
    prev.increment(last - 1, -1);
    // x^_nu = y^_s O^s_nu and y^_nu = x^_r (O^-1)^r_nu
    MatrixSeries m = target == Side::Y ? O(p) : Oinv(p);
    PhaseElement gen(target, n, p);
    for (std::size_t s = 0; s < n; ++s) gen.add_term(MultiIndex::unit(n, s), m(s, last - 1));
    img = multiply(monomial_image(target, prev, p + 1), gen);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return cache.emplace(std::make_pair(j, p), std::move(img)).first->second;
}

PhaseElement PhaseSpace::convert(const PhaseElement& h, Side target) const {
  PhaseElement out(target, dim(), h.prec());
  for (const auto& [j, s] : h.terms()) {
    PhaseElement t = multiply(monomial_image(target, j, h.prec()), PhaseElement::from_series(target, s));
    out += t;
  }
  return out;
}

PhaseElement PhaseSpace::x_to_y(const PhaseElement& h) const {
  if (h.side() != Side::X) throw std::invalid_argument("x_to_y expects an element in x-normal form");
  return convert(h, Side::Y);
}

PhaseElement PhaseSpace::y_to_x(const PhaseElement& h) const {
  if (h.side() != Side::Y) throw std::invalid_argument("y_to_x expects an element in y-normal form");
  return convert(h, Side::X);
}

PhaseElement PhaseSpace::to_side(const PhaseElement& h, Side s) const {
  return h.side() == s ? h : convert(h, s);
}

PhaseElement PhaseSpace::alpha_L(const UEnvElement& f, int p) const { return PhaseElement::from_u(Side::X, f, p); }

PhaseElement PhaseSpace::beta_L(const UEnvElement& f, int p) const {
  // beta^L(x^_J) = y^_{w_k} ... y^_{w_1}, a product inside U(g^R).
  UEnvElement g(dim());
  for (const auto& [j, c] : f.terms()) {
    auto w = j.word();
    std::reverse(w.begin(), w.end());
    g += u_right().word(w) * c;
  }
  return convert(PhaseElement::from_u(Side::Y, g, p), Side::X);
}

PhaseElement PhaseSpace::alpha_R(const UEnvElement& u, int p) const { return PhaseElement::from_u(Side::Y, u, p); }

PhaseElement PhaseSpace::beta_R(const UEnvElement& u, int p) const {
  PhaseElement out(Side::Y, dim(), p);
  for (const auto& [j, c] : u.terms()) {
    auto w = j.word();
    int k = static_cast<int>(w.size());
    PhaseElement t = one(p + k, Side::Y);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = multiply(t, z(*it, p + k));
    out += t * c;
  }
  return out;
}

UEnvElement PhaseSpace::black_left(const PhaseElement& h, const UEnvElement& f) const {
  int deg = std::max(f.degree(), 0);
  if (h.prec() < deg) throw InsufficientPrecision("black_left", deg, h.prec());
  PhaseElement hx = to_side(h.truncated(deg), Side::X);
  return multiply(hx, alpha_L(f, deg)).degree_zero_part();
}

UEnvElement PhaseSpace::series_left_counit(const PhaseElement& h) const {
  if (h.side() != Side::Y) throw std::invalid_argument("series_left_counit expects y-normal form");
  const std::size_t n = dim();
  UEnvElement out(n);
  for (const auto& [m, q] : h.terms()) {
    if (q.prec() < m.degree()) throw InsufficientPrecision("series_left_counit", m.degree(), q.prec());
    auto act = right_.action(m.degree());
    for (const auto& m1 : sub_multiindices(m)) {
      // y^_M Q = sum binom(M, M1) (Q <| S(y^_M1)) y^_{M-M1}, S(y^_M1) = (-1)^|M1| reversed word.
      auto w = m1.word();
      std::reverse(w.begin(), w.end());
      Rational e = act->apply_word(w, q.truncated(m1.degree())).eval_at_zero();
      if (e == 0) continue;
      if (m1.degree() % 2) e = -e;
      out.add_term(m - m1, e * Rational(multiindex_binomial(m, m1)));
    }
  }
  return out;
}

UEnvElement PhaseSpace::black_right(const UEnvElement& u, const PhaseElement& h) const {
  int deg = std::max(u.degree(), 0);
  PhaseElement hy = to_side(h, Side::Y);
  int need = deg + hy.gen_degree();
  if (hy.prec() < need) throw InsufficientPrecision("black_right", need, hy.prec());
  hy = hy.truncated(need);
  return series_left_counit(multiply(alpha_R(u, need + hy.gen_degree()), hy));
}

UEnvElement PhaseSpace::counit_L(const PhaseElement& h) const { return to_side(h.truncated(0), Side::X).degree_zero_part(); }

UEnvElement PhaseSpace::counit_R(const PhaseElement& h) const { return black_right(UEnvElement::one(dim()), h); }

}  // namespace lieph
