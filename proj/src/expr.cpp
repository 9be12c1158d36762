#include "lieph/expr.hpp"

#include <cctype>

#include "lieph/errors.hpp"

namespace lieph {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, slash, lparen, rparen, tensor, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t col = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::number, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (s.compare(i, 3, "(x)") == 0) {
      out.push_back({Tok::tensor, "(x)", col});
      i += 3;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '^': k = Tok::caret; break;
      case '/': k = Tok::slash; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "' at column " + std::to_string(col), 1, col);
    }
    out.push_back({k, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::end, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(const PhaseSpace& ps, const std::vector<Token>& toks, int w) : ps_(ps), toks_(toks), w_(w) {}

  ExprValue run() {
    ExprValue v = sum();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(peek().column), 1, peek().column);
  }

  static ExprValue elem(PhaseElement e) {
    ExprValue v;
    v.element = std::move(e);
    return v;
  }

  ExprValue sum() {
    ExprValue acc = tensor_term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool minus = next().kind == Tok::minus;
      std::size_t at = pos_;
      ExprValue r = tensor_term();
      if (r.is_tensor != acc.is_tensor) {
        pos_ = at;
        fail("cannot add a tensor and an element");
      }
      if (acc.is_tensor) {
        if (minus) acc.tensor -= r.tensor;
        else acc.tensor += r.tensor;
      } else {
        PhaseElement b = ps_.to_side(r.element, acc.element.side());
        if (minus) acc.element -= b;
        else acc.element += b;
      }
    }
    return acc;
  }

  ExprValue tensor_term() {
    ExprValue a = product();
    if (peek().kind != Tok::tensor) return a;
    next();
    ExprValue b = product();
    if (peek().kind == Tok::tensor) fail("only two tensor factors are supported");
    ExprValue v;
    v.is_tensor = true;
    v.tensor.add(std::move(a.element), std::move(b.element));
    return v;
  }

  bool starts_factor() const {
    Tok k = peek().kind;
    return k == Tok::number || k == Tok::ident || k == Tok::lparen;
  }

  ExprValue product() {
    ExprValue acc = unary();
    for (;;) {
      if (peek().kind == Tok::star) {
        next();
        acc = elem(ps_.multiply(acc.element, unary().element));
      } else if (starts_factor()) {
        acc = elem(ps_.multiply(acc.element, power().element));
      } else {
        return acc;
      }
    }
  }

  ExprValue unary() {
    if (peek().kind == Tok::minus) {
      next();
      return elem(unary().element * Rational(-1));
    }
    if (peek().kind == Tok::plus) next();
    return power();
  }

  ExprValue power() {
    ExprValue base = primary();
    if (peek().kind != Tok::caret) return base;
    next();
    if (peek().kind != Tok::number) fail("expected an integer exponent");
    const std::string digits = next().text;
    if (digits.size() > 4) fail("exponent too large");
    int e = std::stoi(digits);
    PhaseElement out = ps_.one(w_, base.element.side());
    for (int i = 0; i < e; ++i) out = ps_.multiply(out, base.element);
    return elem(std::move(out));
  }

  ExprValue primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        next();
        std::string text = t.text;
        if (peek().kind == Tok::slash) {
          next();
          if (peek().kind != Tok::number) fail("expected a denominator");
          text += "/" + next().text;
        }
        Rational r;
        try {
          r = parse_rational(text);
        } catch (const std::exception&) {
          fail("bad rational '" + text + "'");
        }
        return elem(ps_.one(w_) * r);
      }
      case Tok::ident: {
        char kind = t.text[0];
        auto mu = ps_.lie().index_of(t.text.substr(1));
        if ((kind != 'x' && kind != 'y' && kind != 'd') || !mu) fail("unknown generator '" + t.text + "'");
        next();
        if (kind == 'x') return elem(ps_.x(*mu, w_));
        if (kind == 'y') return elem(ps_.y(*mu, w_));
        return elem(ps_.d(*mu, w_));
      }
      case Tok::lparen: {
        next();
        ExprValue v = sum();
        if (v.is_tensor) fail("a tensor cannot be a factor");
        if (peek().kind != Tok::rparen) fail("expected ')'");
        next();
        return v;
      }
      case Tok::end:
        fail("unexpected end of expression");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  const PhaseSpace& ps_;
  const std::vector<Token>& toks_;
  int w_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprValue parse_expression(const PhaseSpace& ps, const std::string& text, int N) {
  auto toks = tokenize(text);
  // Exact generators: raise the working precision until the result is
  // certified through N.
  for (int w = N; w <= N + 256;) {
    ExprValue v = Parser(ps, toks, w).run();
    int got = v.is_tensor ? v.tensor.prec() : v.element.prec();
    if (got >= N) {
      if (v.is_tensor) {
        for (auto& [a, b] : v.tensor.terms) {
          a = a.truncated(N);
          b = b.truncated(N);
        }
      } else {
        v.element = ps.to_side(v.element, Side::X).truncated(N);
      }
      return v;
    }
    w += std::max(1, N - got);
  }
  throw InsufficientPrecision("parse_expression", N, -1);
}

PhaseElement parse_element(const PhaseSpace& ps, const std::string& text, int N) {
  ExprValue v = parse_expression(ps, text, N);
  if (v.is_tensor) throw ParseError("expected an element, got a tensor", 1, 1);
  return v.element;
}

TruncatedSeries parse_series(const PhaseSpace& ps, const std::string& text, int N) {
  PhaseElement h = parse_element(ps, text, N);
  if (h.gen_degree() > 0) throw ParseError("expected a series in d only", 1, 1);
  TruncatedSeries p = h.coefficient(MultiIndex(ps.dim()));
  return p.prec() < 0 ? TruncatedSeries(ps.dim(), N) : p;
}

TensorElement parse_tensor(const PhaseSpace& ps, const std::string& text, int N) {
  ExprValue v = parse_expression(ps, text, N);
  if (!v.is_tensor) throw ParseError("expected a tensor 'a (x) b'", 1, 1);
  return v.tensor;
}

std::string render_tensor(const TensorElement& t, const std::vector<std::string>& labels) {
  if (t.terms.empty()) return "0";
  auto slot = [&](const PhaseElement& h) {
    std::string s = h.render(labels);
    return h.terms().size() > 1 ? "(" + s + ")" : s;
  };
  std::string out;
  for (const auto& [a, b] : t.terms) {
    if (!out.empty()) out += " + ";
    out += slot(a) + " (x) " + slot(b);
  }
  return out;
}

}  // namespace lieph
