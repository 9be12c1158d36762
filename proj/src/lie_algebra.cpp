#include "lieph/lie_algebra.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lieph {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels, std::size_t dim_bound)
    : dim_(dim), labels_(std::move(labels)), c_(dim * dim * dim) {
  if (dim == 0) throw std::invalid_argument("Lie algebra dimension must be >= 1");
  if (dim > dim_bound || dim > kMaxDim)
    throw std::invalid_argument("Lie algebra dimension " + std::to_string(dim) + " exceeds the configured bound " +
                                std::to_string(std::min(dim_bound, kMaxDim)));
  if (labels_.empty())
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back(std::to_string(i + 1));
  if (labels_.size() != dim) throw std::invalid_argument("basis label count does not match dimension");
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

void LieAlgebra::set_constant(std::size_t lambda, std::size_t mu, std::size_t nu, const Rational& value) {
  c_.at((lambda * dim_ + mu) * dim_ + nu) = value;
}

void LieAlgebra::set_bracket(std::size_t mu, std::size_t nu, std::size_t lambda, const Rational& value) {
  set_constant(lambda, mu, nu, value);
  set_constant(lambda, nu, mu, -value);
}

std::vector<LieAlgebra::Entry> LieAlgebra::nonzero_entries() const {
  std::vector<Entry> out;
  for (std::size_t l = 0; l < dim_; ++l)
    for (std::size_t m = 0; m < dim_; ++m)
      for (std::size_t n = 0; n < dim_; ++n)
        if (constant(l, m, n) != 0) out.push_back({m, n, l, constant(l, m, n)});
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

std::string ValidationResult::describe(const LieAlgebra& lie) const {
  auto lab = [&](std::size_t i) { return lie.label(i); };
  std::ostringstream os;
  switch (kind) {
    case Kind::ok:
      os << "ok";
      break;
    case Kind::antisymmetry:
      os << "antisymmetry violated at (mu,nu,lambda)=(" << lab(witness[0]) << "," << lab(witness[1]) << ","
         << lab(witness[2]) << "): C^l_{mu nu} + C^l_{nu mu} = " << residual.get_str();
      break;
    case Kind::jacobi:
      os << "Jacobi identity violated at (mu,nu,lambda,rho)=(" << lab(witness[0]) << "," << lab(witness[1]) << ","
         << lab(witness[2]) << "," << lab(witness[3]) << "): residual " << residual.get_str();
      break;
  }
  return os.str();
}

ValidationResult validate(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  ValidationResult res;
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu <= mu; ++nu)
      for (std::size_t la = 0; la < n; ++la) {
        Rational s = lie.constant(la, mu, nu) + lie.constant(la, nu, mu);
        if (s != 0) {
          res.kind = ValidationResult::Kind::antisymmetry;
          res.witness = {mu, nu, la};
          res.residual = s;
          return res;
        }
      }
  // C^s_{mu nu} C^r_{s la} + C^s_{nu la} C^r_{s mu} + C^s_{la mu} C^r_{s nu} = 0
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t la = 0; la < n; ++la)
        for (std::size_t rho = 0; rho < n; ++rho) {
          Rational s = 0;
          for (std::size_t sg = 0; sg < n; ++sg) {
            s += lie.constant(sg, mu, nu) * lie.constant(rho, sg, la);
            s += lie.constant(sg, nu, la) * lie.constant(rho, sg, mu);
            s += lie.constant(sg, la, mu) * lie.constant(rho, sg, nu);
          }
          if (s != 0) {
            res.kind = ValidationResult::Kind::jacobi;
            res.witness = {mu, nu, la, rho};
            res.residual = s;
            return res;
          }
        }
  return res;
}

LieAlgebra opposite(const LieAlgebra& lie) {
  LieAlgebra op(lie.dim(), lie.labels(), kMaxDim);
  for (const auto& e : lie.nonzero_entries()) op.set_constant(e.lambda, e.mu, e.nu, -e.value);
  return op;
}

std::vector<Rational> trace_vector(const LieAlgebra& lie) {
  std::vector<Rational> t(lie.dim());
  for (std::size_t mu = 0; mu < lie.dim(); ++mu)
    for (std::size_t la = 0; la < lie.dim(); ++la) t[mu] += lie.constant(la, mu, la);
  return t;
}

namespace {

std::optional<std::pair<std::string, std::size_t>> split_param(const std::string& name) {
  static const std::regex re(R"(^\s*([a-z0-9]+)\s*(?:[:(]\s*(\d+)\s*\)?)?\s*$)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) return std::nullopt;
  std::size_t p = m[2].matched ? std::stoul(m[2].str()) : 0;
  return std::make_pair(m[1].str(), p);
}

std::vector<std::string> zero_based_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back(std::to_string(i));
  return l;
}

LieAlgebra kappa(std::size_t n) {
  if (n < 1) throw std::invalid_argument("kappa(n) needs n >= 1");
  LieAlgebra k(n, zero_based_labels(n));
  for (std::size_t i = 1; i < n; ++i) k.set_bracket(0, i, i, 1);
  return k;
}

}  // namespace

LieAlgebra builtin(const std::string& name) {
  auto parsed = split_param(name);
  if (!parsed) throw std::invalid_argument("unknown built-in Lie algebra '" + name + "'");
  const auto& [base, p] = *parsed;
  bool has_param = name.find_first_of(":(") != std::string::npos;
  if (base == "abelian") {
    if (!has_param || p == 0) throw std::invalid_argument("abelian needs a dimension, e.g. abelian:3");
    return LieAlgebra(p);
  }
  if (base == "kappa") {
    if (!has_param || p == 0) throw std::invalid_argument("kappa needs a dimension, e.g. kappa:3");
    return kappa(p);
  }
  if (has_param) throw std::invalid_argument("unknown built-in Lie algebra '" + name + "'");
  if (base == "heisenberg3") {
    LieAlgebra h(3);
    h.set_bracket(0, 1, 2, 1);
    return h;
  }
  if (base == "sl2") {
    LieAlgebra s(3);
    s.set_bracket(0, 1, 2, 1);
    s.set_bracket(1, 2, 0, 1);
    s.set_bracket(2, 0, 1, 1);
    return s;
  }
  if (base == "solvable2") return kappa(2);
  throw std::invalid_argument("unknown built-in Lie algebra '" + name + "'");
}

std::vector<std::string> builtin_names() { return {"abelian:2", "abelian:3", "heisenberg3", "sl2", "solvable2", "kappa:3"}; }

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Byte offset of the k-th element of the top-level "brackets" array, found by a
// bracket-depth scan; used only to position semantic error messages.
std::size_t bracket_entry_offset(const std::string& text, std::size_t k) {
  auto key = text.find("\"brackets\"");
  if (key == std::string::npos) return 0;
  auto open = text.find('[', key);
  if (open == std::string::npos) return key;
  int depth = 0;
  std::size_t count = 0;
  bool in_string = false;
  for (std::size_t i = open; i < text.size(); ++i) {
    char c = text[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') in_string = true;
    else if (c == '[') {
      ++depth;
      if (depth == 2 && count++ == k) return i;
    } else if (c == ']') {
      if (--depth == 0) break;
    }
  }
  return open;
}

}  // namespace

LieAlgebra load_lie_algebra_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("malformed Lie algebra file: ") + e.what(), l, c);
  }
  auto fail = [&](const std::string& msg, std::size_t offset) -> ParseError {
    auto [l, c] = line_col(text, offset);
    return ParseError(msg, l, c);
  };
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_unsigned())
    throw fail("Lie algebra file needs an object with unsigned integer field 'dim'", 0);
  std::size_t dim = doc["dim"].get<std::size_t>();
  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_array()) throw fail("'basis' must be an array of labels", text.find("\"basis\""));
    for (const auto& b : doc["basis"]) {
      if (!b.is_string()) throw fail("basis labels must be strings", text.find("\"basis\""));
      labels.push_back(b.get<std::string>());
    }
  }
  LieAlgebra lie = [&] {
    try {
      return LieAlgebra(dim, labels);
    } catch (const std::invalid_argument& e) {
      throw fail(e.what(), text.find("\"dim\""));
    }
  }();
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> explicit_entries;
  if (doc.contains("brackets")) {
    const auto& br = doc["brackets"];
    if (!br.is_array()) throw fail("'brackets' must be an array", text.find("\"brackets\""));
    for (std::size_t k = 0; k < br.size(); ++k) {
      const auto& e = br[k];
      std::size_t at = bracket_entry_offset(text, k);
      if (!e.is_array() || e.size() != 4) throw fail("bracket entry must be [mu, nu, lambda, value]", at);
      std::size_t idx[3];
      for (int j = 0; j < 3; ++j) {
        if (!e[j].is_string()) throw fail("bracket indices must be basis labels (strings)", at);
        auto i = lie.index_of(e[j].get<std::string>());
        if (!i) throw fail("unknown basis label '" + e[j].get<std::string>() + "'", at);
        idx[j] = *i;
      }
      Rational v;
      try {
        if (e[3].is_string()) v = parse_rational(e[3].get<std::string>());
        else if (e[3].is_number_integer()) v = Rational(e[3].get<long>());
        else throw std::invalid_argument("value must be a string \"p/q\" or an integer");
      } catch (const std::exception& ex) {
        throw fail(std::string("bad bracket value: ") + ex.what(), at);
      }
      auto key = std::make_tuple(idx[0], idx[1], idx[2]);
      auto [it, inserted] = explicit_entries.emplace(key, v);
      if (!inserted && it->second != v) throw fail("contradictory duplicate bracket entry", at);
    }
  }
  for (const auto& [key, v] : explicit_entries) {
    auto [mu, nu, la] = key;
    lie.set_constant(la, mu, nu, v);
    if (!explicit_entries.count(std::make_tuple(nu, mu, la))) lie.set_constant(la, nu, mu, -v);
  }
  return lie;
}

LieAlgebra load_lie_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_lie_algebra_text(ss.str());
}

std::string lie_algebra_to_text(const LieAlgebra& lie) {
  nlohmann::json doc;
  doc["dim"] = lie.dim();
  doc["basis"] = lie.labels();
  doc["brackets"] = nlohmann::json::array();
  for (const auto& e : lie.nonzero_entries())
    if (e.mu < e.nu)
      doc["brackets"].push_back({lie.label(e.mu), lie.label(e.nu), lie.label(e.lambda), e.value.get_str()});
  return doc.dump(2);
}

}  // namespace lieph
