#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lieph/multiindex.hpp"
#include "lieph/rational.hpp"

namespace lieph {

/// Default working bound on the dimension. Truncated-series sizes grow like
/// binom(n + N, n), so anything larger is slow; raise it explicitly if needed.
inline constexpr std::size_t kDefaultDimBound = 6;

/// Finite-dimensional Lie algebra given by structure constants
/// [x_mu, x_nu] = C^lambda_{mu nu} x_lambda, indices 0-based.
class LieAlgebra {
 public:
  struct Entry {
    std::size_t mu, nu, lambda;
    Rational value;
  };

  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {},
                      std::size_t dim_bound = kDefaultDimBound);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  /// Index of a basis label, or nullopt.
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// C^lambda_{mu nu}.
  const Rational& constant(std::size_t lambda, std::size_t mu, std::size_t nu) const {
    return c_[(lambda * dim_ + mu) * dim_ + nu];
  }
  /// Sets exactly one entry; no antisymmetric completion.
  void set_constant(std::size_t lambda, std::size_t mu, std::size_t nu, const Rational& value);
  /// Sets C^lambda_{mu nu} = value and C^lambda_{nu mu} = -value.
  void set_bracket(std::size_t mu, std::size_t nu, std::size_t lambda, const Rational& value);

  /// Nonzero entries in (lambda, mu, nu) lexicographic order.
  std::vector<Entry> nonzero_entries() const;
  bool is_abelian() const;

  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
};

struct ValidationResult {
  enum class Kind { ok, antisymmetry, jacobi };
  Kind kind = Kind::ok;
  /// 0-based; antisymmetry: (mu, nu, lambda); jacobi: (mu, nu, lambda, rho).
  std::vector<std::size_t> witness;
  Rational residual;

  bool ok() const { return kind == Kind::ok; }
  /// Human-readable summary using basis labels.
  std::string describe(const LieAlgebra& lie) const;
};

/// Checks antisymmetry then the Jacobi identity, exactly. Reports the first
/// violating tuple; for antisymmetry pairs are scanned with nu <= mu so that a
/// missing partner C^l_{nu mu} is reported at (mu, nu, l).
ValidationResult validate(const LieAlgebra& lie);

/// The opposite Lie algebra: constants -C.
LieAlgebra opposite(const LieAlgebra& lie);

/// t_mu = sum_lambda C^lambda_{mu lambda}.
std::vector<Rational> trace_vector(const LieAlgebra& lie);

/// Built-in library. Accepted names: abelian:N (or abelian(N)), heisenberg3,
/// sl2, solvable2, kappa:N (or kappa(N)). Throws std::invalid_argument for
/// unknown names.
LieAlgebra builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// Loads the JSON definition format
///   {"dim": n, "basis": [labels...], "brackets": [[mu, nu, lambda, "p/q"], ...]}
/// mu/nu/lambda are basis labels. Unlisted entries are the antisymmetric
/// completion of listed ones, or zero. Throws ParseError on malformed input
/// and on contradictory duplicates.
LieAlgebra load_lie_algebra_text(const std::string& text);
LieAlgebra load_lie_algebra_file(const std::string& path);
std::string lie_algebra_to_text(const LieAlgebra& lie);

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line(line), column(column) {}
  std::size_t line, column;
};

}  // namespace lieph
