#pragma once

// Exact scalars for the whole kernel. Every value is kept in lowest terms with
// a positive denominator, so equality is plain structural equality.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lieph {

using Rational = mpq_class;
using Integer = mpz_class;

/// p/q reduced. Throws std::domain_error on q == 0.
Rational make_rational(long p, long q = 1);

/// Parses "p", "-p", "p/q" (optionally with surrounding blanks).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Bernoulli number B_m with the convention B_1 = -1/2.
///
/// The sign of B_1 matters: the generating series for phi uses (-1)^m B_m,
/// and only this convention gives phi = I + C/2 + ... (so that phi - phi~ = C).
/// Values are memoized in a process-wide table guarded by a mutex.
Rational bernoulli(unsigned m);

/// A finite table B_0..B_k. The default table is bernoulli(); tests swap in
/// corrupted tables to check that the verification suites notice.
class BernoulliTable {
 public:
  BernoulliTable() = default;
  explicit BernoulliTable(std::vector<Rational> values) : values_(std::move(values)), custom_(true) {}

  Rational operator()(unsigned m) const;

  /// Standard table with B_1 replaced by +1/2.
  static BernoulliTable sign_flipped(unsigned up_to);

 private:
  std::vector<Rational> values_;
  bool custom_ = false;
};

}  // namespace lieph
