#pragma once

#include <string>

#include "lieph/algebroid.hpp"

namespace lieph {

/// Value of a parsed expression: an element of H or a tensor in H (x) H.
struct ExprValue {
  bool is_tensor = false;
  PhaseElement element;
  TensorElement tensor;
};

/// Expressions over H: generators x<label>, y<label>, d<label> for basis
/// labels of the algebra, rationals such as 3 or -1/2, + - *, ^ with a
/// nonnegative integer exponent, juxtaposition as product and parentheses.
/// "a (x) b" between two products gives a tensor. The result is exact through
/// degree N; the generators are exact, so the working precision is raised
/// internally until it is. Throws ParseError with line 1 and a 1-based column.
ExprValue parse_expression(const PhaseSpace& ps, const std::string& text, int N);
/// Same, requiring an element (X side).
PhaseElement parse_element(const PhaseSpace& ps, const std::string& text, int N);
/// Same, requiring a series: no x or y left after normal ordering.
TruncatedSeries parse_series(const PhaseSpace& ps, const std::string& text, int N);
/// Same, requiring a tensor.
TensorElement parse_tensor(const PhaseSpace& ps, const std::string& text, int N);

/// "a (x) b + ..." with each slot rendered by PhaseElement::render and
/// parenthesized when it has more than one term.
std::string render_tensor(const TensorElement& t, const std::vector<std::string>& labels);

}  // namespace lieph
