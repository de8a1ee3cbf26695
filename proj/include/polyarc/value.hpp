#pragma once

#include <optional>
#include <string>
#include <variant>

#include "polyarc/exact_real.hpp"
#include "polyarc/rational.hpp"

namespace polyarc {

/// A computed quantity: exact rational (context arithmetic, or a rational
/// root) or a high-precision real.
using Value = std::variant<Rational, ExactReal>;

double to_double(const Value& v);
std::string to_string(const Value& v);
/// Converts to a real at `digits` precision (rationals are lifted exactly).
ExactReal to_exact(const Value& v, int digits);

/// √q as a rational when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace polyarc
