#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyarc/exact_real.hpp"
#include "polyarc/rational.hpp"
#include "polyarc/value.hpp"

namespace polyarc {

/// The irrational constants the tablet arithmetic needs surrogates for.
enum class Irrational { kPi, kSqrt2, kSqrt3, kSqrt6, kSqrt7, kSqrt14, kSqrt21 };

inline constexpr Irrational kAllIrrationals[] = {
    Irrational::kPi,    Irrational::kSqrt2,  Irrational::kSqrt3, Irrational::kSqrt6,
    Irrational::kSqrt7, Irrational::kSqrt14, Irrational::kSqrt21};

/// "PI", "SQRT2", ... as used in context JSON.
std::string_view symbol_name(Irrational symbol);
std::optional<Irrational> symbol_from_name(std::string_view name);
/// The symbol for √radicand, if the radicand is one of 2, 3, 6, 7, 14, 21.
std::optional<Irrational> sqrt_symbol(int radicand);
ExactReal exact_value(Irrational symbol, int digits);

/// A finite table of rational surrogates for irrational constants, e.g. the
/// customary π ≈ 3, √2 ≈ 17/12, √3 ≈ 7/4. Lookup of an absent symbol throws;
/// there is no fallback to the true value.
class ApproximationContext {
 public:
  ApproximationContext() = default;
  /// Throws DomainError on a non-positive surrogate.
  ApproximationContext(std::string name, std::map<Irrational, Rational> entries);

  const std::string& name() const { return name_; }
  const std::map<Irrational, Rational>& entries() const { return entries_; }

  bool contains(Irrational symbol) const { return entries_.contains(symbol); }
  /// Throws MissingSurrogate.
  const Rational& at(Irrational symbol) const;

  /// Copy with one surrogate added or replaced.
  ApproximationContext with(Irrational symbol, const Rational& value, std::string name) const;

  friend bool operator==(const ApproximationContext&, const ApproximationContext&) = default;

 private:
  std::string name_;
  std::map<Irrational, Rational> entries_;
};

/// π → 3, √2 → 17/12, √3 → 7/4.
ApproximationContext standard_context();
/// π → 3, √2 → 17/12, √3 → 26/15.
ApproximationContext alt_sqrt3_context();
std::vector<ApproximationContext> context_presets();
/// Preset by CLI name ("standard", "alt-sqrt3"); nullopt when unknown.
std::optional<ApproximationContext> find_preset(std::string_view name);

struct HeronTrace {
  Rational radicand;
  Rational seed;
  std::vector<Rational> iterates;  // iterates[0] is the seed
};

/// x_{k+1} = (x_k + N/x_k) / 2 in exact rational arithmetic.
HeronTrace heron_sequence(const Rational& radicand, const Rational& seed, int steps);

enum class SurdSign { kPlus, kMinus };

/// √(a² ± b) ≈ a ± b/(2a).
Rational surd_linear_approx(const Rational& a, const Rational& b, SurdSign sign);

/// How the square root in the completed square is evaluated.
struct ExactRoot {
  int precision = kDefaultPrecision;
};
struct SurrogateRoot {
  Rational root;  // stands in for √(q + (p/2)²)
};
using RootPolicy = std::variant<ExactRoot, SurrogateRoot>;

/// factor · symbol, or a plain rational when `symbol` is empty. Lets
/// coefficients such as √6·r/2 be stated symbolically and resolved later.
struct SymbolicTerm {
  Rational factor;
  std::optional<Irrational> symbol;
};

Rational resolve(const SymbolicTerm& term, const ApproximationContext& context);
ExactReal resolve(const SymbolicTerm& term, int digits);

/// Positive root of x² + p·x = q by completing the square:
/// x = √(q + (p/2)²) − p/2. With ExactRoot the result is a Rational when the
/// completed square is a rational square, an ExactReal otherwise.
Value solve_quadratic_takiltum(const Rational& p, const Rational& q, const RootPolicy& policy);
ExactReal solve_quadratic_takiltum(const ExactReal& p, const ExactReal& q);
Value solve_quadratic_takiltum(const SymbolicTerm& p, const SymbolicTerm& q,
                               const ApproximationContext& context, const RootPolicy& policy);
ExactReal solve_quadratic_takiltum(const SymbolicTerm& p, const SymbolicTerm& q, int digits);

}  // namespace polyarc
