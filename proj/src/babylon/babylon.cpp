#include "polyarc/babylon.hpp"

#include <utility>

#include "polyarc/errors.hpp"

namespace polyarc {

namespace {

struct SymbolInfo {
  Irrational symbol;
  std::string_view name;
  int radicand;  // 0 for π
};

constexpr SymbolInfo kSymbols[] = {
    {Irrational::kPi, "PI", 0},        {Irrational::kSqrt2, "SQRT2", 2},
    {Irrational::kSqrt3, "SQRT3", 3},  {Irrational::kSqrt6, "SQRT6", 6},
    {Irrational::kSqrt7, "SQRT7", 7},  {Irrational::kSqrt14, "SQRT14", 14},
    {Irrational::kSqrt21, "SQRT21", 21},
};

const SymbolInfo& info(Irrational symbol) {
  for (const auto& s : kSymbols) {
    if (s.symbol == symbol) {
      return s;
    }
  }
  throw std::logic_error("unknown irrational symbol");
}

Rational require_positive(const Rational& value, const char* what) {
  if (value.sign() <= 0) {
    throw DomainError(std::string(what) + " must be positive");
  }
  return value;
}

}  // namespace

std::string_view symbol_name(Irrational symbol) { return info(symbol).name; }

std::optional<Irrational> symbol_from_name(std::string_view name) {
  for (const auto& s : kSymbols) {
    if (s.name == name) {
      return s.symbol;
    }
  }
  return std::nullopt;
}

std::optional<Irrational> sqrt_symbol(int radicand) {
  for (const auto& s : kSymbols) {
    if (s.radicand == radicand && radicand != 0) {
      return s.symbol;
    }
  }
  return std::nullopt;
}

ExactReal exact_value(Irrational symbol, int digits) {
  const auto& s = info(symbol);
  if (s.radicand == 0) {
    return ExactReal::pi(digits);
  }
  return sqrt(ExactReal(s.radicand, digits));
}

ApproximationContext::ApproximationContext(std::string name, std::map<Irrational, Rational> entries)
    : name_(std::move(name)), entries_(std::move(entries)) {
  for (const auto& [symbol, value] : entries_) {
    if (value.sign() <= 0) {
      throw DomainError("surrogate for " + std::string(symbol_name(symbol)) + " must be positive");
    }
  }
}

const Rational& ApproximationContext::at(Irrational symbol) const {
  const auto it = entries_.find(symbol);
  if (it == entries_.end()) {
    throw MissingSurrogate("context '" + name_ + "' has no surrogate for " +
                           std::string(symbol_name(symbol)));
  }
  return it->second;
}

ApproximationContext ApproximationContext::with(Irrational symbol, const Rational& value,
                                                std::string name) const {
  auto entries = entries_;
  entries[symbol] = value;
  return ApproximationContext(std::move(name), std::move(entries));
}

ApproximationContext standard_context() {
  return ApproximationContext("standard", {{Irrational::kPi, Rational(3)},
                                           {Irrational::kSqrt2, Rational(17, 12)},
                                           {Irrational::kSqrt3, Rational(7, 4)}});
}

ApproximationContext alt_sqrt3_context() {
  return ApproximationContext("alt-sqrt3", {{Irrational::kPi, Rational(3)},
                                            {Irrational::kSqrt2, Rational(17, 12)},
                                            {Irrational::kSqrt3, Rational(26, 15)}});
}

std::vector<ApproximationContext> context_presets() { return {standard_context(), alt_sqrt3_context()}; }

std::optional<ApproximationContext> find_preset(std::string_view name) {
  for (auto& context : context_presets()) {
    if (context.name() == name) {
      return context;
    }
  }
  return std::nullopt;
}

HeronTrace heron_sequence(const Rational& radicand, const Rational& seed, int steps) {
  require_positive(radicand, "radicand");
  require_positive(seed, "seed");
  if (steps < 0) {
    throw DomainError("step count must be non-negative");
  }
  HeronTrace trace{radicand, seed, {seed}};
  trace.iterates.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k < steps; ++k) {
    const Rational& x = trace.iterates.back();
    trace.iterates.push_back((x + radicand / x) / 2);
  }
  return trace;
}

Rational surd_linear_approx(const Rational& a, const Rational& b, SurdSign sign) {
  require_positive(a, "a");
  if (b.sign() < 0) {
    throw DomainError("b must be non-negative");
  }
  if (sign == SurdSign::kMinus) {
    if (a * a - b < 0) {
      throw DomainError("negative radicand a^2 - b");
    }
    return a - b / (2 * a);
  }
  return a + b / (2 * a);
}

Rational resolve(const SymbolicTerm& term, const ApproximationContext& context) {
  return term.symbol ? term.factor * context.at(*term.symbol) : term.factor;
}

ExactReal resolve(const SymbolicTerm& term, int digits) {
  ExactReal factor(term.factor, digits);
  return term.symbol ? factor * exact_value(*term.symbol, digits) : factor;
}

Value solve_quadratic_takiltum(const Rational& p, const Rational& q, const RootPolicy& policy) {
  const Rational half = p / 2;
  const Rational square = q + half * half;
  if (square.sign() < 0) {
    throw DomainError("negative discriminant: q + (p/2)^2 < 0");
  }
  if (const auto* surrogate = std::get_if<SurrogateRoot>(&policy)) {
    return surrogate->root - half;
  }
  if (auto root = exact_sqrt(square)) {
    return *root - half;
  }
  const int digits = std::get<ExactRoot>(policy).precision;
  return sqrt(ExactReal(square, digits)) - ExactReal(half, digits);
}

ExactReal solve_quadratic_takiltum(const ExactReal& p, const ExactReal& q) {
  const ExactReal half = p / 2;
  const ExactReal square = q + half * half;
  if (square.sign() < 0) {
    throw DomainError("negative discriminant: q + (p/2)^2 < 0");
  }
  return sqrt(square) - half;
}

Value solve_quadratic_takiltum(const SymbolicTerm& p, const SymbolicTerm& q,
                               const ApproximationContext& context, const RootPolicy& policy) {
  return solve_quadratic_takiltum(resolve(p, context), resolve(q, context), policy);
}

ExactReal solve_quadratic_takiltum(const SymbolicTerm& p, const SymbolicTerm& q, int digits) {
  return solve_quadratic_takiltum(resolve(p, digits), resolve(q, digits));
}

}  // namespace polyarc
