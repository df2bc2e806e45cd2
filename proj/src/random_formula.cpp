#include "gls/random_formula.hpp"

#include <stdexcept>
#include <string>

namespace gls {

namespace {
constexpr double kBotWeight = 0.05;
}

FormulaGenerator::FormulaGenerator(std::uint64_t seed, std::size_t max_depth, std::size_t max_vars)
    : rng_(seed), max_depth_(max_depth), max_vars_(max_vars) {
  if (max_vars == 0) throw std::invalid_argument("need at least one variable");
}

double FormulaGenerator::unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

std::size_t FormulaGenerator::below(std::size_t n) {
  return static_cast<std::size_t>(unit() * static_cast<double>(n));
}

Formula FormulaGenerator::next() { return next(max_depth_); }

Formula FormulaGenerator::next(std::size_t depth) {
  const double r = unit();
  if (r < kBotWeight) return Formula::bot();
  const std::size_t choice =
      depth == 0 ? 0 : std::min<std::size_t>(2, static_cast<std::size_t>((r - kBotWeight) / ((1.0 - kBotWeight) / 3)));
  switch (choice) {
    case 0:
      return Formula::var("p" + std::to_string(1 + below(max_vars_)));
    case 1: {
      Formula left = next(depth - 1);
      return Formula::imp(std::move(left), next(depth - 1));
    }
    default:
      return Formula::box(next(depth - 1));
  }
}

FormulaSet FormulaGenerator::next_set(std::size_t max_size, std::size_t depth) {
  FormulaSet out;
  const std::size_t n = below(max_size + 1);
  for (std::size_t i = 0; i < n; ++i) out.insert(next(depth));
  return out;
}

}  // namespace gls
