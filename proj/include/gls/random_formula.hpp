#ifndef GLS_RANDOM_FORMULA_HPP
#define GLS_RANDOM_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "gls/formula.hpp"

namespace gls {

/// Random formulas over p1..p<max_vars>. Each node is ⊥ with probability
/// 0.05; otherwise a variable, an implication or a box with equal odds, except
/// that only variables are drawn once the depth budget is spent. Children get
/// the parent's budget minus one.
///
/// Draws go through std::mt19937_64 and a fixed mapping to numbers, so a seed
/// reproduces the same sequence on every platform.
class FormulaGenerator {
 public:
  FormulaGenerator(std::uint64_t seed, std::size_t max_depth, std::size_t max_vars);

  Formula next();
  Formula next(std::size_t depth);
  /// Up to max_size formulas (possibly fewer after deduplication).
  FormulaSet next_set(std::size_t max_size, std::size_t depth);

  /// Uniform in [0, n).
  std::size_t below(std::size_t n);
  /// Uniform in [0, 1).
  double unit();

 private:
  std::mt19937_64 rng_;
  std::size_t max_depth_;
  std::size_t max_vars_;
};

}  // namespace gls

#endif  // GLS_RANDOM_FORMULA_HPP
