#pragma once

#include <cstdint>
#include <optional>

#include "diffseq/branch.hpp"
#include "diffseq/interval.hpp"

namespace diffseq {

// Enclosure of z_{p+1} - z_p along a branch, plus (after the bounds have
// been certified, so the floor is 1) an enclosure of its fractional part.
struct StepValue {
  std::int64_t p = 0;
  RealInterval interval;
  std::optional<RealInterval> frac;
};

StepValue step(const Branch& branch, std::int64_t p, unsigned bits = 64);

// Enclosure of (1 + (1/(1+alpha))^n)^{1/n}, the step ceiling along the
// x' = alpha*p parametrization; decreasing in alpha, approaching 2^{1/n}
// as alpha -> 0. Requires 0 < alpha <= 1 and n >= 2.
RealInterval step_limit(const Rational& alpha, int n, unsigned bits = 64);

// Enclosure of (coeff+1)^{1/n}, the upper Step bound — proven for coeff = 1,
// conjectural otherwise.
RealInterval step_upper_root(int n, std::int64_t coeff, unsigned bits);

}  // namespace diffseq
