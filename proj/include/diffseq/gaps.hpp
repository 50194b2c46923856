#pragma once

#include <cstdint>

#include "diffseq/errors.hpp"
#include "diffseq/interval.hpp"

namespace diffseq {

// ceil(1 / ((coeff+1)^{1/n} - 1)): the least index distance between two
// integer points on a branch. The ceiling is taken only once a certified
// interval excludes every integer boundary; when coeff+1 is a perfect nth
// power the quotient is exactly rational and the ceiling is computed
// exactly instead (by the rational-root theorem that is the only way
// (coeff+1)^{1/n} can be rational).
std::int64_t min_gap(int n, std::int64_t coeff = 1, const PrecisionPolicy& policy = {});

// Largest integer y strictly below 1/(2^{1/n} - 1): every smaller leg up to
// this value is excluded for power n >= 3.
std::int64_t fermat_y_bound(int n, const PrecisionPolicy& policy = {});

// Least admissible index distance to the next integer point when the
// accumulated fractional part is already below (2^{1/n} - 1) * j:
// min_gap(n, 1) - j. Throws HypothesisViolation when (2^{1/n} - 1) * j >= 1
// (decided by certified intervals).
std::int64_t conditional_gap_bound(int n, std::int64_t j, const PrecisionPolicy& policy = {});

}  // namespace diffseq
