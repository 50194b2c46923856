#include <stdexcept>

#include "diffseq/scan.hpp"

namespace diffseq {

namespace {

// One full accumulation pass at a fixed precision. Returns false when a
// running sum straddles 1 without an exact integrality rescue, so the
// caller can retry at higher precision.
bool accumulate_at(const Branch& branch, std::int64_t p_max, unsigned bits,
                   FracAccumulation& out) {
  const unsigned n = static_cast<unsigned>(branch.power);
  out.rows.clear();
  out.first_crossing.reset();
  out.undecided = false;
  out.undecided_at = -1;

  const Dyadic one(1);
  RealInterval z_prev = RealInterval::point(Dyadic(static_cast<long>(branch.x_prime)), bits);
  // sum_{k<p} {Step(k)} accumulated exactly from the per-step enclosures;
  // every Step lies in (1, 2^{1/n}) so its floor is 1 and {Step} = Step - 1.
  RealInterval sum = RealInterval::point(Dyadic(0), bits);
  for (std::int64_t p = 1; p <= p_max; ++p) {
    const Integer zn = branch_value_pow(branch, p);
    auto [z_floor, exact] = integer_nth_root(zn, n);
    const RealInterval z_cur =
        exact ? RealInterval::point(Dyadic(z_floor), bits) : nth_root_interval(zn, n, bits);
    sum = sum + (z_cur - z_prev - one);
    z_prev = z_cur;

    FracRow row;
    row.p = p;
    row.sum = sum;
    row.integer_point = exact;
    if (exact) {
      // z_p integer pins the running sum exactly: z_p - x' - p.
      row.exact_sum = z_floor - branch.x_prime - p;
    }
    if (!out.first_crossing) {
      if (exact) {
        if (row.exact_sum >= 1) out.first_crossing = p;
      } else if (sum.lo() >= one) {
        out.first_crossing = p;
      } else if (sum.hi() >= one) {
        // Straddles 1 and no exact rescue: needs refinement.
        out.undecided = true;
        out.undecided_at = p;
        out.rows.push_back(std::move(row));
        return false;
      }
    }
    out.rows.push_back(std::move(row));
  }
  return true;
}

}  // namespace

FracAccumulation frac_accumulation(const Branch& branch, std::int64_t p_max,
                                   const PrecisionPolicy& policy) {
  branch.validate();
  if (branch.coeff != 1) {
    throw std::invalid_argument("frac_accumulation: requires coefficient 1");
  }
  if (p_max < 1) throw std::invalid_argument("frac_accumulation: p_max must be >= 1");
  FracAccumulation out;
  out.branch = branch;
  unsigned bits = policy.start_bits;
  while (!accumulate_at(branch, p_max, bits, out)) {
    if (bits >= policy.max_bits) break;  // reported as undecided at undecided_at
    bits = std::min(bits * 2, policy.max_bits);
  }
  return out;
}

}  // namespace diffseq
