#pragma once

#include <functional>
#include <utility>

#include "diffseq/dyadic.hpp"
#include "diffseq/errors.hpp"
#include "diffseq/exact.hpp"

namespace diffseq {

// Outcome of an interval comparison. Less/Greater/Equal are certified:
// they are true of the exact real values. Undecided means the precision
// cap was reached with overlapping intervals.
enum class Verdict { Less, Greater, Equal, Undecided };

const char* verdict_name(Verdict v);

// Adaptive-precision schedule: start at start_bits, double until a verdict
// or max_bits. The cap makes failure explicit instead of silent.
struct PrecisionPolicy {
  unsigned start_bits = 64;
  unsigned max_bits = 4096;
};

// Closed enclosure [lo, hi] of an exact real value. All operations keep the
// enclosure property: the exact result of the operation on the enclosed
// values lies inside the returned interval. Sums, differences and products
// of dyadics are exact, so only root extraction and division widen.
class RealInterval {
 public:
  RealInterval() : precision_bits_(0) {}
  RealInterval(Dyadic lo, Dyadic hi, unsigned precision_bits);

  static RealInterval point(Dyadic value, unsigned precision_bits = 0);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  unsigned precision_bits() const { return precision_bits_; }

  Dyadic width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }
  Dyadic midpoint() const { return (lo_ + hi_).mul_pow2(-1); }

  bool contains(const Rational& value) const;

  RealInterval operator-() const { return RealInterval(-hi_, -lo_, precision_bits_); }
  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator+(const RealInterval& a, const Dyadic& s);
  friend RealInterval operator-(const RealInterval& a, const Dyadic& s);

 private:
  Dyadic lo_;
  Dyadic hi_;
  unsigned precision_bits_;
};

// [1/hi, 1/lo] with outward directed rounding; requires 0 outside [lo, hi].
RealInterval reciprocal(const RealInterval& a, unsigned bits);

// Tight enclosure of an exact rational (a point interval when the value is
// dyadic).
RealInterval rational_interval(const Rational& value, unsigned bits);

// Enclosure of N^{1/n} with hi - lo <= 2^{1-bits} * max(1, hi). Returns a
// point interval when the root is an exact integer.
RealInterval nth_root_interval(const Integer& value, unsigned n, unsigned bits);
RealInterval nth_root_interval(const Rational& value, unsigned n, unsigned bits);

// Recomputes one comparison operand at the requested precision.
using Refiner = std::function<RealInterval(unsigned bits)>;

// Certified comparison of the exact values enclosed by a and b, escalating
// both operands through the policy schedule until the intervals separate.
// Equal is only reported for identical point intervals (an exact criterion);
// interval refinement alone can never certify equality of distinct reals.
Verdict compare(RealInterval a, RealInterval b, const Refiner& refine_a,
                const Refiner& refine_b, const PrecisionPolicy& policy = {});

// Convenience forms for operands that are already sharp enough to decide.
Verdict compare_static(const RealInterval& a, const RealInterval& b);

struct FracParts {
  RealInterval frac;    // encloses x - floor(x), subset of [0, 1)
  Integer floor_value;  // floor(x)
};

// Splits the enclosed value into integer and fractional part. Throws
// StraddlesInteger when floor(lo) != floor(hi): the caller must refine or
// fall back to an exact integrality criterion.
FracParts fractional_part(const RealInterval& a);
FracParts fractional_part(const RealInterval& a, const Refiner& refine,
                          const PrecisionPolicy& policy);

}  // namespace diffseq
