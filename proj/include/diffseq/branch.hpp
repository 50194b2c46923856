#pragma once

#include <cstdint>

#include "diffseq/exact.hpp"
#include "diffseq/interval.hpp"

namespace diffseq {

// One branch of z^n = coeff * x^n + y^n with x' = x - y fixed: sweeping the
// index p gives the values zn(p) = coeff*(x'+p)^n + p^n. coeff = 1 is the
// plain two-power case.
struct Branch {
  std::int64_t x_prime = 1;
  int power = 2;
  std::int64_t coeff = 1;

  void validate() const;
};

// coeff*(x'+p)^n + p^n, exact.
Integer branch_value_pow(const Branch& branch, std::int64_t p);

struct BranchPoint {
  std::int64_t p = 0;
  Integer zn;             // exact branch value
  Integer z_floor;        // floor(zn^{1/n})
  bool is_integer = false;  // z_floor^n == zn, decided exactly
  RealInterval z;         // encloses zn^{1/n}; a point interval when integer
};

BranchPoint branch_point(const Branch& branch, std::int64_t p, unsigned bits = 64);

struct IdentityCheck {
  Integer sum;       // sum_{i=0}^{n} C(n,i) (-1)^{n-i} zn(y+i)
  Integer expected;  // (coeff + 1) * n!
  Integer residual;  // sum - expected
  bool pass = false;
};

// Exact evaluation of the alternating nth-difference identity along the
// branch starting at index y. The nth difference of (x'+p)^n and of p^n in p
// are each n!, so the branch values sum to (coeff+1) * n!.
IdentityCheck verify_branch_identity(const Branch& branch, std::int64_t y);

}  // namespace diffseq
