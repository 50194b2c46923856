#include "diffseq/branch.hpp"

#include <stdexcept>

namespace diffseq {

void Branch::validate() const {
  if (x_prime < 1) throw std::invalid_argument("Branch: x' must be >= 1 (x > y)");
  if (power < 2) throw std::invalid_argument("Branch: power must be >= 2");
  if (coeff < 1) throw std::invalid_argument("Branch: coefficient must be >= 1");
}

Integer branch_value_pow(const Branch& branch, std::int64_t p) {
  branch.validate();
  if (p < 0) throw std::invalid_argument("branch_value_pow: p must be >= 0");
  const unsigned long n = static_cast<unsigned long>(branch.power);
  Integer left = Integer(static_cast<long>(branch.x_prime)) + static_cast<long>(p);
  mpz_pow_ui(left.get_mpz_t(), left.get_mpz_t(), n);
  left *= Integer(static_cast<long>(branch.coeff));
  Integer right(static_cast<long>(p));
  mpz_pow_ui(right.get_mpz_t(), right.get_mpz_t(), n);
  return left + right;
}

BranchPoint branch_point(const Branch& branch, std::int64_t p, unsigned bits) {
  BranchPoint point;
  point.p = p;
  point.zn = branch_value_pow(branch, p);
  auto [root, exact] = integer_nth_root(point.zn, static_cast<unsigned>(branch.power));
  point.z_floor = std::move(root);
  point.is_integer = exact;
  point.z = exact ? RealInterval::point(Dyadic(point.z_floor), bits)
                  : nth_root_interval(point.zn, static_cast<unsigned>(branch.power), bits);
  return point;
}

IdentityCheck verify_branch_identity(const Branch& branch, std::int64_t y) {
  branch.validate();
  if (y < 0) throw std::invalid_argument("verify_branch_identity: y must be >= 0");
  const unsigned n = static_cast<unsigned>(branch.power);
  const auto& row = binomial_row(n);
  IdentityCheck check;
  check.sum = 0;
  for (unsigned i = 0; i <= n; ++i) {
    Integer term = row[i] * branch_value_pow(branch, y + i);
    if ((n - i) % 2 == 0) {
      check.sum += term;
    } else {
      check.sum -= term;
    }
  }
  check.expected = Integer(static_cast<long>(branch.coeff + 1)) * factorial(n);
  check.residual = check.sum - check.expected;
  check.pass = check.residual == 0;
  return check;
}

}  // namespace diffseq
