#include "sncd/abelian_group.hpp"

#include <algorithm>
#include <sstream>

#include "sncd/errors.hpp"

namespace sncd {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Integer> factors) {
  // Normalize an arbitrary list to the divisibility chain by repeatedly
  // replacing (x, y) with (gcd, lcm).
  for (auto& f : factors) {
    if (f <= 0) throw InternalError("invariant factor must be positive");
  }
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      Integer g = gcd(factors[i], factors[j]);
      Integer l = factors[i] / g * factors[j];
      factors[i] = g;
      factors[j] = l;
    }
  }
  for (auto& f : factors) {
    if (f != 1) factors_.push_back(f);
  }
}

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const auto& f : factors_) n *= f;
  return n;
}

FiniteAbelianGroup FiniteAbelianGroup::prime_to_part(std::int64_t p) const {
  std::vector<Integer> out;
  for (const auto& f : factors_) out.push_back(sncd::prime_to_part(f, p));
  return FiniteAbelianGroup(std::move(out));
}

std::string FiniteAbelianGroup::str() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << factors_[i];
  }
  return os.str();
}

QuotientGroup smith_quotient(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = b.rows();
  if (a.rows() > 0 && a.cols() != n) {
    std::ostringstream os;
    os << "A is " << a.rows() << "x" << a.cols() << " but B has " << n << " rows";
    throw DimensionMismatch(os.str());
  }

  IntMatrix coords;  // columns of B in a basis of ker(A)
  std::size_t kernel_rank = n;
  if (a.rows() == 0) {
    coords = b;
  } else {
    if (!(a * b).is_zero()) throw DimensionMismatch("image of B is not contained in ker(A)");
    SmithForm sa = smith_normal_form(a);
    kernel_rank = n - sa.rank;
    IntMatrix y = sa.right_inverse * b;
    coords = IntMatrix(kernel_rank, b.cols());
    for (std::size_t i = 0; i < kernel_rank; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) coords(i, j) = y(sa.rank + i, j);
  }

  QuotientGroup out;
  if (coords.cols() == 0 || coords.rows() == 0) {
    out.free_rank = kernel_rank;
    return out;
  }
  SmithForm sx = smith_normal_form(coords);
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < sx.rank; ++i) torsion.push_back(sx.diagonal[i]);
  out.torsion = FiniteAbelianGroup(std::move(torsion));
  out.free_rank = kernel_rank - sx.rank;
  return out;
}

QuotientGroup cokernel(const IntMatrix& b) { return smith_quotient(IntMatrix(), b); }

}  // namespace sncd
