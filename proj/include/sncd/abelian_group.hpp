#pragma once

#include <string>
#include <vector>

#include "sncd/integer.hpp"
#include "sncd/matrix.hpp"

namespace sncd {

/// Finite abelian group stored by its invariant factors d_1 | d_2 | ... (all >= 2).
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Accepts any list of positive integers; factors equal to 1 are dropped and
  /// the list is brought to divisibility-chain form.
  explicit FiniteAbelianGroup(std::vector<Integer> factors);

  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  Integer order() const;
  bool trivial() const noexcept { return factors_.empty(); }

  /// Strips p-power factors; p <= 1 returns the group unchanged.
  FiniteAbelianGroup prime_to_part(std::int64_t p) const;

  std::string str() const;
  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  std::vector<Integer> factors_;
};

struct QuotientGroup {
  FiniteAbelianGroup torsion;
  std::size_t free_rank = 0;
};

/// ker(A) / im(B) for A: Z^n -> Z^r (r x n) and B: Z^k -> Z^n (n x k).
/// A may have zero rows, in which case this is the cokernel of B.
/// Throws DimensionMismatch if shapes disagree or im(B) is not inside ker(A).
QuotientGroup smith_quotient(const IntMatrix& a, const IntMatrix& b);

/// Cokernel of B: Z^k -> Z^n.
QuotientGroup cokernel(const IntMatrix& b);

}  // namespace sncd
