#pragma once

#include <cstdint>
#include <string>

#include "sncd/abelian_group.hpp"
#include "sncd/curve.hpp"
#include "sncd/cyclo_product.hpp"

namespace sncd {

/// Invariants of the Jacobian read off an sncd model.
struct InvariantReport {
  FiniteAbelianGroup phi;
  std::int64_t phi_rank = 0;
  std::int64_t genus = 0;
  std::int64_t t = 0;  // toric rank, b_1 of the dual graph
  std::int64_t a = 0;  // abelian rank, sum of component genera
  std::int64_t u = 0;  // unipotent rank
  CycloProduct P;
  CycloProduct P_prime;
  CycloProduct zeta;
  std::int64_t e_model = 1;
  bool tame = true;
  bool additive = false;
};

struct TraceReport {
  bool additive = false;
  Integer p_prime_at_one;          // P'_C(1)
  Integer phi_prime_order;         // prime-to-p part of |Phi|
  Rational multiplicity_product;   // prod N'_i^{d_i - 2}
  bool agree = false;              // all three equal (additive curves only)
  std::string note;
};

/// Phi = ker(beta)/im(alpha) for alpha the intersection matrix and beta = (N_i).
FiniteAbelianGroup component_group(const SncdCurve& curve);

/// (t-1)^2 prod (t^{N_i}-1)^{-chi(E_i^o)}.
CycloProduct char_poly(const SncdCurve& curve);
/// Same with N_i replaced by its prime-to-p part.
CycloProduct char_poly_prime(const SncdCurve& curve);

/// prod (T^{N'_i}-1)^{-chi(E_i^o)}.
CycloProduct monodromy_zeta(const SncdCurve& curve);
/// (T-1)^{2a+2t} prod ((T^{N'_i}-1)/(T-1))^{2g_i+d_i-2}.
CycloProduct lorenzini_form(const SncdCurve& curve);

/// lcm of N_i over principal components (1 if there are none).
std::int64_t stabilization_index(const SncdCurve& curve);

TraceReport trace_identities(const SncdCurve& curve);

/// gcd(e, p) = 1. Exact only for relatively minimal models.
bool tame(const SncdCurve& curve);

InvariantReport analyze(const SncdCurve& curve);

}  // namespace sncd
