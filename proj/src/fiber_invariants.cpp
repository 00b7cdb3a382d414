#include "sncd/fiber_invariants.hpp"

#include "sncd/errors.hpp"

namespace sncd {

namespace {

IntMatrix beta_row(const SncdCurve& curve) {
  IntMatrix beta(1, curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) beta(0, i) = curve.vertices()[i].multiplicity;
  return beta;
}

CycloProduct chi_product(const SncdCurve& curve, std::int64_t p, std::int64_t t_minus_one) {
  auto geo = geometry(curve);
  CycloProduct::Exponents factors;
  if (t_minus_one != 0) factors[1] += t_minus_one;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    std::int64_t n = prime_to_part(curve.vertices()[i].multiplicity, p);
    factors[n] -= geo.vertices[i].chi_open;
  }
  return CycloProduct(factors);
}

}  // namespace

FiniteAbelianGroup component_group(const SncdCurve& curve) {
  require_valid(curve);
  QuotientGroup q;
  try {
    q = smith_quotient(beta_row(curve), intersection_matrix(curve));
  } catch (const DimensionMismatch& e) {
    throw MalformedFiber(std::string("intersection matrix is not killed by the multiplicity vector: ") + e.what());
  }
  if (q.free_rank != 0) throw MalformedFiber("component group has positive rank");
  return q.torsion;
}

CycloProduct char_poly(const SncdCurve& curve) {
  require_valid(curve);
  CycloProduct P = cyclo_normalize(chi_product(curve, 1, 2));
  if (!P.is_polynomial()) throw MalformedFiber("characteristic product " + P.str() + " is not a polynomial");
  if (P.degree() != 2 * genus(curve))
    throw MalformedFiber("characteristic polynomial has degree " + std::to_string(P.degree()) +
                         ", expected " + std::to_string(2 * genus(curve)));
  return P;
}

CycloProduct char_poly_prime(const SncdCurve& curve) {
  require_valid(curve);
  CycloProduct P = cyclo_normalize(chi_product(curve, curve.p(), 2));
  if (!P.is_polynomial()) throw MalformedFiber("prime-to-p product " + P.str() + " is not a polynomial");
  if (curve.p() > 1 && !divides(P, char_poly(curve)))
    throw MalformedFiber("P' does not divide P");
  return P;
}

CycloProduct monodromy_zeta(const SncdCurve& curve) {
  require_valid(curve);
  return cyclo_normalize(chi_product(curve, curve.p(), 0));
}

CycloProduct lorenzini_form(const SncdCurve& curve) {
  require_valid(curve);
  auto geo = geometry(curve);
  CycloProduct out = CycloProduct::factor(1, 2 * geo.abelian_rank + 2 * geo.betti_one);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const auto& v = curve.vertices()[i];
    std::int64_t k = 2 * v.genus + geo.vertices[i].degree - 2;
    std::int64_t n = prime_to_part(v.multiplicity, curve.p());
    out = out * CycloProduct::factor(n, k) * CycloProduct::factor(1, -k);
  }
  return cyclo_normalize(out);
}

std::int64_t stabilization_index(const SncdCurve& curve) {
  auto geo = geometry(curve);
  std::int64_t e = 1;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (geo.vertices[i].principal) e = lcm64(e, curve.vertices()[i].multiplicity);
  }
  return e;
}

bool tame(const SncdCurve& curve) {
  return curve.p() <= 1 || gcd64(stabilization_index(curve), curve.p()) == 1;
}

TraceReport trace_identities(const SncdCurve& curve) {
  require_valid(curve);
  TraceReport out;
  auto geo = geometry(curve);
  out.additive = geo.betti_one == 0 && geo.abelian_rank == 0;
  out.p_prime_at_one = char_poly_prime(curve).value_at_one();
  out.phi_prime_order = component_group(curve).prime_to_part(curve.p()).order();
  out.multiplicity_product = 1;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    std::int64_t n = prime_to_part(curve.vertices()[i].multiplicity, curve.p());
    std::int64_t k = geo.vertices[i].degree - 2;
    Integer pw = ipow(Integer(n), static_cast<unsigned>(k < 0 ? -k : k));
    out.multiplicity_product *= k < 0 ? Rational(1, pw) : Rational(pw);
  }
  if (out.additive) {
    out.agree = out.p_prime_at_one == out.phi_prime_order && Rational(out.phi_prime_order) == out.multiplicity_product;
  } else {
    out.note = "not additive: P(1) = " + out.p_prime_at_one.str();
    out.agree = out.p_prime_at_one == 0;
  }
  return out;
}

InvariantReport analyze(const SncdCurve& curve) {
  require_valid(curve);
  InvariantReport r;
  auto geo = geometry(curve);
  r.phi = component_group(curve);
  r.genus = genus(curve);
  r.t = geo.betti_one;
  r.a = geo.abelian_rank;
  r.u = r.genus - r.t - r.a;
  if (r.u < 0) throw MalformedFiber("toric and abelian ranks exceed the genus");
  r.P = char_poly(curve);
  r.P_prime = char_poly_prime(curve);
  r.zeta = monodromy_zeta(curve);
  r.e_model = stabilization_index(curve);
  r.tame = tame(curve);
  r.additive = r.t == 0 && r.a == 0;
  return r;
}

}  // namespace sncd
