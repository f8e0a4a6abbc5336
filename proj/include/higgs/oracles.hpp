#pragma once

#include "higgs/refine.hpp"
#include "higgs/series.hpp"

namespace higgs::oracles {

// A q = 1 limit whose negative-eps coefficients failed to cancel. This
// indicates an implementation bug, never a property of valid input, so it is
// surfaced loudly instead of being truncated away.
struct NonCancellation : AlgebraError {
    using AlgebraError::AlgebraError;
};

// Hodge polynomial of the n-th symmetric product of a genus-g curve, over
// (u, v): the x^n coefficient of (1+xu)^g (1+xv)^g / ((1-x)(1-xuv)).
LaurentPoly sym_prod_hodge(int n, int g);

// Closed-form Hodge polynomial of the moduli space of stable bundles of rank
// r in {2, 3} and degree 1 on a genus-g curve; validated to reduce to a
// polynomial with nonnegative integer coefficients.
RationalFn stable_bundle_hodge(int r, int g);

// Hodge polynomial of the rank-2 degree-1 moduli of twisted Hitchin pairs by
// torus localization. The fixed-locus sum (stable bundles plus Jacobian x
// symmetric-product loci) and the closed form are computed independently and
// asserted equal before returning.
RationalFn loc_rank2_hodge(int g, int p);

// Rank-3 degree-1 analogue: stable bundles plus the three triangular
// fixed-locus families, with their printed index ranges.
RationalFn loc_rank3_hodge(int g, int p);

// E-polynomial of the untwisted theory from the tableau-log formula, r <= 3:
// the rank-r coefficient of log of the tableau series, peeled along the
// divisor sum with arguments (q^k, -(-x)^k, -(-y)^k), divided by the
// B_r kernel, evaluated at q = 1 exactly with enforced pole cancellation.
RationalFn hrv_E(int g, int r);

// the Hodge numbers as a polynomial in (u, v), for comparison with oracles
LaurentPoly hodge_poly(const refine::HodgePoly& h);

} // namespace higgs::oracles
