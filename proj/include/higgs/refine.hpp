#pragma once

#include "higgs/wallcross.hpp"

#include <map>
#include <utility>
#include <vector>

namespace higgs::refine {

using asymptotic::Curve;

// A rational invariant that should have been an integral Laurent polynomial.
struct NonIntegral : AlgebraError {
    using AlgebraError::AlgebraError;
};

// A cohomological consistency check failed: positivity, symmetry, degree
// parity, normalization, or the dimension identity.
struct ValidationFailed : AlgebraError {
    using AlgebraError::AlgebraError;
};

// Poincare polynomial b_0 + b_1 y + ... + b_{2m} y^{2m}.
struct PoincarePoly {
    std::vector<Int> betti;  // size 2m + 1
    int m = 0;

    friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;
};

// Hodge polynomial sum of h^{i,j} u^i v^j; only nonzero entries are stored.
struct HodgePoly {
    std::map<std::pair<int, int>, Int> h;
    int m = 0;  // max(i + j) = 2m

    // Betti numbers b_k = sum_{i+j=k} h^{i,j}
    PoincarePoly collapse() const;

    friend bool operator==(const HodgePoly&, const HodgePoly&) = default;
};

// The Laurent-polynomial value of f; throws NonIntegral when f has a
// nontrivial denominator or a non-integer coefficient.
LaurentPoly require_integral(const RationalFn& f);

// Peels multicover contributions off the normalized invariant. The multicover
// sum holds for the twist-signed invariants (-1)^{rp} H~(r, e); rewritten in
// the table normalization it reads
//   Hbar(r, e) = H~(r, e)
//     - sum_{k>1, k|gcd(r,e)} (-1)^{(r - r/k) p} / (k [k]) Hbar(r/k, e/k)|_{t -> t^k}
// with t running over the refinement variables and gcd(r, 0) = r. The result
// is conjecturally an integral Laurent polynomial independent of e, equal to
// H~(r, e') for coprime (r, e').
RationalFn multicover_invert(wallcross::Engine& eng, int r, long e);

// Cohomology extraction from a signed invariant h = H~(r, e), (r, e) coprime:
// with n = -(minimal exponent), y^n h must equal P(-y) for the Poincare
// polynomial P of the moduli space of stable Hitchin pairs. Validates b_0 = 1,
// nonnegative integer coefficients, even top degree 2m, and the dimension
// identity n = r^2(g-1) + r(r-1)p/2 + m. Returns (P, n).
std::pair<PoincarePoly, long> poincare_from_higgs(Curve c, int r, long e,
                                                  const RationalFn& h);

// Doubly refined analogue: (ab)^n h with a = u^{1/2}, b = v^{1/2} must have
// even exponents after the shift and coefficients (-1)^{i+j} h^{i,j} at
// u^i v^j with h^{i,j} = h^{j,i} >= 0, h^{0,0} = 1, and the same dimension
// identity on m = max(i+j)/2. Returns (H, n).
std::pair<HodgePoly, long> hodge_from_higgs(Curve c, int r, long e,
                                            const RationalFn& h);

} // namespace higgs::refine
