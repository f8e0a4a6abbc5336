#pragma once

#include "higgs/asymptotic.hpp"

namespace higgs::gauge {

struct PoleAtZero : AlgebraError {
    using AlgebraError::AlgebraError;
};

// The (Y1, Y2) fixed-point contribution to the rank-two instanton partition
// function with g adjoint hypermultiplets and level-p Chern-Simons term, as a
// factored expression over (q1, q2, Qf, y). The framing signs e^{a1} = -1,
// e^{a2} = -Qf^{-1} are folded in, so only Qf-monomials remain.
FactoredExpr fixedpoint_term(asymptotic::Curve c, const partitions::Partition& Y1,
                             const partitions::Partition& Y2);

// Exact evaluation of t * Qf^power at Qf = 0, factor by factor; the result
// drops Qf from the variable set. Factors carrying positive Qf-powers tend to
// one; negative powers are rewritten as monomial times a factor tending to
// one. Throws PoleAtZero when the net Qf-order is negative and AlgebraError
// when it is positive (the product would vanish identically).
FactoredExpr qf_zero_limit(const FactoredExpr& t, long power);

// Gauge-theory rederivations of the asymptotic tableau building blocks;
// these agree with omega_y / omega_uv for every tableau.
FactoredExpr spec_refined(asymptotic::Curve c, const partitions::Partition& Y);
FactoredExpr spec_doubly(asymptotic::Curve c, const partitions::Partition& Y);

} // namespace higgs::gauge
