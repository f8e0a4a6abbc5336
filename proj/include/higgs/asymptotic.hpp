#pragma once

#include "higgs/partitions.hpp"
#include "higgs/series.hpp"

namespace higgs::asymptotic {

// The geometric input: a genus-g curve with a twisting line bundle of
// degree p >= 0 (the second twist has degree 2 - 2g - p).
struct Curve {
    int g;
    int p;
};

enum class Mode { y, uv };

inline VarSet mode_vars(Mode m) {
    return m == Mode::y ? VarSet{Var::lambda, Var::y} : VarSet{Var::lambda, Var::a, Var::b};
}

// Tableau-indexed building block of the asymptotic invariant generating
// function, singly refined: a factored expression over (lambda, y).
FactoredExpr omega_y(Curve c, const partitions::Partition& Y);

// Doubly refined variant over (lambda, a, b) with a = u^{1/2}, b = v^{1/2};
// substituting a -> y, b -> y recovers omega_y.
FactoredExpr omega_uv(Curve c, const partitions::Partition& Y);

// lambda-expansion of the full rank-r generating function
// sum over |Y| = r of omega: coefficient of lambda^e is the asymptotic
// invariant A(r, e). Exact for all e <= e_max; zero below the valuation.
PolySeries rank_series(Curve c, int r, int e_max, Mode mode);

// least possible lambda-degree: coefficients vanish below this bound
inline int lower_degree_bound(Curve c, int r) {
    return -r * (r - 1) * (2 * c.g - 2 + c.p);
}

} // namespace higgs::asymptotic
