#pragma once

#include "higgs/asymptotic.hpp"
#include "higgs/ratfn.hpp"

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace higgs::wallcross {

using asymptotic::Curve;
using asymptotic::Mode;

// Division by the vanishing bracket [0]; unreachable after degree
// normalization for g >= 2, kept as a guard.
struct DegenerateBracket : AlgebraError {
    using AlgebraError::AlgebraError;
};

// A numerical charge (rank, degree) with slope e/r. Slope comparisons are
// done exactly by cross-multiplication; ordering is lexicographic on (r, e).
struct Charge {
    int r = 1;
    long e = 0;

    friend auto operator<=>(const Charge&, const Charge&) = default;
};

// exact slope comparison: sign of mu(x) - mu(y)
inline int slope_cmp(const Charge& x, const Charge& y) {
    long lhs = x.e * y.r, rhs = y.e * x.r;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

// The three constrained sums of the recursion differ only in how the tail
// slopes relate to the target slope.
enum class SumKind { strict_above, weakly_above, equal_slope };

// One unordered splitting target = first + sum(tail).
//  - strict_above / weakly_above: `first` is the distinguished charge that
//    contributes an asymptotic invariant; tail charges contribute
//    bracket * H factors and have slope strictly (resp. weakly) above the
//    target slope.
//  - equal_slope: no distinguished charge; every part sits in `tail` and all
//    slopes equal the target slope.
// `weight` is the symmetry factor 1/prod(mult!) over repeated tail charges;
// the alternating sign (-1)^{l-1} of the recursion is applied by the caller
// from `parts`.
struct Decomposition {
    std::optional<Charge> first;
    std::vector<Charge> tail;  // non-increasing
    Rat weight;
    int parts = 0;  // l = total number of parts including `first`
};

// Enumerates all decompositions with l >= 2 parts admitted by the slope
// constraints; delta = 2g - 2 + p > 0. Finite: tail degrees are bounded
// below by slope, above by the degree budget left for the remaining parts.
// The distinguished charge obeys the slope floor mu_0(r) = -(r-1)*delta and
// the vanishing bound e_1 >= -r_1(r_1-1)*delta of the asymptotic invariants.
std::vector<Decomposition> decompositions(Charge target, SumKind kind, long delta);

// The recursion engine: computes the normalized invariants H~(r, e) of a
// twisted Higgs theory on a genus-g curve, in the chosen refinement mode,
// from the tableau asymptotic series, with memoization on (r, e mod r).
class Engine {
public:
    Engine(Curve c, Mode mode);

    const Curve& curve() const { return c_; }
    Mode mode() const { return mode_; }
    const VarSet& vars() const { return vars_; }
    long delta() const { return 2L * c_.g - 2 + c_.p; }
    long mu0_scaled(int r) const { return -static_cast<long>(r - 1) * delta(); }

    // canonical representative of e modulo the rank-r shift symmetry,
    // adjusted off the degenerate bracket (dead code for g >= 2)
    long normalize_degree(int r, long e) const;

    // signed asymptotic invariant: (-1)^{rp} x the lambda^e coefficient of
    // the rank-r tableau series, projected onto the mode variables
    LaurentPoly a_tilde(int r, long e);

    // quantum bracket [n] in y, resp. in (uv)^{1/2} = ab
    LaurentPoly bracket(long n) const;

    // memoized invariant at the normalized degree
    const RationalFn& higgs_tilde(int r, long e);

    // single unmemoized evaluation of the recursion at the literal degree
    // (subcalls still go through the table); exposed for shift-symmetry tests
    RationalFn compute_raw(int r, long e);

    long hits() const { return hits_; }
    long computes() const { return computes_; }

    // read-only view of the memo table (keys are normalized), for snapshots
    const std::map<std::pair<int, long>, RationalFn>& table() const { return table_; }

    // pre-populate a memo entry from a snapshot; the value must be what the
    // engine would compute (existing entries are kept)
    void seed(int r, long e, RationalFn value);

private:
    const PolySeries& series_for(int r, long e_max);
    // product of bracket * H~ factors over the tail, scaled by the symmetry
    // weight; zero product short-circuits
    RationalFn tail_product(const Decomposition& dec);

    Curve c_;
    Mode mode_;
    VarSet vars_;
    std::map<int, PolySeries> aser_;
    std::map<std::pair<int, long>, RationalFn> table_;
    long hits_ = 0;
    long computes_ = 0;
};

} // namespace higgs::wallcross
