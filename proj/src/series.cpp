#include "higgs/series.hpp"

namespace higgs {

namespace {

// valuation in `var` of the factor (1 - s*m)^k when expanded
int factor_valuation(const FactoredExpr::Factor& f, int idx) {
    int d = f.m[idx];
    if (f.k > 0 && d < 0) return static_cast<int>(f.k) * d;
    return 0;
}

} // namespace

PolySeries series_expand(const FactoredExpr& f, Var var, int order) {
    int idx = f.vars().index_of(var);
    if (idx < 0) throw VarMismatch("series_expand: variable not in VarSet");
    const VarSet& vars = f.vars();
    LaurentPoly zero = lp_zero(vars);

    // overall valuation: prefactor plus the negative-degree positive-power factors
    int val = f.prefactor()[idx];
    for (const auto& fac : f.factors()) val += factor_valuation(fac, idx);
    if (val > order) return PolySeries(var, val, order, zero);  // empty range: everything 0

    Exp pre = f.prefactor();
    int pval = pre[idx];
    pre[idx] = 0;
    PolySeries acc(var, pval, pval + (order - val), zero);
    acc.set(pval, LaurentPoly::monomial(vars, pre, Rat(f.sign())));

    for (const auto& fac : f.factors()) {
        int d = fac.m[idx];
        Exp m = fac.m;
        m[idx] = 0;
        if (d == 0) {
            if (fac.k < 0)
                throw NonExpandable("series_expand: inverted factor without the series variable");
            LaurentPoly base = lp_one(vars) - LaurentPoly::monomial(vars, m, Rat(fac.sign));
            acc = acc.scaled_coeff(base.pow(fac.k));
            continue;
        }
        int fval = factor_valuation(fac, idx);
        int fhi = fval + (order - val);
        PolySeries fs(var, fval, fhi, zero);
        if (fac.k > 0) {
            // finite binomial expansion of (1 - s*m)^k
            for (long j = 0; j <= fac.k; ++j) {
                long n = j * d;
                if (n < fval || n > fhi) continue;
                Rat c = Rat(binomial(fac.k, j));
                if (fac.sign > 0 ? (j & 1) : false) c = -c;
                // (-s)^j: sign -1 contributes (+1)^j
                fs.set(static_cast<int>(n),
                       fs.at(static_cast<int>(n)) +
                           LaurentPoly::monomial(vars, exp_scale(m, static_cast<int32_t>(j)), c));
            }
        } else {
            if (d < 0)
                throw NonExpandable("series_expand: inverted factor with negative series degree");
            long kk = -fac.k;
            for (long j = 0; j * d <= fhi; ++j) {
                Rat c = Rat(binomial(kk - 1 + j, j));
                if (fac.sign < 0 && (j & 1)) c = -c;
                fs.set(static_cast<int>(j * d),
                       LaurentPoly::monomial(vars, exp_scale(m, static_cast<int32_t>(j)), c));
            }
        }
        acc = acc * fs;
    }
    return acc.truncated(order);
}

RatSeries series_inverse(const RatSeries& s) {
    auto v = s.valuation();
    if (!v) throw DivisionByZero("series_inverse: no nonzero coefficient in known range");
    const RationalFn& lead = s.at(*v);
    RationalFn lead_inv = rf_one(lead.vars()) / lead;
    int hi = s.hi() - 2 * (*v);
    RatSeries r(s.var(), -*v, hi, s.zero());
    r.set(-*v, lead_inv);
    for (int m = 1; m <= hi + *v; ++m) {
        RationalFn acc = s.zero();
        for (int j = 1; j <= m; ++j) {
            const RationalFn& sj = s.at(*v + j);
            if (sj.is_zero()) continue;
            acc = acc + sj * r.at(-*v + m - j);
        }
        r.set(-*v + m, -(acc * lead_inv));
    }
    return r;
}

RatSeries expand_at_one(const FactoredExpr& f, Var qvar, int order) {
    int idx = f.vars().index_of(qvar);
    if (idx < 0) throw VarMismatch("expand_at_one: variable not in VarSet");
    const VarSet& vars = f.vars();
    LaurentPoly pzero = lp_zero(vars);
    LaurentPoly pone = lp_one(vars);
    RationalFn rzero = rf_zero(vars);

    // pole order: each inverted power of a factor whose base vanishes at
    // eps = 0 (s = +1 and no other variables) contributes exactly one
    int v = 0;
    for (const auto& fac : f.factors()) {
        if (fac.k >= 0) continue;
        Exp m = fac.m;
        m[idx] = 0;
        if (fac.sign > 0 && exp_is_zero(m)) {
            if (fac.m[idx] == 0)
                throw DivisionByZero("expand_at_one: reciprocal of a zero factor");
            v += static_cast<int>(-fac.k);
        }
    }
    int wn = order + v;
    int wd = order + 2 * v;

    // (1 - s*M*(1+eps)^h)^k as a polynomial eps-series on [0, hi]
    auto factor_series = [&](const FactoredExpr::Factor& fac, long k, int hi) {
        long h = fac.m[idx];
        Exp m = fac.m;
        m[idx] = 0;
        PolySeries base(Var::eps, 0, hi, pzero);
        base.set(0, pone);
        for (int j = 0; j <= hi; ++j) {
            Rat c = Rat(-fac.sign) * Rat(binomial(h, j));
            base.set(j, base.at(j) + LaurentPoly::monomial(vars, m, c));
            if (h >= 0 && j >= h) break;
        }
        return series_pow(base, k, pone);
    };

    // numerator: sign * monomial * (1+eps)^a times the positive-power factors,
    // all with polynomial coefficients
    Exp pre = f.prefactor();
    long a = pre[idx];
    pre[idx] = 0;
    PolySeries num(Var::eps, 0, wn, pzero);
    for (int j = 0; j <= wn; ++j) {
        num.set(j, LaurentPoly::monomial(vars, pre, Rat(f.sign()) * Rat(binomial(a, j))));
        if (a >= 0 && j >= a) break;
    }
    PolySeries den = series_one(Var::eps, wd, pzero, pone);
    for (const auto& fac : f.factors()) {
        if (fac.k > 0) num = num * factor_series(fac, fac.k, wn);
        else den = den * factor_series(fac, -fac.k, wd);
    }

    // divide: den = eps^v * unit with the unit invertible at eps = 0, so one
    // series inversion at the end is the only rational-function arithmetic
    auto dval = den.valuation();
    if (!dval)
        throw DivisionByZero("expand_at_one: denominator vanishes through working order");
    if (*dval != v) throw AlgebraError("expand_at_one: pole order mismatch");
    RatSeries unit(Var::eps, 0, wd - v, rzero);
    for (int n = 0; n <= wd - v; ++n) unit.set(n, RationalFn(den.at(n + v)));
    RatSeries num_r(Var::eps, 0, wn, rzero);
    for (int n = 0; n <= wn; ++n) num_r.set(n, RationalFn(num.at(n)));
    return (num_r * series_inverse(unit)).shifted(-v).truncated(order);
}

RatSeries taylor_at_one(const RationalFn& f, Var qvar, int P, int N) {
    int idx = f.vars().index_of(qvar);
    if (idx < 0) throw VarMismatch("taylor_at_one: variable not in VarSet");
    const VarSet& vars = f.vars();
    RationalFn rzero = rf_zero(vars);

    // shift so every q-exponent is nonnegative (does not change the ratio)
    int32_t mq = std::min(f.num().min_exps()[idx], f.den().min_exps()[idx]);
    Exp shift = exp_zero();
    shift[idx] = -mq;
    LaurentPoly num = f.num().shifted(shift);
    LaurentPoly den = f.den().shifted(shift);

    auto expand_poly = [&](const LaurentPoly& p, int hi) {
        RatSeries s(Var::eps, 0, hi, rzero);
        for (const auto& t : p.terms()) {
            long k = t.e[idx];
            Exp rest = t.e;
            rest[idx] = 0;
            LaurentPoly mono = LaurentPoly::monomial(vars, rest, t.c);
            for (long j = 0; j <= std::min<long>(k, hi); ++j) {
                int n = static_cast<int>(j);
                s.set(n, s.at(n) + RationalFn(mono.scaled(Rat(binomial(k, j)))));
            }
        }
        return s;
    };

    // den valuation is unknown in advance; grow the working order until the
    // quotient is exact on [-P, N]
    for (int work = N + P; ; work += P + 1) {
        RatSeries ds = expand_poly(den, work);
        auto v = ds.valuation();
        if (!v) {
            if (work > N + P + 4 * (P + 1))
                throw InsufficientOrder("taylor_at_one: denominator vanishes through working order");
            continue;
        }
        if (work < N + 2 * (*v)) continue;  // need num/den to order N + 2v for quotient hi >= N
        RatSeries ns = expand_poly(num, work);
        RatSeries quot = series_div(ns, ds);
        if (quot.hi() < N) continue;
        if (quot.lo() < -P) {
            // genuine pole beyond the caller's bound: make sure it is real
            for (int n = quot.lo(); n < -P; ++n)
                if (!quot.at(n).is_zero())
                    throw InsufficientOrder("taylor_at_one: pole exceeds stated bound");
        }
        RatSeries out(Var::eps, -P, N, rzero);
        for (int n = -P; n <= N; ++n)
            out.set(n, n < quot.lo() ? rzero : quot.at(n));
        return out;
    }
}

} // namespace higgs
