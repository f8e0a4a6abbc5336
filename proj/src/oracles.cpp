#include "higgs/oracles.hpp"

#include "higgs/partitions.hpp"

#include <utility>
#include <vector>

namespace higgs::oracles {

namespace {

using refine::ValidationFailed;

const VarSet vuv{Var::u, Var::v};
const VarSet vxuv{Var::x, Var::u, Var::v};
const VarSet vqxy{Var::q, Var::x, Var::y};

Exp e3(long a, long b, long c) {
    return Exp{static_cast<int32_t>(a), static_cast<int32_t>(b),
               static_cast<int32_t>(c), 0};
}

long fdiv(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

LaurentPoly uvmono(long k) { return LaurentPoly::monomial(vuv, e3(k, k, 0)); }

LaurentPoly one_plus(int i, int j, int g) {  // (1 + u^i v^j)^g
    return (lp_one(vuv) + LaurentPoly::monomial(vuv, e3(i, j, 0))).pow(g);
}

LaurentPoly one_minus(int i, int j, int g) {  // (1 - u^i v^j)^g
    return (lp_one(vuv) - LaurentPoly::monomial(vuv, e3(i, j, 0))).pow(g);
}

// (1+xu)^g (1+xv)^g / ((1-x)(1-xuv)) over (x, u, v)
FactoredExpr sym_prod_gen(int g) {
    FactoredExpr f(vxuv);
    f.mul_factor(-1, e3(1, 1, 0), g);
    f.mul_factor(-1, e3(1, 0, 1), g);
    f.mul_factor(1, e3(1, 0, 0), -1);
    f.mul_factor(1, e3(1, 1, 1), -1);
    return f;
}

// project a polynomial with zero x-exponents onto (u, v)
LaurentPoly drop_x(const LaurentPoly& p) {
    return p.substitute(vuv, [](Var v) -> std::optional<std::pair<int, Exp>> {
        if (v == Var::u) return std::pair<int, Exp>{1, Exp{1, 0, 0, 0}};
        if (v == Var::v) return std::pair<int, Exp>{1, Exp{0, 1, 0, 0}};
        return std::nullopt;
    });
}

// Coeff_{x^i} of (-(uv)^apow / (1 - x u^2 v^2) + (uv)^bpow / (1 - x/(uv)))
// times the symmetric-product generating function
LaurentPoly triangular_coeff(int g, long apow, long bpow, int i) {
    if (i < 0) return lp_zero(vuv);
    FactoredExpr fa = sym_prod_gen(g);
    fa.negate();
    fa.mul_monomial(e3(0, apow, apow));
    fa.mul_factor(1, e3(1, 2, 2), -1);
    FactoredExpr fb = sym_prod_gen(g);
    fb.mul_monomial(e3(0, bpow, bpow));
    fb.mul_factor(1, e3(1, -1, -1), -1);
    PolySeries s = series_expand(fa, Var::x, i) + series_expand(fb, Var::x, i);
    return drop_x(s.at(i));
}

} // namespace

LaurentPoly sym_prod_hodge(int n, int g) {
    if (n < 0) throw AlgebraError("sym_prod_hodge: negative symmetric power");
    return drop_x(series_expand(sym_prod_gen(g), Var::x, n).at(n));
}

RationalFn stable_bundle_hodge(int r, int g) {
    LaurentPoly one = lp_one(vuv);
    LaurentPoly wings = one_plus(1, 0, g) * one_plus(0, 1, g);
    LaurentPoly num(vuv), den(vuv);
    if (r == 2) {
        num = wings * (one_plus(2, 1, g) * one_plus(1, 2, g) - uvmono(g) * wings);
        den = (one - uvmono(1)) * (one - uvmono(2));
    } else if (r == 3) {
        LaurentPoly bracket =
            one_plus(2, 3, g) * one_plus(3, 2, g) * one_plus(1, 2, g) * one_plus(2, 1, g) -
            uvmono(2 * g - 1) * one_plus(1, 1, 2) * wings * one_plus(1, 2, g) *
                one_plus(2, 1, g) +
            uvmono(3 * g - 1) * (one + uvmono(1) + uvmono(2)) * one_plus(1, 0, 2 * g) *
                one_plus(0, 1, 2 * g);
        num = wings * bracket;
        den = (one - uvmono(1)) * (one - uvmono(2)).pow(2) * (one - uvmono(3));
    } else {
        throw AlgebraError("stable_bundle_hodge: rank must be 2 or 3");
    }
    RationalFn h = RationalFn::reduced(std::move(num), std::move(den));
    if (!h.is_polynomial())
        throw ValidationFailed("stable bundle Hodge expression did not reduce to a polynomial");
    for (const auto& t : h.num().terms())
        if (boost::multiprecision::denominator(t.c) != 1 || t.c < 0)
            throw ValidationFailed("stable bundle Hodge polynomial has a bad coefficient");
    return h;
}

RationalFn loc_rank2_hodge(int g, int p) {
    LaurentPoly one = lp_one(vuv);
    LaurentPoly wings = one_plus(1, 0, g) * one_plus(0, 1, g);

    // fixed-locus sum: stable bundles plus Jacobian x symmetric-product loci
    RationalFn sum = stable_bundle_hodge(2, g);
    long e0max = g + fdiv(p - 1, 2);
    for (long e0 = 1; e0 <= e0max; ++e0)
        sum = sum + RationalFn(uvmono(2 * e0 + g - 2) * wings *
                               sym_prod_hodge(static_cast<int>(2 * g - 1 + p - 2 * e0), g));

    // closed form
    RationalFn t1 = RationalFn::reduced(one_plus(2, 1, g) * one_plus(1, 2, g),
                                        (one - uvmono(1)) * (one - uvmono(2)));
    RationalFn t2 = RationalFn::reduced(uvmono(2 * g - 2 + p) * one_minus(1, 0, g) *
                                            one_minus(0, 1, g),
                                        one + uvmono(1))
                        .scaled(Rat(p % 2 == 0 ? -1 : 1, 4));
    RationalFn inner = RationalFn::reduced(one.scaled(Rat(g)), one_plus(1, 0, 1)) +
                       RationalFn::reduced(one.scaled(Rat(g)), one_plus(0, 1, 1)) -
                       RationalFn::reduced(one, one - uvmono(1)) -
                       RationalFn(one).scaled(Rat(2L * g - 2 + p) + Rat(1, 2));
    RationalFn t3 = RationalFn::reduced(uvmono(2 * g - 2 + p) * wings, one - uvmono(1))
                        .scaled(Rat(1, 2)) *
                    inner;
    RationalFn closed = RationalFn(wings) * (t1 + t2 + t3);

    if (!(sum == closed))
        throw AlgebraError("rank-2 localization: fixed-locus sum and closed form disagree");
    return closed;
}

RationalFn loc_rank3_hodge(int g, int p) {
    RationalFn total = stable_bundle_hodge(3, g);
    LaurentPoly one = lp_one(vuv);
    RationalFn frame = RationalFn::reduced(one_plus(1, 0, 2 * g) * one_plus(0, 1, 2 * g),
                                           one - uvmono(1));

    long e0max = fdiv(6L * g + 3 * p - 4, 6);
    for (long e0 = 1; e0 <= e0max; ++e0) {
        int i = static_cast<int>(2 * g - 2 + p - 2 * e0);
        LaurentPoly c = triangular_coeff(g, e0 + g, 2L * g - 2 - 2 * e0 + p, i);
        total = total + frame * RationalFn(uvmono(3 * e0 + 2 * g - 3) * c);
    }
    long f0max = fdiv(6L * g + 3 * p - 8, 6);
    for (long f0 = 0; f0 <= f0max; ++f0) {
        int i = static_cast<int>(2 * g - 3 + p - 2 * f0);
        LaurentPoly c = triangular_coeff(g, f0 + g, 2L * g - 3 - 2 * f0 + p, i);
        total = total + frame * RationalFn(uvmono(3 * f0 + 2 * g - 1) * c);
    }

    LaurentPoly wings = one_plus(1, 0, g) * one_plus(0, 1, g);
    long cap = 6L * g - 6 + 3 * p;
    for (long m1 = 0; m1 <= cap; ++m1)
        for (long m2 = 0; 2 * m1 + m2 <= cap && m1 + 2 * m2 <= cap; ++m2) {
            if ((m1 + 2 * m2) % 3 != 2) continue;
            total = total + RationalFn(uvmono(8L * g - 8 + 3 * p - m1 - m2) * wings *
                                       sym_prod_hodge(static_cast<int>(m1), g) *
                                       sym_prod_hodge(static_cast<int>(m2), g));
        }
    return total;
}

namespace {

struct HrvTerm {
    Rat c;
    FactoredExpr f;
};

// the tableau weight: product over boxes of
//   (qxy)^{l(2-2g)} (1+q^h x^{l+1} y^l)^g (1+q^h x^l y^{l+1})^g
//   / ((1-q^h (xy)^{l+1})(1-q^h (xy)^l))
FactoredExpr tableau_factor(const partitions::Partition& Y, int g) {
    FactoredExpr f(vqxy);
    for (const auto& z : partitions::box_data(Y)) {
        long l = z.leg, h = z.hook;
        long w = l * (2 - 2L * g);
        f.mul_monomial(e3(w, w, w));
        f.mul_factor(-1, e3(h, l + 1, l), g);
        f.mul_factor(-1, e3(h, l, l + 1), g);
        f.mul_factor(1, e3(h, l + 1, l + 1), -1);
        f.mul_factor(1, e3(h, l, l), -1);
    }
    return f;
}

// (qxy)^{(1-g) r(r-1)} (1+qx)^g (1+qy)^g / ((1-qxy)(1-q))
FactoredExpr b_kernel(int r, int g) {
    FactoredExpr f(vqxy);
    long w = static_cast<long>(1 - g) * r * (r - 1);
    f.mul_monomial(e3(w, w, w));
    f.mul_factor(-1, e3(1, 1, 0), g);
    f.mul_factor(-1, e3(1, 0, 1), g);
    f.mul_factor(1, e3(1, 1, 1), -1);
    f.mul_factor(1, e3(1, 0, 0), -1);
    return f;
}

// [T^n] log(1 + sum_k T^k A_k) as a formal sum of tableau products
std::vector<HrvTerm> log_terms(int n, int g) {
    std::vector<std::vector<FactoredExpr>> a(n + 1);
    for (int k = 1; k <= n; ++k)
        for (const auto& Y : partitions::partitions_of(k))
            a[k].push_back(tableau_factor(Y, g));

    std::vector<HrvTerm> out;
    std::vector<int> comp;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            int m = static_cast<int>(comp.size());
            Rat c = Rat(m % 2 == 1 ? 1 : -1, m);
            std::vector<FactoredExpr> prods{FactoredExpr::one(vqxy)};
            for (int k : comp) {
                std::vector<FactoredExpr> next;
                for (const auto& pf : prods)
                    for (const auto& ak : a[k]) next.push_back(pf * ak);
                prods = std::move(next);
            }
            for (auto& f : prods) out.push_back({c, std::move(f)});
            return;
        }
        for (int k = 1; k <= rem; ++k) {
            comp.push_back(k);
            self(self, rem - k);
            comp.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

} // namespace

RationalFn hrv_E(int g, int r) {
    if (g < 2 || r < 1 || r > 3)
        throw AlgebraError("hrv_E: need g >= 2 and rank 1, 2, or 3");

    // peel the divisor sum: hb[n] formally sums to H_n * B_n in (q, x, y)
    std::vector<std::vector<HrvTerm>> hb(r + 1);
    for (int n = 1; n <= r; ++n) {
        hb[n] = log_terms(n, g);
        for (int k = 2; k <= n; ++k) {
            if (n % k != 0) continue;
            int sgn = k % 2 == 1 ? 1 : -1;
            auto sub = [&](Var v) -> std::optional<std::pair<int, Exp>> {
                if (v == Var::q) return std::pair<int, Exp>{1, e3(k, 0, 0)};
                if (v == Var::x) return std::pair<int, Exp>{sgn, e3(0, k, 0)};
                if (v == Var::y) return std::pair<int, Exp>{sgn, e3(0, 0, k)};
                return std::nullopt;
            };
            for (const auto& t : hb[n / k])
                hb[n].push_back({-t.c * Rat(1, k), t.f.substitute(vqxy, sub)});
        }
    }

    FactoredExpr binv = b_kernel(r, g).reciprocal();
    RatSeries acc = RatSeries::zero_series(Var::eps, rf_zero(vqxy));
    for (const auto& t : hb[r])
        acc = acc + expand_at_one(t.f * binv, Var::q, 0).scaled(t.c);

    for (int n = acc.lo(); n < 0; ++n)
        if (!acc.at(n).is_zero())
            throw NonCancellation("hrv_E: residual pole of order " + std::to_string(-n) +
                                  " at q = 1");

    RationalFn e = acc.at(0).substitute(vuv, [](Var v) -> std::optional<std::pair<int, Exp>> {
        if (v == Var::x) return std::pair<int, Exp>{1, Exp{1, 0, 0, 0}};
        if (v == Var::y) return std::pair<int, Exp>{1, Exp{0, 1, 0, 0}};
        return std::nullopt;
    });
    // the tableau-log series carries the invariant with the Jacobian factor
    // removed (rank one gives 1); restore it so every rank lands on the same
    // normalization as the recursion
    return e * RationalFn(one_plus(1, 0, g) * one_plus(0, 1, g));
}

LaurentPoly hodge_poly(const refine::HodgePoly& h) {
    LaurentPoly p = lp_zero(vuv);
    for (const auto& [ij, c] : h.h)
        p = p + LaurentPoly::monomial(vuv, e3(ij.first, ij.second, 0), Rat(c));
    return p;
}

} // namespace higgs::oracles
