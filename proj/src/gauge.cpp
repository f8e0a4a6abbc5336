#include "higgs/gauge.hpp"

namespace higgs::gauge {

using asymptotic::Curve;
using partitions::Partition;
using partitions::box_data;
using partitions::size_of;
using partitions::transpose;

namespace {

int part_at(const Partition& Y, int i) {
    return i >= 1 && i <= static_cast<int>(Y.size()) ? Y[i - 1] : 0;
}

} // namespace

FactoredExpr fixedpoint_term(Curve c, const Partition& Y1, const Partition& Y2) {
    VarSet vars{Var::q1, Var::q2, Var::qf, Var::y};
    const int i1 = 0, i2 = 1, iqf = 2, iy = 3;
    FactoredExpr f(vars);

    const Partition* Ys[2] = {&Y1, &Y2};
    Partition Yt[2] = {transpose(Y1), transpose(Y2)};
    long n1 = size_of(Y1), n2 = size_of(Y2);

    // Chern-Simons prefactor (e^{-|Y_a| a_a} prod e^{(i-1)e1 + (j-1)e2})^p
    if ((c.p * (n1 + n2)) % 2) f.negate();
    Exp pre = exp_zero();
    pre[iqf] = static_cast<int32_t>(c.p * n2);
    for (int a = 0; a < 2; ++a) {
        for (const auto& box : box_data(*Ys[a])) {
            pre[i1] -= static_cast<int32_t>(c.p * (box.i - 1));
            pre[i2] -= static_cast<int32_t>(c.p * (box.j - 1));
        }
    }
    f.mul_monomial(pre);

    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            int qf_off = (a == 0 && b == 1) ? 1 : (a == 1 && b == 0) ? -1 : 0;
            // boxes of Y_a weighted against the leg profile of Y_b
            for (const auto& box : box_data(*Ys[a])) {
                Exp m = exp_zero();
                m[i1] = static_cast<int32_t>(box.i - part_at(Yt[b], box.j));
                m[i2] = static_cast<int32_t>(box.row_len - box.j + 1);
                m[iqf] = qf_off;
                Exp my = m;
                my[iy] += 1;
                f.mul_factor(1, my, c.g);
                f.mul_factor(1, m, -1);
            }
            // boxes of Y_b weighted against the arm profile of Y_a
            for (const auto& box : box_data(*Ys[b])) {
                Exp m = exp_zero();
                m[i1] = static_cast<int32_t>(part_at(Yt[a], box.j) - box.i + 1);
                m[i2] = static_cast<int32_t>(box.j - box.row_len);
                m[iqf] = qf_off;
                Exp my = m;
                my[iy] += 1;
                f.mul_factor(1, my, c.g);
                f.mul_factor(1, m, -1);
            }
        }
    }
    return f;
}

FactoredExpr qf_zero_limit(const FactoredExpr& t, long power) {
    const VarSet& vs = t.vars();
    if (!vs.contains(Var::qf)) throw VarMismatch("qf_zero_limit: no Qf variable");
    int iq = vs.index_of(Var::qf);

    FactoredExpr r(vs);
    if (t.sign() < 0) r.negate();
    Exp pre = t.prefactor();
    pre[iq] += static_cast<int32_t>(power);

    for (const auto& f : t.factors()) {
        int32_t m = f.m[iq];
        if (m > 0) continue;  // tends to 1
        if (m == 0) {
            r.mul_factor(f.sign, f.m, f.k);
            continue;
        }
        // (1 - s M)^k = (-s)^k M^k (1 - s M^{-1})^k and M^{-1} carries Qf^{-m}
        pre = exp_add(pre, exp_scale(f.m, static_cast<int32_t>(f.k)));
        if (f.sign > 0 && (f.k & 1)) r.negate();
    }

    if (pre[iq] < 0) throw PoleAtZero("qf_zero_limit: net pole at Qf = 0");
    if (pre[iq] > 0) throw AlgebraError("qf_zero_limit: product vanishes at Qf = 0");
    r.mul_monomial(pre);

    VarSet dst;
    for (uint8_t i = 0; i < vs.n; ++i)
        if (vs[i] != Var::qf) dst.vs[dst.n++] = vs[i];
    return r.substitute(dst, [&](Var v) -> std::optional<std::pair<int, Exp>> {
        if (v == Var::qf) return std::make_pair(1, exp_zero());
        Exp e = exp_zero();
        e[dst.index_of(v)] = 1;
        return std::make_pair(1, e);
    });
}

FactoredExpr spec_refined(Curve c, const Partition& Y) {
    long n = size_of(Y);
    FactoredExpr z0 = qf_zero_limit(fixedpoint_term(c, Y, {}), (c.g - 1) * n);
    VarSet dst{Var::lambda, Var::y};
    FactoredExpr om = z0.substitute(dst, [](Var v) -> std::optional<std::pair<int, Exp>> {
        if (v == Var::q1) return std::make_pair(1, Exp{-1, 1, 0, 0});
        if (v == Var::q2) return std::make_pair(1, Exp{1, 1, 0, 0});
        return std::make_pair(1, Exp{0, -1, 0, 0});  // y -> 1/y
    });
    om.mul_monomial(Exp{static_cast<int32_t>((c.g - 1) * n), static_cast<int32_t>(2 * n), 0, 0});
    return om;
}

FactoredExpr spec_doubly(Curve c, const Partition& Y) {
    long n = size_of(Y);
    FactoredExpr z0 = qf_zero_limit(fixedpoint_term(c, Y, {}), (c.g - 1) * n);
    VarSet dst{Var::lambda, Var::a, Var::b};
    FactoredExpr om = z0.substitute(dst, [](Var v) -> std::optional<std::pair<int, Exp>> {
        if (v == Var::q1) return std::make_pair(1, Exp{-1, 1, 1, 0});  // lambda^{-1} ab
        if (v == Var::q2) return std::make_pair(1, Exp{1, 1, 1, 0});   // lambda ab
        return std::make_pair(1, Exp{0, -2, 0, 0});                    // y -> a^{-2}
    });
    om.mul_monomial(Exp{static_cast<int32_t>((c.g - 1) * n), static_cast<int32_t>(2 * (c.g + 1) * n),
                        static_cast<int32_t>(2 * (1 - c.g) * n), 0});
    return om;
}

} // namespace higgs::gauge
