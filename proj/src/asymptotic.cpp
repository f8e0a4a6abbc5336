#include "higgs/asymptotic.hpp"

namespace higgs::asymptotic {

using partitions::Partition;
using partitions::box_data;
using partitions::box_sums;
using partitions::size_of;

FactoredExpr omega_y(Curve c, const Partition& Y) {
    VarSet vars{Var::lambda, Var::y};
    const int il = 0, iy = 1;
    FactoredExpr f(vars);
    if (Y.empty()) return f;

    int n = size_of(Y);
    auto s = box_sums(Y);
    if ((c.p * n) % 2) f.negate();

    Exp pre = exp_zero();
    // the monomial prefactor plus one z^{1-g} = y^{1-g} per box
    pre[iy] = static_cast<int32_t>(-c.p * s.sum_ij_minus2 + (c.g - 1) * s.sum_y_exponent +
                                   (1 - c.g) * n);
    pre[il] = static_cast<int32_t>(-c.p * s.sum_col_minus_row +
                                   (c.g - 1) * s.sum_lambda_exponent);
    f.mul_monomial(pre);

    for (const auto& box : box_data(Y)) {
        Exp q = exp_zero();
        q[il] = box.hook;
        q[iy] = box.arm - box.leg;
        f.mul_factor(1, q, 2 * c.g);  // (1 - q)^{2g}
        Exp qz = q, qzi = q;
        qz[iy] += 1;
        qzi[iy] -= 1;
        f.mul_factor(1, qz, -1);      // 1/(1 - q*y)
        f.mul_factor(1, qzi, -1);     // 1/(1 - q/y)
    }
    return f;
}

FactoredExpr omega_uv(Curve c, const Partition& Y) {
    VarSet vars{Var::lambda, Var::a, Var::b};
    const int il = 0, ia = 1, ib = 2;
    FactoredExpr f(vars);
    if (Y.empty()) return f;

    int n = size_of(Y);
    auto s = box_sums(Y);
    if ((c.p * n) % 2) f.negate();

    Exp pre = exp_zero();
    // (uv)^{k/2} = (ab)^k, so the half-integer exponents double away
    long ab_exp = -c.p * s.sum_ij_minus2 + (c.g - 1) * s.sum_y_exponent + (1 - c.g) * n;
    pre[ia] = pre[ib] = static_cast<int32_t>(ab_exp);
    pre[il] = static_cast<int32_t>(-c.p * s.sum_col_minus_row +
                                   (c.g - 1) * s.sum_lambda_exponent);
    f.mul_monomial(pre);

    for (const auto& box : box_data(Y)) {
        Exp q = exp_zero();  // q_box = lambda^h (ab)^{arm-leg}
        q[il] = box.hook;
        q[ia] = q[ib] = box.arm - box.leg;
        Exp qw = q, qwi = q, qz = q, qzi = q;
        qw[ia] += 1;  qw[ib] -= 1;   // q * w,   w = a/b
        qwi[ia] -= 1; qwi[ib] += 1;  // q / w
        qz[ia] += 1;  qz[ib] += 1;   // q * z,   z = ab
        qzi[ia] -= 1; qzi[ib] -= 1;  // q / z
        f.mul_factor(1, qw, c.g);
        f.mul_factor(1, qwi, c.g);
        f.mul_factor(1, qz, -1);
        f.mul_factor(1, qzi, -1);
    }
    return f;
}

PolySeries rank_series(Curve c, int r, int e_max, Mode mode) {
    VarSet vars = mode_vars(mode);
    PolySeries acc = PolySeries::zero_series(Var::lambda, lp_zero(vars));
    for (const Partition& Y : partitions::partitions_of(r)) {
        FactoredExpr om = mode == Mode::y ? omega_y(c, Y) : omega_uv(c, Y);
        acc = acc + series_expand(om, Var::lambda, e_max);
    }
    return acc;
}

} // namespace higgs::asymptotic
