#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "higgs/ratfn.hpp"
#include "higgs/series.hpp"

#include <random>

using namespace higgs;

namespace {

const VarSet VY{Var::y};
const VarSet VLY{Var::lambda, Var::y};
const VarSet VAB{Var::a, Var::b};

LaurentPoly Y(int k = 1) { return LaurentPoly::variable(VY, Var::y, k); }
LaurentPoly C(long c) { return LaurentPoly::constant(VY, Rat(c)); }

LaurentPoly random_poly(std::mt19937& rng, const VarSet& vars, int nterms, int span) {
    std::uniform_int_distribution<int> ed(-span, span), cd(-6, 6);
    LaurentPoly p(vars);
    for (int t = 0; t < nterms; ++t) {
        Exp e = exp_zero();
        for (uint8_t i = 0; i < vars.n; ++i) e[i] = ed(rng);
        p.add_term(e, Rat(cd(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("laurent polynomial ring basics") {
    auto p = Y(2) + C(3);       // y^2 + 3
    auto q = Y(-1) - C(1);      // y^-1 - 1
    CHECK((p * q == Y(1) - Y(2) + C(3) * Y(-1) - C(3)));
    CHECK((p + (-p)).is_zero());
    CHECK(p.pow(3) == p * p * p);
    CHECK(p.coeff(Exp{2, 0, 0, 0}) == 1);
    CHECK((p - p).is_zero());
}

TEST_CASE("quantum integers") {
    CHECK(qint(0, VY, Var::y).is_zero());
    CHECK(qint(1, VY, Var::y) == C(1));
    CHECK(qint(3, VY, Var::y) == Y(2) + C(1) + Y(-2));
    CHECK(qint(-3, VY, Var::y) == -(Y(2) + C(1) + Y(-2)));
    // [n]*(y - y^-1) = y^n - y^-n
    for (int n = -10; n <= 10; ++n) {
        auto lhs = qint(n, VY, Var::y) * (Y(1) - Y(-1));
        auto rhs = Y(n) - Y(-n);
        CHECK(lhs == rhs);
    }
    // uv variant: [2] = ab + (ab)^{-1}
    auto two = qint_uv(2, VAB, Var::a, Var::b);
    LaurentPoly want(VAB);
    want.add_term(Exp{1, 1, 0, 0}, 1);
    want.add_term(Exp{-1, -1, 0, 0}, 1);
    CHECK(two == want);
}

TEST_CASE("exact division") {
    auto d = Y(1) - Y(-1);
    auto p = Y(2) - Y(-2);
    auto q = exact_div(p, d);
    REQUIRE(q.has_value());
    CHECK(*q == Y(1) + Y(-1));

    CHECK(*exact_div(C(1) - Y(2), C(1) - Y(1)) == C(1) + Y(1));
    CHECK(!exact_div(C(1), C(1) - Y(1)).has_value());
    CHECK_THROWS_AS((void)exact_div(p, LaurentPoly(VY)), DivisionByZero);

    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        auto a = random_poly(rng, VY, 4, 5);
        auto b = random_poly(rng, VY, 4, 5);
        if (b.is_zero()) continue;
        auto quot = exact_div(a * b, b);
        REQUIRE(quot.has_value());
        CHECK(*quot == a);
    }
    // bivariate
    for (int it = 0; it < 30; ++it) {
        auto a = random_poly(rng, VAB, 4, 3);
        auto b = random_poly(rng, VAB, 3, 3);
        if (b.is_zero()) continue;
        auto quot = exact_div(a * b, b);
        REQUIRE(quot.has_value());
        CHECK(*quot == a);
    }
}

TEST_CASE("rational function canonical form") {
    // (1 - y^2)/(1 - y) reduces to 1 + y
    auto f = ratfn_reduce(C(1) - Y(2), C(1) - Y(1));
    CHECK(f.is_polynomial());
    CHECK(f.num() == C(1) + Y(1));

    // monomial stripping: y^-1 / y^-2 = y
    auto g = ratfn_reduce(Y(-1), Y(-2));
    CHECK(g.num() == Y(1));
    CHECK(g.den() == C(1));

    // ((1-a^2 b^2)(1+ab), (1-ab)) -> (1+ab)^2
    LaurentPoly one_ab = lp_one(VAB);
    LaurentPoly ab = LaurentPoly::monomial(VAB, Exp{1, 1, 0, 0});
    LaurentPoly a2b2 = LaurentPoly::monomial(VAB, Exp{2, 2, 0, 0});
    auto h = ratfn_reduce((one_ab - a2b2) * (one_ab + ab), one_ab - ab);
    CHECK(h.is_polynomial());
    CHECK(h.num() == (one_ab + ab) * (one_ab + ab));

    // canonical: den's lex-least coefficient is +1 and den is a polynomial
    auto k = ratfn_reduce(Y(1) + C(7), (C(-2) * Y(-3)) * (C(1) + Y(2)));
    CHECK(k.den().terms().front().c == 1);
    CHECK(k.den().min_exps() == exp_zero());
    CHECK(same(k, ratfn_reduce(Y(1) + C(7), (C(-2) * Y(-3)) * (C(1) + Y(2)))));
}

TEST_CASE("rational function reduction properties (randomized)") {
    std::mt19937 rng(11);
    for (int it = 0; it < 60; ++it) {
        auto p = random_poly(rng, VY, 3, 4);
        auto q = random_poly(rng, VY, 3, 4);
        auto r = random_poly(rng, VY, 3, 4);
        if (q.is_zero() || r.is_zero()) continue;
        auto lhs = ratfn_reduce(p * r, q * r);
        auto rhs = ratfn_reduce(p, q);
        CHECK(lhs == rhs);
        // idempotence
        auto again = ratfn_reduce(lhs.num(), lhs.den());
        CHECK(again == lhs);
    }
    for (int it = 0; it < 30; ++it) {
        auto p = random_poly(rng, VAB, 3, 2);
        auto q = random_poly(rng, VAB, 3, 2);
        auto r = random_poly(rng, VAB, 2, 2);
        if (q.is_zero() || r.is_zero()) continue;
        CHECK(ratfn_reduce(p * r, q * r) == ratfn_reduce(p, q));
    }
}

TEST_CASE("rational function arithmetic") {
    auto one = rf_one(VY);
    auto f = ratfn_reduce(C(1), C(1) - Y(1));    // 1/(1-y)
    auto g = ratfn_reduce(C(1), C(1) + Y(1));    // 1/(1+y)
    auto sum = f + g;                            // 2/(1-y^2)
    CHECK(sum == ratfn_reduce(C(2), C(1) - Y(2)));
    CHECK(f * g == ratfn_reduce(C(1), C(1) - Y(2)));
    CHECK(f / f == one);
    CHECK((f - f).is_zero());
    CHECK(f.pow(-2) == ratfn_reduce((C(1) - Y(1)) * (C(1) - Y(1)), C(1)));
}

TEST_CASE("factored expressions expand and substitute") {
    // (1 - lambda*y)^{-1} expanded in lambda to order 2
    FactoredExpr f(VLY);
    f.mul_factor(1, Exp{1, 1, 0, 0}, -1);
    auto s = series_expand(f, Var::lambda, 2);
    CHECK(s.at(0) == lp_one(VLY));
    CHECK(s.at(1) == LaurentPoly::monomial(VLY, Exp{0, 1, 0, 0}));
    CHECK(s.at(2) == LaurentPoly::monomial(VLY, Exp{0, 2, 0, 0}));

    // (1-lambda)^2 * lambda^{-1} -> lambda^{-1} - 2 + lambda
    FactoredExpr g(VLY);
    g.mul_monomial(Exp{-1, 0, 0, 0});
    g.mul_factor(1, Exp{1, 0, 0, 0}, 2);
    auto t = series_expand(g, Var::lambda, 1);
    CHECK(t.at(-1) == lp_one(VLY));
    CHECK(t.at(0) == LaurentPoly::constant(VLY, Rat(-2)));
    CHECK(t.at(1) == lp_one(VLY));

    // substitution keeps factored shape: 1/(1-qz) with q -> lambda^2 y, z -> y
    VarSet VQZ{Var::q, Var::x};
    FactoredExpr h(VQZ);
    h.mul_factor(1, Exp{1, 1, 0, 0}, -1);
    auto hh = h.substitute(VLY, [&](Var v) -> std::optional<std::pair<int, Exp>> {
        if (v == Var::q) return std::make_pair(1, Exp{2, 1, 0, 0});
        if (v == Var::x) return std::make_pair(1, Exp{0, 1, 0, 0});
        return std::nullopt;
    });
    REQUIRE(hh.factors().size() == 1);
    CHECK(hh.factors()[0].m == Exp{2, 2, 0, 0});
    CHECK(hh.factors()[0].k == -1);

    // sign rule: x -> -x^2 in (1+x) gives 1 - x^2
    VarSet VX{Var::x};
    FactoredExpr k(VX);
    k.mul_factor(-1, Exp{1, 0, 0, 0}, 1);  // (1 + x)
    auto kk = k.substitute(VX, [&](Var) -> std::optional<std::pair<int, Exp>> {
        return std::make_pair(-1, Exp{2, 0, 0, 0});
    });
    REQUIRE(kk.factors().size() == 1);
    CHECK(kk.factors()[0].sign == 1);  // (1 - x^2)
    CHECK(kk.factors()[0].m == Exp{2, 0, 0, 0});

    // substitution composes back: y -> ab then a -> y, b -> 1
    auto three = qint(3, VY, Var::y);
    auto in_ab = three.substitute(VAB, [&](Var) -> std::optional<std::pair<int, Exp>> {
        return std::make_pair(1, Exp{1, 1, 0, 0});
    });
    auto back = in_ab.substitute(VY, [&](Var v) -> std::optional<std::pair<int, Exp>> {
        if (v == Var::a) return std::make_pair(1, Exp{1, 0, 0, 0});
        return std::make_pair(1, Exp{0, 0, 0, 0});
    });
    CHECK(back == three);
}

TEST_CASE("series multiplication matches direct products (randomized)") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> ed(0, 3), cd(-3, 3), kd(1, 3);
    for (int it = 0; it < 40; ++it) {
        // build a random factored expression with nonnegative multiplicities
        FactoredExpr f(VLY);
        for (int j = 0; j < 3; ++j) {
            Exp m{ed(rng), cd(rng), 0, 0};
            if (exp_is_zero(m)) m[0] = 1;
            f.mul_factor(cd(rng) >= 0 ? 1 : -1, m, kd(rng));
        }
        auto direct = f.expand();
        auto ser = series_expand(f, Var::lambda, 12);
        for (const auto& term : direct.terms()) {
            if (term.e[0] > 12) continue;
            CHECK(ser.at(term.e[0]).coeff(Exp{0, term.e[1], 0, 0}) == term.c);
        }
    }
}

TEST_CASE("series over rational functions: inverse and eps expansion") {
    // taylor_at_one on (1-q^2)/(1-q): 2 + eps
    VarSet VQ{Var::q};
    LaurentPoly one = lp_one(VQ), q = LaurentPoly::variable(VQ, Var::q);
    auto f = ratfn_reduce(one - q * q, one - q);
    auto s = taylor_at_one(f, Var::q, 0, 1);
    CHECK(s.at(0) == RationalFn(LaurentPoly::constant(VQ, Rat(2))));
    CHECK(s.at(1) == rf_one(VQ));

    // 1/(1-q) has a genuine first-order pole at q=1
    auto g = ratfn_reduce(one, one - q);
    auto t = taylor_at_one(g, Var::q, 1, 1);
    CHECK(t.at(-1) == RationalFn(LaurentPoly::constant(VQ, Rat(-1))));

    // pole deeper than stated bound is reported
    auto h = ratfn_reduce(one, (one - q) * (one - q));
    CHECK_THROWS_AS((void)taylor_at_one(h, Var::q, 1, 1), InsufficientOrder);
}

TEST_CASE("expand_at_one matches taylor_at_one on a factored sample") {
    // f = (1+qx)^2 / ((1-q x^2)(1-q)) over (q, x)
    VarSet VQX{Var::q, Var::x};
    FactoredExpr f(VQX);
    f.mul_factor(-1, Exp{1, 1, 0, 0}, 2);
    f.mul_factor(1, Exp{1, 2, 0, 0}, -1);
    f.mul_factor(1, Exp{1, 0, 0, 0}, -1);
    auto via_factored = expand_at_one(f, Var::q, 2);
    auto via_ratfn = taylor_at_one(f.to_ratfn(), Var::q, 1, 2);
    for (int n = -1; n <= 2; ++n) CHECK(same(via_factored.at(n), via_ratfn.at(n)));
}
