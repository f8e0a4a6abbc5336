#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "higgs/refine.hpp"

#include <vector>

using namespace higgs;
using namespace higgs::refine;
using wallcross::Engine;
using asymptotic::Curve;
using asymptotic::Mode;

namespace {

const VarSet vy{Var::y};
const VarSet vab{Var::a, Var::b};

LaurentPoly ypoly(const std::vector<std::pair<long, int>>& terms) {
    LaurentPoly p(vy);
    for (const auto& [c, k] : terms) p.add_term(Exp{k, 0, 0, 0}, Rat(c));
    return p;
}

// sum of c * u^i v^j written in a = u^{1/2}, b = v^{1/2}
LaurentPoly uvpoly(const std::vector<std::array<long, 3>>& terms) {
    LaurentPoly p(vab);
    for (const auto& t : terms) {
        Exp e = exp_zero();
        e[0] = static_cast<int32_t>(2 * t[1]);
        e[1] = static_cast<int32_t>(2 * t[2]);
        p.add_term(e, Rat(t[0]));
    }
    return p;
}

LaurentPoly abpow(int k) {
    Exp e = exp_zero();
    e[0] = k;
    e[1] = k;
    return LaurentPoly::monomial(vab, e);
}

// coefficient list of a polynomial supported in degrees [0, max]
std::vector<Int> coeff_list(const LaurentPoly& p) {
    std::vector<Int> out(static_cast<size_t>(p.max_exps()[0]) + 1, Int(0));
    for (const auto& t : p.terms())
        out[static_cast<size_t>(t.e[0])] = boost::multiprecision::numerator(t.c);
    return out;
}

} // namespace

TEST_CASE("require_integral separates integral polynomials from the rest") {
    LaurentPoly p = ypoly({{1, -1}, {-2, 0}, {3, 2}});
    CHECK(require_integral(RationalFn(p)) == p);
    CHECK_THROWS_AS(
        require_integral(RationalFn::reduced(lp_one(vy), ypoly({{1, 0}, {1, 2}}))),
        NonIntegral);
    CHECK_THROWS_AS(require_integral(RationalFn(ypoly({{1, 1}})).scaled(Rat(1, 2))),
                    NonIntegral);
}

TEST_CASE("rank one Betti numbers: a torus times a vector space") {
    for (int p : {0, 2}) {
        Engine eng(Curve{2, p}, Mode::y);
        auto [P, n] = poincare_from_higgs(Curve{2, p}, 1, 0, eng.higgs_tilde(1, 0));
        CHECK(n == 3);
        CHECK(P.m == 2);
        CHECK(P.betti == std::vector<Int>{1, 4, 6, 4, 1});
    }
    Engine eng(Curve{3, 0}, Mode::y);
    auto [P, n] = poincare_from_higgs(Curve{3, 0}, 1, 2, eng.higgs_tilde(1, 2));
    CHECK(n == 5);
    CHECK(P.m == 3);
    CHECK(P.betti == std::vector<Int>{1, 6, 15, 20, 15, 6, 1});
}

TEST_CASE("rank two Betti numbers, genus 2, all three twists") {
    LaurentPoly pl4 = ypoly({{1, 0}, {1, 1}}).pow(4);

    Engine e0(Curve{2, 0}, Mode::y);
    auto [P0, n0] = poincare_from_higgs(Curve{2, 0}, 2, 1, e0.higgs_tilde(2, 1));
    CHECK(n0 == 9);
    CHECK(P0.m == 5);
    CHECK(P0.betti ==
          coeff_list(pl4 * ypoly({{1, 0}, {1, 2}}) * ypoly({{1, 0}, {4, 3}, {2, 4}})));

    Engine e1(Curve{2, 1}, Mode::y);
    auto [P1, n1] = poincare_from_higgs(Curve{2, 1}, 2, 1, e1.higgs_tilde(2, 1));
    CHECK(n1 == 11);
    CHECK(P1.m == 6);
    CHECK(P1.betti == coeff_list(pl4 * ypoly({{1, 0}, {1, 2}, {4, 3}, {2, 4}, {4, 5},
                                              {8, 6}, {4, 7}, {2, 8}})));

    Engine e2(Curve{2, 2}, Mode::y);
    auto [P2, n2] = poincare_from_higgs(Curve{2, 2}, 2, 1, e2.higgs_tilde(2, 1));
    CHECK(n2 == 13);
    CHECK(P2.m == 7);
    CHECK(P2.betti == coeff_list(pl4 * ypoly({{1, 0}, {1, 2}}) *
                                 ypoly({{1, 0}, {4, 3}, {2, 4}, {6, 6}, {8, 7}, {2, 8}})));
}

TEST_CASE("rank three Betti numbers, genus 2") {
    LaurentPoly pl4 = ypoly({{1, 0}, {1, 1}}).pow(4);

    Engine e0(Curve{2, 0}, Mode::y);
    auto [P0, n0] = poincare_from_higgs(Curve{2, 0}, 3, 1, e0.higgs_tilde(3, 1));
    CHECK(n0 == 19);
    CHECK(P0.m == 10);
    CHECK(P0.betti ==
          coeff_list(pl4 * ypoly({{1, 0},  {1, 2},   {4, 3},   {3, 4},   {8, 5},  {10, 6},
                                  {16, 7}, {29, 8},  {32, 9},  {48, 10}, {64, 11}, {67, 12},
                                  {68, 13}, {48, 14}, {24, 15}, {6, 16}})));

    Engine e1(Curve{2, 1}, Mode::y);
    auto [P1, n1] = poincare_from_higgs(Curve{2, 1}, 3, 1, e1.higgs_tilde(3, 1));
    CHECK(n1 == 25);
    CHECK(P1.m == 13);
    CHECK(P1.betti ==
          coeff_list(pl4 * ypoly({{1, 0},    {1, 2},    {4, 3},    {3, 4},    {8, 5},
                                  {10, 6},   {16, 7},   {29, 8},   {32, 9},   {49, 10},
                                  {72, 11},  {92, 12},  {120, 13}, {149, 14}, {184, 15},
                                  {210, 16}, {216, 17}, {207, 18}, {168, 19}, {96, 20},
                                  {36, 21},  {6, 22}})));
}

TEST_CASE("rank one Hodge numbers and their collapse") {
    Engine eng(Curve{2, 0}, Mode::uv);
    auto [H, n] = hodge_from_higgs(Curve{2, 0}, 1, 0, eng.higgs_tilde(1, 0));
    CHECK(n == 3);
    CHECK(H.m == 2);
    CHECK(H.h.size() == 9);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            CHECK(H.h.at({i, j}) == binomial(2, i) * binomial(2, j));
    CHECK(H.collapse().betti == std::vector<Int>{1, 4, 6, 4, 1});
}

TEST_CASE("Hodge numbers collapse onto the Betti numbers, ranks two and three") {
    for (int p : {0, 1}) {
        Engine ey(Curve{2, p}, Mode::y);
        Engine euv(Curve{2, p}, Mode::uv);
        auto [P, ny] = poincare_from_higgs(Curve{2, p}, 2, 1, ey.higgs_tilde(2, 1));
        auto [H, nuv] = hodge_from_higgs(Curve{2, p}, 2, 1, euv.higgs_tilde(2, 1));
        CHECK(ny == nuv);
        CHECK(H.collapse() == P);
    }

    Engine ey(Curve{2, 0}, Mode::y);
    Engine euv(Curve{2, 0}, Mode::uv);
    auto [P, ny] = poincare_from_higgs(Curve{2, 0}, 3, 1, ey.higgs_tilde(3, 1));
    auto [H, nuv] = hodge_from_higgs(Curve{2, 0}, 3, 1, euv.higgs_tilde(3, 1));
    CHECK(ny == 19);
    CHECK(nuv == 19);
    CHECK(H.collapse() == P);
}

TEST_CASE("multicover inversion reproduces the coprime invariant") {
    Engine eng(Curve{2, 0}, Mode::y);
    CHECK(multicover_invert(eng, 2, 1) == eng.higgs_tilde(2, 1));
    CHECK(multicover_invert(eng, 2, 0) == eng.higgs_tilde(2, 1));
    CHECK(multicover_invert(eng, 2, 2) == eng.higgs_tilde(2, 1));
    CHECK(multicover_invert(eng, 3, 0) == eng.higgs_tilde(3, 1));
    CHECK_NOTHROW(require_integral(multicover_invert(eng, 2, 0)));
    CHECK_NOTHROW(require_integral(multicover_invert(eng, 3, 0)));

    for (int g : {2, 3})
        for (int p : {0, 1, 2}) {
            Engine e(Curve{g, p}, Mode::y);
            CHECK(multicover_invert(e, 2, 0) == e.higgs_tilde(2, 1));
        }
    for (int p : {1, 2}) {
        Engine e(Curve{2, p}, Mode::y);
        CHECK(multicover_invert(e, 3, 0) == e.higgs_tilde(3, 1));
    }
}

TEST_CASE("multicover inversion in the double refinement") {
    Engine eng(Curve{2, 0}, Mode::uv);
    CHECK(same(multicover_invert(eng, 2, 0), eng.higgs_tilde(2, 1)));
    CHECK_NOTHROW(require_integral(multicover_invert(eng, 2, 0)));

    Engine etw(Curve{2, 1}, Mode::uv);
    CHECK(same(multicover_invert(etw, 2, 0), etw.higgs_tilde(2, 1)));
}

TEST_CASE("rank four inversion is degree independent") {
    Engine eng(Curve{2, 0}, Mode::y);
    RationalFn h40 = multicover_invert(eng, 4, 0);
    CHECK(h40 == eng.higgs_tilde(4, 1));
    CHECK(multicover_invert(eng, 4, 2) == eng.higgs_tilde(4, 1));
    CHECK_NOTHROW(require_integral(h40));

    // twisted case: the nested peels at k = 2 and k = 4 carry opposite signs
    Engine etw(Curve{2, 1}, Mode::y);
    CHECK(multicover_invert(etw, 4, 0) == etw.higgs_tilde(4, 1));

    auto [P, n] = poincare_from_higgs(Curve{2, 0}, 4, 1, eng.higgs_tilde(4, 1));
    CHECK(n == 16 + P.m);
    CHECK(P.betti[1] == 4);
}

TEST_CASE("Betti extraction rejects malformed invariants") {
    Curve c{2, 0};
    Engine eng(c, Mode::y);
    // non-coprime charge
    CHECK_THROWS_AS(poincare_from_higgs(c, 2, 0, eng.higgs_tilde(2, 0)), ValidationFailed);
    // nontrivial denominator
    CHECK_THROWS_AS(poincare_from_higgs(
                        c, 1, 0, RationalFn::reduced(lp_one(vy), ypoly({{1, 0}, {1, 2}}))),
                    NonIntegral);
    // zero invariant
    CHECK_THROWS_AS(poincare_from_higgs(c, 1, 0, rf_zero(vy)), ValidationFailed);
    // negative Betti number after the sign flip
    CHECK_THROWS_AS(poincare_from_higgs(c, 1, 0, RationalFn(ypoly({{1, 0}, {1, 3}, {1, 4}}))),
                    ValidationFailed);
    // b_0 != 1
    CHECK_THROWS_AS(poincare_from_higgs(c, 1, 0, RationalFn(ypoly({{2, 0}, {1, 2}}))),
                    ValidationFailed);
    // odd degree span
    CHECK_THROWS_AS(poincare_from_higgs(c, 1, 0, RationalFn(ypoly({{1, 0}, {-1, 1}}))),
                    ValidationFailed);
    // valid Betti numbers at the wrong dimension shift
    CHECK_THROWS_AS(poincare_from_higgs(
                        c, 1, 0, RationalFn(ypoly({{1, 0}, {-4, 1}, {6, 2}, {-4, 3}, {1, 4}}))),
                    ValidationFailed);
    // doubly refined input to the singly refined extraction
    Engine euv(c, Mode::uv);
    CHECK_THROWS_AS(poincare_from_higgs(c, 1, 0, euv.higgs_tilde(1, 0)), ValidationFailed);
}

TEST_CASE("Hodge extraction rejects malformed invariants") {
    Curve c{2, 0};
    LaurentPoly fu = uvpoly({{1, 0, 0}, {-1, 1, 0}});  // 1 - u
    LaurentPoly fv = uvpoly({{1, 0, 0}, {-1, 0, 1}});  // 1 - v
    LaurentPoly pre = fu.pow(2) * fv.pow(2);

    // asymmetric: h^{1,2} = 1 without a matching h^{2,1}
    CHECK_THROWS_AS(hodge_from_higgs(
                        c, 1, 0,
                        RationalFn(uvpoly({{1, 0, 0}, {-1, 1, 2}}).shifted(Exp{-1, -1, 0, 0}))),
                    ValidationFailed);
    // odd exponent after the shift
    CHECK_THROWS_AS(hodge_from_higgs(c, 1, 0, RationalFn(uvpoly({{1, 0, 0}}) + abpow(1))),
                    ValidationFailed);
    // different minimal exponents in the two variables
    CHECK_THROWS_AS(hodge_from_higgs(c, 1, 0, RationalFn(pre.shifted(Exp{-3, -1, 0, 0}))),
                    ValidationFailed);
    // negative Hodge number at odd weight
    CHECK_THROWS_AS(hodge_from_higgs(c, 1, 0, RationalFn(uvpoly({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}))),
                    ValidationFailed);
    // valid Hodge numbers at the wrong dimension shift
    CHECK_THROWS_AS(hodge_from_higgs(c, 1, 0, RationalFn(pre.shifted(Exp{-5, -5, 0, 0}))),
                    ValidationFailed);
    // singly refined input to the doubly refined extraction
    Engine ey(c, Mode::y);
    CHECK_THROWS_AS(hodge_from_higgs(c, 1, 0, ey.higgs_tilde(1, 0)), ValidationFailed);
}
