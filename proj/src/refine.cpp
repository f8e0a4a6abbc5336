#include "higgs/refine.hpp"

#include <numeric>
#include <string>

namespace higgs::refine {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ValidationFailed(msg); }

bool coprime(int r, long e) {
    return std::gcd(static_cast<long>(r), e < 0 ? -e : e) == 1;
}

long dimension_shift(const Curve& c, int r, int m) {
    return static_cast<long>(r) * r * (c.g - 1) +
           static_cast<long>(r) * (r - 1) / 2 * c.p + m;
}

} // namespace

PoincarePoly HodgePoly::collapse() const {
    PoincarePoly out;
    out.m = m;
    out.betti.assign(2 * static_cast<size_t>(m) + 1, Int(0));
    for (const auto& [ij, c] : h)
        out.betti[static_cast<size_t>(ij.first + ij.second)] += c;
    return out;
}

LaurentPoly require_integral(const RationalFn& f) {
    if (!f.is_polynomial())
        throw NonIntegral("nontrivial denominator: " + f.den().str());
    LaurentPoly p = f.as_poly();
    for (const auto& t : p.terms())
        if (boost::multiprecision::denominator(t.c) != 1)
            throw NonIntegral("non-integer coefficient " + t.c.str());
    return p;
}

RationalFn multicover_invert(wallcross::Engine& eng, int r, long e) {
    RationalFn acc = eng.higgs_tilde(r, e);
    long d = e == 0 ? r : std::gcd(static_cast<long>(r), e < 0 ? -e : e);
    const VarSet& vs = eng.vars();
    for (long k = 2; k <= d; ++k) {
        if (d % k != 0) continue;
        RationalFn sub = multicover_invert(eng, static_cast<int>(r / k), e / k);
        RationalFn stretched =
            sub.substitute(vs, [&](Var v) -> std::optional<std::pair<int, Exp>> {
                Exp ex = exp_zero();
                ex[static_cast<size_t>(vs.index_of(v))] = static_cast<int32_t>(k);
                return std::make_pair(1, ex);
            });
        RationalFn term = stretched / RationalFn(eng.bracket(k)).scaled(Rat(k));
        if ((static_cast<long>(r) - r / k) * eng.curve().p % 2 != 0) term = -term;
        acc = acc - term;
    }
    return acc;
}

std::pair<PoincarePoly, long> poincare_from_higgs(Curve c, int r, long e,
                                                  const RationalFn& h) {
    if (r < 1 || !coprime(r, e))
        fail("cohomology extraction needs a coprime charge");
    if (h.vars().size() != 1)
        fail("expected a single refinement variable");
    LaurentPoly q = require_integral(h);
    if (q.is_zero()) fail("invariant vanishes");

    Exp lo = q.min_exps(), hi = q.max_exps();
    long n = -static_cast<long>(lo[0]);
    long span = static_cast<long>(hi[0]) - lo[0];
    if (span % 2 != 0) fail("odd top degree " + std::to_string(span));

    PoincarePoly out;
    out.m = static_cast<int>(span / 2);
    out.betti.assign(static_cast<size_t>(span) + 1, Int(0));
    for (const auto& t : q.terms()) {
        long k = static_cast<long>(t.e[0]) - lo[0];
        Int bk = boost::multiprecision::numerator(t.c);
        if (k % 2 != 0) bk = -bk;
        if (bk < 0) fail("negative Betti number at degree " + std::to_string(k));
        out.betti[static_cast<size_t>(k)] = bk;
    }
    if (out.betti[0] != 1) fail("b_0 = " + int_str(out.betti[0]));
    if (n != dimension_shift(c, r, out.m))
        fail("dimension identity violated: n = " + std::to_string(n) +
             ", m = " + std::to_string(out.m));
    return {std::move(out), n};
}

std::pair<HodgePoly, long> hodge_from_higgs(Curve c, int r, long e,
                                            const RationalFn& h) {
    if (r < 1 || !coprime(r, e))
        fail("cohomology extraction needs a coprime charge");
    if (h.vars().size() != 2)
        fail("expected two refinement variables");
    LaurentPoly q = require_integral(h);
    if (q.is_zero()) fail("invariant vanishes");

    Exp lo = q.min_exps();
    if (lo[0] != lo[1])
        fail("refinement variables have different minimal exponents");
    long n = -static_cast<long>(lo[0]);

    HodgePoly out;
    long top = 0;
    for (const auto& t : q.terms()) {
        long ea = t.e[0] + n, eb = t.e[1] + n;
        if (ea % 2 != 0 || eb % 2 != 0) fail("odd half-integer exponent");
        int i = static_cast<int>(ea / 2), j = static_cast<int>(eb / 2);
        Int hij = boost::multiprecision::numerator(t.c);
        if ((i + j) % 2 != 0) hij = -hij;
        if (hij < 0)
            fail("negative Hodge number at (" + std::to_string(i) + ", " +
                 std::to_string(j) + ")");
        out.h[{i, j}] = hij;
        top = std::max(top, static_cast<long>(i) + j);
    }
    for (const auto& [ij, hij] : out.h) {
        auto it = out.h.find({ij.second, ij.first});
        if (it == out.h.end() || it->second != hij)
            fail("Hodge symmetry violated at (" + std::to_string(ij.first) +
                 ", " + std::to_string(ij.second) + ")");
    }
    auto h00 = out.h.find({0, 0});
    if (h00 == out.h.end() || h00->second != 1) fail("h^{0,0} != 1");
    if (top % 2 != 0) fail("odd top degree " + std::to_string(top));
    out.m = static_cast<int>(top / 2);
    if (n != dimension_shift(c, r, out.m))
        fail("dimension identity violated: n = " + std::to_string(n) +
             ", m = " + std::to_string(out.m));
    return {std::move(out), n};
}

} // namespace higgs::refine
