#include "higgs/wallcross.hpp"

#include "higgs/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace higgs::wallcross {

namespace {

// floor/ceil division for b > 0
long fdiv(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

long cdiv(long a, long b) { return -fdiv(-a, b); }

Rat factorial(int n) {
    Rat f(1);
    for (int i = 2; i <= n; ++i) f = f * Rat(i);
    return f;
}

// 1 / prod(mult!) over runs of equal charges in a non-increasing list
Rat symmetry_weight(const std::vector<Charge>& tail) {
    Rat w(1);
    size_t i = 0;
    while (i < tail.size()) {
        size_t j = i;
        while (j < tail.size() && tail[j] == tail[i]) ++j;
        w = w / factorial(static_cast<int>(j - i));
        i = j;
    }
    return w;
}

// Equal-slope splittings: every part is an integer multiple of the primitive
// charge on the target's slope ray, so the splittings are the partitions of
// the divisibility d into at least two parts.
std::vector<Decomposition> equal_decompositions(Charge target) {
    std::vector<Decomposition> out;
    long d = (target.e == 0) ? target.r : std::gcd(static_cast<long>(target.r), std::labs(target.e));
    if (d < 2) return out;
    int r0 = static_cast<int>(target.r / d);
    long e0 = target.e / d;
    for (const auto& part : partitions::partitions_of(static_cast<int>(d))) {
        if (part.size() < 2) continue;
        Decomposition dec;
        for (int m : part) dec.tail.push_back(Charge{m * r0, m * e0});
        dec.weight = symmetry_weight(dec.tail);
        dec.parts = static_cast<int>(part.size());
        out.push_back(std::move(dec));
    }
    return out;
}

} // namespace

std::vector<Decomposition> decompositions(Charge target, SumKind kind, long delta) {
    if (target.r < 1) throw AlgebraError("decompositions: rank must be positive");
    if (delta <= 0) throw AlgebraError("decompositions: slope floor needs 2g-2+p > 0");
    if (kind == SumKind::equal_slope) return equal_decompositions(target);

    const int R = target.r;
    const long E = target.e;
    // the whole constrained sum is empty below the slope floor mu_0
    if (E < -static_cast<long>(R) * (R - 1) * delta) return {};

    // least admissible degree of a tail part of rank rho: slope strictly
    // (resp. weakly) above the target slope E/R
    std::vector<long> tail_lb(R, 0);
    for (int rho = 1; rho < R; ++rho) {
        long num = static_cast<long>(rho) * E;
        tail_lb[rho] = (kind == SumKind::strict_above) ? fdiv(num, R) + 1 : cdiv(num, R);
    }
    // floor for the distinguished charge: slope floor mu_0 and the vanishing
    // bound of the asymptotic invariants
    std::vector<long> first_lb(R + 1, 0);
    for (int rho = 1; rho <= R; ++rho)
        first_lb[rho] = std::max(-static_cast<long>(rho) * (rho - 1) * delta,
                                 -static_cast<long>(rho) * (R - 1) * delta);
    // least total degree of any completion of the given remaining rank
    // (distinguished charge plus possibly more tail parts)
    std::vector<long> min_comp(R + 1, 0);
    min_comp[1] = first_lb[1];
    for (int m = 2; m <= R; ++m) {
        min_comp[m] = first_lb[m];
        for (int rho = 1; rho < m; ++rho)
            min_comp[m] = std::min(min_comp[m], tail_lb[rho] + min_comp[m - rho]);
    }

    std::vector<Decomposition> out;
    std::vector<Charge> tail;
    auto dfs = [&](auto&& self, int r_rem, long e_rem, Charge prev) -> void {
        if (!tail.empty() && e_rem >= first_lb[r_rem]) {
            Decomposition dec;
            dec.first = Charge{r_rem, e_rem};
            dec.tail = tail;
            dec.weight = symmetry_weight(tail);
            dec.parts = static_cast<int>(tail.size()) + 1;
            out.push_back(std::move(dec));
        }
        for (int rho = std::min(r_rem - 1, prev.r); rho >= 1; --rho) {
            long cap = e_rem - min_comp[r_rem - rho];
            if (rho == prev.r && prev.e < cap) cap = prev.e;
            for (long e = cap; e >= tail_lb[rho]; --e) {
                tail.push_back(Charge{rho, e});
                self(self, r_rem - rho, e_rem - e, Charge{rho, e});
                tail.pop_back();
            }
        }
    };
    dfs(dfs, R, E, Charge{R, 0});
    return out;
}

Engine::Engine(Curve c, Mode mode)
    : c_(c), mode_(mode),
      vars_(mode == Mode::y ? VarSet{Var::y} : VarSet{Var::a, Var::b}) {
    if (c_.g < 2 || c_.p < 0)
        throw AlgebraError("wallcross engine requires g >= 2 and p >= 0");
}

long Engine::normalize_degree(int r, long e) const {
    if (r < 1) throw AlgebraError("normalize_degree: rank must be positive");
    long m = ((e % r) + r) % r;
    // collision with the vanishing bracket [e - r(g-1)]; unreachable for g >= 2
    if (m == static_cast<long>(r) * (c_.g - 1)) m += r;
    return m;
}

const PolySeries& Engine::series_for(int r, long e_max) {
    auto it = aser_.find(r);
    if (it == aser_.end() || it->second.hi() < e_max) {
        int hi = static_cast<int>(std::max(e_max, 0L)) + 8;
        PolySeries s = asymptotic::rank_series(c_, r, hi, mode_);
        if (it == aser_.end())
            it = aser_.emplace(r, std::move(s)).first;
        else
            it->second = std::move(s);
    }
    return it->second;
}

LaurentPoly Engine::a_tilde(int r, long e) {
    if (r < 1) throw AlgebraError("a_tilde: rank must be positive");
    if (e < asymptotic::lower_degree_bound(c_, r)) return lp_zero(vars_);
    const LaurentPoly& co = series_for(r, e).at(static_cast<int>(e));
    LaurentPoly proj = co.substitute(vars_, [&](Var v) -> std::optional<std::pair<int, Exp>> {
        int idx = vars_.index_of(v);
        if (idx < 0) return std::nullopt;  // lambda: exponent already stripped
        Exp ex = exp_zero();
        ex[idx] = 1;
        return std::pair<int, Exp>{1, ex};
    });
    if ((static_cast<long>(r) * c_.p) % 2 != 0) proj = -proj;
    return proj;
}

LaurentPoly Engine::bracket(long n) const {
    return mode_ == Mode::y ? qint(n, vars_, Var::y) : qint_uv(n, vars_, Var::a, Var::b);
}

RationalFn Engine::tail_product(const Decomposition& dec) {
    RationalFn t = rf_one(vars_).scaled(dec.weight);
    for (const Charge& q : dec.tail) {
        LaurentPoly br = bracket(q.e - static_cast<long>(q.r) * (c_.g - 1));
        if (br.is_zero()) return rf_zero(vars_);
        t = t * RationalFn(br) * higgs_tilde(q.r, q.e);
    }
    return t;
}

RationalFn Engine::compute_raw(int r, long e) {
    if (r < 1) throw AlgebraError("compute_raw: rank must be positive");
    const long etil = -e + 2L * r * (c_.g - 1);
    RationalFn acc(a_tilde(r, e) - a_tilde(r, etil));
    for (const Decomposition& dec : decompositions(Charge{r, e}, SumKind::strict_above, delta())) {
        LaurentPoly at = a_tilde(dec.first->r, dec.first->e);
        if (at.is_zero()) continue;
        RationalFn term = RationalFn(at) * tail_product(dec);
        acc = (dec.parts % 2 == 0) ? acc - term : acc + term;  // +(-1)^{l-1}
    }
    for (const Decomposition& dec : decompositions(Charge{r, etil}, SumKind::weakly_above, delta())) {
        LaurentPoly at = a_tilde(dec.first->r, dec.first->e);
        if (at.is_zero()) continue;
        RationalFn term = RationalFn(at) * tail_product(dec);
        acc = (dec.parts % 2 == 0) ? acc + term : acc - term;  // -(-1)^{l-1}
    }
    for (const Decomposition& dec : decompositions(Charge{r, e}, SumKind::equal_slope, delta()))
        acc = acc - tail_product(dec);
    LaurentPoly br = bracket(e - static_cast<long>(r) * (c_.g - 1));
    if (br.is_zero())
        throw DegenerateBracket("vanishing bracket dividing the recursion at rank " +
                                std::to_string(r) + ", degree " + std::to_string(e));
    return acc / RationalFn(br);
}

const RationalFn& Engine::higgs_tilde(int r, long e) {
    const long en = normalize_degree(r, e);
    const std::pair<int, long> key{r, en};
    if (auto it = table_.find(key); it != table_.end()) {
        ++hits_;
        return it->second;
    }
    ++computes_;
    RationalFn h = compute_raw(r, en);
    return table_.emplace(key, std::move(h)).first->second;
}

void Engine::seed(int r, long e, RationalFn value) {
    table_.emplace(std::pair<int, long>{r, normalize_degree(r, e)}, std::move(value));
}

} // namespace higgs::wallcross
