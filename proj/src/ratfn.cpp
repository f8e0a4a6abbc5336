#include "higgs/ratfn.hpp"

#include <algorithm>

namespace higgs {

namespace {

// ---- dense univariate helpers over Q (index = degree) ----

using UPoly = std::vector<Rat>;

void u_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool u_is_zero(const UPoly& p) { return p.empty(); }

UPoly u_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    u_trim(r);
    return r;
}

// remainder of a by b over the field Q
UPoly u_rem(UPoly a, const UPoly& b) {
    u_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        u_trim(a);
    }
    return a;
}

// exact quotient a/b (throws if not exact)
UPoly u_div_exact(UPoly a, const UPoly& b) {
    u_trim(a);
    if (b.empty()) throw DivisionByZero("u_div_exact");
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        u_trim(a);
    }
    if (!a.empty()) throw Inexact("u_div_exact: nonzero remainder");
    u_trim(q);
    return q;
}

UPoly u_gcd(UPoly a, UPoly b) {
    u_trim(a);
    u_trim(b);
    while (!b.empty()) {
        UPoly r = u_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;  // monic
    }
    return a;
}

// ---- bivariate gcd: primitive polynomial remainder sequence over Q[y][x] ----

// polynomial in x whose coefficients are univariate polys in y
using BPoly = std::vector<UPoly>;

void b_trim(BPoly& p) {
    while (!p.empty() && u_is_zero(p.back())) p.pop_back();
}

bool b_is_zero(const BPoly& p) { return p.empty(); }

UPoly b_content(const BPoly& p) {
    UPoly g;
    for (const UPoly& c : p)
        if (!u_is_zero(c)) g = u_gcd(g, c);
    return g;
}

BPoly b_primitive(const BPoly& p, UPoly* content_out = nullptr) {
    UPoly g = b_content(p);
    if (content_out) *content_out = g;
    if (u_is_zero(g)) return {};
    BPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[i] = u_is_zero(p[i]) ? UPoly{} : u_div_exact(p[i], g);
    return r;
}

// pseudo-remainder of a by b (b nonzero), content-stripped afterwards
BPoly b_prem_primitive(BPoly a, const BPoly& b) {
    b_trim(a);
    const UPoly& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        UPoly la = a.back();
        size_t off = a.size() - b.size();
        // a := lb*a - la*x^off*b
        for (UPoly& c : a) c = u_mul(c, lb);
        for (size_t i = 0; i < b.size(); ++i) {
            UPoly sub = u_mul(la, b[i]);
            UPoly& tgt = a[off + i];
            size_t n = std::max(tgt.size(), sub.size());
            tgt.resize(n, Rat(0));
            for (size_t j = 0; j < sub.size(); ++j) tgt[j] -= sub[j];
            u_trim(tgt);
        }
        b_trim(a);
    }
    return b_primitive(a);
}

BPoly b_gcd_primitive(BPoly a, BPoly b) {
    b_trim(a);
    b_trim(b);
    if (b_is_zero(a)) return b;
    if (b_is_zero(b)) return a;
    a = b_primitive(a);
    b = b_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b_is_zero(b)) {
        BPoly r = b_prem_primitive(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// ---- conversions between LaurentPoly (shifted to min exponent 0) and the
//      dense helpers above ----

UPoly to_upoly(const LaurentPoly& p, int idx) {
    UPoly r;
    for (const auto& t : p.terms()) {
        size_t d = static_cast<size_t>(t.e[idx]);
        if (r.size() <= d) r.resize(d + 1, Rat(0));
        r[d] += t.c;
    }
    u_trim(r);
    return r;
}

LaurentPoly from_upoly(const UPoly& p, VarSet vars, int idx) {
    LaurentPoly r(vars);
    for (size_t d = 0; d < p.size(); ++d) {
        if (p[d] == 0) continue;
        Exp e = exp_zero();
        e[idx] = static_cast<int32_t>(d);
        r.add_term(e, p[d]);
    }
    return r;
}

BPoly to_bpoly(const LaurentPoly& p, int ix, int iy) {
    BPoly r;
    for (const auto& t : p.terms()) {
        size_t dx = static_cast<size_t>(t.e[ix]);
        size_t dy = static_cast<size_t>(t.e[iy]);
        if (r.size() <= dx) r.resize(dx + 1);
        UPoly& c = r[dx];
        if (c.size() <= dy) c.resize(dy + 1, Rat(0));
        c[dy] += t.c;
    }
    for (UPoly& c : r) u_trim(c);
    b_trim(r);
    return r;
}

LaurentPoly from_bpoly(const BPoly& p, VarSet vars, int ix, int iy) {
    LaurentPoly r(vars);
    for (size_t dx = 0; dx < p.size(); ++dx)
        for (size_t dy = 0; dy < p[dx].size(); ++dy) {
            if (p[dx][dy] == 0) continue;
            Exp e = exp_zero();
            e[ix] = static_cast<int32_t>(dx);
            e[iy] = static_cast<int32_t>(dy);
            r.add_term(e, p[dx][dy]);
        }
    return r;
}

} // namespace

LaurentPoly lp_gcd(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return lp_one(p.vars());
    LaurentPoly pp = p.shifted(exp_neg(p.min_exps()));
    LaurentPoly qq = q.shifted(exp_neg(q.min_exps()));

    // variables actually appearing in either polynomial part
    std::vector<int> active;
    Exp mp = pp.max_exps(), mq = qq.max_exps();
    for (uint8_t i = 0; i < p.vars().n; ++i)
        if (mp[i] != 0 || mq[i] != 0) active.push_back(i);

    if (active.empty()) return lp_one(p.vars());
    if (active.size() == 1) {
        UPoly g = u_gcd(to_upoly(pp, active[0]), to_upoly(qq, active[0]));
        return from_upoly(g, p.vars(), active[0]);
    }
    if (active.size() == 2) {
        int ix = active[0], iy = active[1];
        UPoly cp, cq;
        BPoly bp = b_primitive(to_bpoly(pp, ix, iy), &cp);
        BPoly bq = b_primitive(to_bpoly(qq, ix, iy), &cq);
        BPoly g = b_gcd_primitive(bp, bq);
        UPoly cg = u_gcd(cp, cq);
        BPoly full(g.size());
        for (size_t i = 0; i < g.size(); ++i) full[i] = u_mul(g[i], cg);
        return from_bpoly(full, p.vars(), ix, iy);
    }
    return lp_one(p.vars());  // three or more variables: no reduction
}

RationalFn RationalFn::reduced(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw DivisionByZero("RationalFn: zero denominator");
    if (!(num.vars() == den.vars())) throw VarMismatch("RationalFn: VarSet mismatch");
    RationalFn f;
    if (num.is_zero()) {
        f.num_ = num;
        f.den_ = lp_one(num.vars());
        return f;
    }
    LaurentPoly g = lp_gcd(num, den);
    if (!g.is_constant()) {
        num = *exact_div(num, g);
        den = *exact_div(den, g);
    }
    // move den's monomial content into num, making den a true polynomial
    Exp shift = exp_neg(den.min_exps());
    num = num.shifted(shift);
    den = den.shifted(shift);
    // den's lexicographically least coefficient becomes +1
    Rat c = den.terms().front().c;
    f.num_ = num.scaled(Rat(1) / c);
    f.den_ = den.scaled(Rat(1) / c);
    return f;
}

RationalFn ratfn_reduce(const LaurentPoly& num, const LaurentPoly& den) {
    return RationalFn::reduced(num, den);
}

RationalFn rf_zero(VarSet vars) { return RationalFn(lp_zero(vars)); }
RationalFn rf_one(VarSet vars) { return RationalFn(lp_one(vars)); }

bool RationalFn::is_polynomial() const {
    return den_.is_constant() && !den_.is_zero();
}

LaurentPoly RationalFn::as_poly() const {
    if (den_.terms().size() == 1) {
        const auto& t = den_.terms()[0];
        return num_.shifted(exp_neg(t.e)).scaled(Rat(1) / t.c);
    }
    auto q = exact_div(num_, den_);
    if (!q) throw Inexact("RationalFn::as_poly: denominator does not divide numerator");
    return *q;
}

RationalFn RationalFn::operator-() const {
    RationalFn f;
    f.num_ = -num_;
    f.den_ = den_;
    return f;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return reduced(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
    return reduced(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return reduced(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.is_zero()) throw DivisionByZero("RationalFn division by zero");
    return reduced(num_ * o.den_, den_ * o.num_);
}

bool RationalFn::operator==(const RationalFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

RationalFn RationalFn::scaled(const Rat& c) const {
    RationalFn f;
    f.num_ = num_.scaled(c);
    f.den_ = c == 0 ? lp_one(num_.vars()) : den_;
    return f;
}

RationalFn RationalFn::pow(long k) const {
    if (k == 0) return rf_one(vars());
    bool inv = k < 0;
    if (inv) k = -k;
    RationalFn r = rf_one(vars());
    RationalFn base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        if (k >>= 1) base = base * base;
    }
    return inv ? rf_one(vars()) / r : r;
}

RationalFn RationalFn::substitute(
    const VarSet& target,
    const std::function<std::optional<std::pair<int, Exp>>(Var)>& map) const {
    return reduced(num_.substitute(target, map), den_.substitute(target, map));
}

std::string RationalFn::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

bool same(const RationalFn& f, const RationalFn& g) {
    return f.num() * g.den() == g.num() * f.den();
}

} // namespace higgs
