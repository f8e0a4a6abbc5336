#include "higgs/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace higgs {

const char* var_name(Var v) {
    switch (v) {
        case Var::lambda: return "lambda";
        case Var::y: return "y";
        case Var::a: return "a";
        case Var::b: return "b";
        case Var::q1: return "q1";
        case Var::q2: return "q2";
        case Var::qf: return "Qf";
        case Var::q: return "q";
        case Var::x: return "x";
        case Var::u: return "u";
        case Var::v: return "v";
        case Var::T: return "T";
        case Var::eps: return "eps";
    }
    return "?";
}

std::optional<Var> var_from_name(const std::string& name) {
    static const Var all[] = {Var::lambda, Var::y, Var::a, Var::b, Var::q1, Var::q2,
                              Var::qf, Var::q, Var::x, Var::u, Var::v, Var::T, Var::eps};
    for (Var v : all)
        if (name == var_name(v)) return v;
    return std::nullopt;
}

VarSet::VarSet(std::initializer_list<Var> list) {
    if (list.size() > 4) throw VarMismatch("VarSet supports at most 4 variables");
    for (Var v : list) {
        if (contains(v)) throw VarMismatch("duplicate variable in VarSet");
        vs[n++] = v;
    }
}

int VarSet::index_of(Var v) const {
    for (uint8_t i = 0; i < n; ++i)
        if (vs[i] == v) return i;
    return -1;
}

static void require_same_vars(const LaurentPoly& p, const LaurentPoly& q) {
    if (!(p.vars() == q.vars())) throw VarMismatch("operands use different VarSets");
}

LaurentPoly LaurentPoly::constant(VarSet vars, Rat c) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_.push_back({exp_zero(), std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::monomial(VarSet vars, Exp e, Rat c) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_.push_back({e, std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::variable(VarSet vars, Var v, int32_t power) {
    int i = vars.index_of(v);
    if (i < 0) throw VarMismatch("variable not in VarSet");
    Exp e = exp_zero();
    e[i] = power;
    return monomial(vars, e);
}

Rat LaurentPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (terms_.size() == 1 && exp_is_zero(terms_[0].e)) return terms_[0].c;
    throw AlgebraError("polynomial is not constant");
}

bool LaurentPoly::is_univariate_in(Var v) const {
    int idx = vars_.index_of(v);
    for (const Term& t : terms_)
        for (int i = 0; i < 4; ++i)
            if (t.e[i] != 0 && i != idx) return false;
    return true;
}

std::vector<Var> LaurentPoly::active_vars() const {
    std::vector<Var> out;
    for (uint8_t i = 0; i < vars_.n; ++i) {
        for (const Term& t : terms_) {
            if (t.e[i] != 0) {
                out.push_back(vars_[i]);
                break;
            }
        }
    }
    return out;
}

Rat LaurentPoly::coeff(const Exp& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exp& key) { return t.e < key; });
    if (it != terms_.end() && it->e == e) return it->c;
    return Rat(0);
}

void LaurentPoly::add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exp& key) { return t.e < key; });
    if (it != terms_.end() && it->e == e) {
        it->c += c;
        if (it->c == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {e, c});
    }
}

LaurentPoly LaurentPoly::from_sorted_terms(VarSet vars, std::vector<Term> terms) {
    LaurentPoly p(vars);
    p.terms_ = std::move(terms);
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    require_same_vars(*this, o);
    LaurentPoly r(vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto ia = terms_.begin(), ib = o.terms_.begin();
    while (ia != terms_.end() && ib != o.terms_.end()) {
        if (ia->e < ib->e) {
            r.terms_.push_back(*ia++);
        } else if (ib->e < ia->e) {
            r.terms_.push_back(*ib++);
        } else {
            Rat c = ia->c + ib->c;
            if (c != 0) r.terms_.push_back({ia->e, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    r.terms_.insert(r.terms_.end(), ia, terms_.end());
    r.terms_.insert(r.terms_.end(), ib, o.terms_.end());
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    require_same_vars(*this, o);
    if (terms_.empty() || o.terms_.empty()) return LaurentPoly(vars_);
    // monomial fast paths
    if (terms_.size() == 1) return o.shifted(terms_[0].e).scaled(terms_[0].c);
    if (o.terms_.size() == 1) return shifted(o.terms_[0].e).scaled(o.terms_[0].c);

    std::unordered_map<Exp, Rat, ExpHash> acc;
    acc.reserve(terms_.size() * 2);
    for (const Term& ta : terms_)
        for (const Term& tb : o.terms_) {
            Rat prod = ta.c * tb.c;
            auto [it, inserted] = acc.try_emplace(exp_add(ta.e, tb.e), prod);
            if (!inserted) it->second += prod;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) out.push_back({e, std::move(c)});
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.e < y.e; });
    return from_sorted_terms(vars_, std::move(out));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (!(vars_ == o.vars_) || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    if (c == 0) return LaurentPoly(vars_);
    LaurentPoly r(vars_);
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.c *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exp& e) const {
    LaurentPoly r(vars_);
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.e = exp_add(t.e, e);
    return r;
}

LaurentPoly LaurentPoly::pow(long k) const {
    if (k < 0) throw AlgebraError("LaurentPoly::pow: negative exponent");
    LaurentPoly r = lp_one(vars_);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        if (k >>= 1) base = base * base;
    }
    return r;
}

Exp LaurentPoly::min_exps() const {
    Exp m = exp_zero();
    bool first = true;
    for (const Term& t : terms_) {
        if (first) {
            m = t.e;
            first = false;
        } else {
            for (int i = 0; i < 4; ++i) m[i] = std::min(m[i], t.e[i]);
        }
    }
    return m;
}

Exp LaurentPoly::max_exps() const {
    Exp m = exp_zero();
    bool first = true;
    for (const Term& t : terms_) {
        if (first) {
            m = t.e;
            first = false;
        } else {
            for (int i = 0; i < 4; ++i) m[i] = std::max(m[i], t.e[i]);
        }
    }
    return m;
}

LaurentPoly LaurentPoly::substitute(
    const VarSet& target,
    const std::function<std::optional<std::pair<int, Exp>>(Var)>& map) const {
    LaurentPoly out(target);
    for (const Term& t : terms_) {
        Exp e = exp_zero();
        int sign = 1;
        for (uint8_t i = 0; i < vars_.n; ++i) {
            int32_t k = t.e[i];
            if (k == 0) continue;
            auto img = map(vars_[i]);
            if (!img) throw VarMismatch("substitute: no image for active variable");
            e = exp_add(e, exp_scale(img->second, k));
            if (img->first < 0 && (k & 1)) sign = -sign;
        }
        out.add_term(e, sign < 0 ? -t.c : t.c);
    }
    return out;
}

LaurentPoly LaurentPoly::with_vars(const VarSet& target) const {
    return substitute(target, [&](Var v) -> std::optional<std::pair<int, Exp>> {
        int i = target.index_of(v);
        if (i < 0) return std::nullopt;
        Exp e = exp_zero();
        e[i] = 1;
        return std::make_pair(1, e);
    });
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest terms last to match ascending storage order
    for (const Term& t : terms_) {
        Rat c = t.c;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        }
        bool printed_coeff = false;
        if (c != 1 || exp_is_zero(t.e)) {
            os << c;
            printed_coeff = true;
        }
        for (uint8_t i = 0; i < vars_.n; ++i) {
            if (t.e[i] == 0) continue;
            if (printed_coeff) os << "*";
            os << var_name(vars_[i]);
            if (t.e[i] != 1) os << "^" << t.e[i];
            printed_coeff = true;
        }
    }
    return os.str();
}

LaurentPoly lp_zero(VarSet vars) { return LaurentPoly(vars); }
LaurentPoly lp_one(VarSet vars) { return LaurentPoly::constant(vars, Rat(1)); }

std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    require_same_vars(p, d);
    if (d.is_zero()) throw DivisionByZero("exact_div: zero divisor");
    if (p.is_zero()) return lp_zero(p.vars());
    if (d.terms().size() == 1) {
        // dividing by a monomial always succeeds in the Laurent ring
        const auto& m = d.terms()[0];
        return p.shifted(exp_neg(m.e)).scaled(Rat(1) / m.c);
    }

    // Shift both operands so they become genuine polynomials, then run
    // leading-term division in the lexicographic order; undo the shift at
    // the end. For an exact quotient the remainder reaches zero.
    Exp mp = p.min_exps(), md = d.min_exps();
    LaurentPoly pp = p.shifted(exp_neg(mp));
    LaurentPoly dd = d.shifted(exp_neg(md));

    const auto& dt = dd.terms().back();  // lex-leading divisor term
    LaurentPoly q(p.vars());
    LaurentPoly r = pp;
    while (!r.is_zero()) {
        const auto& rt = r.terms().back();
        Exp e = exp_sub(rt.e, dt.e);
        for (int i = 0; i < 4; ++i)
            if (e[i] < 0) return std::nullopt;  // stuck: not exactly divisible
        Rat c = rt.c / dt.c;
        q.add_term(e, c);
        r = r - dd.shifted(e).scaled(c);
    }
    return q.shifted(exp_sub(mp, md));
}

LaurentPoly qint(long n, VarSet vars, Var t) {
    long an = n < 0 ? -n : n;
    LaurentPoly r(vars);
    int idx = vars.index_of(t);
    if (idx < 0) throw VarMismatch("qint: variable not in VarSet");
    for (long j = 0; j < an; ++j) {
        Exp e = exp_zero();
        e[idx] = static_cast<int32_t>(an - 1 - 2 * j);
        r.add_term(e, Rat(n < 0 ? -1 : 1));
    }
    return r;
}

LaurentPoly qint_uv(long n, VarSet vars, Var a, Var b) {
    long an = n < 0 ? -n : n;
    LaurentPoly r(vars);
    int ia = vars.index_of(a), ib = vars.index_of(b);
    if (ia < 0 || ib < 0) throw VarMismatch("qint_uv: variables not in VarSet");
    for (long j = 0; j < an; ++j) {
        Exp e = exp_zero();
        e[ia] = e[ib] = static_cast<int32_t>(an - 1 - 2 * j);
        r.add_term(e, Rat(n < 0 ? -1 : 1));
    }
    return r;
}

} // namespace higgs
