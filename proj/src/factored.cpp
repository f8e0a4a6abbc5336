#include "higgs/factored.hpp"

#include <algorithm>
#include <sstream>

namespace higgs {

FactoredExpr FactoredExpr::monomial(VarSet vars, Exp e, int sign) {
    FactoredExpr f(vars);
    f.pre_ = e;
    f.sign_ = sign >= 0 ? 1 : -1;
    return f;
}

void FactoredExpr::mul_factor(int s, const Exp& m, long k) {
    if (k == 0) return;
    s = s >= 0 ? 1 : -1;
    if (s == 1 && exp_is_zero(m))
        throw AlgebraError("FactoredExpr: factor (1 - 1) would be zero");
    auto it = std::find_if(factors_.begin(), factors_.end(),
                           [&](const Factor& f) { return f.sign == s && f.m == m; });
    if (it != factors_.end()) {
        it->k += k;
        if (it->k == 0) factors_.erase(it);
    } else {
        factors_.push_back({s, m, k});
    }
}

FactoredExpr FactoredExpr::operator*(const FactoredExpr& o) const {
    if (!(vars_ == o.vars_)) throw VarMismatch("FactoredExpr product: VarSet mismatch");
    FactoredExpr r = *this;
    r.sign_ *= o.sign_;
    r.pre_ = exp_add(r.pre_, o.pre_);
    for (const Factor& f : o.factors_) r.mul_factor(f.sign, f.m, f.k);
    return r;
}

FactoredExpr FactoredExpr::reciprocal() const {
    FactoredExpr r(vars_);
    r.sign_ = sign_;
    r.pre_ = exp_neg(pre_);
    r.factors_ = factors_;
    for (Factor& f : r.factors_) f.k = -f.k;
    return r;
}

FactoredExpr FactoredExpr::pow(long k) const {
    FactoredExpr r(vars_);
    r.sign_ = (k % 2 == 0) ? 1 : sign_;
    r.pre_ = exp_scale(pre_, static_cast<int32_t>(k));
    r.factors_ = factors_;
    for (Factor& f : r.factors_) f.k *= k;
    if (k == 0) r.factors_.clear();
    return r;
}

FactoredExpr FactoredExpr::substitute(
    const VarSet& target,
    const std::function<std::optional<std::pair<int, Exp>>(Var)>& map) const {
    FactoredExpr r(target);
    r.sign_ = sign_;

    auto apply = [&](const Exp& e, int base_sign) -> std::pair<int, Exp> {
        Exp out = exp_zero();
        int sign = base_sign;
        for (uint8_t i = 0; i < vars_.n; ++i) {
            int32_t k = e[i];
            if (k == 0) continue;
            auto img = map(vars_[i]);
            if (!img) throw VarMismatch("FactoredExpr::substitute: missing image");
            out = exp_add(out, exp_scale(img->second, k));
            if (img->first < 0 && (k & 1)) sign = -sign;
        }
        return {sign, out};
    };

    auto [psign, pexp] = apply(pre_, 1);
    if (psign < 0) r.sign_ = -r.sign_;
    r.pre_ = pexp;
    for (const Factor& f : factors_) {
        auto [msign, mexp] = apply(f.m, f.sign);
        r.mul_factor(msign, mexp, f.k);
    }
    return r;
}

FactoredExpr FactoredExpr::normalized() const {
    FactoredExpr r(vars_);
    r.sign_ = sign_;
    r.pre_ = pre_;
    for (const Factor& f : factors_) {
        bool neg = false;
        for (uint8_t i = 0; i < vars_.n; ++i) {
            if (f.m[i] == 0) continue;
            neg = f.m[i] < 0;
            break;
        }
        if (!neg) {
            r.mul_factor(f.sign, f.m, f.k);
        } else {
            r.pre_ = exp_add(r.pre_, exp_scale(f.m, static_cast<int32_t>(f.k)));
            if (f.sign > 0 && (f.k & 1)) r.sign_ = -r.sign_;
            r.mul_factor(f.sign, exp_neg(f.m), f.k);
        }
    }
    std::sort(r.factors_.begin(), r.factors_.end(), [](const Factor& x, const Factor& y) {
        if (!(x.m == y.m)) return x.m < y.m;
        if (x.sign != y.sign) return x.sign < y.sign;
        return x.k < y.k;
    });
    return r;
}

LaurentPoly FactoredExpr::expand() const {
    LaurentPoly r = LaurentPoly::monomial(vars_, pre_, Rat(sign_));
    for (const Factor& f : factors_) {
        if (f.k < 0) throw NonExpandable("FactoredExpr::expand: negative multiplicity");
        LaurentPoly base = lp_one(vars_) - LaurentPoly::monomial(vars_, f.m, Rat(f.sign));
        r = r * base.pow(f.k);
    }
    return r;
}

RationalFn FactoredExpr::to_ratfn() const {
    LaurentPoly num = LaurentPoly::monomial(vars_, pre_, Rat(sign_));
    LaurentPoly den = lp_one(vars_);
    for (const Factor& f : factors_) {
        LaurentPoly base = lp_one(vars_) - LaurentPoly::monomial(vars_, f.m, Rat(f.sign));
        if (f.k > 0)
            num = num * base.pow(f.k);
        else
            den = den * base.pow(-f.k);
    }
    return RationalFn::reduced(num, den);
}

std::string FactoredExpr::str() const {
    std::ostringstream os;
    os << (sign_ < 0 ? "-" : "");
    os << LaurentPoly::monomial(vars_, pre_).str();
    for (const Factor& f : factors_) {
        os << " * (1 " << (f.sign < 0 ? "+ " : "- ")
           << LaurentPoly::monomial(vars_, f.m).str() << ")";
        if (f.k != 1) os << "^" << f.k;
    }
    return os.str();
}

} // namespace higgs
