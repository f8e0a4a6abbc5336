#pragma once

#include "higgs/factored.hpp"

#include <limits>

namespace higgs {

// Order sentinel for series that are exactly zero (known to every order).
constexpr int kOrderInf = std::numeric_limits<int>::max() / 4;

// Truncated Laurent series in one distinguished variable. Coefficients are
// exact objects (LaurentPoly or RationalFn) in the remaining variables.
// Coefficients are known exactly on [lo, hi]; below lo the series vanishes;
// above hi nothing is claimed.
template <class C>
class Series {
public:
    Series(Var var, int lo, int hi, C zero)
        : var_(var), lo_(lo), hi_(hi), zero_(std::move(zero)) {
        if (hi_ >= lo_ && hi_ != kOrderInf) cs_.resize(hi_ - lo_ + 1, zero_);
    }

    static Series zero_series(Var var, C zero) {
        return Series(var, 0, kOrderInf, std::move(zero));
    }

    Var var() const { return var_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const C& zero() const { return zero_; }

    const C& at(int n) const {
        if (n < lo_ || hi_ == kOrderInf) return zero_;
        if (n > hi_) throw InsufficientOrder("series coefficient beyond known order");
        return cs_[n - lo_];
    }

    void set(int n, C c) {
        if (hi_ == kOrderInf) throw AlgebraError("cannot set coefficient of exact-zero series");
        if (n < lo_ || n > hi_) throw AlgebraError("series coefficient out of range");
        cs_[n - lo_] = std::move(c);
    }

    bool is_zero() const {
        if (hi_ == kOrderInf) return true;
        for (const C& c : cs_)
            if (!c.is_zero()) return false;
        return true;
    }

    // least n with nonzero coefficient, if any in the known range
    std::optional<int> valuation() const {
        if (hi_ == kOrderInf) return std::nullopt;
        for (int n = lo_; n <= hi_; ++n)
            if (!at(n).is_zero()) return n;
        return std::nullopt;
    }

    Series truncated(int new_hi) const {
        if (hi_ == kOrderInf) {
            Series r(var_, 0, new_hi, zero_);
            return r;
        }
        Series r(var_, lo_, std::min(hi_, new_hi), zero_);
        for (int n = r.lo_; n <= r.hi_; ++n) r.set(n, at(n));
        return r;
    }

    Series shifted(int k) const {
        Series r = *this;
        if (r.hi_ != kOrderInf) {
            r.lo_ += k;
            r.hi_ += k;
        }
        return r;
    }

    Series operator-() const {
        Series r = *this;
        for (C& c : r.cs_) c = -c;
        return r;
    }

    Series operator+(const Series& o) const {
        if (hi_ == kOrderInf) return o;
        if (o.hi_ == kOrderInf) return *this;
        int lo = std::min(lo_, o.lo_);
        int hi = std::min(hi_, o.hi_);
        Series r(var_, lo, hi, zero_);
        for (int n = lo; n <= hi; ++n) r.set(n, at(n) + o.at(n));
        return r;
    }

    Series operator-(const Series& o) const { return *this + (-o); }

    Series operator*(const Series& o) const {
        if (hi_ == kOrderInf || o.hi_ == kOrderInf) return zero_series(var_, zero_);
        int lo = lo_ + o.lo_;
        long hi_l = std::min(static_cast<long>(hi_) + o.lo_, static_cast<long>(o.hi_) + lo_);
        int hi = static_cast<int>(hi_l);
        Series r(var_, lo, hi, zero_);
        for (int i = lo_; i <= hi_; ++i) {
            if (at(i).is_zero()) continue;
            for (int j = o.lo_; j <= o.hi_; ++j) {
                int n = i + j;
                if (n > hi) break;
                if (o.at(j).is_zero()) continue;
                r.set(n, r.at(n) + at(i) * o.at(j));
            }
        }
        return r;
    }

    Series scaled(const Rat& c) const {
        Series r = *this;
        for (C& x : r.cs_) x = x.scaled(c);
        return r;
    }

    Series scaled_coeff(const C& c) const {
        Series r = *this;
        for (C& x : r.cs_) x = x * c;
        return r;
    }

private:
    Var var_;
    int lo_, hi_;
    C zero_;
    std::vector<C> cs_;
};

using PolySeries = Series<LaurentPoly>;
using RatSeries = Series<RationalFn>;

// multiplicative identity known on [0, hi]
template <class C>
Series<C> series_one(Var var, int hi, const C& zero, const C& one) {
    Series<C> s(var, 0, hi, zero);
    s.set(0, one);
    return s;
}

// base^k by repeated multiplication; exponents here are small (<= ~2g).
template <class C>
Series<C> series_pow(const Series<C>& base, long k, const C& one) {
    if (k < 0) throw AlgebraError("series_pow: negative exponent");
    if (k == 0) {
        if (base.hi() == kOrderInf)
            throw AlgebraError("series_pow: 0^0 with unlimited horizon");
        return series_one(base.var(), base.hi() - base.lo(), base.zero(), one);
    }
    Series<C> acc = base;
    for (long i = 1; i < k; ++i) acc = acc * base;
    return acc;
}

// Multiplicative inverse of a series over RationalFn coefficients. The
// result is exact on [-v, s.hi - 2v] where v is the valuation of s.
RatSeries series_inverse(const RatSeries& s);

inline RatSeries series_div(const RatSeries& num, const RatSeries& den) {
    return num * series_inverse(den);
}

// Expansion of a factored expression as a power series in `var`: exact
// coefficients for all exponents <= order. Inverted factors must carry a
// strictly positive power of var.
PolySeries series_expand(const FactoredExpr& f, Var var, int order);

// Expansion of a factored expression in eps after the substitution
// q -> 1 + eps. Coefficients are rational functions in the remaining
// variables, and poles at q = 1 appear as negative eps powers.
RatSeries expand_at_one(const FactoredExpr& f, Var qvar, int order);

// eps-expansion of f (a rational function involving qvar) at q = 1 + eps,
// reported on [-P, N]. P is the caller's known pole bound.
RatSeries taylor_at_one(const RationalFn& f, Var qvar, int P, int N);

} // namespace higgs
