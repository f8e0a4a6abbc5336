#pragma once

#include "higgs/poly.hpp"

namespace higgs {

// Polynomial gcd of the "polynomial parts" of p and q (minimal exponents
// shifted to zero). Exact for constants, univariate, and bivariate input;
// with three or more active variables no reduction is attempted and 1 is
// returned. The result always divides both arguments in the Laurent ring.
LaurentPoly lp_gcd(const LaurentPoly& p, const LaurentPoly& q);

// A quotient of Laurent polynomials in canonical form:
//   - num == 0 is stored as 0/1;
//   - num and den share no non-unit polynomial divisor (up to the gcd
//     capabilities above);
//   - den has all minimal exponents zero (monomial content moved into num);
//   - den's lexicographically least term has coefficient +1.
// With at most two active variables the canonical form is unique, so
// operator== is structural equality. same() compares by cross-multiplication
// and works regardless of variable count.
class RationalFn {
public:
    RationalFn() = default;
    explicit RationalFn(LaurentPoly p) : num_(std::move(p)), den_(lp_one(num_.vars())) {}
    static RationalFn reduced(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const VarSet& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    // the Laurent polynomial value; throws Inexact when den is not a unit
    LaurentPoly as_poly() const;

    RationalFn operator-() const;
    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    bool operator==(const RationalFn& o) const;

    RationalFn scaled(const Rat& c) const;
    RationalFn pow(long k) const;  // any integer k
    RationalFn substitute(const VarSet& target,
                          const std::function<std::optional<std::pair<int, Exp>>(Var)>& map) const;

    std::string str() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

RationalFn ratfn_reduce(const LaurentPoly& num, const LaurentPoly& den);
RationalFn rf_zero(VarSet vars);
RationalFn rf_one(VarSet vars);

// equality as rational functions (cross multiplication), independent of
// canonicalization power
bool same(const RationalFn& f, const RationalFn& g);

} // namespace higgs
