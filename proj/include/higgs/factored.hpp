#pragma once

#include "higgs/ratfn.hpp"

namespace higgs {

// A product  sign * x^pre * prod_i (1 - s_i * x^{m_i})^{k_i}  kept in factored
// form. This is the natural shape of every fixed-point and asymptotic
// generating function in the engine, and it expands into power series in a
// chosen variable without any intermediate blowup.
class FactoredExpr {
public:
    struct Factor {
        int sign;  // s in (1 - s*x^m); +1 or -1
        Exp m;
        long k;    // multiplicity, nonzero
        bool operator==(const Factor&) const = default;
    };

    explicit FactoredExpr(VarSet vars) : vars_(vars), sign_(1), pre_(exp_zero()) {}

    static FactoredExpr one(VarSet vars) { return FactoredExpr(vars); }
    static FactoredExpr monomial(VarSet vars, Exp e, int sign = 1);

    const VarSet& vars() const { return vars_; }
    int sign() const { return sign_; }
    const Exp& prefactor() const { return pre_; }
    const std::vector<Factor>& factors() const { return factors_; }

    void negate() { sign_ = -sign_; }
    void mul_monomial(const Exp& e) { pre_ = exp_add(pre_, e); }
    // multiply by (1 - s*x^m)^k
    void mul_factor(int s, const Exp& m, long k);
    FactoredExpr operator*(const FactoredExpr& o) const;
    FactoredExpr reciprocal() const;
    FactoredExpr pow(long k) const;

    FactoredExpr substitute(const VarSet& target,
                            const std::function<std::optional<std::pair<int, Exp>>(Var)>& map) const;

    // canonical representative: every factor monomial is made lex-positive
    // via (1 - s x^m)^k = (-s)^k x^{km} (1 - s x^{-m})^k, factors sorted.
    // Two factored expressions built from the same atoms are equal as
    // rational functions iff their normalized fields coincide.
    FactoredExpr normalized() const;
    bool operator==(const FactoredExpr& o) const {
        return vars_ == o.vars_ && sign_ == o.sign_ && pre_ == o.pre_ && factors_ == o.factors_;
    }

    // full expansion; requires every multiplicity >= 0
    LaurentPoly expand() const;
    // numerator = factors with k>0 (times sign and prefactor), denominator =
    // factors with k<0
    RationalFn to_ratfn() const;

    std::string str() const;

private:
    VarSet vars_;
    int sign_;
    Exp pre_;
    std::vector<Factor> factors_;  // merged by (sign, m), sorted
};

} // namespace higgs
