#pragma once

#include "higgs/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace higgs {

// Formal variables used anywhere in the engine. Half powers of u and v are
// handled by computing in a = u^{1/2}, b = v^{1/2}, so exponents stay integral.
enum class Var : uint8_t {
    lambda, y, a, b, q1, q2, qf, q, x, u, v, T, eps
};

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

// An ordered set of at most four variables. Every expression carries its
// VarSet and all exponent vectors are interpreted against it.
struct VarSet {
    std::array<Var, 4> vs{};
    uint8_t n = 0;

    VarSet() = default;
    VarSet(std::initializer_list<Var> list);

    bool operator==(const VarSet&) const = default;
    int index_of(Var v) const;
    bool contains(Var v) const { return index_of(v) >= 0; }
    size_t size() const { return n; }
    Var operator[](size_t i) const { return vs[i]; }
};

// Exponent vector; slots at index >= vars.n are always zero, so lexicographic
// comparison of the full array equals lexicographic comparison on the VarSet.
using Exp = std::array<int32_t, 4>;

inline Exp exp_zero() { return Exp{0, 0, 0, 0}; }

inline Exp exp_add(const Exp& a, const Exp& b) {
    return Exp{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

inline Exp exp_sub(const Exp& a, const Exp& b) {
    return Exp{a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline Exp exp_neg(const Exp& a) { return Exp{-a[0], -a[1], -a[2], -a[3]}; }

inline Exp exp_scale(const Exp& a, int32_t s) {
    return Exp{a[0] * s, a[1] * s, a[2] * s, a[3] * s};
}

inline bool exp_is_zero(const Exp& a) {
    return a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0;
}

struct ExpHash {
    size_t operator()(const Exp& e) const {
        uint64_t h = 1469598103934665603ull;
        for (int32_t x : e) {
            h ^= static_cast<uint32_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

// Errors thrown by the algebra kernel, named after what went wrong.
struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VarMismatch : AlgebraError { using AlgebraError::AlgebraError; };
struct DivisionByZero : AlgebraError { using AlgebraError::AlgebraError; };
struct Inexact : AlgebraError { using AlgebraError::AlgebraError; };
struct NonExpandable : AlgebraError { using AlgebraError::AlgebraError; };
struct InsufficientOrder : AlgebraError { using AlgebraError::AlgebraError; };

// Exact multivariate Laurent polynomial: sorted term list, no zero
// coefficients, exponents may be negative.
class LaurentPoly {
public:
    struct Term {
        Exp e;
        Rat c;
    };

    LaurentPoly() = default;
    explicit LaurentPoly(VarSet vars) : vars_(vars) {}

    static LaurentPoly constant(VarSet vars, Rat c);
    static LaurentPoly monomial(VarSet vars, Exp e, Rat c = Rat(1));
    static LaurentPoly variable(VarSet vars, Var v, int32_t power = 1);

    const VarSet& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && exp_is_zero(terms_[0].e));
    }
    Rat constant_value() const;

    // true when the only variable with a nonzero exponent anywhere is v (or
    // the polynomial is constant)
    bool is_univariate_in(Var v) const;
    std::vector<Var> active_vars() const;

    Rat coeff(const Exp& e) const;
    void add_term(const Exp& e, const Rat& c);  // accumulates, drops zeros

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const;

    LaurentPoly scaled(const Rat& c) const;
    LaurentPoly shifted(const Exp& e) const;  // multiply by a monomial
    LaurentPoly pow(long k) const;            // k >= 0

    // per-variable minimal/maximal exponents over all terms (0 for no terms)
    Exp min_exps() const;
    Exp max_exps() const;

    // substitute each variable by sign * monomial over a target VarSet;
    // variables missing from the map must carry zero exponent everywhere
    LaurentPoly substitute(const VarSet& target,
                           const std::function<std::optional<std::pair<int, Exp>>(Var)>& map) const;

    // reinterpret over a superset VarSet (exponents permuted accordingly)
    LaurentPoly with_vars(const VarSet& target) const;

    std::string str() const;

    // internal: terms must be sorted, unique, nonzero
    static LaurentPoly from_sorted_terms(VarSet vars, std::vector<Term> terms);

private:
    VarSet vars_;
    std::vector<Term> terms_;  // sorted by exponent vector, lexicographically ascending
};

LaurentPoly lp_zero(VarSet vars);
LaurentPoly lp_one(VarSet vars);

// Exact division: returns q with q*d == p, or nullopt when the quotient is
// not a Laurent polynomial.
std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& d);

// Quantum integer [n] = (t^n - t^{-n})/(t - t^{-1}) expanded in the monomial
// t (y in the singly refined theory, ab in the doubly refined one).
LaurentPoly qint(long n, VarSet vars, Var t);
LaurentPoly qint_uv(long n, VarSet vars, Var a, Var b);

} // namespace higgs
