#include "higgs/expr_parser.hpp"

#include <cctype>

namespace higgs::io {

namespace {

struct Parser {
    const std::string& s;
    const VarSet& vars;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at offset " + std::to_string(pos));
    }

    RationalFn expr() {
        RationalFn v = term();
        while (true) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    RationalFn term() {
        RationalFn v = factor();
        while (true) {
            if (eat('*'))
                v = v * factor();
            else if (eat('/'))
                v = v / factor();
            else
                return v;
        }
    }

    RationalFn factor() {
        int sign = 1;
        while (true) {
            if (eat('-'))
                sign = -sign;
            else if (!eat('+'))
                break;
        }
        RationalFn v = atom();
        if (eat('^')) v = v.pow(integer());
        return sign < 0 ? v.scaled(Rat(-1)) : v;
    }

    long integer() {
        skip();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected an integer exponent");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    RationalFn atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RationalFn v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return RationalFn(LaurentPoly::constant(vars, Rat(Int(s.substr(start, pos - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos;
            return variable(c);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    RationalFn variable(char c) {
        auto v = var_from_name(std::string(1, c));
        if (!v) fail(std::string("unknown variable '") + c + "'");
        if (vars.contains(*v)) return RationalFn(LaurentPoly::variable(vars, *v));
        if (*v == Var::u && vars.contains(Var::a))
            return RationalFn(LaurentPoly::variable(vars, Var::a)).pow(2);
        if (*v == Var::v && vars.contains(Var::b))
            return RationalFn(LaurentPoly::variable(vars, Var::b)).pow(2);
        fail(std::string("variable '") + c + "' is not in scope");
    }
};

} // namespace

RationalFn parse_expression(const std::string& text, const VarSet& vars) {
    Parser p{text, vars};
    RationalFn v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input after expression");
    return v;
}

} // namespace higgs::io
