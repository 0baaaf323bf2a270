#include "alexdef/poly_expr.hpp"

#include "alexdef/errors.hpp"

#include <cctype>

namespace alexdef {

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;
    FieldTower::Ptr tower;

    [[noreturn]] void fail(const std::string& msg) const {
        throw precondition_error("polynomial expression error at position " +
                                 std::to_string(i + 1) + ": " + msg + " in '" + s + "'");
    }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    Int integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) fail("expected an integer");
        return Int(s.substr(start, i - start));
    }

    long small_integer() {
        Int v = integer();
        if (!v.fits_slong_p()) fail("exponent out of range");
        return v.get_si();
    }

    LaurentPoly expr() {
        LaurentPoly acc = peek() == '-' ? LaurentPoly::zero(tower) : term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    LaurentPoly term() {
        LaurentPoly acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    LaurentPoly factor() {
        bool neg = false;
        while (true) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        LaurentPoly a = atom();
        if (eat('^')) a = a.pow(small_integer());
        return neg ? -a : a;
    }

    LaurentPoly atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            LaurentPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 't') {
            ++i;
            return LaurentPoly::variable(tower);
        }
        if (c == 'z') {
            ++i;
            return LaurentPoly::monomial(tower, FieldElem::zeta(tower, 1L), 0);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            if (eat('/')) {
                Int den = integer();
                if (sgn(den) == 0) fail("zero denominator");
                return LaurentPoly::from_rat(tower, make_rat(num, den));
            }
            return LaurentPoly::from_rat(tower, Rat(num));
        }
        fail("unexpected character");
    }

    LaurentPoly parse() {
        LaurentPoly e = expr();
        skip_ws();
        if (i != s.size()) fail("trailing input");
        return e;
    }
};

} // namespace

LaurentPoly parse_poly_expr(const std::string& text, const FieldTower::Ptr& tower) {
    PolyParser p{text, 0, tower};
    return p.parse();
}

} // namespace alexdef
