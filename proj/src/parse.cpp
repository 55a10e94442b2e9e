#include <cctype>
#include <stdexcept>
#include <string>

#include "relnls/diffpoly.hpp"
#include "relnls/multipoly.hpp"

namespace relnls {

namespace {

// Recursive-descent evaluator for the canonical text form. Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' ['-'] INT)?
//   atom   := INT ('/' INT)? | 'i' | NAME | NAME '[' INT ']'
//           | 'Int' '(' expr ')' | '(' expr ')'
class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    DiffPoly parse() {
        DiffPoly v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

  private:
    DiffPoly expr() {
        skip_ws();
        bool neg = consume('-');
        DiffPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (consume('+')) {
                acc += term();
            } else if (consume('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    DiffPoly term() {
        DiffPoly acc = factor();
        for (;;) {
            skip_ws();
            if (!consume('*')) return acc;
            acc = acc * factor();
        }
    }

    DiffPoly factor() {
        DiffPoly base = atom();
        skip_ws();
        if (!consume('^')) return base;
        skip_ws();
        bool neg = consume('-');
        long e = integer();
        if (neg) e = -e;
        if (e >= 0) {
            DiffPoly acc(1);
            for (long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        // negative exponents only make sense for single scalar monomials
        MultiPoly mp = base.as_multipoly();
        if (mp.term_count() != 1) fail("negative power of a non-monomial");
        const auto& [mono, c] = *mp.terms().begin();
        MultiPoly out(c.pow(e));
        for (const auto& [s, ex] : mono.exps())
            out = out * MultiPoly::symbol(s, ex * static_cast<int>(e));
        return DiffPoly(out);
    }

    DiffPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            DiffPoly v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            skip_ws();
            if (consume('/')) {
                long den = integer();
                return DiffPoly(MultiPoly(GaussianRational::ratio(num, den)));
            }
            return DiffPoly(MultiPoly(GaussianRational(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = ident();
            if (name == "i") return DiffPoly(MultiPoly::i());
            if (name == "Int") {
                expect('(');
                DiffPoly g = expr();
                expect(')');
                return DiffPoly::nonlocal(g);
            }
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '[') {
                ++pos_;
                long order = integer();
                expect(']');
                int f = lookup_field(name);
                if (f < 0) f = declare_field(name);
                return DiffPoly::jet(f, static_cast<int>(order));
            }
            SymbolId s = lookup_symbol(name);
            if (s < 0) s = declare_symbol(name);
            return DiffPoly(MultiPoly::symbol(s));
        }
        fail(std::string("unexpected character '") + c + "'");
        return DiffPoly();  // unreachable
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    std::string ident() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " +
                                    why + " in \"" + s_ + "\"");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

DiffPoly DiffPoly::parse(const std::string& text) { return Parser(text).parse(); }

MultiPoly MultiPoly::parse(const std::string& text) {
    return Parser(text).parse().as_multipoly();
}

}  // namespace relnls
