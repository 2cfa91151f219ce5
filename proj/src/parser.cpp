#include "cubinv/parser.hpp"

#include <cctype>
#include <limits>

namespace cubinv {

namespace {

class Parser {
public:
    Parser(std::string_view text, const VarTablePtr& table) : text_(text), table_(table) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::string integer_literal() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            const std::size_t at = pos_;
            if (!peek_digit()) throw ParseError("exponent must be a non-negative integer", pos_);
            const std::string digits = integer_literal();
            if (digits.size() > 4) throw ParseError("exponent too large", at);
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                throw ParseError("chained exponent needs parentheses", pos_);
            }
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string num = integer_literal();
            if (accept('/')) {
                const std::size_t at = pos_;
                if (!peek_digit()) throw ParseError("'/' must be followed by an integer literal", pos_);
                const std::string den = integer_literal();
                if (Integer(den) == 0) throw ParseError("zero denominator", at);
                return Polynomial::constant(table_, Rational(Integer(num), Integer(den)));
            }
            return Polynomial::constant(table_, Rational(Integer(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            const auto idx = table_->index_of(name);
            if (!idx) throw UnknownVariable(name, start);
            return Polynomial::variable(table_, *idx);
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    const VarTablePtr& table_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, const VarTablePtr& table) {
    return Parser(text, table).run();
}

}  // namespace cubinv
