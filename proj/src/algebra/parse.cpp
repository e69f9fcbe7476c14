#include <cctype>

#include "horadam/algebra/scalar.hpp"

namespace horadam {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Scalar parse() {
        skip_space();
        if (at_end()) throw ParseError("empty expression", pos_);
        Scalar value = expression();
        skip_space();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return value;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expression() {
        Scalar value = product();
        while (true) {
            if (accept('+')) {
                value += product();
            } else if (accept('-')) {
                value -= product();
            } else {
                return value;
            }
        }
    }

    Scalar product() {
        Scalar value = unary();
        while (true) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Scalar divisor = unary();
                if (divisor.is_zero()) throw ParseError("division by zero", at);
                value /= divisor;
            } else {
                return value;
            }
        }
    }

    Scalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (!accept('^')) return base;
        skip_space();
        bool negative = false;
        if (accept('-')) negative = true;
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent", start);
        if (pos_ - start > 5) throw ParseError("exponent too large", start);
        long e = std::stol(std::string(text_.substr(start, pos_ - start)));
        if (negative) {
            if (base.is_zero()) throw ParseError("zero to a negative power", start);
            e = -e;
        }
        return base.pow(e);
    }

    Scalar atom() {
        skip_space();
        if (at_end()) throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar inner = expression();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Scalar(Integer(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
            try {
                return Scalar::variable(text_.substr(start, pos_ - start));
            } catch (const InvalidArgument& e) {
                throw ParseError(e.what(), start);
            }
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace horadam
