#include "clifford/parser.hpp"

#include <cctype>
#include <sstream>

namespace clifford {

namespace {

std::string format_message(size_t offset, const std::string& detail,
                           const std::vector<std::string>& expected) {
    std::ostringstream os;
    os << "parse error at byte " << offset << ": " << detail;
    if (!expected.empty()) {
        os << "; expected ";
        for (size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
            os << expected[i];
        }
    }
    return os.str();
}

enum class Tok { Number, Var, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    size_t offset;
    mpz_class number;  // Tok::Number
    int var_index = 0; // Tok::Var
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const size_t at = pos_;
        if (pos_ >= s_.size()) return {Tok::End, at};
        const char c = s_[pos_];
        switch (c) {
            case '+': ++pos_; return {Tok::Plus, at};
            case '-': ++pos_; return {Tok::Minus, at};
            case '*': ++pos_; return {Tok::Star, at};
            case '^': ++pos_; return {Tok::Caret, at};
            case '/': ++pos_; return {Tok::Slash, at};
            case '(': ++pos_; return {Tok::LParen, at};
            case ')': ++pos_; return {Tok::RParen, at};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits.push_back(s_[pos_++]);
            Token t{Tok::Number, at};
            t.number = mpz_class(digits, 10);
            return t;
        }
        if (c == 'x') {
            if (pos_ + 1 < s_.size() && s_[pos_ + 1] >= '1' && s_[pos_ + 1] <= '4') {
                Token t{Tok::Var, at};
                t.var_index = s_[pos_ + 1] - '0';
                pos_ += 2;
                return t;
            }
            throw ParseError(at, "malformed variable",
                             {"'x1'", "'x2'", "'x3'", "'x4'"});
        }
        throw ParseError(at, std::string("unrecognized character '") + c + "'",
                         {"a rational literal", "a variable", "an operator", "'('", "')'"});
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { advance(); }

    MPoly parse() {
        MPoly p = expr();
        if (cur_.kind != Tok::End)
            throw ParseError(cur_.offset, "trailing input",
                             {"'+'", "'-'", "'*'", "end of input"});
        return p;
    }

private:
    void advance() { cur_ = lex_.next(); }

    MPoly expr() {
        MPoly acc = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool minus = cur_.kind == Tok::Minus;
            advance();
            const MPoly rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        while (cur_.kind == Tok::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    MPoly factor() {
        if (cur_.kind == Tok::Minus) {
            advance();
            return -factor();
        }
        return power();
    }

    MPoly power() {
        MPoly base = atom();
        if (cur_.kind == Tok::Caret) {
            advance();
            if (cur_.kind != Tok::Number)
                throw ParseError(cur_.offset, "malformed exponent",
                                 {"a non-negative integer exponent"});
            if (cur_.number > 1000)
                throw ParseError(cur_.offset, "exponent too large", {"an exponent <= 1000"});
            const unsigned e = static_cast<unsigned>(cur_.number.get_ui());
            advance();
            return base.pow(e);
        }
        return base;
    }

    MPoly atom() {
        switch (cur_.kind) {
            case Tok::Number: {
                const mpz_class num = cur_.number;
                advance();
                if (cur_.kind == Tok::Slash) {
                    advance();
                    if (cur_.kind != Tok::Number)
                        throw ParseError(cur_.offset, "malformed rational",
                                         {"a positive integer denominator"});
                    if (cur_.number == 0)
                        throw ParseError(cur_.offset, "zero denominator",
                                         {"a positive integer denominator"});
                    const mpz_class den = cur_.number;
                    advance();
                    return MPoly::constant(Rational(num, den));
                }
                return MPoly::constant(Rational(num, mpz_class(1)));
            }
            case Tok::Var: {
                const int idx = cur_.var_index;
                advance();
                return MPoly::variable(idx);
            }
            case Tok::LParen: {
                advance();
                MPoly inner = expr();
                if (cur_.kind != Tok::RParen)
                    throw ParseError(cur_.offset, "unbalanced parenthesis",
                                     {"')'", "'+'", "'-'", "'*'"});
                advance();
                return inner;
            }
            case Tok::Minus:
                // unreachable through factor(), but kept for direct calls
                advance();
                return -factor();
            default:
                throw ParseError(cur_.offset, "unexpected token",
                                 {"a rational literal", "a variable", "'('", "'-'"});
        }
    }

    Lexer lex_;
    Token cur_{Tok::End, 0};
};

}  // namespace

ParseError::ParseError(size_t offset, const std::string& detail,
                       std::vector<std::string> expected)
    : std::runtime_error(format_message(offset, detail, expected)),
      offset_(offset),
      expected_(std::move(expected)) {}

MPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace clifford
