#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "talg/element.hpp"
#include "talg/extensions.hpp"
#include "talg/report.hpp"

namespace talg {

struct ParseError : std::runtime_error {
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + what),
          position(position) {}
    std::size_t position;
};

namespace detail {

/// Recursive-descent parser for the element grammar
///   expr  := ['-'] term (('+'|'-') term)*
///   term  := coeff ('*' atom)* | atom ('*' atom)*
///   atom  := 'v' ['^' nat] | 'u' ['^' nat] | 'e' | '1'
///   coeff := nat ['/' positive-nat]
/// with the sign of each coefficient carried by the +/- separators.
class ElementParser {
public:
    explicit ElementParser(std::string_view text) : text_(text) {}

    ToeplitzElement parse() {
        ToeplitzElement result;
        skip_ws();
        if (done()) throw ParseError(pos_, "empty expression");
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        result = result + term(sign);
        skip_ws();
        while (!done()) {
            const char c = peek();
            if (c != '+' && c != '-') throw ParseError(pos_, "expected '+' or '-'");
            ++pos_;
            result = result + term(c == '-' ? -1 : 1);
            skip_ws();
        }
        return result;
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::int64_t natural(const char* what) {
        skip_ws();
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(pos_, std::string("expected ") + what);
        std::int64_t value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1'000'000) throw ParseError(pos_, "number too large");
            ++pos_;
        }
        return value;
    }

    ToeplitzElement atom() {
        skip_ws();
        if (done()) throw ParseError(pos_, "expected atom");
        const char c = peek();
        if (c == 'v' || c == 'u') {
            ++pos_;
            std::int64_t exp = 1;
            skip_ws();
            if (!done() && peek() == '^') {
                ++pos_;
                skip_ws();
                if (!done() && (peek() == '-' || peek() == '+'))
                    throw ParseError(pos_, "exponent must be a nonnegative integer");
                exp = natural("exponent");
            }
            return c == 'v' ? ToeplitzElement::v(exp) : ToeplitzElement::u(exp);
        }
        if (c == 'e') {
            ++pos_;
            return ToeplitzElement::idempotent_e();
        }
        if (c == '1') {
            ++pos_;
            if (!done() && std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(pos_, "unexpected digit");
            return ToeplitzElement::one();
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    ToeplitzElement term(int sign) {
        skip_ws();
        if (done()) throw ParseError(pos_, "expected term");
        Rational coeff(sign);
        ToeplitzElement acc = ToeplitzElement::one();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::int64_t num = natural("number");
            skip_ws();
            if (!done() && peek() == '/') {
                ++pos_;
                const std::size_t den_pos = pos_;
                const std::int64_t den = natural("denominator");
                if (den == 0) throw ParseError(den_pos, "denominator must be positive");
                coeff *= Rational(num, den);
            } else {
                coeff *= num;
            }
        } else {
            acc = acc * atom();
        }
        skip_ws();
        while (!done() && peek() == '*') {
            ++pos_;
            acc = acc * atom();
            skip_ws();
        }
        return coeff * acc;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the expression grammar into a canonical element; products are
/// evaluated left to right through the algebra multiplication.
inline ToeplitzElement parse_element(std::string_view text) {
    return detail::ElementParser(text).parse();
}

inline Json cocycle_to_json(const CocycleSpec& xi) {
    Json entries = Json::array();
    for (const auto& [m, value] : xi.table())
        entries.push_back({{"monomial", Json::array({m.i, m.j})}, {"value", value.str()}});
    return {{"xi", entries}};
}

/// Reads {"xi": [{"monomial": [i, j], "value": "<element expression>"}] }.
inline CocycleSpec cocycle_from_json(const Json& j) {
    CocycleSpec xi;
    for (const auto& entry : j.at("xi")) {
        const auto& m = entry.at("monomial");
        const Monomial mono{m.at(0).get<std::int64_t>(), m.at(1).get<std::int64_t>()};
        if (mono.i < 0 || mono.j < 0)
            throw std::invalid_argument("cocycle: exponents must be nonnegative");
        xi.set(mono, parse_element(entry.at("value").get<std::string>()));
    }
    return xi;
}

}  // namespace talg
