#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "talg/monomial.hpp"
#include "talg/rational.hpp"

namespace talg {

/// Element of the algebraic Toeplitz algebra: a finite sum sum c_ij v^i u^j,
/// stored as a sparse map in canonical form (no zero coefficients, keys in
/// lexicographic (i, j) order). Immutable value semantics; all operations
/// return new elements.
class ToeplitzElement {
public:
    using Terms = std::map<Monomial, Rational>;

    ToeplitzElement() = default;

    static ToeplitzElement zero() { return {}; }
    static ToeplitzElement one() { return monomial(mono_one()); }
    static ToeplitzElement v(std::int64_t n = 1) { return monomial(mono_v(n)); }
    static ToeplitzElement u(std::int64_t n = 1) { return monomial(mono_u(n)); }

    static ToeplitzElement monomial(const Monomial& m, Rational c = Rational(1)) {
        ToeplitzElement r;
        if (c != 0) r.terms_.emplace(m, std::move(c));
        return r;
    }

    /// e = 1 - vu, the rank-one idempotent.
    static ToeplitzElement idempotent_e() {
        return one() - monomial({1, 1});
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Largest exponent appearing in the support (0 for the zero element).
    std::int64_t max_degree() const {
        std::int64_t d = 0;
        for (const auto& [m, c] : terms_)
            if (m.degree() > d) d = m.degree();
        return d;
    }

    ToeplitzElement& add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    friend ToeplitzElement operator+(const ToeplitzElement& a, const ToeplitzElement& b) {
        ToeplitzElement r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend ToeplitzElement operator-(const ToeplitzElement& a, const ToeplitzElement& b) {
        ToeplitzElement r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    ToeplitzElement operator-() const {
        ToeplitzElement r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend ToeplitzElement operator*(const Rational& c, const ToeplitzElement& a) {
        ToeplitzElement r;
        if (c == 0) return r;
        for (const auto& [m, x] : a.terms_) r.terms_.emplace(m, c * x);
        return r;
    }

    friend ToeplitzElement operator*(const ToeplitzElement& a, const Rational& c) { return c * a; }

    /// Bilinear extension of the monomial rule
    /// (v^i u^j)(v^k u^l) = v^i u^{j-k+l} (j >= k) or v^{i+k-j} u^l (j <= k).
    friend ToeplitzElement operator*(const ToeplitzElement& a, const ToeplitzElement& b) {
        ToeplitzElement r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    friend bool operator==(const ToeplitzElement&, const ToeplitzElement&) = default;

    /// Canonical printing: terms in (i, j) order, coefficients as num/den,
    /// unit coefficients and ^1 exponents omitted. Zero prints as "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const Rational a = rational_abs(c);
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (m.is_one()) {
                out += rational_str(a);
            } else if (a == 1) {
                out += mono_str(m);
            } else {
                out += rational_str(a) + "*" + mono_str(m);
            }
        }
        return out;
    }

private:
    Terms terms_;
};

/// Rational-coefficient involution: swaps v^i u^j -> v^j u^i termwise.
inline ToeplitzElement involution(const ToeplitzElement& a) {
    ToeplitzElement r;
    for (const auto& [m, c] : a.terms()) r.add_term(mono_star(m), c);
    return r;
}

inline ToeplitzElement pow(const ToeplitzElement& a, std::int64_t n) {
    ToeplitzElement r = ToeplitzElement::one();
    for (std::int64_t k = 0; k < n; ++k) r = r * a;
    return r;
}

}  // namespace talg
