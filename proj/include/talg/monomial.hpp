#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace talg {

/// Basis word v^i u^j of the algebraic Toeplitz algebra. (0,0) is the identity.
struct Monomial {
    std::int64_t i = 0;  // power of v
    std::int64_t j = 0;  // power of u

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    bool is_one() const { return i == 0 && j == 0; }
    std::int64_t degree() const { return i > j ? i : j; }
};

inline Monomial mono_one() { return {0, 0}; }
inline Monomial mono_v(std::int64_t n = 1) { return {n, 0}; }
inline Monomial mono_u(std::int64_t n = 1) { return {0, n}; }

/// (v^i u^j)(v^k u^l) = v^i u^{j-k+l} if j >= k, else v^{i+k-j} u^l.
inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    if (a.j >= b.i) return {a.i, a.j - b.i + b.j};
    return {a.i + b.i - a.j, b.j};
}

/// v^i u^j <-> v^j u^i (the involution on basis words).
inline Monomial mono_star(const Monomial& m) { return {m.j, m.i}; }

inline std::string mono_str(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    if (m.i > 0) {
        s += "v";
        if (m.i > 1) s += "^" + std::to_string(m.i);
    }
    if (m.j > 0) {
        if (!s.empty()) s += "*";
        s += "u";
        if (m.j > 1) s += "^" + std::to_string(m.j);
    }
    return s;
}

}  // namespace talg
