#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "talg/element.hpp"

namespace talg {

/// The same algebra in Laurent-polynomial + finite-matrix coordinates:
/// a Laurent polynomial sum b_p z^p plus a finite matrix sum a_ij e_ij.
/// Purely a linear coordinate system; products are never formed here.
class LaurentMatrixElement {
public:
    using LaurentTerms = std::map<std::int64_t, Rational>;
    using MatrixTerms = std::map<Monomial, Rational>;  // key (i, j) is the unit e_ij

    LaurentMatrixElement() = default;

    static LaurentMatrixElement z_power(std::int64_t p, Rational c = Rational(1)) {
        LaurentMatrixElement r;
        r.add_laurent(p, c);
        return r;
    }

    static LaurentMatrixElement matrix_unit(std::int64_t i, std::int64_t j,
                                            Rational c = Rational(1)) {
        LaurentMatrixElement r;
        r.add_matrix({i, j}, c);
        return r;
    }

    const LaurentTerms& laurent() const { return laurent_; }
    const MatrixTerms& matrix() const { return matrix_; }
    bool is_zero() const { return laurent_.empty() && matrix_.empty(); }

    LaurentMatrixElement& add_laurent(std::int64_t p, const Rational& c) {
        if (c == 0) return *this;
        auto [it, inserted] = laurent_.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) laurent_.erase(it);
        }
        return *this;
    }

    LaurentMatrixElement& add_matrix(const Monomial& ij, const Rational& c) {
        if (c == 0) return *this;
        auto [it, inserted] = matrix_.emplace(ij, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) matrix_.erase(it);
        }
        return *this;
    }

    friend LaurentMatrixElement operator+(const LaurentMatrixElement& a,
                                          const LaurentMatrixElement& b) {
        LaurentMatrixElement r = a;
        for (const auto& [p, c] : b.laurent_) r.add_laurent(p, c);
        for (const auto& [ij, c] : b.matrix_) r.add_matrix(ij, c);
        return r;
    }

    friend bool operator==(const LaurentMatrixElement&, const LaurentMatrixElement&) = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        auto emit = [&](const Rational& c, const std::string& sym) {
            const Rational a = rational_abs(c);
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (a == 1 && !sym.empty())
                out += sym;
            else if (sym.empty())
                out += rational_str(a);
            else
                out += rational_str(a) + "*" + sym;
        };
        for (const auto& [p, c] : laurent_)
            emit(c, p == 0 ? std::string() : "z^" + std::to_string(p));
        for (const auto& [ij, c] : matrix_)
            emit(c, "e_{" + std::to_string(ij.i) + "," + std::to_string(ij.j) + "}");
        return out;
    }

private:
    LaurentTerms laurent_;
    MatrixTerms matrix_;
};

/// Linear extension of z^k -> v^k, z^{-k} -> u^k, e_ij -> v^i u^j - v^{i+1} u^{j+1}.
inline ToeplitzElement from_laurent_matrix(const LaurentMatrixElement& x) {
    ToeplitzElement r;
    for (const auto& [p, c] : x.laurent()) {
        if (p >= 0)
            r.add_term({p, 0}, c);
        else
            r.add_term({0, -p}, c);
    }
    for (const auto& [ij, c] : x.matrix()) {
        r.add_term({ij.i, ij.j}, c);
        r.add_term({ij.i + 1, ij.j + 1}, -c);
    }
    return r;
}

/// Linear extension of
///   v^i u^j = z^{i-j} - (e_{i-j,0} + e_{i-j+1,1} + ... + e_{i-1,j-1})   (i >= j)
///   v^i u^j = z^{i-j} - (e_{0,j-i} + e_{1,j-i+1} + ... + e_{i-1,j-1})   (i <  j)
/// Inverse of from_laurent_matrix.
inline LaurentMatrixElement to_laurent_matrix(const ToeplitzElement& a) {
    LaurentMatrixElement r;
    for (const auto& [m, c] : a.terms()) {
        r.add_laurent(m.i - m.j, c);
        const std::int64_t count = m.i >= m.j ? m.j : m.i;
        for (std::int64_t t = 0; t < count; ++t)
            r.add_matrix({m.i - count + t, m.j - count + t}, -c);
    }
    return r;
}

}  // namespace talg
