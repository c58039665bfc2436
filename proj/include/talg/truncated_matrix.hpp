#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "talg/element.hpp"
#include "talg/report.hpp"
#include "talg/sampling.hpp"

namespace talg {

/// Dense N x N rational matrix, the truncation of an operator on
/// span{delta_0, ..., delta_{N-1}} of the shift representation.
class TruncatedMatrix {
public:
    explicit TruncatedMatrix(std::int64_t dim)
        : dim_(dim), entries_(static_cast<std::size_t>(dim * dim), Rational(0)) {
        if (dim < 1) throw std::invalid_argument("truncated matrix: dim must be >= 1");
    }

    std::int64_t dim() const { return dim_; }

    const Rational& at(std::int64_t row, std::int64_t col) const {
        return entries_[static_cast<std::size_t>(row * dim_ + col)];
    }
    Rational& at(std::int64_t row, std::int64_t col) {
        return entries_[static_cast<std::size_t>(row * dim_ + col)];
    }

    friend TruncatedMatrix operator*(const TruncatedMatrix& a, const TruncatedMatrix& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("truncated matrix: dim mismatch");
        TruncatedMatrix r(a.dim_);
        for (std::int64_t row = 0; row < a.dim_; ++row)
            for (std::int64_t k = 0; k < a.dim_; ++k) {
                const Rational& x = a.at(row, k);
                if (x == 0) continue;
                for (std::int64_t col = 0; col < a.dim_; ++col) {
                    const Rational& y = b.at(k, col);
                    if (y == 0) continue;
                    r.at(row, col) += x * y;
                }
            }
        return r;
    }

    friend bool operator==(const TruncatedMatrix&, const TruncatedMatrix&) = default;

private:
    std::int64_t dim_;
    std::vector<Rational> entries_;
};

/// Shift representation truncated to dimension n: v is the forward shift
/// delta_k -> delta_{k+1} (overflow dropped), u the backward shift with
/// u delta_0 = 0. A basis word v^i u^j sends delta_c to delta_{c-j+i} when
/// c >= j and the target stays in range.
inline TruncatedMatrix to_matrix(const ToeplitzElement& a, std::int64_t n) {
    TruncatedMatrix m(n);
    for (const auto& [mono, c] : a.terms())
        for (std::int64_t col = mono.j; col < n; ++col) {
            const std::int64_t row = col - mono.j + mono.i;
            if (row < n) m.at(row, col) += c;
        }
    return m;
}

struct OracleMismatch {
    std::int64_t row = 0;
    std::int64_t col = 0;
    Rational normal_form;  // entry of to_matrix(a*b)
    Rational matrix_product;
};

/// Result of checking normal-form multiplication against the truncated
/// shift representation.
struct OracleReport {
    bool precondition_ok = false;
    bool pass = false;
    std::int64_t dim = 0;
    std::int64_t stable_block = 0;  // compared block is stable_block x stable_block
    std::optional<OracleMismatch> mismatch;
};

/// Compares to_matrix(a*b, n) with to_matrix(a, n) * to_matrix(b, n) on the
/// leading block untouched by truncation. For columns c < n - d with
/// d = maxdeg(a) + maxdeg(b), no composition path leaves the truncation
/// window, so the leading (n-d) x (n-d) block must agree exactly. Requires
/// n > d so that the stable block is nonempty.
inline OracleReport oracle_check_mul(const ToeplitzElement& a, const ToeplitzElement& b,
                                     std::int64_t n) {
    OracleReport report;
    report.dim = n;
    const ToeplitzElement ab = a * b;
    const std::int64_t d = a.max_degree() + b.max_degree();
    if (n <= d) return report;  // precondition_ok stays false
    report.precondition_ok = true;
    report.stable_block = n - d;

    const TruncatedMatrix lhs = to_matrix(ab, n);
    const TruncatedMatrix rhs = to_matrix(a, n) * to_matrix(b, n);
    for (std::int64_t row = 0; row < report.stable_block; ++row)
        for (std::int64_t col = 0; col < report.stable_block; ++col)
            if (lhs.at(row, col) != rhs.at(row, col)) {
                report.mismatch = OracleMismatch{row, col, lhs.at(row, col), rhs.at(row, col)};
                return report;
            }
    report.pass = true;
    return report;
}

/// Batch run of the multiplication oracle on random element pairs.
inline CheckReport check_oracle_batch(std::int64_t dim, int samples, std::int64_t degree,
                                      std::uint64_t seed) {
    CheckReport r;
    r.command = "oracle";
    r.params = {{"dim", dim}, {"samples", samples}, {"degree", degree}, {"seed", seed}};
    for (int s = 0; s < samples; ++s) {
        Sampler rng = Sampler::child(seed, static_cast<std::uint64_t>(s));
        const ToeplitzElement a = random_element(rng, degree);
        const ToeplitzElement b = random_element(rng, degree);
        const OracleReport rep = oracle_check_mul(a, b, dim);
        if (!rep.precondition_ok) {
            r.verdict = Verdict::no_witness_within_bounds;
            r.counterexample = {{"sample", s}, {"reason", "dim too small for degree"},
                                {"a", a.str()}, {"b", b.str()}};
            return r;
        }
        if (!rep.pass) {
            r.verdict = Verdict::counterexample;
            r.counterexample = {{"sample", s}, {"a", a.str()}, {"b", b.str()},
                                {"row", rep.mismatch->row}, {"col", rep.mismatch->col},
                                {"normal_form", rational_str(rep.mismatch->normal_form)},
                                {"matrix_product", rational_str(rep.mismatch->matrix_product)}};
            return r;
        }
    }
    r.verdict = Verdict::verified;
    return r;
}

}  // namespace talg
