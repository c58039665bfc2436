#pragma once

#include <cstdint>

#include "talg/element.hpp"
#include "talg/laurent_matrix.hpp"

namespace talg {

/// Deterministic RNG for sampled checks. splitmix64 is used directly rather
/// than <random> distributions so that identical seeds give identical
/// streams on every platform and standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed) {}

    /// Stream for the idx-th sample of a batch with root seed `root`.
    /// Fixed scheme: child state = splitmix64 output of root + (idx+1)*golden.
    static Sampler child(std::uint64_t root, std::uint64_t idx) {
        std::uint64_t s = root + (idx + 1) * 0x9e3779b97f4a7c15ULL;
        Sampler tmp(s);
        return Sampler(tmp.next());
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [lo, hi] via modulo; bias is irrelevant at these range sizes.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(next() % span);
    }

    /// Nonzero integer coefficient in [-bound, bound].
    Rational coefficient(std::int64_t bound = 9) {
        std::int64_t c = uniform(-bound, bound);
        if (c == 0) c = 1;
        return Rational(c);
    }

private:
    std::uint64_t state_;
};

/// Sparse random element: `terms` draws of (i, j) uniform on [0, degree]^2
/// with integer coefficients in [-9, 9].
inline ToeplitzElement random_element(Sampler& s, std::int64_t degree, int terms = 4) {
    ToeplitzElement r;
    const int t = static_cast<int>(s.uniform(1, terms));
    for (int n = 0; n < t; ++n)
        r.add_term({s.uniform(0, degree), s.uniform(0, degree)}, s.coefficient());
    return r;
}

inline LaurentMatrixElement random_laurent_matrix(Sampler& s, std::int64_t degree) {
    LaurentMatrixElement r;
    const int nl = static_cast<int>(s.uniform(1, 3));
    for (int n = 0; n < nl; ++n) r.add_laurent(s.uniform(-degree, degree), s.coefficient());
    const int nm = static_cast<int>(s.uniform(1, 3));
    for (int n = 0; n < nm; ++n)
        r.add_matrix({s.uniform(0, degree), s.uniform(0, degree)}, s.coefficient());
    return r;
}

}  // namespace talg
