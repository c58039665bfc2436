#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "talg/element.hpp"
#include "talg/report.hpp"
#include "talg/sampling.hpp"
#include "talg/seminorms.hpp"
#include "talg/weights.hpp"

namespace talg {

/// Element of A (x) A: sparse sum of elementary tensors v^i u^j (x) v^k u^l.
class TensorElement {
public:
    using Key = std::pair<Monomial, Monomial>;
    using Terms = std::map<Key, Rational>;

    TensorElement() = default;

    /// x (x) y for algebra elements x, y (bilinear).
    static TensorElement simple(const ToeplitzElement& x, const ToeplitzElement& y) {
        TensorElement r;
        for (const auto& [mx, cx] : x.terms())
            for (const auto& [my, cy] : y.terms()) r.add_term(mx, my, cx * cy);
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TensorElement& add_term(const Monomial& left, const Monomial& right, const Rational& c) {
        if (c == 0) return *this;
        const Key key{left, right};
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
        TensorElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }

    friend TensorElement operator-(const TensorElement& a, const TensorElement& b) {
        TensorElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }

    TensorElement operator-() const {
        TensorElement r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend TensorElement operator*(const Rational& c, const TensorElement& a) {
        TensorElement r;
        if (c == 0) return r;
        for (const auto& [k, x] : a.terms_) r.terms_.emplace(k, c * x);
        return r;
    }

    friend bool operator==(const TensorElement&, const TensorElement&) = default;

    /// a . (x (x) y) = (a x) (x) y
    TensorElement left_mul(const ToeplitzElement& a) const {
        TensorElement r;
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [k, c] : terms_) r.add_term(mono_mul(ma, k.first), k.second, ca * c);
        return r;
    }

    /// (x (x) y) . a = x (x) (y a)
    TensorElement right_mul(const ToeplitzElement& a) const {
        TensorElement r;
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [k, c] : terms_) r.add_term(k.first, mono_mul(k.second, ma), ca * c);
        return r;
    }

    /// Multiplication map mu(x (x) y) = xy.
    ToeplitzElement mu() const {
        ToeplitzElement r;
        for (const auto& [k, c] : terms_) r.add_term(mono_mul(k.first, k.second), c);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += rational_str(c) + " * " + mono_str(k.first) + " (x) " + mono_str(k.second);
        }
        return out;
    }

private:
    Terms terms_;
};

/// Element of Ae (x) A in the basis v^i e (x) v^k u^l (valid since u e = 0
/// collapses Ae onto span{v^i e}).
class LeftIdealTensorElement {
public:
    using Key = std::pair<std::int64_t, Monomial>;
    using Terms = std::map<Key, Rational>;

    LeftIdealTensorElement() = default;

    static LeftIdealTensorElement basis(std::int64_t i, const Monomial& right,
                                        Rational c = Rational(1)) {
        LeftIdealTensorElement r;
        r.add_term(i, right, c);
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LeftIdealTensorElement& add_term(std::int64_t i, const Monomial& right, const Rational& c) {
        if (c == 0) return *this;
        const Key key{i, right};
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    friend LeftIdealTensorElement operator+(const LeftIdealTensorElement& a,
                                            const LeftIdealTensorElement& b) {
        LeftIdealTensorElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }

    friend LeftIdealTensorElement operator-(const LeftIdealTensorElement& a,
                                            const LeftIdealTensorElement& b) {
        LeftIdealTensorElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }

    LeftIdealTensorElement operator-() const {
        LeftIdealTensorElement r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend LeftIdealTensorElement operator*(const Rational& c, const LeftIdealTensorElement& a) {
        LeftIdealTensorElement r;
        if (c == 0) return r;
        for (const auto& [k, x] : a.terms_) r.terms_.emplace(k, c * x);
        return r;
    }

    friend bool operator==(const LeftIdealTensorElement&, const LeftIdealTensorElement&) = default;

    /// (v^p u^q) . v^i e = v^{p+i-q} e if q <= i, else 0 (from u e = 0).
    LeftIdealTensorElement left_mul(const ToeplitzElement& a) const {
        LeftIdealTensorElement r;
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [k, c] : terms_)
                if (ma.j <= k.first) r.add_term(ma.i + k.first - ma.j, k.second, ca * c);
        return r;
    }

    LeftIdealTensorElement right_mul(const ToeplitzElement& a) const {
        LeftIdealTensorElement r;
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [k, c] : terms_) r.add_term(k.first, mono_mul(k.second, ma), ca * c);
        return r;
    }

    /// Interprets Ae (x) A inside A (x) A via v^i e = v^i - v^{i+1} u.
    TensorElement rewrite_to_tensor() const {
        TensorElement r;
        for (const auto& [k, c] : terms_) {
            r.add_term({k.first, 0}, k.second, c);
            r.add_term({k.first + 1, 1}, k.second, -c);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string left = "e";
            if (k.first == 1)
                left = "v*e";
            else if (k.first > 1)
                left = "v^" + std::to_string(k.first) + "*e";
            out += rational_str(c) + " * " + left + " (x) " + mono_str(k.second);
        }
        return out;
    }

private:
    Terms terms_;
};

/// Noncommutative 1-form over the Toeplitz algebra, in the coordinates
/// Omega^1 = (A (x) A) + (Ae (x) A).
struct Omega1Element {
    TensorElement tensor;
    LeftIdealTensorElement ideal;

    bool is_zero() const { return tensor.is_zero() && ideal.is_zero(); }

    friend Omega1Element operator+(const Omega1Element& a, const Omega1Element& b) {
        return {a.tensor + b.tensor, a.ideal + b.ideal};
    }
    friend Omega1Element operator-(const Omega1Element& a, const Omega1Element& b) {
        return {a.tensor - b.tensor, a.ideal - b.ideal};
    }
    Omega1Element operator-() const { return {-tensor, -ideal}; }
    friend Omega1Element operator*(const Rational& c, const Omega1Element& a) {
        return {c * a.tensor, c * a.ideal};
    }
    friend bool operator==(const Omega1Element&, const Omega1Element&) = default;

    std::string str() const { return "(" + tensor.str() + " ; " + ideal.str() + ")"; }

    Json to_json() const {
        Json jt = Json::array();
        for (const auto& [k, c] : tensor.terms())
            jt.push_back({{"left", Json::array({k.first.i, k.first.j})},
                          {"right", Json::array({k.second.i, k.second.j})},
                          {"coeff", rational_str(c)}});
        Json ji = Json::array();
        for (const auto& [k, c] : ideal.terms())
            ji.push_back({{"i", k.first},
                          {"right", Json::array({k.second.i, k.second.j})},
                          {"coeff", rational_str(c)}});
        return {{"tensor", jt}, {"ideal", ji}};
    }
};

inline Omega1Element left_act(const ToeplitzElement& a, const Omega1Element& w) {
    return {w.tensor.left_mul(a), w.ideal.left_mul(a)};
}

inline Omega1Element right_act(const Omega1Element& w, const ToeplitzElement& a) {
    return {w.tensor.right_mul(a), w.ideal.right_mul(a)};
}

/// The universal derivation in explicit form:
///   d(v^i) u^j = sum_{k<i} ( -v^{k+1} (x) v^{i-k} u^j , v^k e (x) v^{i-k-1} u^j )
///   v^i d(u^j) = sum_{l<j} ( v^i u^l (x) u^{j-l-1} , 0 )
/// extended linearly; d(1) = 0.
inline Omega1Element d_universal(const ToeplitzElement& a) {
    Omega1Element r;
    for (const auto& [m, c] : a.terms()) {
        for (std::int64_t k = 0; k < m.i; ++k) {
            r.tensor.add_term({k + 1, 0}, {m.i - k, m.j}, -c);
            r.ideal.add_term(k, {m.i - k - 1, m.j}, c);
        }
        for (std::int64_t l = 0; l < m.j; ++l) r.tensor.add_term({m.i, l}, {0, m.j - l - 1}, c);
    }
    return r;
}

/// The bimodule map j into A (x) A with j(d(a)) = 1 (x) a - a (x) 1.
/// On the generators g1 = (1 (x) 1, 0) = d(u) and g2 = (0, e (x) 1) = d(v) + v d(u) v
/// it is forced to take g1 -> 1 (x) u - u (x) 1 and g2 -> e (x) v, so
///   (x (x) y, 0)    -> x (x) (u y) - (x u) (x) y
///   (0, v^i e (x) y) -> v^i e (x) (v y)  rewritten inside A (x) A.
inline TensorElement embed_into_tensor_square(const Omega1Element& w) {
    TensorElement r;
    for (const auto& [k, c] : w.tensor.terms()) {
        r.add_term(k.first, mono_mul(mono_u(), k.second), c);
        r.add_term(mono_mul(k.first, mono_u()), k.second, -c);
    }
    for (const auto& [k, c] : w.ideal.terms()) {
        const Monomial right = mono_mul(mono_v(), k.second);
        r.add_term({k.first, 0}, right, c);
        r.add_term({k.first + 1, 1}, right, -c);
    }
    return r;
}

/// ||.||'_{q,p} on 1-forms: the four-index norm of the tensor part plus the
/// four-index norm of the ideal part interpreted inside A (x) A.
inline Rational tensor_norm(const TensorElement& t, const WeightSeq& q, const WeightSeq& p) {
    Rational s(0);
    for (const auto& [k, c] : t.terms())
        s += rational_abs(c) * q.at(k.first.i) * p.at(k.first.j) * q.at(k.second.i) * p.at(k.second.j);
    return s;
}

inline Rational omega1_norm(const Omega1Element& w, const WeightSeq& q, const WeightSeq& p) {
    return tensor_norm(w.tensor, q, p) + tensor_norm(w.ideal.rewrite_to_tensor(), q, p);
}

inline Omega1Element random_omega1(Sampler& s, std::int64_t degree) {
    Omega1Element r;
    const int nt = static_cast<int>(s.uniform(1, 3));
    for (int n = 0; n < nt; ++n)
        r.tensor.add_term({s.uniform(0, degree), s.uniform(0, degree)},
                          {s.uniform(0, degree), s.uniform(0, degree)}, s.coefficient());
    const int ni = static_cast<int>(s.uniform(1, 2));
    for (int n = 0; n < ni; ++n)
        r.ideal.add_term(s.uniform(0, degree), {s.uniform(0, degree), s.uniform(0, degree)},
                         s.coefficient());
    return r;
}

inline CheckReport leibniz_check(const ToeplitzElement& a, const ToeplitzElement& b) {
    CheckReport r;
    r.command = "check leibniz";
    r.params = {{"a", a.str()}, {"b", b.str()}};
    const Omega1Element lhs = d_universal(a * b);
    const Omega1Element rhs = right_act(d_universal(a), b) + left_act(a, d_universal(b));
    if (lhs == rhs) {
        r.verdict = Verdict::verified;
    } else {
        r.verdict = Verdict::counterexample;
        r.counterexample = {{"d(ab)", lhs.str()}, {"d(a)b + a d(b)", rhs.str()}};
    }
    return r;
}

/// u . d(v) + d(u) . v = 0, the defining relation of the universal pair.
inline CheckReport universal_pair_relation_check() {
    CheckReport r;
    r.command = "check universal-pair-relation";
    const Omega1Element sum = left_act(ToeplitzElement::u(), d_universal(ToeplitzElement::v())) +
                              right_act(d_universal(ToeplitzElement::u()), ToeplitzElement::v());
    if (sum.is_zero()) {
        r.verdict = Verdict::verified;
    } else {
        r.verdict = Verdict::counterexample;
        r.counterexample = {{"u.dv + du.v", sum.str()}};
    }
    return r;
}

/// Dominance and weighted-set witnesses feeding the continuity bound, plus
/// the derived constant C2 = C (C1 q''_1 + p_1 + 1).
struct ContinuityWitness {
    int p_prime = 0;   // p*p <= C p'
    int q_prime = 0;   // q*q <= C q'
    Rational C;
    int q_second = 0;  // q'_{k+l} <= C1 q''_k q''_l
    Rational C1;
    Rational C2;
};

namespace detail {

/// Smallest generator index m with lower <= F_m and F_base <= F_m pointwise.
/// Enlarging a dominating weight keeps every established constant valid.
inline std::optional<int> post_select(const WeightFamily& F, const std::vector<Rational>& lower,
                                      int base, std::int64_t horizon) {
    const auto bt = F.generator(base).tabulate(horizon);
    if (pointwise_le(lower, bt)) return base;
    for (int m = 1; m <= F.index_bound(); ++m) {
        const auto mt = F.generator(m).tabulate(horizon);
        if (pointwise_le(lower, mt) && pointwise_le(bt, mt)) return m;
    }
    return std::nullopt;
}

/// Finds the witness chain for generators q = Q_k, p = P_k, post-selected so
/// that p <= p' and q <= q' <= q'' pointwise on the horizon.
inline std::optional<ContinuityWitness> continuity_witness(const WeightFamily& P,
                                                           const WeightFamily& Q, int k,
                                                           std::int64_t horizon) {
    const auto p = P.generator(k);
    const auto q = Q.generator(k);
    const auto pt = p.tabulate(horizon);
    const auto qt = q.tabulate(horizon);
    auto wp = find_dominance_witness(convolve(p, p, horizon).tabulate(horizon), P, horizon);
    auto wq = find_dominance_witness(convolve(q, q, horizon).tabulate(horizon), Q, horizon);
    if (!wp || !wq) return std::nullopt;

    auto p_prime = post_select(P, pt, wp->index, horizon);
    auto q_prime = post_select(Q, qt, wq->index, horizon);
    if (!p_prime || !q_prime) return std::nullopt;

    auto wqq = find_weighted_witness(Q, *q_prime, horizon);
    if (!wqq) return std::nullopt;
    auto q_second = post_select(Q, Q.generator(*q_prime).tabulate(horizon), wqq->index, horizon);
    if (!q_second) return std::nullopt;

    ContinuityWitness w;
    w.p_prime = *p_prime;
    w.q_prime = *q_prime;
    w.C = wp->constant > wq->constant ? wp->constant : wq->constant;
    w.q_second = *q_second;
    w.C1 = wqq->constant;
    w.C2 = w.C * (w.C1 * Q.generator(*q_second).at(1) + pt[1] + 1);
    return w;
}

}  // namespace detail

/// Verifies the three inequalities that make the universal derivation
/// bounded between the weighted norms, for the generator pair (q, p) = (Q_k, P_k):
///   ||d(v^i) u^j||'_{q,p} <= C2 ||v^i u^j||_{q'',p}      on the index grid,
///   ||v^i d(u^j)||'_{q,p} = q_i (p*p)_{j-1} <= C ||v^i u^j||_{q,p'},
///   ||d(a)||'_{q,p} <= 2 C2 ||a||_{q'',p'}               on random elements.
inline CheckReport check_continuity_bound(const WeightFamily& P, const WeightFamily& Q, int k,
                                          std::int64_t degree, int samples, std::uint64_t seed,
                                          std::int64_t grid = 30, std::int64_t horizon = 120) {
    CheckReport r;
    r.command = "check continuity";
    r.params = {{"P", P.name()}, {"Q", Q.name()}, {"k", k}, {"degree", degree},
                {"samples", samples}, {"seed", seed}, {"grid", grid}, {"horizon", horizon}};

    for (const auto* fam : {&P, &Q}) {
        auto mono = check_monotone(*fam, horizon);
        if (mono.verdict != Verdict::verified) {
            r.verdict = mono.verdict;
            r.counterexample = {{"precondition", "monotone"}, {"family", fam->name()},
                                {"detail", mono.counterexample}};
            return r;
        }
    }

    auto witness = detail::continuity_witness(P, Q, k, horizon);
    if (!witness) {
        r.verdict = Verdict::no_witness_within_bounds;
        r.counterexample = {{"reason", "missing dominance or weighted witness"}};
        return r;
    }

    const std::int64_t reach = std::max(grid, degree) + 2;
    auto tab = [reach](const WeightSeq& s) {
        return WeightSeq::from_table(s.label(), s.tabulate(reach));
    };
    const auto q = tab(Q.generator(k));
    const auto p = tab(P.generator(k));
    const auto p_pr = tab(P.generator(witness->p_prime));
    const auto q_sec = tab(Q.generator(witness->q_second));
    const auto pp_conv = convolve(p, p, reach);

    r.witness = {{"p_prime", witness->p_prime}, {"q_prime", witness->q_prime},
                 {"C", rational_str(witness->C)}, {"q_second", witness->q_second},
                 {"C1", rational_str(witness->C1)}, {"C2", rational_str(witness->C2)}};

    // Monomial lemma for d(v^i) u^j. The norm also equals the expanded
    // three-terms-per-summand sum, which cross-checks omega1_norm itself.
    for (std::int64_t i = 1; i <= grid; ++i)
        for (std::int64_t j = 0; j <= grid; ++j) {
            const Omega1Element dvi_uj =
                right_act(d_universal(ToeplitzElement::v(i)), ToeplitzElement::u(j));
            const Rational lhs = omega1_norm(dvi_uj, q, p);
            Rational expanded(0);
            for (std::int64_t t = 0; t < i; ++t)
                expanded += (q.at(t + 1) * q.at(i - t) + q.at(t) * q.at(i - t - 1) +
                             q.at(t + 1) * p.at(1) * q.at(i - t - 1)) *
                            p.at(j);
            const Rational rhs = witness->C2 * q_sec.at(i) * p.at(j);
            if (lhs != expanded || lhs > rhs) {
                r.verdict = Verdict::counterexample;
                r.counterexample = {{"case", "dvu"}, {"i", i}, {"j", j},
                                    {"lhs", rational_str(lhs)},
                                    {"expanded_sum", rational_str(expanded)},
                                    {"rhs", rational_str(rhs)}};
                return r;
            }
        }

    // Monomial lemma for v^i d(u^j).
    for (std::int64_t i = 0; i <= grid; ++i)
        for (std::int64_t j = 1; j <= grid; ++j) {
            const Omega1Element vi_duj =
                left_act(ToeplitzElement::v(i), d_universal(ToeplitzElement::u(j)));
            const Rational lhs = omega1_norm(vi_duj, q, p);
            const Rational middle = q.at(i) * pp_conv.at(j - 1);
            const Rational rhs = witness->C * q.at(i) * p_pr.at(j);
            if (lhs != middle || lhs > rhs) {
                r.verdict = Verdict::counterexample;
                r.counterexample = {{"case", "vdu"}, {"i", i}, {"j", j},
                                    {"lhs", rational_str(lhs)},
                                    {"middle", rational_str(middle)},
                                    {"rhs", rational_str(rhs)}};
                return r;
            }
        }

    // Full bound on random elements.
    const Rational bound_factor = 2 * witness->C2;
    for (int s = 0; s < samples; ++s) {
        Sampler rng = Sampler::child(seed, static_cast<std::uint64_t>(s));
        const ToeplitzElement a = random_element(rng, degree);
        const Rational lhs = omega1_norm(d_universal(a), q, p);
        const Rational rhs = bound_factor * norm_qp(a, q_sec, p_pr);
        if (lhs > rhs) {
            r.verdict = Verdict::counterexample;
            r.counterexample = {{"case", "random"}, {"sample", s}, {"a", a.str()},
                                {"lhs", rational_str(lhs)}, {"rhs", rational_str(rhs)}};
            return r;
        }
    }

    r.verdict = Verdict::verified;
    return r;
}

/// Desk-scale form of condition (ii): the universal derivation is bounded
/// from ||.||_{q'',p'} to ||.||'_{q,p} with constant 2 C2. Reports the
/// largest observed ratio.
inline CheckReport check_diagram_D(const WeightFamily& P, const WeightFamily& Q, int k,
                                   std::int64_t degree, int samples, std::uint64_t seed,
                                   std::int64_t horizon = 120) {
    CheckReport r;
    r.command = "check diagram-D";
    r.params = {{"P", P.name()}, {"Q", Q.name()}, {"k", k}, {"degree", degree},
                {"samples", samples}, {"seed", seed}, {"horizon", horizon}};

    auto witness = detail::continuity_witness(P, Q, k, horizon);
    if (!witness) {
        r.verdict = Verdict::no_witness_within_bounds;
        r.counterexample = {{"reason", "missing dominance or weighted witness"}};
        return r;
    }
    const std::int64_t reach = degree + 2;
    auto tab = [reach](const WeightSeq& s) {
        return WeightSeq::from_table(s.label(), s.tabulate(reach));
    };
    const auto q = tab(Q.generator(k));
    const auto p = tab(P.generator(k));
    const auto p_pr = tab(P.generator(witness->p_prime));
    const auto q_sec = tab(Q.generator(witness->q_second));

    r.witness = {{"p_prime", witness->p_prime}, {"q_second", witness->q_second},
                 {"C2", rational_str(witness->C2)},
                 {"bound", rational_str(Rational(2 * witness->C2))}};

    Rational max_ratio(0);
    for (int s = 0; s < samples; ++s) {
        Sampler rng = Sampler::child(seed, static_cast<std::uint64_t>(s));
        const ToeplitzElement a = random_element(rng, degree);
        if (a.is_zero()) continue;
        const Rational num = omega1_norm(d_universal(a), q, p);
        const Rational den = norm_qp(a, q_sec, p_pr);
        const Rational ratio = num / den;
        if (ratio > max_ratio) max_ratio = ratio;
    }
    r.max_ratio = max_ratio;
    r.verdict = max_ratio <= 2 * witness->C2 ? Verdict::verified : Verdict::counterexample;
    if (r.verdict == Verdict::counterexample)
        r.counterexample = {{"max_ratio", rational_str(max_ratio)},
                            {"bound", rational_str(Rational(2 * witness->C2))}};
    return r;
}

}  // namespace talg
