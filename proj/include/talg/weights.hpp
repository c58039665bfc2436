#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "talg/rational.hpp"
#include "talg/report.hpp"

namespace talg {

/// One nonnegative weight sequence n -> p_n, evaluable up to an optional
/// horizon bound (always present for table-backed sequences).
class WeightSeq {
public:
    WeightSeq() = default;
    WeightSeq(std::string label, std::function<Rational(std::int64_t)> eval,
              std::optional<std::int64_t> horizon_bound = {})
        : label_(std::move(label)), eval_(std::move(eval)), horizon_bound_(horizon_bound) {}

    static WeightSeq from_table(std::string label, std::vector<Rational> table) {
        auto data = std::make_shared<std::vector<Rational>>(std::move(table));
        const auto bound = static_cast<std::int64_t>(data->size()) - 1;
        return WeightSeq(
            std::move(label), [data](std::int64_t n) { return (*data)[static_cast<std::size_t>(n)]; },
            bound);
    }

    const std::string& label() const { return label_; }
    std::optional<std::int64_t> horizon_bound() const { return horizon_bound_; }

    Rational at(std::int64_t n) const {
        if (n < 0) throw std::invalid_argument("weight sequence: negative position");
        if (horizon_bound_ && n > *horizon_bound_)
            throw std::out_of_range("weight sequence '" + label_ + "': horizon exceeded at n=" +
                                    std::to_string(n));
        return eval_(n);
    }

    std::vector<Rational> tabulate(std::int64_t upto) const {
        std::vector<Rational> t;
        t.reserve(static_cast<std::size_t>(upto + 1));
        for (std::int64_t n = 0; n <= upto; ++n) t.push_back(at(n));
        return t;
    }

private:
    std::string label_;
    std::function<Rational(std::int64_t)> eval_;
    std::optional<std::int64_t> horizon_bound_;
};

/// (p*q)_k = sum_{i+j=k} p_i q_j, materialized up to the horizon.
inline WeightSeq convolve(const WeightSeq& p, const WeightSeq& q, std::int64_t horizon) {
    const auto tp = p.tabulate(horizon);
    const auto tq = q.tabulate(horizon);
    std::vector<Rational> r(static_cast<std::size_t>(horizon + 1), Rational(0));
    for (std::int64_t k = 0; k <= horizon; ++k) {
        Rational s(0);
        for (std::int64_t i = 0; i <= k; ++i) s += tp[static_cast<std::size_t>(i)] * tq[static_cast<std::size_t>(k - i)];
        r[static_cast<std::size_t>(k)] = s;
    }
    return WeightSeq::from_table(p.label() + "*" + q.label(), std::move(r));
}

/// A countably-indexed family of weight sequences (Koethe set generators).
/// Generator indices start at 1. Searches are capped by index_bound;
/// `exhaustive` families (finite tables) have every generator inside the cap,
/// so a failed search there is a disproof rather than an exhausted search.
class WeightFamily {
public:
    WeightFamily() = default;

    static WeightFamily smooth() {
        WeightFamily f;
        f.name_ = "smooth";
        f.eval_ = [](int k, std::int64_t n) { return rational_pow(Rational(1 + n), static_cast<std::uint64_t>(k)); };
        return f;
    }

    static WeightFamily formal() {
        WeightFamily f;
        f.name_ = "formal";
        f.eval_ = [](int k, std::int64_t n) { return Rational(n < k ? 1 : 0); };
        return f;
    }

    /// radius absent: generators k^n (the R = infinity case).
    /// radius R finite: generators r_k^n along the rational ramp r_k = R*k/(k+1).
    static WeightFamily holomorphic(std::optional<Rational> radius = {}) {
        if (radius && *radius <= 0)
            throw std::invalid_argument("holomorphic family: radius must be positive");
        WeightFamily f;
        f.name_ = "holomorphic";
        f.radius_ = radius;
        if (!radius) {
            f.eval_ = [](int k, std::int64_t n) { return rational_pow(Rational(k), static_cast<std::uint64_t>(n)); };
        } else {
            const Rational r0 = *radius;
            f.eval_ = [r0](int k, std::int64_t n) {
                const Rational rk = r0 * Rational(k, k + 1);
                return rational_pow(rk, static_cast<std::uint64_t>(n));
            };
        }
        return f;
    }

    /// Single-generator family backed by a finite table.
    static WeightFamily from_table(std::string name, std::vector<Rational> table) {
        WeightFamily f;
        f.name_ = std::move(name);
        f.horizon_bound_ = static_cast<std::int64_t>(table.size()) - 1;
        f.exhaustive_ = true;
        f.index_bound_ = 1;
        auto data = std::make_shared<std::vector<Rational>>(std::move(table));
        f.eval_ = [data](int, std::int64_t n) { return (*data)[static_cast<std::size_t>(n)]; };
        return f;
    }

    static WeightFamily by_name(const std::string& name, std::optional<Rational> radius = {}) {
        if (name == "smooth") return smooth();
        if (name == "formal") return formal();
        if (name == "holomorphic") return holomorphic(radius);
        throw std::invalid_argument("unknown weight family '" + name + "'");
    }

    const std::string& name() const { return name_; }
    int index_bound() const { return index_bound_; }
    bool exhaustive() const { return exhaustive_; }
    std::optional<std::int64_t> horizon_bound() const { return horizon_bound_; }

    WeightFamily with_index_bound(int bound) const {
        WeightFamily f = *this;
        f.index_bound_ = exhaustive_ ? std::min(bound, index_bound_) : bound;
        return f;
    }

    WeightSeq generator(int k) const {
        if (k < 0) throw std::invalid_argument("generator index must be nonnegative");
        auto eval = eval_;
        return WeightSeq(name_ + "(" + std::to_string(k) + ")",
                         [eval, k](std::int64_t n) { return eval(k, n); }, horizon_bound_);
    }

    Json descriptor() const {
        Json j;
        j["name"] = name_;
        j["kind"] = exhaustive_ ? "table" : "builtin";
        Json params = Json::object();
        if (radius_) params["radius"] = rational_str(*radius_);
        j["params"] = params;
        if (exhaustive_) {
            Json table = Json::array();
            for (std::int64_t n = 0; n <= *horizon_bound_; ++n)
                table.push_back(Json::array({n, rational_str(eval_(1, n))}));
            j["table"] = table;
        }
        return j;
    }

    static WeightFamily from_descriptor(const Json& j) {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "builtin") {
            std::optional<Rational> radius;
            if (j.contains("params") && j["params"].contains("radius"))
                radius = parse_rational(j["params"]["radius"].get<std::string>());
            return by_name(j.at("name").get<std::string>(), radius);
        }
        if (kind != "table") throw std::invalid_argument("family descriptor: unknown kind");
        const auto& table = j.at("table");
        std::vector<Rational> values(table.size(), Rational(0));
        for (const auto& entry : table) {
            const auto n = entry.at(0).get<std::int64_t>();
            if (n < 0 || n >= static_cast<std::int64_t>(values.size()))
                throw std::invalid_argument("family descriptor: table positions must be 0..size-1");
            values[static_cast<std::size_t>(n)] = parse_rational(entry.at(1).get<std::string>());
        }
        for (const auto& v : values)
            if (v < 0) throw std::invalid_argument("family descriptor: negative weight");
        return from_table(j.at("name").get<std::string>(), std::move(values));
    }

private:
    std::string name_;
    std::function<Rational(int, std::int64_t)> eval_;
    int index_bound_ = 8;
    bool exhaustive_ = false;
    std::optional<std::int64_t> horizon_bound_;
    std::optional<Rational> radius_;
};

/// The built-in families: smooth (1+n)^k, formal truncation indicators, and
/// holomorphic k^n.
inline std::vector<WeightFamily> catalog() {
    return {WeightFamily::smooth(), WeightFamily::formal(), WeightFamily::holomorphic()};
}

struct DominanceWitness {
    int index = 0;  // witnessing generator index
    Rational constant;
};

namespace detail {

/// Minimal C with s_n <= C * q_n on 0..horizon, or nullopt when some q_n = 0
/// meets s_n > 0. 0/0 positions impose no constraint.
inline std::optional<Rational> min_dominance_constant(const std::vector<Rational>& s,
                                                      const std::vector<Rational>& q) {
    Rational c(0);
    for (std::size_t n = 0; n < s.size(); ++n) {
        if (q[n] == 0) {
            if (s[n] != 0) return std::nullopt;
            continue;
        }
        Rational ratio = s[n] / q[n];
        if (ratio > c) c = std::move(ratio);
    }
    return c;
}

/// Minimal C with p_{i+j} <= C * w_i * w_j for i, j <= horizon.
inline std::optional<Rational> min_weighted_constant(const std::vector<Rational>& p2h,
                                                     const std::vector<Rational>& w) {
    const auto h = static_cast<std::int64_t>(w.size()) - 1;
    Rational c(0);
    for (std::int64_t i = 0; i <= h; ++i)
        for (std::int64_t j = i; j <= h; ++j) {
            const Rational den = w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)];
            const Rational& num = p2h[static_cast<std::size_t>(i + j)];
            if (den == 0) {
                if (num != 0) return std::nullopt;
                continue;
            }
            Rational ratio = num / den;
            if (ratio > c) c = std::move(ratio);
        }
    return c;
}

inline bool pointwise_le(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (std::size_t n = 0; n < a.size() && n < b.size(); ++n)
        if (a[n] > b[n]) return false;
    return true;
}

}  // namespace detail

/// Searches Q for the best dominance witness of the tabulated sequence s:
/// minimal C first, then smallest generator index. A candidate whose ratio
/// sequence is still climbing across the tail of the window (ratio at the
/// horizon above the ratio at half the horizon) has not converged and is
/// rejected; this is what keeps the reported witness meaningful beyond the
/// window instead of an artifact of truncation.
inline std::optional<DominanceWitness> find_dominance_witness(const std::vector<Rational>& s,
                                                              const WeightFamily& Q,
                                                              std::int64_t horizon) {
    std::optional<DominanceWitness> best;
    for (int m = 1; m <= Q.index_bound(); ++m) {
        const auto qt = Q.generator(m).tabulate(horizon);
        auto c = detail::min_dominance_constant(s, qt);
        if (!c) continue;
        auto ratio_at = [&](std::int64_t n) {
            return qt[static_cast<std::size_t>(n)] == 0
                       ? Rational(0)
                       : s[static_cast<std::size_t>(n)] / qt[static_cast<std::size_t>(n)];
        };
        if (ratio_at(horizon) > ratio_at(horizon / 2)) continue;
        if (!best || *c < best->constant) best = DominanceWitness{m, *c};
    }
    return best;
}

/// Weighted-set witness for generator k of P: the pair (p', C) with
/// p_{i+j} <= C p'_i p'_j on the horizon square, minimizing C then the index.
inline std::optional<DominanceWitness> find_weighted_witness(const WeightFamily& P, int k,
                                                             std::int64_t horizon) {
    const auto p2h = P.generator(k).tabulate(2 * horizon);
    std::optional<DominanceWitness> best;
    for (int m = 1; m <= P.index_bound(); ++m) {
        const auto wt = P.generator(m).tabulate(horizon);
        auto c = detail::min_weighted_constant(p2h, wt);
        if (!c) continue;
        if (!best || *c < best->constant) best = DominanceWitness{m, *c};
    }
    return best;
}

inline CheckReport check_kothe(const WeightFamily& P, std::int64_t horizon) {
    CheckReport r;
    r.command = "check kothe";
    r.params = {{"family", P.name()}, {"horizon", horizon}, {"index_bound", P.index_bound()}};
    const int bound = P.index_bound();
    std::vector<std::vector<Rational>> gen;
    gen.reserve(static_cast<std::size_t>(bound));
    for (int k = 1; k <= bound; ++k) gen.push_back(P.generator(k).tabulate(horizon));

    // (P1): some generator positive at every position.
    for (std::int64_t n = 0; n <= horizon; ++n) {
        bool found = false;
        for (int k = 0; k < bound && !found; ++k) found = gen[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] > 0;
        if (!found) {
            r.verdict = P.exhaustive() ? Verdict::counterexample : Verdict::no_witness_within_bounds;
            r.counterexample = {{"axiom", "P1"}, {"position", n}};
            return r;
        }
    }

    // (P2): every pair dominated by a member.
    Json witnesses = Json::array();
    for (int k1 = 1; k1 <= bound; ++k1)
        for (int k2 = k1; k2 <= bound; ++k2) {
            int found = 0;
            for (int m = 1; m <= bound && found == 0; ++m) {
                bool ok = true;
                for (std::int64_t n = 0; n <= horizon && ok; ++n) {
                    const Rational& a = gen[static_cast<std::size_t>(k1 - 1)][static_cast<std::size_t>(n)];
                    const Rational& b = gen[static_cast<std::size_t>(k2 - 1)][static_cast<std::size_t>(n)];
                    const Rational& c = gen[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n)];
                    ok = (a <= c) && (b <= c);
                }
                if (ok) found = m;
            }
            if (found == 0) {
                r.verdict = P.exhaustive() ? Verdict::counterexample : Verdict::no_witness_within_bounds;
                r.counterexample = {{"axiom", "P2"}, {"pair", Json::array({k1, k2})}};
                return r;
            }
            witnesses.push_back(Json::array({k1, k2, found}));
        }
    r.verdict = Verdict::verified;
    r.witness = {{"P2", witnesses}};
    return r;
}

inline CheckReport check_weighted(const WeightFamily& P, std::int64_t horizon) {
    CheckReport r;
    r.command = "check weighted";
    r.params = {{"family", P.name()}, {"horizon", horizon}, {"index_bound", P.index_bound()}};
    Json witnesses = Json::array();
    for (int k = 1; k <= P.index_bound(); ++k) {
        const Rational p0 = P.generator(k).at(0);
        if (p0 != 1) {
            r.verdict = Verdict::counterexample;
            r.counterexample = {{"generator", k}, {"reason", "p_0 != 1"}, {"p_0", rational_str(p0)}};
            return r;
        }
        auto w = find_weighted_witness(P, k, horizon);
        if (!w) {
            r.verdict = P.exhaustive() ? Verdict::counterexample : Verdict::no_witness_within_bounds;
            r.counterexample = {{"generator", k}, {"reason", "no admissible p'"}};
            return r;
        }
        witnesses.push_back({{"generator", k}, {"prime", w->index}, {"C", rational_str(w->constant)}});
    }
    r.verdict = Verdict::verified;
    r.witness = witnesses;
    return r;
}

inline CheckReport check_m_weighted(const WeightFamily& P, std::int64_t horizon) {
    CheckReport r;
    r.command = "check m-weighted";
    r.params = {{"family", P.name()}, {"horizon", horizon}, {"index_bound", P.index_bound()}};
    for (int k = 1; k <= P.index_bound(); ++k) {
        const auto p2h = P.generator(k).tabulate(2 * horizon);
        if (p2h[0] != 1) {
            r.verdict = Verdict::counterexample;
            r.counterexample = {{"generator", k}, {"reason", "p_0 != 1"}, {"p_0", rational_str(p2h[0])}};
            return r;
        }
        for (std::int64_t i = 0; i <= horizon; ++i)
            for (std::int64_t j = i; j <= horizon; ++j) {
                const Rational rhs = p2h[static_cast<std::size_t>(i)] * p2h[static_cast<std::size_t>(j)];
                const Rational& lhs = p2h[static_cast<std::size_t>(i + j)];
                if (lhs > rhs) {
                    r.verdict = Verdict::counterexample;
                    r.counterexample = {{"generator", k}, {"i", i}, {"j", j},
                                        {"lhs", rational_str(lhs)}, {"rhs", rational_str(rhs)}};
                    return r;
                }
            }
    }
    r.verdict = Verdict::verified;
    return r;
}

inline CheckReport check_monotone(const WeightFamily& P, std::int64_t horizon) {
    CheckReport r;
    r.command = "check monotone";
    r.params = {{"family", P.name()}, {"horizon", horizon}, {"index_bound", P.index_bound()}};
    for (int k = 1; k <= P.index_bound(); ++k) {
        const auto t = P.generator(k).tabulate(horizon);
        for (std::int64_t i = 0; i < horizon; ++i)
            if (t[static_cast<std::size_t>(i)] > t[static_cast<std::size_t>(i + 1)]) {
                r.verdict = Verdict::counterexample;
                r.counterexample = {{"generator", k}, {"i", i},
                                    {"p_i", rational_str(t[static_cast<std::size_t>(i)])},
                                    {"p_i+1", rational_str(t[static_cast<std::size_t>(i + 1)])}};
                return r;
            }
    }
    r.verdict = Verdict::verified;
    return r;
}

/// Dominance check S < Q for a list of labeled sequences S.
inline CheckReport check_dominated(const std::vector<WeightSeq>& S, const WeightFamily& Q,
                                   std::int64_t horizon, const std::string& left_label) {
    CheckReport r;
    r.command = "check dominated";
    r.params = {{"left", left_label}, {"right", Q.name()}, {"horizon", horizon},
                {"index_bound", Q.index_bound()}};
    Json witnesses = Json::array();
    for (const auto& s : S) {
        auto w = find_dominance_witness(s.tabulate(horizon), Q, horizon);
        if (!w) {
            r.verdict = Q.exhaustive() ? Verdict::counterexample : Verdict::no_witness_within_bounds;
            r.counterexample = {{"sequence", s.label()}, {"reason", "no dominating generator"}};
            return r;
        }
        witnesses.push_back({{"sequence", s.label()}, {"generator", w->index}, {"C", rational_str(w->constant)}});
    }
    r.verdict = Verdict::witness_found;
    r.witness = witnesses;
    return r;
}

/// The per-generator convolution square {p*p : p in P}, used for P*P < P checks.
inline std::vector<WeightSeq> convolution_square(const WeightFamily& P, std::int64_t horizon) {
    std::vector<WeightSeq> out;
    for (int k = 1; k <= P.index_bound(); ++k) {
        const auto g = P.generator(k);
        out.push_back(convolve(g, g, horizon));
    }
    return out;
}

/// Greedy construction of p' with p_{i+j} <= p'_i p'_j for i, j <= horizon.
/// Needs p evaluable to 2*horizon with strictly positive entries and p_0 = 1.
/// The square-root step is avoided by forcing p'_{k+1} >= max(p_{2k+2}, 1).
inline WeightSeq construct_dominating_weight(const WeightSeq& p, std::int64_t horizon) {
    const auto t = p.tabulate(2 * horizon);
    if (t[0] != 1) throw std::domain_error("construct_dominating_weight: p_0 must be 1");
    for (std::size_t n = 0; n < t.size(); ++n)
        if (t[n] <= 0)
            throw std::domain_error("construct_dominating_weight: entries must be positive (p_" +
                                    std::to_string(n) + " is not)");

    std::vector<Rational> prime(static_cast<std::size_t>(horizon + 1));
    prime[0] = Rational(1);
    for (std::int64_t k = 0; k < horizon; ++k) {
        Rational cand(1);
        if (t[static_cast<std::size_t>(2 * k + 2)] > cand) cand = t[static_cast<std::size_t>(2 * k + 2)];
        for (std::int64_t i = 0; i <= k; ++i) {
            Rational ratio = t[static_cast<std::size_t>(i + k + 1)] / prime[static_cast<std::size_t>(i)];
            if (ratio > cand) cand = std::move(ratio);
        }
        prime[static_cast<std::size_t>(k + 1)] = std::move(cand);
    }

    for (std::int64_t i = 0; i <= horizon; ++i)
        for (std::int64_t j = i; j <= horizon; ++j)
            if (t[static_cast<std::size_t>(i + j)] > prime[static_cast<std::size_t>(i)] * prime[static_cast<std::size_t>(j)])
                throw std::logic_error("construct_dominating_weight: postcondition violated");

    return WeightSeq::from_table(p.label() + "'", std::move(prime));
}

}  // namespace talg
