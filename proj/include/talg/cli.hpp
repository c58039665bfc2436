#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "talg/expr.hpp"
#include "talg/talg.hpp"

namespace talg {

namespace detail {

inline WeightFamily family_option(const std::string& name, const std::string& radius) {
    std::optional<Rational> r;
    if (!radius.empty() && radius != "inf") r = parse_rational(radius);
    return WeightFamily::by_name(name, r);
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

}  // namespace detail

/// Dispatches one CLI invocation; the report goes to `out`, diagnostics to
/// `err`. Returns the process exit code (0 pass, 1 counterexample, 2 usage
/// error, 3 search exhausted).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computer algebra for the algebraic Toeplitz algebra"};
    app.require_subcommand(1);

    std::string lhs, rhs, expr_text, family = "smooth", radius, left, right, xi_path, table_path;
    std::string norm_family;
    int k = 1, kmax = 3, index_bound = 8, samples = 100;
    std::int64_t horizon = 100, degree = 6, dim = 16, grid = 30, eq_horizon = 40;
    std::uint64_t seed = 0;

    auto* mul = app.add_subcommand("mul", "multiply two elements");
    mul->add_option("lhs", lhs)->required();
    mul->add_option("rhs", rhs)->required();

    auto* norm = app.add_subcommand("norm", "weighted l1 norm of an element");
    norm->add_option("--family", family)->required();
    norm->add_option("--radius", radius);
    norm->add_option("--k", k)->required();
    norm->add_option("expr", expr_text)->required();

    auto* d1 = app.add_subcommand("d1", "universal derivation of an element");
    d1->add_option("expr", expr_text)->required();
    d1->add_option("--norm-family", norm_family);
    d1->add_option("--radius", radius);
    d1->add_option("--k", k);

    auto* check = app.add_subcommand("check", "run a verification");
    check->require_subcommand(1);
    auto add_family_check = [&](const char* name, const char* desc) {
        auto* c = check->add_subcommand(name, desc);
        c->add_option("--family", family)->required();
        c->add_option("--radius", radius);
        c->add_option("--horizon", horizon);
        c->add_option("--index-bound", index_bound);
        return c;
    };
    auto* c_kothe = add_family_check("kothe", "Koethe set axioms (P1), (P2)");
    auto* c_weighted = add_family_check("weighted", "weighted-set property");
    auto* c_m_weighted = add_family_check("m-weighted", "m-weighted property (p'=p, C=1)");
    auto* c_monotone = add_family_check("monotone", "generators nondecreasing");

    auto* c_dom = check->add_subcommand("dominated", "dominance S < Q");
    int left_bound = 0;  // 0: derived from index_bound so witnesses stay reachable
    c_dom->add_option("--left", left)->required();
    c_dom->add_option("--right", right)->required();
    c_dom->add_option("--radius", radius);
    c_dom->add_option("--horizon", horizon);
    c_dom->add_option("--index-bound", index_bound);
    c_dom->add_option("--left-bound", left_bound);

    auto* c_seq = check->add_subcommand("smooth-equivalence", "norm equivalence, smooth family");
    c_seq->add_option("--kmax", kmax);
    c_seq->add_option("--degree", degree);
    c_seq->add_option("--samples", samples);
    c_seq->add_option("--seed", seed);

    auto* c_heq = check->add_subcommand("hol-equivalence", "norm equivalence, holomorphic family");
    c_heq->add_option("--kmax", kmax);
    c_heq->add_option("--degree", degree);
    c_heq->add_option("--samples", samples);
    c_heq->add_option("--seed", seed);
    c_heq->add_option("--horizon", eq_horizon);
    c_heq->add_option("--index-bound", index_bound);

    auto* c_cont = check->add_subcommand("continuity", "derivation continuity bound");
    c_cont->add_option("--family", family)->required();
    c_cont->add_option("--radius", radius);
    c_cont->add_option("--k", k)->required();
    c_cont->add_option("--degree", degree);
    c_cont->add_option("--samples", samples);
    c_cont->add_option("--seed", seed);
    c_cont->add_option("--grid", grid);
    c_cont->add_option("--horizon", horizon);
    c_cont->add_option("--index-bound", index_bound);

    auto* c_sub = check->add_subcommand("submultiplicative", "seminorm submultiplicativity");
    c_sub->add_option("--family", family)->required();
    c_sub->add_option("--radius", radius);
    c_sub->add_option("--degree", degree);
    c_sub->add_option("--samples", samples);
    c_sub->add_option("--seed", seed);
    c_sub->add_option("--horizon", horizon);
    c_sub->add_option("--index-bound", index_bound);

    auto* c_leib = check->add_subcommand("leibniz", "Leibniz rule for the universal derivation");
    c_leib->add_option("--samples", samples);
    c_leib->add_option("--degree", degree);
    c_leib->add_option("--seed", seed);

    auto* c_suite = check->add_subcommand("omega1-suite", "full 1-form property suite");
    c_suite->add_option("--seed", seed);

    auto* c_diag = check->add_subcommand("diagram-d", "boundedness witness for diagram (D)");
    c_diag->add_option("--family", family)->required();
    c_diag->add_option("--radius", radius);
    c_diag->add_option("--k", k)->required();
    c_diag->add_option("--degree", degree);
    c_diag->add_option("--samples", samples);
    c_diag->add_option("--seed", seed);
    c_diag->add_option("--horizon", horizon);
    c_diag->add_option("--index-bound", index_bound);

    auto* split = app.add_subcommand("split", "split a square-zero extension");
    split->add_option("--xi", xi_path)->required();
    split->add_option("--degree", degree);
    split->add_option("--samples", samples);
    split->add_option("--seed", seed);

    auto* oracle = app.add_subcommand("oracle", "shift-matrix multiplication oracle");
    oracle->add_option("--dim", dim);
    oracle->add_option("--samples", samples);
    oracle->add_option("--degree", degree);
    oracle->add_option("--seed", seed);

    auto* cw = app.add_subcommand("construct-weight", "greedy dominating weight");
    cw->add_option("--table", table_path)->required();
    cw->add_option("--horizon", horizon);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        CheckReport report;
        if (*mul) {
            const ToeplitzElement product = parse_element(lhs) * parse_element(rhs);
            report.command = "mul";
            report.params = {{"lhs", lhs}, {"rhs", rhs}};
            report.result = product.str();
        } else if (*norm) {
            const WeightFamily F = detail::family_option(family, radius);
            const WeightSeq w = F.generator(k);
            report.command = "norm";
            report.params = {{"family", family}, {"k", k}, {"expr", expr_text}};
            report.result = rational_str(norm_qp(parse_element(expr_text), w, w));
        } else if (*d1) {
            const ToeplitzElement a = parse_element(expr_text);
            const Omega1Element w = d_universal(a);
            report.command = "d1";
            report.params = {{"expr", expr_text}};
            Json res = {{"form", w.str()}, {"sparse", w.to_json()}};
            if (!norm_family.empty()) {
                const WeightFamily F = detail::family_option(norm_family, radius);
                const WeightSeq ws = F.generator(k);
                res["norm"] = rational_str(omega1_norm(w, ws, ws));
                report.params["norm_family"] = norm_family;
                report.params["k"] = k;
            }
            report.result = res;
        } else if (*c_kothe) {
            report = check_kothe(detail::family_option(family, radius).with_index_bound(index_bound), horizon);
        } else if (*c_weighted) {
            report = check_weighted(detail::family_option(family, radius).with_index_bound(index_bound), horizon);
        } else if (*c_m_weighted) {
            report = check_m_weighted(detail::family_option(family, radius).with_index_bound(index_bound), horizon);
        } else if (*c_monotone) {
            report = check_monotone(detail::family_option(family, radius).with_index_bound(index_bound), horizon);
        } else if (*c_dom) {
            const WeightFamily Q = detail::family_option(right, radius).with_index_bound(index_bound);
            const int lb = left_bound > 0 ? left_bound : std::max(1, (index_bound - 1) / 2);
            std::vector<WeightSeq> S;
            std::string label = left;
            if (left.rfind("conv:", 0) == 0) {
                const WeightFamily L = detail::family_option(left.substr(5), radius).with_index_bound(lb);
                S = convolution_square(L, horizon);
            } else {
                const WeightFamily L = detail::family_option(left, radius).with_index_bound(lb);
                for (int g = 1; g <= L.index_bound(); ++g) S.push_back(L.generator(g));
            }
            report = check_dominated(S, Q, horizon, label);
            report.params["left_bound"] = lb;
        } else if (*c_seq) {
            report = check_smooth_equivalence(kmax, degree, samples, seed);
        } else if (*c_heq) {
            report = check_hol_equivalence(kmax, degree, samples, seed, eq_horizon, index_bound);
        } else if (*c_cont) {
            const WeightFamily F = detail::family_option(family, radius).with_index_bound(index_bound);
            report = check_continuity_bound(F, F, k, degree, samples, seed, grid, horizon);
        } else if (*c_sub) {
            const WeightFamily F = detail::family_option(family, radius).with_index_bound(index_bound);
            report = check_submultiplicative(F, F, degree, samples, seed, horizon);
        } else if (*c_leib) {
            report = check_leibniz_batch(samples, degree, seed);
        } else if (*c_suite) {
            report = check_omega1_suite(seed);
        } else if (*c_diag) {
            const WeightFamily F = detail::family_option(family, radius).with_index_bound(index_bound);
            report = check_diagram_D(F, F, k, degree, samples, seed, horizon);
        } else if (*split) {
            const CocycleSpec xi = cocycle_from_json(detail::load_json_file(xi_path));
            const ExtAlgebra E(xi);
            const CheckReport assoc = E.check_associativity(50, 4, seed);
            if (assoc.verdict != Verdict::verified) {
                report = assoc;
                report.command = "split";
            } else {
                report = split_extension(E, degree, samples, seed);
                report.params["xi"] = xi_path;
            }
        } else if (*oracle) {
            report = check_oracle_batch(dim, samples, degree, seed);
        } else if (*cw) {
            const WeightFamily F = WeightFamily::from_descriptor(detail::load_json_file(table_path));
            const WeightSeq prime = construct_dominating_weight(F.generator(1), horizon);
            report.command = "construct-weight";
            report.params = {{"table", table_path}, {"horizon", horizon}};
            report.verdict = Verdict::verified;
            Json table = Json::array();
            for (std::int64_t n = 0; n <= horizon; ++n)
                table.push_back(Json::array({n, rational_str(prime.at(n))}));
            report.result = {{"name", prime.label()}, {"kind", "table"}, {"table", table}};
        }
        out << report.to_json().dump(2) << "\n";
        return verdict_exit_code(report.verdict);
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "usage error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace talg
