#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "talg/cli.hpp"
#include "talg/expr.hpp"

using namespace talg;

TEST_CASE("expression parsing") {
    SECTION("worked examples") {
        ToeplitzElement expected = ToeplitzElement::monomial({2, 1});
        expected.add_term({0, 0}, Rational(-3));
        expected.add_term({1, 1}, Rational(3));
        CHECK(parse_element("v^2*u - 3*e") == expected);
        CHECK(parse_element("1") == ToeplitzElement::one());
        CHECK(parse_element("u*v") == ToeplitzElement::one());
    }
    SECTION("coefficients, rationals, signs") {
        CHECK(parse_element("3/2*v") == Rational(3, 2) * ToeplitzElement::v());
        CHECK(parse_element("-v + v").is_zero());
        CHECK(parse_element("2*v*u*v") == Rational(2) * ToeplitzElement::v());
        CHECK(parse_element("  1/3 ") == Rational(1, 3) * ToeplitzElement::one());
    }
    SECTION("products evaluate left to right through the relation uv = 1") {
        CHECK(parse_element("u*v*u*v") == ToeplitzElement::one());
        CHECK(parse_element("v*u*v") == ToeplitzElement::v());
        CHECK(parse_element("e*e") == ToeplitzElement::idempotent_e());
    }
    SECTION("errors carry positions") {
        CHECK_THROWS_AS(parse_element("v^-2"), ParseError);
        CHECK_THROWS_AS(parse_element(""), ParseError);
        CHECK_THROWS_AS(parse_element("v + "), ParseError);
        CHECK_THROWS_AS(parse_element("w"), ParseError);
        CHECK_THROWS_AS(parse_element("1/0"), ParseError);
        CHECK_THROWS_AS(parse_element("v v"), ParseError);
        try {
            parse_element("v^x");
        } catch (const ParseError& e) {
            CHECK(e.position == 2);
        }
    }
    SECTION("print/parse round trip on random elements") {
        Sampler rng(21);
        for (int s = 0; s < 300; ++s) {
            ToeplitzElement a = random_element(rng, 9);
            a = a + Rational(1, 3) * random_element(rng, 9);
            CHECK(parse_element(a.str()) == a);
        }
        CHECK(parse_element(ToeplitzElement::zero().str()).is_zero());
    }
}

namespace {
struct CliResult {
    int code;
    std::string out;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str()};
}
}  // namespace

TEST_CASE("cli commands and exit codes") {
    SECTION("mul") {
        const CliResult r = run({"mul", "u", "v"});
        CHECK(r.code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j["result"] == "1");
        CHECK(j["command"] == "mul");
        CHECK(j["runtime_ms"] == 0);
    }
    SECTION("norm") {
        const CliResult r = run({"norm", "--family", "smooth", "--k", "1", "v^2*u^3"});
        CHECK(r.code == 0);
        CHECK(Json::parse(r.out)["result"] == "12");
    }
    SECTION("d1 with norm") {
        const CliResult r =
            run({"d1", "v", "--norm-family", "smooth", "--k", "1"});
        CHECK(r.code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j["result"]["norm"] == "9");
    }
    SECTION("counterexample exit code") {
        const CliResult r = run({"check", "monotone", "--family", "formal", "--horizon", "50"});
        CHECK(r.code == 1);
        CHECK(Json::parse(r.out)["verdict"] == "counterexample");
    }
    SECTION("search exhaustion exit code") {
        const CliResult r = run({"check", "kothe", "--family", "formal", "--horizon", "50",
                                 "--index-bound", "5"});
        CHECK(r.code == 3);
    }
    SECTION("usage errors") {
        CHECK(run({"check", "monotone", "--family", "nope"}).code == 2);
        CHECK(run({"mul", "v^-1", "v"}).code == 2);
        CHECK(run({"bogus"}).code == 2);
        CHECK(run({"norm", "--family", "holomorphic", "--radius", "0", "--k", "1", "v"}).code == 2);
    }
    SECTION("dominated witness") {
        const CliResult r = run({"check", "dominated", "--left", "conv:smooth", "--right",
                                 "smooth", "--horizon", "40", "--index-bound", "8"});
        CHECK(r.code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j["verdict"] == "witness_found");
        CHECK(j["witness"][0]["generator"] == 3);
    }
    SECTION("construct-weight on a table file") {
        const std::string path = "construct_weight_test.json";
        {
            std::ofstream f(path);
            f << R"({"name":"pow2","kind":"table","table":[)";
            for (int n = 0; n <= 8; ++n)
                f << (n ? "," : "") << "[" << n << ",\"" << (1 << n) << "\"]";
            f << "]}";
        }
        const CliResult r = run({"construct-weight", "--table", path, "--horizon", "4"});
        CHECK(r.code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j["result"]["table"][1][1] == "4");
        const CliResult too_far = run({"construct-weight", "--table", path, "--horizon", "10"});
        CHECK(too_far.code == 2);
        std::remove(path.c_str());
    }
    SECTION("split on a cocycle file") {
        const std::string path = "split_test.json";
        {
            std::ofstream f(path);
            f << R"({"xi":[{"monomial":[1,0],"value":"v*u"}]})";
        }
        const CliResult r = run({"split", "--xi", path, "--degree", "4", "--samples", "50",
                                 "--seed", "7"});
        CHECK(r.code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j["witness"]["c"] == "u");
        CHECK(j["witness"]["b_prime"] == "(v, -v*u)");
        std::remove(path.c_str());
    }
    SECTION("malformed JSON is a usage error") {
        const std::string path = "malformed_test.json";
        {
            std::ofstream f(path);
            f << "{not json";
        }
        CHECK(run({"split", "--xi", path}).code == 2);
        CHECK(run({"split", "--xi", "no_such_file.json"}).code == 2);
        std::remove(path.c_str());
    }
}

TEST_CASE("reports are byte-identical across runs with the same seed") {
    const std::vector<std::vector<std::string>> commands = {
        {"oracle", "--dim", "16", "--samples", "20", "--degree", "5", "--seed", "42"},
        {"check", "leibniz", "--samples", "30", "--degree", "5", "--seed", "42"},
        {"check", "smooth-equivalence", "--kmax", "2", "--degree", "6", "--samples", "25",
         "--seed", "42"},
        {"check", "m-weighted", "--family", "smooth", "--horizon", "40"},
        {"check", "continuity", "--family", "smooth", "--k", "1", "--degree", "5", "--samples",
         "20", "--seed", "42", "--grid", "8", "--horizon", "40"},
    };
    for (const auto& cmd : commands) {
        const CliResult first = run(cmd);
        const CliResult second = run(cmd);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
    }
}
