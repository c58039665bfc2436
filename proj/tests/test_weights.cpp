#include <catch2/catch_amalgamated.hpp>

#include "talg/weights.hpp"

using namespace talg;

TEST_CASE("catalog values") {
    CHECK(catalog().size() == 3);
    CHECK(catalog()[0].generator(2).at(3) == 16);
    CHECK(WeightFamily::smooth().generator(2).at(3) == 16);
    CHECK(WeightFamily::formal().generator(3).at(5) == 0);
    CHECK(WeightFamily::formal().generator(3).at(2) == 1);
    CHECK(WeightFamily::holomorphic().generator(2).at(4) == 16);
    SECTION("finite radius generators climb toward R") {
        const WeightFamily f = WeightFamily::holomorphic(Rational(1, 2));
        CHECK(f.generator(1).at(1) == Rational(1, 4));
        CHECK(f.generator(3).at(2) == Rational(9, 64));  // (3/8)^2
        CHECK(f.generator(1).at(0) == 1);
    }
    CHECK_THROWS_AS(WeightFamily::holomorphic(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(WeightFamily::holomorphic(Rational(-1)), std::invalid_argument);
    CHECK_THROWS_AS(WeightFamily::by_name("nope"), std::invalid_argument);
}

TEST_CASE("Koethe axioms") {
    CHECK(check_kothe(WeightFamily::smooth().with_index_bound(5), 100).verdict == Verdict::verified);
    // Formal needs generator n+1 to witness (P1) at position n.
    CHECK(check_kothe(WeightFamily::formal().with_index_bound(101), 100).verdict ==
          Verdict::verified);
    // Bounded search cannot witness (P1) for formal past the index bound.
    CHECK(check_kothe(WeightFamily::formal().with_index_bound(5), 100).verdict ==
          Verdict::no_witness_within_bounds);

    const WeightFamily bad = WeightFamily::from_table("bad", {Rational(0), Rational(1)});
    const CheckReport rep = check_kothe(bad, 1);
    CHECK(rep.verdict == Verdict::counterexample);
    CHECK(rep.counterexample["axiom"] == "P1");
}

TEST_CASE("weighted-set witnesses match the worked examples") {
    for (const WeightFamily& f : {WeightFamily::smooth().with_index_bound(6),
                                  WeightFamily::holomorphic().with_index_bound(6),
                                  WeightFamily::formal().with_index_bound(6)}) {
        const CheckReport rep = check_weighted(f, 60);
        REQUIRE(rep.verdict == Verdict::verified);
        for (const auto& w : rep.witness) {
            CHECK(w["prime"] == w["generator"]);  // p' = p
            CHECK(w["C"] == "1");
        }
    }
}

TEST_CASE("m-weighted verdicts") {
    CHECK(check_m_weighted(WeightFamily::smooth().with_index_bound(4), 80).verdict ==
          Verdict::verified);
    CHECK(check_m_weighted(WeightFamily::holomorphic().with_index_bound(4), 80).verdict ==
          Verdict::verified);
    CHECK(check_m_weighted(WeightFamily::formal().with_index_bound(4), 80).verdict ==
          Verdict::verified);
    // (i+j)! exceeds i! j! as soon as i, j >= 1.
    const WeightFamily fac = WeightFamily::from_table(
        "factorial", {Rational(1), Rational(1), Rational(2), Rational(6), Rational(24)});
    const CheckReport rep = check_m_weighted(fac, 2);
    CHECK(rep.verdict == Verdict::counterexample);
}

TEST_CASE("monotonicity verdicts") {
    CHECK(check_monotone(WeightFamily::smooth().with_index_bound(5), 100).verdict ==
          Verdict::verified);
    CHECK(check_monotone(WeightFamily::holomorphic().with_index_bound(5), 100).verdict ==
          Verdict::verified);
    const CheckReport rep = check_monotone(WeightFamily::formal().with_index_bound(5), 100);
    REQUIRE(rep.verdict == Verdict::counterexample);
    CHECK(rep.counterexample["generator"] == 1);
    CHECK(rep.counterexample["i"] == 0);
}

TEST_CASE("convolution") {
    const WeightSeq s1 = WeightFamily::smooth().generator(1);
    CHECK(convolve(s1, s1, 10).at(2) == 10);  // 1*3 + 2*2 + 3*1
    const WeightSeq h2 = WeightFamily::holomorphic().generator(2);
    CHECK(convolve(h2, h2, 10).at(3) == 32);  // (3+1) * 2^3
}

TEST_CASE("convolution is commutative and bilinear") {
    const WeightSeq a = WeightFamily::smooth().generator(2);
    const WeightSeq b = WeightFamily::holomorphic().generator(3);
    const WeightSeq c = WeightFamily::smooth().generator(1);
    const auto ab = convolve(a, b, 12).tabulate(12);
    const auto ba = convolve(b, a, 12).tabulate(12);
    CHECK(ab == ba);
    CHECK(convolve(a, b, 12).at(0) == a.at(0) * b.at(0));
    // (a + c) * b = a*b + c*b, checked pointwise.
    std::vector<Rational> sum;
    for (std::int64_t n = 0; n <= 12; ++n) sum.push_back(a.at(n) + c.at(n));
    const WeightSeq a_plus_c = WeightSeq::from_table("a+c", sum);
    const auto lhs = convolve(a_plus_c, b, 12).tabulate(12);
    const auto cb = convolve(c, b, 12).tabulate(12);
    for (std::size_t n = 0; n <= 12; ++n) CHECK(lhs[n] == ab[n] + cb[n]);
}

TEST_CASE("dominance witnesses reproduce the corollary exponents") {
    const WeightFamily smooth = WeightFamily::smooth().with_index_bound(8);
    const auto sq = convolution_square(smooth.with_index_bound(3), 60);
    const CheckReport rep = check_dominated(sq, smooth, 60, "conv:smooth");
    REQUIRE(rep.verdict == Verdict::witness_found);
    for (std::size_t k = 1; k <= 3; ++k) {
        CHECK(rep.witness[k - 1]["generator"] == 2 * k + 1);
        CHECK(rep.witness[k - 1]["C"] == "1");
    }

    const WeightFamily hol = WeightFamily::holomorphic().with_index_bound(8);
    const auto hq = convolution_square(hol.with_index_bound(3), 60);
    const CheckReport hrep = check_dominated(hq, hol, 60, "conv:holomorphic");
    REQUIRE(hrep.verdict == Verdict::witness_found);
    for (std::size_t k = 1; k <= 3; ++k) {
        CHECK(hrep.witness[k - 1]["generator"] == 2 * k);
        CHECK(hrep.witness[k - 1]["C"] == "1");
    }

    const std::vector<WeightSeq> ones = {
        WeightSeq("one", [](std::int64_t) { return Rational(1); })};
    const CheckReport orep = check_dominated(ones, smooth, 60, "one");
    REQUIRE(orep.verdict == Verdict::witness_found);
    CHECK(orep.witness[0]["C"] == "1");
}

TEST_CASE("greedy dominating weight") {
    SECTION("p = 2^n") {
        const WeightSeq p("pow2", [](std::int64_t n) {
            return rational_pow(Rational(2), static_cast<std::uint64_t>(n));
        });
        const WeightSeq prime = construct_dominating_weight(p, 6);
        CHECK(prime.at(0) == 1);
        CHECK(prime.at(1) == 4);  // max(p_1/p'_0, max(p_2, 1)) = max(2, 4)
    }
    SECTION("p identically 1 stays 1") {
        const WeightSeq p("one", [](std::int64_t) { return Rational(1); });
        const WeightSeq prime = construct_dominating_weight(p, 8);
        for (std::int64_t n = 0; n <= 8; ++n) CHECK(prime.at(n) == 1);
    }
    SECTION("factorial table passes the built-in postcondition") {
        std::vector<Rational> fac{Rational(1)};
        for (std::int64_t n = 1; n <= 20; ++n) fac.push_back(fac.back() * n);
        const WeightSeq p = WeightSeq::from_table("n!", fac);
        const WeightSeq prime = construct_dominating_weight(p, 10);
        for (std::int64_t i = 0; i <= 10; ++i)
            for (std::int64_t j = 0; j <= 10; ++j)
                CHECK(p.at(i + j) <= prime.at(i) * prime.at(j));
    }
    SECTION("rejects zero entries and short tables") {
        const WeightSeq zero = WeightSeq::from_table("z", {Rational(1), Rational(0), Rational(1)});
        CHECK_THROWS_AS(construct_dominating_weight(zero, 1), std::domain_error);
        const WeightSeq shorttab = WeightSeq::from_table("s", {Rational(1), Rational(2)});
        CHECK_THROWS_AS(construct_dominating_weight(shorttab, 4), std::out_of_range);
    }
}

TEST_CASE("family descriptors round-trip through JSON") {
    const WeightFamily t = WeightFamily::from_table("tbl", {Rational(1), Rational(3, 2)});
    const Json j = t.descriptor();
    const WeightFamily back = WeightFamily::from_descriptor(j);
    CHECK(back.generator(1).at(1) == Rational(3, 2));
    CHECK(back.horizon_bound() == 1);
    CHECK_THROWS(back.generator(1).at(5));

    const Json hol = WeightFamily::holomorphic(Rational(2)).descriptor();
    const WeightFamily hback = WeightFamily::from_descriptor(hol);
    CHECK(hback.generator(1).at(1) == 1);  // r_1 = 2*1/2 = 1
}
