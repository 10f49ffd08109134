#include <gtest/gtest.h>

#include <string>
#include <variant>
#include <vector>

#include <jetgroup/jetgroup.hpp>

#include "testutil.hpp"

namespace {

using namespace jetgroup;

TEST(JsonIo, RationalRoundTrip) {
    Series<Rational> f(2, 4, Rational());
    f.set_coeff(0, {1, 0}, Rational(1));
    f.set_coeff(0, {1, 1}, tu::frac(-5, 3));
    f.set_coeff(1, {0, 1}, Rational(1));
    f.set_coeff(1, {2, 2}, tu::frac(7, 2));

    const ordered_json j = series_to_json(f);
    EXPECT_TRUE(j.at("p").is_null());
    EXPECT_EQ(j.at("domain"), "rational");
    EXPECT_EQ(j.at("n"), 2);
    EXPECT_EQ(j.at("order"), 4);

    const SeriesVariant v = series_from_text(j.dump());
    ASSERT_TRUE(std::holds_alternative<Series<Rational>>(v));
    EXPECT_EQ(std::get<Series<Rational>>(v), f);
}

TEST(JsonIo, CyclotomicRoundTrip) {
    const auto ctx = CyclotomicContext::make(4);
    Series<Cyclotomic> f(1, 3, Cyclotomic(ctx));
    f.set_coeff(0, {1}, Cyclotomic::omega(ctx));
    f.set_coeff(0, {2}, Cyclotomic(ctx, Rational(1)) + Cyclotomic::omega(ctx));
    f.set_coeff(0, {3}, Cyclotomic(ctx, tu::frac(-1, 2)));

    const ordered_json j = series_to_json(f);
    EXPECT_EQ(j.at("p"), 4);
    EXPECT_EQ(j.at("domain"), "cyclotomic");

    const SeriesVariant v = series_from_text(j.dump());
    ASSERT_TRUE(std::holds_alternative<Series<Cyclotomic>>(v));
    EXPECT_EQ(std::get<Series<Cyclotomic>>(v), f);
}

TEST(JsonIo, SymbolicRoundTrip) {
    const auto tab =
        SymbolTable::make({"a2", "a4"}, CyclotomicContext::make(1));
    const SymPoly dom{tab};
    Series<SymPoly> f(1, 5, dom);
    f.set_coeff(0, {1}, dom.one_like());
    f.set_coeff(0, {2}, parse_scalar("a2", dom));
    f.set_coeff(0, {4}, parse_scalar("-a2^2 + a4", dom));

    const ordered_json j = series_to_json(f);
    EXPECT_EQ(j.at("p"), 1);
    EXPECT_EQ(j.at("domain"), "symbolic");
    EXPECT_EQ(j.at("symbols"), ordered_json::array({"a2", "a4"}));

    const SeriesVariant v = series_from_text(j.dump());
    ASSERT_TRUE(std::holds_alternative<Series<SymPoly>>(v));
    EXPECT_EQ(std::get<Series<SymPoly>>(v), f);
}

TEST(JsonIo, CanonicalTermOrder) {
    // output lists terms by component, then degree, then lexicographically
    // descending exponents, no matter the insertion order
    Series<Rational> f(2, 3, Rational());
    f.set_coeff(1, {0, 2}, Rational(6));
    f.set_coeff(0, {0, 2}, Rational(4));
    f.set_coeff(1, {1, 0}, Rational(5));
    f.set_coeff(0, {2, 0}, Rational(2));
    f.set_coeff(0, {1, 1}, Rational(3));
    f.set_coeff(0, {0, 1}, Rational(1));

    const ordered_json j = series_to_json(f);
    const std::vector<std::pair<int, Monomial>> expected = {
        {1, {0, 1}}, {1, {2, 0}}, {1, {1, 1}}, {1, {0, 2}},
        {2, {1, 0}}, {2, {0, 2}},
    };
    ASSERT_EQ(j.at("terms").size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_EQ(j.at("terms")[k].at("component"), expected[k].first) << k;
        EXPECT_EQ(j.at("terms")[k].at("exponents").get<Monomial>(),
                  expected[k].second)
            << k;
    }
}

TEST(JsonIo, UnorderedInputToleratedAndDuplicatesSummed) {
    const std::string text = R"({
        "n": 1, "p": null, "domain": "rational", "order": 3,
        "terms": [
            {"component": 1, "exponents": [3], "coeff": "1/2"},
            {"component": 1, "exponents": [2], "coeff": 2},
            {"component": 1, "exponents": [1], "coeff": "1"},
            {"component": 1, "exponents": [2], "coeff": "3"},
            {"component": 1, "exponents": [3], "coeff": "-1/2"}
        ]
    })";
    const SeriesVariant v = series_from_text(text);
    ASSERT_TRUE(std::holds_alternative<Series<Rational>>(v));
    const auto& f = std::get<Series<Rational>>(v);
    EXPECT_EQ(f.coeff(0, {2}), Rational(5));
    EXPECT_EQ(f.coeff(0, {3}), Rational(0));
    // the cancelled term must not survive into the canonical rendering
    const ordered_json rendered = series_to_json(f);
    for (const auto& t : rendered.at("terms"))
        EXPECT_NE(t.at("exponents").get<Monomial>(), Monomial{3});
}

TEST(JsonIo, ErrorCatalogue) {
    const auto bad = [](const std::string& text) {
        EXPECT_THROW(series_from_text(text), ParseError) << text;
    };
    bad("{");
    bad("[]");
    bad(R"({"order": 2, "domain": "rational", "terms": []})");
    bad(R"({"n": 1, "domain": "rational", "terms": []})");
    bad(R"({"n": 1, "order": 2, "terms": []})");
    bad(R"({"n": 1, "order": 2, "domain": 7, "terms": []})");
    bad(R"({"n": 1, "order": 2, "domain": "real", "terms": []})");
    bad(R"({"n": 0, "order": 2, "domain": "rational", "terms": []})");
    bad(R"({"n": 1, "order": 0, "domain": "rational", "terms": []})");
    bad(R"({"n": 1, "order": 2, "domain": "rational"})");
    bad(R"({"n": 1, "order": 2, "domain": "rational", "terms": {}})");
    bad(R"({"n": 1, "order": 2, "domain": "cyclotomic", "terms": []})");
    bad(R"({"n": 1, "order": 2, "p": 0, "domain": "cyclotomic", "terms": []})");
    bad(R"({"n": 1, "order": 2, "p": 2, "domain": "symbolic", "terms": []})");
    bad(R"({"n": 1, "order": 2, "p": 2, "domain": "symbolic", "symbols": "a",
            "terms": []})");
    bad(R"({"n": 1, "order": 2, "p": 2, "domain": "symbolic", "symbols": [3],
            "terms": []})");

    const auto term = [&bad](const std::string& t) {
        bad(R"({"n": 2, "order": 4, "domain": "rational", "terms": [)" + t +
            "]}");
    };
    term(R"({"exponents": [1, 0], "coeff": 1})");
    term(R"({"component": 1, "coeff": 1})");
    term(R"({"component": 1, "exponents": [1, 0]})");
    term(R"({"component": 0, "exponents": [1, 0], "coeff": 1})");
    term(R"({"component": 3, "exponents": [1, 0], "coeff": 1})");
    term(R"({"component": 1, "exponents": [1], "coeff": 1})");
    term(R"({"component": 1, "exponents": [1, 0, 0], "coeff": 1})");
    term(R"({"component": 1, "exponents": [-1, 2], "coeff": 1})");
    term(R"({"component": 1, "exponents": ["a", 0], "coeff": 1})");
    term(R"({"component": 1, "exponents": [0, 0], "coeff": 1})");
    term(R"({"component": 1, "exponents": [3, 2], "coeff": 1})");
    term(R"({"component": 1, "exponents": [1, 0], "coeff": "q"})");
    term(R"({"component": 1, "exponents": [1, 0], "coeff": null})");
    term(R"({"component": 1, "exponents": [1, 0], "coeff": 1.5})");
}

TEST(JsonIo, SeedsGroupDegrees) {
    const ordered_json terms = ordered_json::parse(R"([
        {"component": 1, "exponents": [2, 0], "coeff": "1/3"},
        {"component": 2, "exponents": [1, 1], "coeff": -2},
        {"component": 1, "exponents": [2, 2], "coeff": 5}
    ])");
    const PeriodicSeedSet<Rational> seeds =
        seeds_from_json(terms, 2, 5, Rational());
    ASSERT_EQ(seeds.size(), 2u);
    ASSERT_TRUE(seeds.count(2));
    ASSERT_TRUE(seeds.count(4));
    EXPECT_EQ(seeds.at(2).comp[0].at({2, 0}), tu::frac(1, 3));
    EXPECT_EQ(seeds.at(2).comp[1].at({1, 1}), Rational(-2));
    EXPECT_EQ(seeds.at(4).comp[0].at({2, 2}), Rational(5));
}

}  // namespace
