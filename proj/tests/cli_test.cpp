#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <jetgroup/jetgroup.hpp>

#include "testutil.hpp"

namespace {

using namespace jetgroup;
namespace fs = std::filesystem;

const fs::path& tmp_dir() {
    static const fs::path d = [] {
        fs::path p = fs::temp_directory_path() /
                     ("jetgroup_cli_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return d;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

fs::path unique_path(const std::string& stem) {
    static int seq = 0;
    return tmp_dir() / (stem + "_" + std::to_string(seq++));
}

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args, const std::string& stdin_path = "") {
    const fs::path base = unique_path("run");
    const fs::path out = base.string() + ".out";
    const fs::path err = base.string() + ".err";
    std::string cmd = std::string("\"") + JETGROUP_CLI_PATH + "\" " + args;
    if (!stdin_path.empty()) cmd += " < " + stdin_path;
    cmd += " > " + out.string() + " 2> " + err.string();
    const int st = std::system(cmd.c_str());
    CliResult r;
    if (WIFEXITED(st)) r.code = WEXITSTATUS(st);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

template <ScalarRing S>
fs::path write_series(const std::string& stem, const Series<S>& s) {
    const fs::path p = unique_path(stem).string() + ".json";
    spit(p, series_to_json(s).dump());
    return p;
}

template <ScalarRing S>
std::string canonical(const Series<S>& s) {
    return series_to_json(s).dump(2) + "\n";
}

void expect_error_doc(const CliResult& r) {
    const auto j = ordered_json::parse(r.err);
    ASSERT_TRUE(j.is_object());
    EXPECT_TRUE(j.at("error").is_string());
    EXPECT_TRUE(j.at("message").is_string());
}

TEST(Cli, ComposeWithIdentity) {
    Series<Rational> f(1, 4, Rational());
    f.set_coeff(0, {1}, Rational(1));
    f.set_coeff(0, {2}, Rational(1));
    f.set_coeff(0, {3}, tu::frac(1, 2));
    const auto fp = write_series("f", f);
    const auto ip = write_series("id", Series<Rational>::identity(1, 4, Rational()));

    const CliResult left = run_cli("compose " + ip.string() + " " + fp.string());
    EXPECT_EQ(left.code, 0);
    EXPECT_EQ(left.out, canonical(f));

    const CliResult right = run_cli("compose " + fp.string() + " " + ip.string());
    EXPECT_EQ(right.code, 0);
    EXPECT_EQ(right.out, canonical(f));
}

TEST(Cli, InvertQuadratic) {
    const Series<Rational> f = tu::series1({1, 1, 0, 0, 0, 0});
    const auto fp = write_series("quad", f);
    const CliResult r = run_cli("invert " + fp.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, canonical(invert(GroupElement{f}).series()));
    EXPECT_EQ(r.out, canonical(tu::series1({1, -1, 2, -5, 14, -42})));
}

TEST(Cli, PowerHandlesNegativeExponents) {
    const Series<Rational> f = tu::series1({1, 2, -1, 3});
    const auto fp = write_series("pow", f);
    const CliResult inv = run_cli("invert " + fp.string());
    const CliResult neg = run_cli("power " + fp.string() + " -- -1");
    EXPECT_EQ(neg.code, 0);
    EXPECT_EQ(neg.out, inv.out);

    const CliResult sq = run_cli("power " + fp.string() + " 2");
    const GroupElement<Rational> g{f};
    EXPECT_EQ(sq.out, canonical(power(g, 2).series()));

    const CliResult zero = run_cli("power " + fp.string() + " 0");
    EXPECT_EQ(zero.out, canonical(Series<Rational>::identity(1, 4, Rational())));
}

TEST(Cli, OrderReportsPeriodicInvolution) {
    const auto fp = write_series("inv2", tu::series1({-1, 0, 0}));
    const CliResult r = run_cli("order " + fp.string());
    EXPECT_EQ(r.code, 0);
    const auto j = ordered_json::parse(r.out);
    EXPECT_EQ(j.at("periodic"), true);
    EXPECT_EQ(j.at("order"), 2);
    EXPECT_EQ(j.at("matrix_order"), 2);
    EXPECT_TRUE(j.at("reason").is_null());
}

TEST(Cli, OrderReportsObstructions) {
    const auto tail = write_series("tail", tu::series1({1, 1}));
    const auto j1 = ordered_json::parse(run_cli("order " + tail.string()).out);
    EXPECT_EQ(j1.at("periodic"), false);
    EXPECT_TRUE(j1.at("order").is_null());
    EXPECT_EQ(j1.at("matrix_order"), 1);
    EXPECT_EQ(j1.at("reason"), "series_not_periodic");

    const auto twox = write_series("twox", tu::series1({2, 0}));
    const auto j2 =
        ordered_json::parse(run_cli("order " + twox.string() + " --bound 7").out);
    EXPECT_EQ(j2.at("periodic"), false);
    EXPECT_TRUE(j2.at("matrix_order").is_null());
    EXPECT_EQ(j2.at("reason"), "matrix_not_periodic_within_bound");
}

TEST(Cli, GenPeriodicScalarFromSeedDocument) {
    const fs::path seeds = unique_path("seeds").string() + ".json";
    spit(seeds, R"({"p": 2, "seeds": [
        {"component": 1, "exponents": [2], "coeff": 1}
    ]})");
    const fs::path out = unique_path("gen").string() + ".json";
    const CliResult gen = run_cli("-o " + out.string() +
                                  " gen-periodic --mode scalar --seeds " +
                                  seeds.string() + " --order 6");
    ASSERT_EQ(gen.code, 0) << gen.err;
    EXPECT_TRUE(gen.out.empty());

    PeriodicSeedSet<Rational> lib_seeds;
    HomPart<Rational> u(1, 2, Rational());
    u.add_term(0, Monomial{2}, Rational(1));
    lib_seeds.emplace(2, u);
    const auto expected =
        gen_periodic_scalar(2, 1, lib_seeds, 6, Rational()).series();
    EXPECT_EQ(slurp(out), canonical(expected));

    const CliResult chk = run_cli("check-period " + out.string() + " 2");
    EXPECT_EQ(chk.code, 0);
    const auto j = ordered_json::parse(chk.out);
    EXPECT_EQ(j.at("p"), 2);
    EXPECT_EQ(j.at("periodic"), true);

    // an explicit --p must agree with the document
    const CliResult clash = run_cli("gen-periodic --mode scalar --p 3 --seeds " +
                                    seeds.string() + " --order 6");
    EXPECT_EQ(clash.code, 1);
    expect_error_doc(clash);
}

TEST(Cli, ConjugateModeAndConjugatorInvertEachOther) {
    Series<Rational> psi = Series<Rational>::identity(1, 5, Rational());
    psi.set_coeff(0, {2}, Rational(1));
    psi.set_coeff(0, {4}, tu::frac(-2, 3));
    const auto pp = write_series("psi", psi);

    const fs::path gpath = unique_path("conj").string() + ".json";
    const CliResult gen =
        run_cli("-o " + gpath.string() +
                " gen-periodic --mode conjugate --p 2 --lambda 1 --psi " +
                pp.string());
    ASSERT_EQ(gen.code, 0) << gen.err;

    const CliResult chk = run_cli("check-period " + gpath.string() + " 2");
    EXPECT_EQ(ordered_json::parse(chk.out).at("periodic"), true);

    const CliResult back =
        run_cli("conjugator " + gpath.string() + " --p 2 --lambda 1");
    ASSERT_EQ(back.code, 0) << back.err;
    const SeriesVariant v = series_from_text(back.out);
    ASSERT_TRUE(std::holds_alternative<Series<Rational>>(v));
    const GroupElement<Rational> u{std::get<Series<Rational>>(v)};
    const SeriesVariant gv = series_from_text(slurp(gpath));
    const GroupElement<Rational> g{std::get<Series<Rational>>(gv)};
    const GroupElement<Rational> lin{linear_series(jacobian(g.series()), 5, Rational())};
    EXPECT_EQ(compose(u, g), compose(lin, u));
}

TEST(Cli, RelationsFormats) {
    const CliResult text = run_cli("relations --p 2 --max-degree 5");
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("a3 = -a2^2"), std::string::npos);

    const CliResult csv = run_cli("relations --p 2 --max-degree 5 --format csv");
    EXPECT_EQ(csv.out.rfind("degree,expression\n", 0), 0u);

    const CliResult json = run_cli("relations --p 3 --max-degree 7 --format json");
    EXPECT_EQ(json.code, 0);
    const auto j = ordered_json::parse(json.out);
    EXPECT_EQ(j.at("p"), 3);
    EXPECT_EQ(j.at("rows").size(), 2u);

    const CliResult again = run_cli("relations --p 3 --max-degree 7 --format json");
    EXPECT_EQ(again.out, json.out);  // byte-identical reruns
}

TEST(Cli, CSequenceOutput) {
    const CliResult r = run_cli("c-seq --count 5");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-1\n2\n-13\n145\n-2328\n");

    const CliResult g = run_cli("c-seq --count 3 --growth");
    EXPECT_EQ(g.code, 0);
    std::istringstream lines(g.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
        std::istringstream ls(line);
        int k;
        std::string c, rate;
        ASSERT_TRUE(ls >> k >> c >> rate) << line;
        EXPECT_EQ(k, count);
        EXPECT_NE(rate.find('.'), std::string::npos);
    }
    EXPECT_EQ(count, 3);
}

TEST(Cli, DimsPrintsSingleInteger) {
    const CliResult r = run_cli("dims --k 3 --m 1 --n 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "14\n");
}

TEST(Cli, VerifyRunsNamedSuite) {
    const CliResult r = run_cli("verify --suite quadratic-inverse --seed 99");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("[PASS] quadratic-inverse", 0), 0u);

    const CliResult unknown = run_cli("verify --suite no-such-suite");
    EXPECT_EQ(unknown.code, 1);
    expect_error_doc(unknown);
}

TEST(Cli, StdinDashReadsStandardInput) {
    const Series<Rational> f = tu::series1({1, 0, 1});
    const auto fp = write_series("stdin", f);
    const CliResult file_run = run_cli("invert " + fp.string());
    const CliResult dash_run = run_cli("invert -", fp.string());
    EXPECT_EQ(dash_run.code, 0);
    EXPECT_EQ(dash_run.out, file_run.out);
}

TEST(Cli, ParseFailuresExitTwo) {
    const fs::path broken = unique_path("broken").string() + ".json";
    spit(broken, "{");
    const CliResult bad_json = run_cli("invert " + broken.string());
    EXPECT_EQ(bad_json.code, 2);
    expect_error_doc(bad_json);

    const CliResult missing = run_cli("invert " + unique_path("nope").string());
    EXPECT_EQ(missing.code, 2);

    EXPECT_EQ(run_cli("").code, 2);
    EXPECT_EQ(run_cli("frobnicate").code, 2);
    EXPECT_EQ(run_cli("relations --max-degree 5").code, 2);
    EXPECT_EQ(run_cli("gen-periodic --mode bogus --p 2 --order 3").code, 2);
    EXPECT_EQ(run_cli("--help").code, 0);
}

TEST(Cli, DomainFailuresExitOne) {
    Series<Rational> flat(1, 3, Rational());
    flat.set_coeff(0, {2}, Rational(1));
    const auto fp = write_series("flat", flat);
    const CliResult r = run_cli("invert " + fp.string());
    EXPECT_EQ(r.code, 1);
    expect_error_doc(r);

    const auto rational = write_series("ra", tu::series1({1, 1}));
    const auto ctx = CyclotomicContext::make(3);
    Series<Cyclotomic> c(1, 2, Cyclotomic(ctx));
    c.set_coeff(0, {1}, Cyclotomic::omega(ctx));
    const auto cy = write_series("cy", c);
    const CliResult mixed =
        run_cli("compose " + rational.string() + " " + cy.string());
    EXPECT_EQ(mixed.code, 1);
    expect_error_doc(mixed);

    EXPECT_EQ(run_cli("relations --p 1 --max-degree 5").code, 1);
    EXPECT_EQ(run_cli("dims --k 1 --m 0 --n 0").code, 1);
}

}  // namespace
