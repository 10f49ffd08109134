// Command-line surface: every library operation with file-based series I/O.
// Exit codes: 0 success, 1 domain error, 2 parse error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include <jetgroup/jetgroup.hpp>

namespace jg = jetgroup;

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw jg::ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

jg::ordered_json parse_json_file(const std::string& path) {
    try {
        return jg::ordered_json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw jg::ParseError(path + ": invalid JSON: " + e.what());
    }
}

jg::SeriesVariant load_series(const std::string& path) {
    return jg::series_from_json(parse_json_file(path));
}

std::string dump(const jg::ordered_json& j) { return j.dump(2) + "\n"; }

template <jg::ScalarRing S>
std::string dump_series(const jg::Series<S>& s) {
    return dump(jg::series_to_json(s));
}

// ---- options ------------------------------------------------------------

struct UnaryOpts {
    std::string input;
    long m = 0;        // power exponent
    long bound = 1000; // order search bound
    long p = 0;        // check-period
};

struct GenOpts {
    std::string mode;
    std::string seeds_path;
    std::string psi_path;
    std::string domain;
    int p = 0;
    int n = 0;
    int order = 0;
    std::vector<long> lambda;
};

struct ConjOpts {
    std::string input;
    int p = 0;
    std::vector<long> lambda;
};

struct RelOpts {
    int p = 0;
    int max_degree = 0;
    std::string format = "text";
};

struct CseqOpts {
    int count = 0;
    bool growth = false;
};

struct DimsOpts {
    long k = 0, m = 0, n = 0;
};

struct VerifyOpts {
    std::string suite = "all";
    std::uint64_t seed = 12345;
};

// ---- command bodies -----------------------------------------------------

std::string run_compose(const std::string& a_path, const std::string& b_path) {
    const jg::SeriesVariant a = load_series(a_path);
    const jg::SeriesVariant b = load_series(b_path);
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            const T* y = std::get_if<T>(&b);
            if (!y) throw jg::DomainMismatch("operands live in different scalar domains");
            const auto r = jg::compose(jg::GroupElement{x}, jg::GroupElement{*y});
            return dump_series(r.series());
        },
        a);
}

std::string run_invert(const std::string& path) {
    return std::visit(
        [](const auto& s) {
            return dump_series(jg::invert(jg::GroupElement{s}).series());
        },
        load_series(path));
}

std::string run_power(const std::string& path, long m) {
    return std::visit(
        [m](const auto& s) {
            return dump_series(jg::power(jg::GroupElement{s}, m).series());
        },
        load_series(path));
}

std::string run_order(const std::string& path, long bound) {
    return std::visit(
        [bound](const auto& s) {
            const jg::OrderResult r = jg::order_of(jg::GroupElement{s}, bound);
            jg::ordered_json j;
            j["periodic"] = r.is_periodic();
            if (r.is_periodic())
                j["order"] = r.order;
            else
                j["order"] = nullptr;
            if (r.matrix_order > 0)
                j["matrix_order"] = r.matrix_order;
            else
                j["matrix_order"] = nullptr;
            if (r.is_periodic())
                j["reason"] = nullptr;
            else
                j["reason"] = r.reason();
            return dump(j);
        },
        load_series(path));
}

std::string run_check_period(const std::string& path, long p) {
    return std::visit(
        [p](const auto& s) {
            jg::ordered_json j;
            j["p"] = p;
            j["periodic"] = jg::check_periodic(jg::GroupElement{s}, p);
            return dump(j);
        },
        load_series(path));
}

template <jg::ScalarRing S>
std::string gen_scalar_or_diagonal(const GenOpts& o, const jg::ordered_json* terms,
                                   const S& dom) {
    jg::PeriodicSeedSet<S> seeds;
    if (terms) seeds = jg::seeds_from_json(*terms, o.n, o.order, dom);
    const jg::GroupElement<S> g =
        o.mode == "scalar"
            ? jg::gen_periodic_scalar(o.p, o.n, seeds, o.order, dom)
            : jg::gen_periodic_diagonal(jg::DiagonalSpec(o.p, o.lambda), seeds,
                                        o.order, dom);
    return dump_series(g.series());
}

std::string run_gen_periodic(GenOpts o, const CLI::App* sub) {
    jg::ordered_json seeds_doc;
    const jg::ordered_json* terms = nullptr;
    if (!o.seeds_path.empty()) {
        if (o.mode == "conjugate")
            throw jg::PreconditionFailed("conjugate mode takes --psi, not --seeds");
        seeds_doc = parse_json_file(o.seeds_path);
        if (!seeds_doc.is_object())
            throw jg::ParseError("seed document must be a JSON object");
        if (auto it = seeds_doc.find("p"); it != seeds_doc.end()) {
            if (!it->is_number_integer())
                throw jg::ParseError("seed document field \"p\" must be an integer");
            const int fp = it->get<int>();
            if (sub->count("--p") > 0 && fp != o.p)
                throw jg::PreconditionFailed("--p disagrees with the seed document");
            o.p = fp;
        }
        if (auto it = seeds_doc.find("lambda"); it != seeds_doc.end()) {
            if (!it->is_array())
                throw jg::ParseError("seed document field \"lambda\" must be an array");
            std::vector<long> lf;
            for (const auto& v : *it) {
                if (!v.is_number_integer())
                    throw jg::ParseError("lambda entries must be integers");
                lf.push_back(v.get<long>());
            }
            if (!lf.empty()) {
                if (!o.lambda.empty() && lf != o.lambda)
                    throw jg::PreconditionFailed(
                        "--lambda disagrees with the seed document");
                o.lambda = std::move(lf);
            }
        }
        if (auto it = seeds_doc.find("seeds"); it != seeds_doc.end()) terms = &*it;
    }
    if (o.p == 0) throw jg::PreconditionFailed("periodicity order --p is required");

    if (o.mode == "conjugate") {
        if (o.psi_path.empty())
            throw jg::PreconditionFailed("conjugate mode requires --psi");
        if (o.lambda.empty())
            throw jg::PreconditionFailed("conjugate mode requires --lambda");
        const jg::DiagonalSpec spec(o.p, o.lambda);
        return std::visit(
            [&](const auto& psi) -> std::string {
                if (o.order != 0 && o.order != psi.order())
                    throw jg::PreconditionFailed(
                        "--order disagrees with the conjugating series");
                return dump_series(
                    jg::gen_periodic_conjugate(spec, jg::GroupElement{psi}).series());
            },
            load_series(o.psi_path));
    }

    if (o.mode == "scalar") {
        if (!o.lambda.empty())
            throw jg::PreconditionFailed("scalar mode takes no --lambda");
        if (o.n == 0) o.n = 1;
    } else {  // diag
        if (o.lambda.empty())
            throw jg::PreconditionFailed("diag mode requires --lambda");
        const int nl = static_cast<int>(o.lambda.size());
        if (o.n != 0 && o.n != nl)
            throw jg::PreconditionFailed("--n disagrees with the lambda length");
        o.n = nl;
    }
    if (o.order < 1) throw jg::PreconditionFailed("--order must be at least 1");

    std::string domain = o.domain;
    if (domain.empty()) domain = o.p <= 2 ? "rational" : "cyclotomic";
    if (domain == "rational") return gen_scalar_or_diagonal(o, terms, jg::Rational());
    return gen_scalar_or_diagonal(
        o, terms, jg::Cyclotomic(jg::CyclotomicContext::make(o.p)));
}

std::string run_conjugator(const ConjOpts& o) {
    const jg::DiagonalSpec spec(o.p, o.lambda);
    return std::visit(
        [&](const auto& s) {
            return dump_series(
                jg::build_conjugator(jg::GroupElement{s}, spec).series());
        },
        load_series(o.input));
}

std::string run_relations(const RelOpts& o) {
    const jg::RelationTable t = jg::relation_table(o.p, o.max_degree);
    if (o.format == "json") return dump(jg::relation_table_json(t));
    if (o.format == "csv") return jg::relation_table_csv(t);
    return jg::relation_table_text(t);
}

std::string run_c_seq(const CseqOpts& o) {
    const std::vector<jg::BigInt> cs = jg::c_sequence(o.count);
    std::ostringstream out;
    if (!o.growth) {
        for (const auto& c : cs) out << c.get_str() << "\n";
        return out.str();
    }
    const auto g = jg::growth_diagnostic(cs);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", g[i].second);
        out << g[i].first << " " << cs[i].get_str() << " " << buf << "\n";
    }
    return out.str();
}

std::string run_dims(const DimsOpts& o) {
    return jg::dim_G(o.k, o.m, o.n).get_str() + "\n";
}

int run_verify(const VerifyOpts& o) {
    const auto results = jg::verify::run_suites(o.suite, o.seed);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
                  << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

void emit_error(const std::string& code, const std::string& message) {
    jg::ordered_json j;
    j["error"] = code;
    j["message"] = message;
    std::cerr << j.dump() << "\n";
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw jg::PreconditionFailed("cannot open output file: " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic in truncated formal transformation groups"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("-o,--output", out_path, "write the result to a file instead of stdout");

    std::string result;
    int exit_code = 0;

    // compose A B
    std::string a_path, b_path;
    auto* sc_compose = app.add_subcommand("compose", "substitution product of two series");
    sc_compose->add_option("A", a_path, "outer series file")->required();
    sc_compose->add_option("B", b_path, "inner series file")->required();
    sc_compose->callback([&] { result = run_compose(a_path, b_path); });

    // invert A
    UnaryOpts inv;
    auto* sc_invert = app.add_subcommand("invert", "compositional inverse");
    sc_invert->add_option("A", inv.input, "series file")->required();
    sc_invert->callback([&] { result = run_invert(inv.input); });

    // power A m
    UnaryOpts pow;
    auto* sc_power = app.add_subcommand("power", "m-fold substitution power");
    sc_power->add_option("A", pow.input, "series file")->required();
    sc_power->add_option("m", pow.m, "integer exponent (negative allowed)")->required();
    sc_power->callback([&] { result = run_power(pow.input, pow.m); });

    // order A [--bound]
    UnaryOpts ord;
    auto* sc_order = app.add_subcommand("order", "order of the element, if finite");
    sc_order->add_option("A", ord.input, "series file")->required();
    sc_order->add_option("--bound", ord.bound, "matrix order search bound");
    sc_order->callback([&] { result = run_order(ord.input, ord.bound); });

    // check-period A p
    UnaryOpts chk;
    auto* sc_check = app.add_subcommand("check-period", "test whether the p-th power is the identity");
    sc_check->add_option("A", chk.input, "series file")->required();
    sc_check->add_option("p", chk.p, "period to test")->required();
    sc_check->callback([&] { result = run_check_period(chk.input, chk.p); });

    // gen-periodic
    GenOpts gen;
    auto* sc_gen = app.add_subcommand("gen-periodic", "generate a p-periodic element");
    sc_gen->add_option("--mode", gen.mode, "scalar, diag, or conjugate")
        ->required()
        ->check(CLI::IsMember({"scalar", "diag", "conjugate"}));
    sc_gen->add_option("--p", gen.p, "periodicity order");
    sc_gen->add_option("--lambda", gen.lambda, "diagonal exponents, comma separated")
        ->delimiter(',');
    sc_gen->add_option("--n", gen.n, "number of variables (scalar mode)");
    sc_gen->add_option("--order", gen.order, "truncation order");
    sc_gen->add_option("--seeds", gen.seeds_path, "seed document file");
    sc_gen->add_option("--psi", gen.psi_path, "conjugating series file (conjugate mode)");
    sc_gen->add_option("--domain", gen.domain, "scalar domain")
        ->check(CLI::IsMember({"rational", "cyclotomic"}));
    sc_gen->callback([&] { result = run_gen_periodic(gen, sc_gen); });

    // conjugator A --p --lambda
    ConjOpts conj;
    auto* sc_conj = app.add_subcommand("conjugator", "conjugation to the linear part");
    sc_conj->add_option("A", conj.input, "series file")->required();
    sc_conj->add_option("--p", conj.p, "periodicity order")->required();
    sc_conj->add_option("--lambda", conj.lambda, "diagonal exponents, comma separated")
        ->delimiter(',')
        ->required();
    sc_conj->callback([&] { result = run_conjugator(conj); });

    // relations --p --max-degree [--format]
    RelOpts rel;
    auto* sc_rel = app.add_subcommand("relations", "symbolic forced-coefficient table");
    sc_rel->add_option("--p", rel.p, "periodicity order")->required();
    sc_rel->add_option("--max-degree", rel.max_degree, "largest degree to compute")
        ->required();
    sc_rel->add_option("--format", rel.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sc_rel->callback([&] { result = run_relations(rel); });

    // c-seq --count [--growth]
    CseqOpts cseq;
    auto* sc_cseq = app.add_subcommand("c-seq", "unit-seeded two-periodic integer sequence");
    sc_cseq->add_option("--count", cseq.count, "how many values")->required();
    sc_cseq->add_flag("--growth", cseq.growth, "append k-th root growth estimates");
    sc_cseq->callback([&] { result = run_c_seq(cseq); });

    // dims --k --m --n
    DimsOpts dims;
    auto* sc_dims = app.add_subcommand("dims", "dimension of the depth-m subgroup");
    sc_dims->add_option("--k", dims.k, "truncation order")->required();
    sc_dims->add_option("--m", dims.m, "trivial-through degree")->required();
    sc_dims->add_option("--n", dims.n, "number of variables")->required();
    sc_dims->callback([&] { result = run_dims(dims); });

    // verify --suite --seed
    VerifyOpts ver;
    auto* sc_verify = app.add_subcommand("verify", "run a named verification suite");
    sc_verify->add_option("--suite", ver.suite, "suite name or \"all\"");
    sc_verify->add_option("--seed", ver.seed, "seed for randomized suites");
    sc_verify->callback([&] { exit_code = run_verify(ver); });

    try {
        app.parse(argc, argv);
        write_output(result, out_path);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        emit_error("cli_parse", e.what());
        return 2;
    } catch (const jg::ParseError& e) {
        emit_error(e.code(), e.what());
        return 2;
    } catch (const jg::Error& e) {
        emit_error(e.code(), e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
    return exit_code;
}
