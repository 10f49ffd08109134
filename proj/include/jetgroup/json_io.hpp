#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "expr.hpp"
#include "periodic.hpp"
#include "relations.hpp"
#include "series.hpp"

namespace jetgroup {

using ordered_json = nlohmann::ordered_json;

using SeriesVariant =
    std::variant<Series<Rational>, Series<Cyclotomic>, Series<SymPoly>>;

namespace detail {

template <ScalarRing S>
ordered_json domain_fields(const S& dom) {
    ordered_json j;
    if constexpr (std::is_same_v<S, Rational>) {
        j["p"] = nullptr;
        j["domain"] = "rational";
    } else if constexpr (std::is_same_v<S, Cyclotomic>) {
        j["p"] = dom.context()->p;
        j["domain"] = "cyclotomic";
    } else {
        j["p"] = dom.table()->ctx->p;
        j["domain"] = "symbolic";
        j["symbols"] = dom.table()->names;
    }
    return j;
}

inline const ordered_json& require(const ordered_json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

inline int require_int(const ordered_json& j, const char* key) {
    const auto& v = require(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

}  // namespace detail

template <ScalarRing S>
ordered_json series_to_json(const Series<S>& s) {
    ordered_json j;
    j["n"] = s.vars();
    const ordered_json dom = detail::domain_fields(s.domain());
    for (const auto& [k, v] : dom.items()) j[k] = v;
    j["order"] = s.order();
    ordered_json terms = ordered_json::array();
    for (int i = 0; i < s.vars(); ++i)
        for (const auto& [m, c] : s.component(i)) {
            ordered_json t;
            t["component"] = i + 1;
            t["exponents"] = m;
            t["coeff"] = c.str();
            terms.push_back(std::move(t));
        }
    j["terms"] = std::move(terms);
    return j;
}

template <ScalarRing S>
Series<S> series_terms_from_json(const ordered_json& terms, int n, int order,
                                 const S& exemplar) {
    if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
    Series<S> s(n, order, exemplar);
    for (const auto& t : terms) {
        const int comp = detail::require_int(t, "component");
        if (comp < 1 || comp > n)
            throw ParseError("component " + std::to_string(comp) + " outside 1.." +
                             std::to_string(n));
        const auto& ex = detail::require(t, "exponents");
        if (!ex.is_array() || static_cast<int>(ex.size()) != n)
            throw ParseError("\"exponents\" must list one exponent per variable");
        Monomial m;
        m.reserve(ex.size());
        for (const auto& e : ex) {
            if (!e.is_number_integer() || e.get<int>() < 0)
                throw ParseError("exponents must be non-negative integers");
            m.push_back(e.get<int>());
        }
        const auto& cj = detail::require(t, "coeff");
        S c = exemplar.zero_like();
        if (cj.is_number_integer())
            c = exemplar.from_int_like(cj.get<long>());
        else if (cj.is_string())
            c = parse_scalar(cj.get<std::string>(), exemplar);
        else
            throw ParseError("\"coeff\" must be a string or an integer");
        const int d = mono_degree(m);
        if (d < 1 || d > order)
            throw ParseError("term degree " + std::to_string(d) + " outside 1.." +
                             std::to_string(order));
        s.add_coeff(comp - 1, m, c);
    }
    return s;
}

inline SeriesVariant series_from_json(const ordered_json& j) {
    if (!j.is_object()) throw ParseError("series document must be a JSON object");
    const int n = detail::require_int(j, "n");
    if (n < 1) throw ParseError("\"n\" must be at least 1");
    const int order = detail::require_int(j, "order");
    if (order < 1) throw ParseError("\"order\" must be at least 1");
    const auto& dj = detail::require(j, "domain");
    if (!dj.is_string()) throw ParseError("\"domain\" must be a string");
    const std::string domain = dj.get<std::string>();
    const auto& terms = detail::require(j, "terms");

    if (domain == "rational")
        return series_terms_from_json(terms, n, order, Rational());
    if (domain == "cyclotomic") {
        const int p = detail::require_int(j, "p");
        if (p < 1) throw ParseError("\"p\" must be at least 1");
        return series_terms_from_json(terms, n, order,
                                      Cyclotomic(CyclotomicContext::make(p)));
    }
    if (domain == "symbolic") {
        const int p = detail::require_int(j, "p");
        if (p < 1) throw ParseError("\"p\" must be at least 1");
        const auto& sj = detail::require(j, "symbols");
        if (!sj.is_array()) throw ParseError("\"symbols\" must be an array");
        std::vector<std::string> names;
        for (const auto& s : sj) {
            if (!s.is_string()) throw ParseError("symbol names must be strings");
            names.push_back(s.get<std::string>());
        }
        auto tab = SymbolTable::make(std::move(names), CyclotomicContext::make(p));
        return series_terms_from_json(terms, n, order, SymPoly(tab));
    }
    throw ParseError("unknown domain \"" + domain + "\"");
}

inline SeriesVariant series_from_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return series_from_json(j);
}

template <ScalarRing S>
PeriodicSeedSet<S> seeds_from_json(const ordered_json& terms, int n, int order,
                                   const S& exemplar) {
    const Series<S> s = series_terms_from_json(terms, n, order, exemplar);
    PeriodicSeedSet<S> seeds;
    for (int d = 1; d <= order; ++d) {
        if (!s.has_part(d)) continue;
        HomPart<S> part = part_of(s, d);
        seeds.emplace(d, std::move(part));
    }
    return seeds;
}

inline ordered_json relation_table_json(const RelationTable& t) {
    ordered_json j;
    j["p"] = t.p;
    j["max_degree"] = t.max_degree;
    j["symbols"] = t.symbols->names;
    ordered_json rows = ordered_json::array();
    for (const auto& [d, row] : t.rows) {
        ordered_json r;
        r["degree"] = d;
        r["expression"] = row.str();
        ordered_json terms = ordered_json::array();
        for (const auto& [e, c] : row.terms()) {
            ordered_json t2;
            t2["exponents"] = e;
            ordered_json coords = ordered_json::array();
            for (const auto& x : c.coords()) coords.push_back(x.str());
            t2["coeff"] = std::move(coords);
            terms.push_back(std::move(t2));
        }
        r["terms"] = std::move(terms);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace jetgroup
