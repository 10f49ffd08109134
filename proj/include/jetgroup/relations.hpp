#pragma once

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "periodic.hpp"
#include "sympoly.hpp"

namespace jetgroup {

// the forced coefficients a_{pk+1} of a p-periodic series
// w x + sum a_j x^j, as polynomials in the free coefficients
struct RelationTable {
    int p;
    int max_degree;
    SymTab symbols;
    std::map<int, SymPoly> rows;  // forced degree -> expression
};

inline RelationTable relation_table(int p, int max_degree) {
    if (p < 2) throw PreconditionFailed("period must be at least 2");
    if (max_degree < p + 1)
        throw PreconditionFailed("max degree must reach the first forced degree p+1");

    auto ctx = CyclotomicContext::make(p);
    std::vector<std::string> names;
    for (int j = 2; j <= max_degree; ++j)
        if ((j - 1) % p != 0) names.push_back("a" + std::to_string(j));
    auto tab = SymbolTable::make(std::move(names), ctx);
    const SymPoly domain(tab);

    PeriodicSeedSet<SymPoly> seeds;
    for (int j = 2; j <= max_degree; ++j) {
        if ((j - 1) % p == 0) continue;
        HomPart<SymPoly> part(1, j, domain);
        part.add_term(0, Monomial{j}, SymPoly::symbol(tab, tab->index_of("a" + std::to_string(j))));
        seeds.emplace(j, std::move(part));
    }

    const GroupElement<SymPoly> g = gen_periodic_scalar(p, 1, seeds, max_degree, domain);

    RelationTable table{p, max_degree, tab, {}};
    for (int d = p + 1; d <= max_degree; d += p)
        table.rows.emplace(d, g.series().coeff(0, Monomial{d}));
    return table;
}

// forced odd coefficients of the 2-periodic series -x + x^2 + ...;
// integral by the evenness of the squared-series slices
inline std::vector<BigInt> c_sequence(int count) {
    if (count < 1) throw PreconditionFailed("count must be positive");
    const int order = 2 * count + 1;
    const Rational domain;

    PeriodicSeedSet<Rational> seeds;
    HomPart<Rational> quad(1, 2, domain);
    quad.add_term(0, Monomial{2}, Rational(1));
    seeds.emplace(2, std::move(quad));

    const GroupElement<Rational> g = gen_periodic_scalar(2, 1, seeds, order, domain);

    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 1; k <= count; ++k) {
        const Rational c = g.series().coeff(0, Monomial{2 * k + 1});
        if (!c.is_integer())
            throw NonIntegerCoefficient("forced coefficient at degree " +
                                        std::to_string(2 * k + 1) + " is not an integer");
        out.push_back(c.numerator());
    }
    return out;
}

// k-th root magnitudes |c_k|^{1/k}; the one deliberately inexact output
inline std::vector<std::pair<int, double>> growth_diagnostic(
    const std::vector<BigInt>& cs) {
    if (cs.empty()) throw PreconditionFailed("growth diagnostic needs values");
    std::vector<std::pair<int, double>> out;
    out.reserve(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        BigInt a = abs(cs[i]);
        double root = 0.0;
        if (a != 0) {
            signed long exp2 = 0;
            const double mant = mpz_get_d_2exp(&exp2, a.get_mpz_t());
            const double log_a = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
            root = std::exp(log_a / k);
        }
        out.emplace_back(k, root);
    }
    return out;
}

inline std::string relation_table_text(const RelationTable& t) {
    std::ostringstream os;
    for (const auto& [d, row] : t.rows)
        os << "a" << d << " = " << row.str() << "\n";
    return os.str();
}

inline std::string relation_table_csv(const RelationTable& t) {
    std::ostringstream os;
    os << "degree,expression\n";
    for (const auto& [d, row] : t.rows) os << d << ",\"" << row.str() << "\"\n";
    return os.str();
}

}  // namespace jetgroup
