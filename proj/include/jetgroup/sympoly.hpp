#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace jetgroup {

struct SymbolTable {
    std::vector<std::string> names;
    CycloCtx ctx;

    static std::shared_ptr<const SymbolTable> make(std::vector<std::string> names,
                                                   CycloCtx ctx) {
        auto tab = std::make_shared<SymbolTable>();
        tab->names = std::move(names);
        tab->ctx = std::move(ctx);
        return tab;
    }

    int index_of(const std::string& name) const {
        auto it = std::find(names.begin(), names.end(), name);
        return it == names.end() ? -1 : static_cast<int>(it - names.begin());
    }
};

using SymTab = std::shared_ptr<const SymbolTable>;

using Expo = std::vector<int>;

inline int expo_degree(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// graded order: total degree ascending, then lexicographic descending,
// so iteration yields a2^2 before a2*a3 before a3^2 within a degree
struct GradedLex {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = expo_degree(a), db = expo_degree(b);
        if (da != db) return da < db;
        return a > b;
    }
};

class SymPoly {
public:
    explicit SymPoly(SymTab tab) : tab_(std::move(tab)) {}

    SymPoly(SymTab tab, Cyclotomic c) : tab_(std::move(tab)) {
        if (!c.is_zero()) t_.emplace(Expo(tab_->names.size(), 0), std::move(c));
    }

    static SymPoly symbol(const SymTab& tab, int index) {
        SymPoly p(tab);
        Expo e(tab->names.size(), 0);
        e.at(static_cast<std::size_t>(index)) = 1;
        p.t_.emplace(std::move(e), Cyclotomic(tab->ctx, Rational(1)));
        return p;
    }

    const SymTab& table() const { return tab_; }
    const std::map<Expo, Cyclotomic, GradedLex>& terms() const { return t_; }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && expo_degree(t_.begin()->first) == 0);
    }
    bool is_one() const { return is_constant() && !t_.empty() && t_.begin()->second.is_one(); }
    Cyclotomic constant_part() const {
        Expo zero(tab_->names.size(), 0);
        auto it = t_.find(zero);
        return it == t_.end() ? Cyclotomic(tab_->ctx) : it->second;
    }
    bool is_integral() const {
        for (const auto& [e, c] : t_)
            if (!c.is_integral()) return false;
        return true;
    }

    SymPoly operator-() const {
        SymPoly r(tab_);
        for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }
    SymPoly& operator+=(const SymPoly& o) {
        check_domain(o);
        if (this == &o) {
            const SymPoly copy = o;
            return *this += copy;
        }
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    SymPoly& operator-=(const SymPoly& o) {
        check_domain(o);
        if (this == &o) {
            t_.clear();
            return *this;
        }
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
        a.check_domain(b);
        SymPoly r(a.tab_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Expo e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    SymPoly& operator/=(const SymPoly& o) { return *this *= o.inverse(); }

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator/(SymPoly a, const SymPoly& b) { return a /= b; }

    SymPoly inverse() const {
        if (is_zero()) throw DivisionByNonUnit("inverse of zero");
        if (!is_constant())
            throw DivisionByNonUnit("inverse of a non-constant polynomial");
        return SymPoly(tab_, constant_part().inverse());
    }

    Cyclotomic evaluate(const std::vector<Cyclotomic>& values) const {
        if (values.size() != tab_->names.size())
            throw DimensionMismatch("evaluate needs one value per symbol");
        Cyclotomic acc(tab_->ctx);
        for (const auto& [e, c] : t_) {
            Cyclotomic term = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) term *= values[i];
            acc += term;
        }
        return acc;
    }

    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.tab_->names == b.tab_->names && a.tab_->ctx->p == b.tab_->ctx->p &&
               a.t_ == b.t_;
    }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }
    friend bool operator<(const SymPoly& a, const SymPoly& b) {
        return std::lexicographical_compare(
            a.t_.begin(), a.t_.end(), b.t_.begin(), b.t_.end(),
            [](const auto& x, const auto& y) {
                GradedLex less;
                if (less(x.first, y.first)) return true;
                if (less(y.first, x.first)) return false;
                return x.second < y.second;
            });
    }

    SymPoly zero_like() const { return SymPoly(tab_); }
    SymPoly one_like() const { return SymPoly(tab_, Cyclotomic(tab_->ctx, Rational(1))); }
    SymPoly from_int_like(long n) const {
        return SymPoly(tab_, Cyclotomic(tab_->ctx, Rational(n)));
    }
    bool same_domain(const SymPoly& o) const {
        return tab_->names == o.tab_->names && tab_->ctx->p == o.tab_->ctx->p;
    }

    // common-denominator coefficient text, e.g. "(1-4*w)/3*a2^3 - 13*a2^6";
    // terms from highest symbol degree down
    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [e, c] = *it;
            auto [body, negative] = coeff_text(c);
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            std::string mono = mono_text(e);
            if (mono.empty()) {
                out += body;
            } else if (body == "1") {
                out += mono;
            } else {
                out += body + "*" + mono;
            }
        }
        return out;
    }

private:
    void check_domain(const SymPoly& o) const {
        if (!same_domain(o)) throw DomainMismatch("mixed symbolic domains");
    }

    void add_term(const Expo& e, Cyclotomic c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    std::string mono_text(const Expo& e) const {
        std::string out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += tab_->names[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
        return out;
    }

    // renders |coeff| over a common denominator and reports the leading sign
    std::pair<std::string, bool> coeff_text(const Cyclotomic& c) const {
        const auto& coords = c.coords();
        BigInt den(1);
        int lead = 0;
        bool have_lead = false;
        int nonzero = 0;
        for (const auto& r : coords) {
            if (r.is_zero()) continue;
            ++nonzero;
            if (!have_lead) {
                lead = r.sign();
                have_lead = true;
            }
            BigInt d = r.denominator();
            den = den / gcd(den, d) * d;
        }
        const bool negative = lead < 0;
        const std::string sym = tab_->ctx->p == 4 ? "i" : "w";
        std::string body;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i].is_zero()) continue;
            Rational scaled = coords[i] * Rational(den);
            if (negative) scaled = -scaled;
            BigInt m = scaled.numerator();
            if (body.empty()) {
                if (m < 0) body += "-";
            } else {
                body += m < 0 ? "-" : "+";
            }
            BigInt a = abs(m);
            if (i == 0) {
                body += a.get_str();
            } else {
                if (a != 1) body += a.get_str() + "*";
                body += sym;
                if (i > 1) body += "^" + std::to_string(i);
            }
        }
        const bool wrap = nonzero > 1 || den != 1;
        if (wrap) body = "(" + body + ")";
        if (den != 1) body += "/" + den.get_str();
        return {body, negative};
    }

    SymTab tab_;
    std::map<Expo, Cyclotomic, GradedLex> t_;
};

}  // namespace jetgroup
