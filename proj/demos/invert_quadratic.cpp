// Inverts x + a x^2 symbolically and prints the signed-Catalan coefficients.

#include <iostream>

#include <jetgroup/jetgroup.hpp>

using namespace jetgroup;

int main() {
    const auto ctx = CyclotomicContext::make(1);
    const auto tab = SymbolTable::make({"a"}, ctx);
    const SymPoly dom{tab};

    Series<SymPoly> f(1, 8, dom);
    f.set_coeff(0, Monomial{1}, dom.one_like());
    f.set_coeff(0, Monomial{2}, SymPoly::symbol(tab, 0));

    const GroupElement<SymPoly> inv = invert(GroupElement<SymPoly>{f});
    std::cout << "inverse of x + a*x^2, truncated at degree 8:\n";
    for (int d = 1; d <= inv.order(); ++d) {
        const SymPoly c = inv.series().coeff(0, Monomial{d});
        if (c.is_zero()) continue;
        std::cout << "  x^" << d << " : " << c.str() << "\n";
    }
    return 0;
}
