// Prints the forced-coefficient tables for small periodicity orders and
// demonstrates a conjugate-generated periodic element.

#include <iostream>

#include <jetgroup/jetgroup.hpp>

using namespace jetgroup;

int main() {
    std::cout << "== two-periodic scalar relations through degree 9 ==\n";
    std::cout << relation_table_text(relation_table(2, 9));

    std::cout << "\n== three-periodic scalar relations through degree 7 ==\n";
    std::cout << relation_table_text(relation_table(3, 7));

    std::cout << "\n== a conjugate-generated 4-periodic element (n=2) ==\n";
    const auto ctx = CyclotomicContext::make(4);
    const Cyclotomic dom{ctx};
    Series<Cyclotomic> psi = Series<Cyclotomic>::identity(2, 5, dom);
    psi.set_coeff(0, Monomial{0, 2}, dom.one_like());
    psi.set_coeff(1, Monomial{2, 1}, -dom.one_like());

    const DiagonalSpec spec(4, {1, 3});
    const GroupElement<Cyclotomic> g =
        gen_periodic_conjugate(spec, GroupElement<Cyclotomic>{psi});
    const OrderResult r = order_of(g);
    std::cout << "order_of reports " << (r.is_periodic() ? "periodic" : "aperiodic")
              << " with order " << r.order << "\n";
    std::cout << series_to_json(g.series()).dump(2) << "\n";
    return 0;
}
