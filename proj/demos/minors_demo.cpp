// Walk through the (n, d) = (5, 3) shift matrix: print X, every maximal
// minor with its leading monomial, and the Buchberger verdict under grevlex.

#include <iostream>

#include "shiftgb/shiftgb.hpp"

int main() {
    using namespace shiftgb;

    const ShiftShape shape(5, 3);
    const MonomialOrder ord = MonomialOrder::grevlex(shape.d);

    const PolyMatrix X = build_shift_matrix(shape, ord, FieldSpec::rationals());
    std::cout << "X for n=" << shape.n << ", d=" << shape.d << ":\n";
    for (int i = 0; i < X.rows(); ++i) {
        for (int j = 0; j < X.cols(); ++j)
            std::cout << (j ? "  " : "  ") << X.at(i, j).str();
        std::cout << '\n';
    }

    std::cout << "\nmaximal minors (deg " << shape.minor_size() << ", "
              << binomial(shape.n, shape.minor_size()) << " of them):\n";
    for (const Minor& m : enumerate_minors(shape, ord, FieldSpec::rationals()))
        std::cout << "  det X_" << m.columns.str() << " = " << m.det.str()
                  << "   (lm " << m.det.leading_monomial().str() << ")\n";

    const GroebnerReport report = check_buchberger(shape, ord);
    std::cout << "\nS-pairs reduced: " << report.pair_count
              << "\nverdict: " << report.verdict() << '\n';
    return 0;
}
