// Complete two independent vectors in Q^5 to a basis using cyclic shifts of
// a single zero-padded vector x = (x1, x2, x3, 0, 0).

#include <iostream>

#include "shiftgb/shiftgb.hpp"

int main() {
    using namespace shiftgb;

    const ShiftShape shape(5, 3);
    const FieldSpec Q = FieldSpec::rationals();
    const long long rows[2][5] = {{1, 2, 0, -1, 3}, {0, 1, 1, 4, -2}};
    ScalarMatrix F(2, 5, Q);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 5; ++j)
            F.set(i, j, Scalar::from_int(rows[i][j], Q));

    const ProblemInstance inst(shape, F);
    const CompletionResult result = solve(inst, Strategy::Grid);

    std::cout << "given " << F.rows() << " vectors in Q^" << shape.n
              << ", found x = (";
    for (std::size_t i = 0; i < result.x.size(); ++i)
        std::cout << (i ? ", " : "") << result.x[i].str();
    std::cout << ")\nattempts = " << result.attempts
              << "\ndet of completed matrix = " << result.det_value.str() << '\n';

    const ScalarMatrix M = assemble_completed_matrix(shape, F, result.x);
    std::cout << "\ncompleted basis (shifts of x, then the given vectors):\n";
    for (int i = 0; i < M.rows(); ++i) {
        std::cout << " ";
        for (int j = 0; j < M.cols(); ++j)
            std::cout << ' ' << M.at(i, j).str();
        std::cout << '\n';
    }
    std::cout << "\nrank check: " << (verify_completion(inst, result.x) ? "basis" : "dependent")
              << '\n';
    return 0;
}
