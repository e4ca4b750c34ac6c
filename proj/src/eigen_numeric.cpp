#include "toric/eigen_numeric.hpp"

#include <Eigen/Dense>

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

std::vector<EigenPair> eigen_numeric(const RatMatrix& A, double tol, int dim_cap) {
    if (A.rows() != A.cols()) throw InputError("eigen_numeric: matrix not square");
    if (A.rows() > dim_cap)
        throw InputError("eigen_numeric: dimension " + std::to_string(A.rows()) +
                         " exceeds cap " + std::to_string(dim_cap));
    if (tol <= 0) throw InputError("eigen_numeric: tolerance must be positive");
    int n = A.rows();
    if (n == 0) return {};

    Eigen::MatrixXd M(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) M(r, c) = to_double(A.at(r, c));

    Eigen::EigenSolver<Eigen::MatrixXd> solver(M, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw EigenFault("eigen_numeric: QR iteration did not converge within Eigen's internal "
                         "iteration budget (m_maxIterationsPerRow * n) for dimension " +
                         std::to_string(n));

    std::vector<std::complex<double>> vals;
    vals.resize(size_t(n));
    for (int i = 0; i < n; ++i) vals[size_t(i)] = solver.eigenvalues()[i];
    std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    // greedy clustering within 10*tol of the cluster centroid
    std::vector<EigenPair> out;
    double radius = 10.0 * tol;
    for (const auto& v : vals) {
        if (!out.empty() && std::abs(v - out.back().value) <= radius) {
            auto& c = out.back();
            c.value = (c.value * double(c.multiplicity) + v) / double(c.multiplicity + 1);
            c.multiplicity += 1;
        } else {
            out.push_back(EigenPair{v, 1});
        }
    }
    return out;
}

}  // namespace toric
