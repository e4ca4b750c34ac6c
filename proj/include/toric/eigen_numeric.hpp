#pragma once

#include <complex>
#include <vector>

#include "toric/matrix.hpp"

namespace toric {

struct EigenPair {
    std::complex<double> value;
    int multiplicity = 1;
};

// Eigenvalues with algebraic multiplicities of a square rational matrix,
// computed in double precision (balanced Hessenberg reduction + shifted QR
// via Eigen) and clustered within radius 10*tol.  The one floating-point
// entry point of the exact core; everything certificate-bearing stays in Q.
// Faults: dimension above dim_cap, or QR non-convergence.
std::vector<EigenPair> eigen_numeric(const RatMatrix& A, double tol, int dim_cap = 200);

}  // namespace toric
