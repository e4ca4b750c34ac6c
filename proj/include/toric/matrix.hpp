#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toric/numbers.hpp"

namespace toric {

// Dense row-major matrices over Z and Q.  Values are immutable in spirit:
// every operation returns fresh matrices and never mutates shared state.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<IVec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    IVec row(int r) const;
    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& o) const;
    IVec apply(const IVec& v) const;  // this * v
    Int det() const;                  // via Bareiss, square only
    int rank() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    static RatMatrix identity(int n);
    static RatMatrix from_int(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    RatMatrix transpose() const;
    RatMatrix mul(const RatMatrix& o) const;
    RVec apply(const RVec& v) const;
    RatMatrix add(const RatMatrix& o) const;
    RatMatrix sub(const RatMatrix& o) const;
    RatMatrix scale(const Rat& c) const;
    Rat trace() const;
    bool is_zero() const;
    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

// --- integer lattice normal forms -------------------------------------------

// Row Hermite normal form: H = U*A with U unimodular. H is in row echelon
// shape with positive pivots and entries above each pivot reduced into
// [0, pivot).  Deterministic: the pivot row is the one with the smallest
// nonzero |entry| in the pivot column (ties by row index), which keeps
// intermediate entries small.
struct HnfResult {
    IntMatrix H;
    IntMatrix U;
};
HnfResult hermite_normal_form(const IntMatrix& A);

// Basis of the lattice {x in Z^cols : A x = 0}; the rows of the result are
// primitive and span the full kernel lattice (saturated).
std::vector<IVec> integer_kernel(const IntMatrix& A);

// Column Hermite form of A ((a)x(n)): Hc = A * V with V unimodular; used as a
// normal form for the column lattice of A (coset reduction + membership).
class ColumnLattice {
  public:
    explicit ColumnLattice(const IntMatrix& A);
    // Unique representative of v modulo the column lattice.
    IVec reduce(const IVec& v) const;
    // If v lies in the lattice, returns x with A x = v.
    std::optional<IVec> solve(const IVec& v) const;
    bool contains(const IVec& v) const { return solve(v).has_value(); }
    int ambient() const { return Hc_.rows(); }

  private:
    IntMatrix Hc_;                 // column Hermite form
    IntMatrix V_;                  // A * V = Hc
    std::vector<int> pivot_row_;   // pivot row of each pivot column
};

// --- exact rational linear algebra -------------------------------------------

struct RankKernel {
    int rank = 0;
    std::vector<RVec> kernel;  // basis vectors v with A v = 0
};
RankKernel rank_and_kernel(const RatMatrix& A);

struct LinearSolution {
    std::optional<RVec> particular;  // empty if inconsistent
    std::vector<RVec> kernel;        // affine solution space direction basis
};
LinearSolution solve_linear(const RatMatrix& A, const RVec& b);

std::optional<RatMatrix> inverse(const RatMatrix& A);
Rat det(const RatMatrix& A);

}  // namespace toric
