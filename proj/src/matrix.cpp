#include "toric/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace toric {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IVec>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(int(rows.size()), int(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

IVec IntMatrix::row(int r) const {
    IVec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    IntMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < o.cols_; ++c) p.at(r, c) += a * o.at(k, c);
        }
    return p;
}

IVec IntMatrix::apply(const IVec& v) const {
    IVec out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    return out;
}

// Bareiss fraction-free elimination.
Int IntMatrix::det() const {
    int n = rows_;
    IntMatrix a = *this;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) { p = r; break; }
            if (p < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c) {
                Int t = a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c);
                a.at(r, c) = t / prev;  // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    return n == 0 ? Int(1) : sign * a.at(n - 1, n - 1);
}

int IntMatrix::rank() const { return rank_and_kernel(RatMatrix::from_int(*this)).rank; }

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix RatMatrix::mul(const RatMatrix& o) const {
    RatMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < o.cols_; ++c) p.at(r, c) += a * o.at(k, c);
        }
    return p;
}

RVec RatMatrix::apply(const RVec& v) const {
    RVec out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != 0) out[r] += at(r, c) * v[c];
    return out;
}

RatMatrix RatMatrix::add(const RatMatrix& o) const {
    RatMatrix s = *this;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) s.at(r, c) += o.at(r, c);
    return s;
}

RatMatrix RatMatrix::sub(const RatMatrix& o) const {
    RatMatrix s = *this;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) s.at(r, c) -= o.at(r, c);
    return s;
}

RatMatrix RatMatrix::scale(const Rat& k) const {
    RatMatrix s = *this;
    for (auto& x : s.e_) x *= k;
    return s;
}

Rat RatMatrix::trace() const {
    Rat t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

// --- HNF ---------------------------------------------------------------------

HnfResult hermite_normal_form(const IntMatrix& A) {
    int m = A.rows(), n = A.cols();
    IntMatrix H = A;
    IntMatrix U = IntMatrix::identity(m);
    auto row_combine = [&](int dst, int src, const Int& q) {
        // row[dst] -= q * row[src]
        for (int c = 0; c < n; ++c) H.at(dst, c) -= q * H.at(src, c);
        for (int c = 0; c < m; ++c) U.at(dst, c) -= q * U.at(src, c);
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int c = 0; c < n; ++c) std::swap(H.at(a, c), H.at(b, c));
        for (int c = 0; c < m; ++c) std::swap(U.at(a, c), U.at(b, c));
    };
    auto row_negate = [&](int r) {
        for (int c = 0; c < n; ++c) H.at(r, c) = -H.at(r, c);
        for (int c = 0; c < m; ++c) U.at(r, c) = -U.at(r, c);
    };

    int pr = 0;  // next pivot row
    std::vector<std::pair<int, int>> pivots;
    for (int col = 0; col < n && pr < m; ++col) {
        // gcd elimination in this column below pr, always pivoting on the
        // smallest nonzero magnitude to limit coefficient growth
        while (true) {
            int best = -1;
            for (int r = pr; r < m; ++r) {
                if (H.at(r, col) == 0) continue;
                if (best < 0 || cmp(abs(H.at(r, col)), abs(H.at(best, col))) < 0) best = r;
            }
            if (best < 0) break;
            row_swap(pr, best);
            bool clean = true;
            for (int r = pr + 1; r < m; ++r) {
                if (H.at(r, col) == 0) continue;
                Int q = floor_div(H.at(r, col), H.at(pr, col));
                row_combine(r, pr, q);
                if (H.at(r, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pr < m && H.at(pr, col) != 0) {
            if (H.at(pr, col) < 0) row_negate(pr);
            pivots.emplace_back(pr, col);
            // reduce entries above the pivot into [0, pivot)
            for (int r = 0; r < pr; ++r) {
                Int q = floor_div(H.at(r, col), H.at(pr, col));
                if (q != 0) row_combine(r, pr, q);
            }
            ++pr;
        }
    }
    return {std::move(H), std::move(U)};
}

std::vector<IVec> integer_kernel(const IntMatrix& A) {
    // x with A x = 0  <=>  x^T is an integer combination of rows of I that
    // U maps onto zero rows of H = U * A^T.
    IntMatrix At = A.transpose();
    HnfResult h = hermite_normal_form(At);
    std::vector<IVec> basis;
    for (int r = 0; r < h.H.rows(); ++r) {
        bool zero = true;
        for (int c = 0; c < h.H.cols(); ++c)
            if (h.H.at(r, c) != 0) { zero = false; break; }
        if (zero) basis.push_back(h.U.row(r));
    }
    return basis;
}

ColumnLattice::ColumnLattice(const IntMatrix& A) {
    HnfResult h = hermite_normal_form(A.transpose());
    Hc_ = h.H.transpose();
    V_ = h.U.transpose();
    pivot_row_.assign(Hc_.cols(), -1);
    for (int k = 0; k < Hc_.cols(); ++k)
        for (int r = 0; r < Hc_.rows(); ++r)
            if (Hc_.at(r, k) != 0) { pivot_row_[k] = r; break; }
}

IVec ColumnLattice::reduce(const IVec& v) const {
    IVec a = v;
    for (int k = 0; k < Hc_.cols(); ++k) {
        int r = pivot_row_[k];
        if (r < 0) continue;
        Int q = floor_div(a[r], Hc_.at(r, k));
        if (q == 0) continue;
        for (int i = 0; i < Hc_.rows(); ++i) a[i] -= q * Hc_.at(i, k);
    }
    return a;
}

std::optional<IVec> ColumnLattice::solve(const IVec& v) const {
    IVec a = v;
    IVec y(Hc_.cols());
    for (int k = 0; k < Hc_.cols(); ++k) {
        int r = pivot_row_[k];
        if (r < 0) continue;
        Int rem;
        Int q;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a[r].get_mpz_t(), Hc_.at(r, k).get_mpz_t());
        if (rem != 0) return std::nullopt;
        y[k] = q;
        for (int i = 0; i < Hc_.rows(); ++i) a[i] -= q * Hc_.at(i, k);
    }
    for (const Int& x : a)
        if (x != 0) return std::nullopt;
    return V_.apply(y);
}

// --- rational elimination ----------------------------------------------------

namespace {

// Reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rref(RatMatrix& M) {
    int m = M.rows(), n = M.cols();
    std::vector<int> pivots;
    int pr = 0;
    for (int col = 0; col < n && pr < m; ++col) {
        int sel = -1;
        for (int r = pr; r < m; ++r)
            if (M.at(r, col) != 0) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (int c = 0; c < n; ++c) std::swap(M.at(pr, c), M.at(sel, c));
        Rat inv = 1 / M.at(pr, col);
        for (int c = col; c < n; ++c) M.at(pr, c) *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == pr || M.at(r, col) == 0) continue;
            Rat f = M.at(r, col);
            for (int c = col; c < n; ++c) M.at(r, c) -= f * M.at(pr, c);
        }
        pivots.push_back(col);
        ++pr;
    }
    return pivots;
}

}  // namespace

RankKernel rank_and_kernel(const RatMatrix& A) {
    RatMatrix M = A;
    std::vector<int> pivots = rref(M);
    RankKernel out;
    out.rank = int(pivots.size());
    std::vector<bool> is_pivot(A.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    for (int free = 0; free < A.cols(); ++free) {
        if (is_pivot[free]) continue;
        RVec v(A.cols());
        v[free] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -M.at(int(pi), free);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

LinearSolution solve_linear(const RatMatrix& A, const RVec& b) {
    int m = A.rows(), n = A.cols();
    RatMatrix M(m, n + 1);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) M.at(r, c) = A.at(r, c);
        M.at(r, n) = b[r];
    }
    std::vector<int> pivots = rref(M);
    LinearSolution sol;
    if (!pivots.empty() && pivots.back() == n) return sol;  // 0 = 1 row: inconsistent
    RVec x(n);
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = M.at(int(pi), n);
    sol.particular = std::move(x);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RVec v(n);
        v[free] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -M.at(int(pi), free);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

std::optional<RatMatrix> inverse(const RatMatrix& A) {
    int n = A.rows();
    if (n == 0) return RatMatrix(0, 0);
    RatMatrix M(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) M.at(r, c) = A.at(r, c);
        M.at(r, n + r) = 1;
    }
    std::vector<int> pivots = rref(M);
    if (int(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = M.at(r, n + c);
    return inv;
}

Rat det(const RatMatrix& A) {
    int n = A.rows();
    RatMatrix M = A;
    Rat d = 1;
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (M.at(r, col) != 0) { sel = r; break; }
        if (sel < 0) return 0;
        if (sel != col) {
            for (int c = 0; c < n; ++c) std::swap(M.at(col, c), M.at(sel, c));
            d = -d;
        }
        d *= M.at(col, col);
        Rat inv = 1 / M.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (M.at(r, col) == 0) continue;
            Rat f = M.at(r, col) * inv;
            for (int c = col; c < n; ++c) M.at(r, c) -= f * M.at(col, c);
        }
    }
    return d;
}

}  // namespace toric
