#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toric/eigen_numeric.hpp"
#include "toric/matrix.hpp"

using namespace toric;

namespace {

IntMatrix im(std::vector<std::vector<long>> rows) {
    IntMatrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[size_t(r)][size_t(c)];
    return m;
}

RatMatrix rm(std::vector<std::vector<long>> rows) { return RatMatrix::from_int(im(rows)); }

bool in_reduced_hnf(const IntMatrix& H) {
    int prev_pivot = -1;
    for (int r = 0; r < H.rows(); ++r) {
        int pivot = -1;
        for (int c = 0; c < H.cols(); ++c)
            if (H.at(r, c) != 0) { pivot = c; break; }
        if (pivot < 0) {
            for (int rr = r; rr < H.rows(); ++rr)
                for (int c = 0; c < H.cols(); ++c)
                    if (H.at(rr, c) != 0) return false;
            return true;
        }
        if (pivot <= prev_pivot) return false;
        if (H.at(r, pivot) <= 0) return false;
        for (int rr = 0; rr < r; ++rr)
            if (H.at(rr, pivot) < 0 || H.at(rr, pivot) >= H.at(r, pivot)) return false;
        prev_pivot = pivot;
    }
    return true;
}

}  // namespace

TEST_CASE("hnf on diagonal and permutation inputs") {
    auto [H1, U1] = hermite_normal_form(im({{2, 0}, {0, 3}}));
    CHECK(H1 == im({{2, 0}, {0, 3}}));
    CHECK(U1 == IntMatrix::identity(2));

    auto [H2, U2] = hermite_normal_form(im({{0, 1}, {1, 0}}));
    CHECK(H2 == IntMatrix::identity(2));
    CHECK(abs(U2.det()) == 1);
}

TEST_CASE("hnf reduces entries above the pivot") {
    // row reduction of [[2,4],[1,3]] gives echelon [[1,3],[0,2]]; the reduced
    // normal form then brings the 3 into [0,2)
    auto [H, U] = hermite_normal_form(im({{2, 4}, {1, 3}}));
    CHECK(H == im({{1, 1}, {0, 2}}));
    CHECK(U.mul(im({{2, 4}, {1, 3}})) == H);
    CHECK(abs(U.det()) == 1);
}

TEST_CASE("hnf properties on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> val(-9, 9);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix A(dim(rng), dim(rng));
        for (int r = 0; r < A.rows(); ++r)
            for (int c = 0; c < A.cols(); ++c) A.at(r, c) = val(rng);
        auto [H, U] = hermite_normal_form(A);
        CHECK(U.mul(A) == H);
        CHECK(abs(U.det()) == 1);
        CHECK(in_reduced_hnf(H));
    }
}

TEST_CASE("integer kernel is a saturated lattice basis") {
    // kernel of (1, -2, 1)^T ... rows [1,2,3],[4,5,6]
    auto basis = integer_kernel(im({{1, 2, 3}, {4, 5, 6}}));
    REQUIRE(basis.size() == 1);
    IVec k = basis[0];
    if (k[0] < 0)
        for (auto& x : k) x = -x;
    CHECK(k == ivec_of({1, -2, 1}));
}

TEST_CASE("column lattice membership and coset reduction") {
    // image of m -> (m, -m): the P^1 degree map
    IntMatrix G = im({{1}, {-1}});
    ColumnLattice L(G);
    CHECK(L.reduce(ivec_of({2, 0})) == L.reduce(ivec_of({0, 2})));
    CHECK(L.reduce(ivec_of({1, 1})) != L.reduce(ivec_of({0, 1})));
    auto m = L.solve(ivec_of({3, -3}));
    REQUIRE(m.has_value());
    CHECK((*m)[0] == 3);
    CHECK_FALSE(L.solve(ivec_of({1, 0})).has_value());
}

TEST_CASE("rank and kernel") {
    auto rk = rank_and_kernel(RatMatrix::identity(3));
    CHECK(rk.rank == 3);
    CHECK(rk.kernel.empty());

    rk = rank_and_kernel(rm({{1, 1}, {2, 2}}));
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel.size() == 1);
    CHECK(rk.kernel[0][0] * 1 + rk.kernel[0][1] * 1 == 0);

    rk = rank_and_kernel(rm({{1, 2, 3}, {4, 5, 6}}));
    CHECK(rk.rank == 2);
    REQUIRE(rk.kernel.size() == 1);
    // proportional to (1, -2, 1)
    CHECK(rk.kernel[0][0] - rk.kernel[0][2] == 0);
    CHECK(rk.kernel[0][1] + 2 * rk.kernel[0][2] == 0);
}

TEST_CASE("rank-nullity and exact kernel on random matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> val(-6, 6);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        RatMatrix A(dim(rng), dim(rng));
        for (int r = 0; r < A.rows(); ++r)
            for (int c = 0; c < A.cols(); ++c) A.at(r, c) = Rat(val(rng));
        auto rk = rank_and_kernel(A);
        CHECK(rk.rank + int(rk.kernel.size()) == A.cols());
        for (const RVec& v : rk.kernel) {
            RVec Av = A.apply(v);
            for (const Rat& x : Av) CHECK(x == 0);
        }
    }
}

TEST_CASE("solve_linear examples") {
    auto s = solve_linear(RatMatrix::identity(2), {Rat(1), Rat(2)});
    REQUIRE(s.particular.has_value());
    CHECK((*s.particular)[0] == 1);
    CHECK((*s.particular)[1] == 2);
    CHECK(s.kernel.empty());

    s = solve_linear(rm({{1, 1}}), {Rat(0)});
    REQUIRE(s.particular.has_value());
    CHECK((*s.particular)[0] == 0);
    CHECK((*s.particular)[1] == 0);
    REQUIRE(s.kernel.size() == 1);
    CHECK(s.kernel[0][0] + s.kernel[0][1] == 0);

    s = solve_linear(rm({{1}, {1}}), {Rat(1), Rat(2)});
    CHECK_FALSE(s.particular.has_value());
}

TEST_CASE("eigen_numeric examples") {
    double tol = 1e-9;
    auto eig = eigen_numeric(rm({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}), tol);
    REQUIRE(eig.size() == 3);
    CHECK(eig[0].value.real() == doctest::Approx(1).epsilon(1e-9));
    CHECK(eig[1].value.real() == doctest::Approx(2).epsilon(1e-9));
    CHECK(eig[2].value.real() == doctest::Approx(3).epsilon(1e-9));

    eig = eigen_numeric(rm({{0, 1}, {0, 0}}), tol);
    REQUIRE(eig.size() == 1);
    CHECK(eig[0].multiplicity == 2);
    CHECK(std::abs(eig[0].value) < 1e-7);

    // companion matrix of x^2 - 3x + 2
    eig = eigen_numeric(rm({{0, -2}, {1, 3}}), tol);
    REQUIRE(eig.size() == 2);
    CHECK(eig[0].value.real() == doctest::Approx(1).epsilon(1e-9));
    CHECK(eig[1].value.real() == doctest::Approx(2).epsilon(1e-9));
}

TEST_CASE("eigen_numeric recovers integer roots of companion matrices") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> root(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<long> roots;
        for (int i = 0; i < 4; ++i) roots.push_back(root(rng));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        // monic polynomial with these roots, companion matrix
        std::vector<Rat> coef{Rat(1)};
        for (long r : roots) {
            std::vector<Rat> next(coef.size() + 1);
            for (size_t i = 0; i < coef.size(); ++i) {
                next[i + 1] += coef[i];
                next[i] -= Rat(r) * coef[i];
            }
            coef = next;  // coef[i] = coefficient of x^i
        }
        int d = int(coef.size()) - 1;
        RatMatrix C(d, d);
        for (int r = 0; r < d; ++r) C.at(r, d - 1) = -coef[size_t(r)];
        for (int r = 1; r < d; ++r) C.at(r, r - 1) = 1;
        auto eig = eigen_numeric(C, 1e-9);
        REQUIRE(eig.size() == roots.size());
        for (size_t i = 0; i < roots.size(); ++i) {
            CHECK(eig[i].value.real() == doctest::Approx(double(roots[i])).epsilon(1e-8));
            CHECK(std::abs(eig[i].value.imag()) < 1e-8);
        }
    }
}

TEST_CASE("eigen_numeric dimension cap faults") {
    CHECK_THROWS_AS(eigen_numeric(RatMatrix::identity(11), 1e-9, 10), InputError);
}
