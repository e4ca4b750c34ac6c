#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toric/quotient.hpp"

using namespace toric;

namespace {

const std::vector<std::string> X{"x"};
const std::vector<std::string> T3{"t1", "t2", "t3"};

LaurentSystem prism_system() {
    return LaurentSystem({parse_laurent("1 + t1 + t2", T3),
                          parse_laurent("2 - t1 + t1^2 + t2 + 2 t1 t2 + t2^2", T3),
                          parse_laurent("2 - 3 t3 + t3^2", T3)},
                         T3);
}

LaurentSystem deficient_1d() {
    LatticePolytope support = LatticePolytope::convex_hull({ivec_of({0}), ivec_of({2})}, 1);
    return LaurentSystem({parse_laurent("x^2 - x", X)}, X, std::vector<LatticePolytope>{support});
}

}  // namespace

TEST_CASE("saturation keeps torus-only ideals") {
    SaturatedIdeal sat = saturate_to_torus(LaurentSystem({parse_laurent("x^2 - 3 x + 2", X)}, X));
    REQUIRE(sat.gens.size() == 1);
    MonomialOrder ord = sat.order;
    PolyQ expect = poly_from_terms({{Mono{2}, Rat(1)}, {Mono{1}, Rat(-3)}, {Mono{0}, Rat(2)}}, ord);
    CHECK(equal(sat.gens[0], expect));
}

TEST_CASE("saturation removes the branch at the origin") {
    SaturatedIdeal sat = saturate_to_torus(deficient_1d());
    REQUIRE(sat.gens.size() == 1);
    PolyQ expect = poly_from_terms({{Mono{1}, Rat(1)}, {Mono{0}, Rat(-1)}}, sat.order);
    CHECK(equal(sat.gens[0], expect));  // <x - 1>
}

TEST_CASE("prism system has quotient degree 2") {
    SaturatedIdeal sat = saturate_to_torus(prism_system());
    CHECK(sat.zero_dimensional());
    QuotientStructure q = quotient_structure(sat);
    CHECK(q.degree() == 2);
}

TEST_CASE("companion quotient structure") {
    SaturatedIdeal sat = saturate_to_torus(LaurentSystem({parse_laurent("x^2 - 3 x + 2", X)}, X));
    QuotientStructure q = quotient_structure(sat);
    REQUIRE(q.degree() == 2);
    CHECK(q.basis[0] == Mono{0});
    CHECK(q.basis[1] == Mono{1});
    RatMatrix expect(2, 2);
    expect.at(0, 0) = 0;
    expect.at(0, 1) = -2;
    expect.at(1, 0) = 1;
    expect.at(1, 1) = 3;
    CHECK(q.mult[0] == expect);
}

TEST_CASE("constant root quotient") {
    SaturatedIdeal sat = saturate_to_torus(LaurentSystem({parse_laurent("x - 5", X)}, X));
    QuotientStructure q = quotient_structure(sat);
    REQUIRE(q.degree() == 1);
    CHECK(q.mult[0].at(0, 0) == 5);
}

TEST_CASE("positive-dimensional ideals fault") {
    std::vector<std::string> T2{"t1", "t2"};
    LaurentSystem sys({parse_laurent("t1 - 1", T2), parse_laurent("t1 - 1", T2)}, T2);
    SaturatedIdeal sat = saturate_to_torus(sys);
    CHECK_FALSE(sat.zero_dimensional());
    CHECK_THROWS_AS(quotient_structure(sat), NotFiniteFault);
}

TEST_CASE("normal forms") {
    LaurentSystem sys = prism_system();
    SaturatedIdeal sat = saturate_to_torus(sys);
    QuotientStructure q = quotient_structure(sat);
    for (const LaurentPolynomial& f : sys.polys()) {
        RVec v = normal_form_vector(f, sat, q);
        for (const Rat& x : v) CHECK(x == 0);
    }

    // declared-support fixture: J^T = x(2x - 1) reduces to 1 modulo <x - 1>
    LaurentSystem d1 = deficient_1d();
    SaturatedIdeal sat1 = saturate_to_torus(d1);
    QuotientStructure q1 = quotient_structure(sat1);
    RVec nf = normal_form_vector(torus_jacobian(d1), sat1, q1);
    REQUIRE(nf.size() == 1);
    CHECK(nf[0] == 1);

    // inverse monomial against <t1 - 2>
    LaurentSystem two({parse_laurent("t1 - 2", {"t1"})}, {"t1"});
    SaturatedIdeal sat2 = saturate_to_torus(two);
    QuotientStructure q2 = quotient_structure(sat2);
    RVec inv = normal_form_vector(parse_laurent("t1^-1", {"t1"}), sat2, q2);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == Rat(1, 2));
}

TEST_CASE("multiplication matrices") {
    SaturatedIdeal sat = saturate_to_torus(LaurentSystem({parse_laurent("x^2 - 3 x + 2", X)}, X));
    QuotientStructure q = quotient_structure(sat);
    CHECK(multiplication_matrix(parse_laurent("x", X), sat, q) == q.mult[0]);
    RatMatrix c5 = multiplication_matrix(parse_laurent("5", X), sat, q);
    CHECK(c5 == RatMatrix::identity(2).scale(Rat(5)));
    CHECK(multiplication_matrix(parse_laurent("x", X), sat, q) == q.mult[0]);
}

TEST_CASE("normal form annihilates multiples of the generators") {
    LaurentSystem sys = prism_system();
    SaturatedIdeal sat = saturate_to_torus(sys);
    QuotientStructure q = quotient_structure(sat);
    std::mt19937_64 rng(63);
    std::uniform_int_distribution<long> c(-5, 5), e(-2, 2);
    for (int t = 0; t < 20; ++t) {
        LaurentPolynomial h(3);
        for (int k = 0; k < 3; ++k) h.add_term({e(rng), e(rng), e(rng)}, Rat(c(rng)));
        int i = int(rng() % 3);
        RVec v = normal_form_vector(h * sys.polys()[size_t(i)], sat, q);
        for (const Rat& x : v) CHECK(x == 0);
    }
}

TEST_CASE("multiplication matrices commute exactly") {
    LaurentSystem sys = prism_system();
    QuotientStructure q = quotient_structure(saturate_to_torus(sys));
    for (size_t i = 0; i < q.mult.size(); ++i)
        for (size_t j = i + 1; j < q.mult.size(); ++j)
            CHECK(q.mult[i].mul(q.mult[j]) == q.mult[j].mul(q.mult[i]));
}

TEST_CASE("numeric roots of the prism system") {
    LaurentSystem sys = prism_system();
    SaturatedIdeal sat = saturate_to_torus(sys);
    QuotientStructure q = quotient_structure(sat);
    TorusRoots roots = numeric_roots(q, sys, {});
    REQUIRE(roots.points.size() == 2);
    CHECK(roots.total_multiplicity() == q.degree());
    // sorted roots: (1,-2,1), (1,-2,2)
    CHECK(roots.points[0].exact);
    CHECK(roots.points[1].exact);
    CHECK(roots.points[0].rational == RVec{Rat(1), Rat(-2), Rat(1)});
    CHECK(roots.points[1].rational == RVec{Rat(1), Rat(-2), Rat(2)});
    for (const auto& pt : roots.points)
        for (const LaurentPolynomial& f : sys.polys())
            CHECK(std::abs(evaluate(f, pt.coords)) <= 1e-9 * to_double(f.coefficient_norm()));
}

TEST_CASE("numeric roots of a univariate quadratic") {
    LaurentSystem sys({parse_laurent("x^2 - 3 x + 2", X)}, X);
    TorusRoots roots = numeric_roots(quotient_structure(saturate_to_torus(sys)), sys, {});
    REQUIRE(roots.points.size() == 2);
    CHECK(roots.points[0].rational == RVec{Rat(1)});
    CHECK(roots.points[1].rational == RVec{Rat(2)});
}

TEST_CASE("numeric roots report multiplicity of a double root") {
    LatticePolytope support = LatticePolytope::convex_hull({ivec_of({0}), ivec_of({2})}, 1);
    LaurentSystem sys({parse_laurent("x^2 - 2 x + 1", X)}, X, std::vector<LatticePolytope>{support});
    TorusRoots roots = numeric_roots(quotient_structure(saturate_to_torus(sys)), sys, {});
    REQUIRE(roots.points.size() == 1);
    CHECK(roots.points[0].multiplicity == 2);
    CHECK(roots.points[0].coords[0].real() == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("bernstein count for generic systems on the prism supports") {
    // generic coefficients on the same supports: degree equals the mixed volume 4
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long> c(1, 19);
    LaurentSystem base = prism_system();
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<LaurentPolynomial> polys;
        for (int i = 0; i < 3; ++i) {
            LaurentPolynomial f(3);
            for (const IVec& pt : base.support(i).lattice_points())
                f.add_term(ivec_to_expo(pt), Rat((rng() % 2 ? 1 : -1) * c(rng)));
            polys.push_back(f);
        }
        LaurentSystem sys(polys, T3);
        QuotientStructure q = quotient_structure(saturate_to_torus(sys));
        CHECK(q.degree() == 4);
    }
}
