#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toric/residue.hpp"

using namespace toric;

namespace {

const std::vector<std::string> X{"x"};
const std::vector<std::string> T2{"t1", "t2"};
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

// independent oracle: both prism roots are rational, so residues can be
// summed by direct evaluation
Rat prism_value_oracle(const LaurentPolynomial& h) {
    LaurentSystem sys = prism_system();
    LaurentPolynomial jt = torus_jacobian(sys);
    Rat acc = 0;
    for (const RVec& root : {RVec{Rat(1), Rat(-2), Rat(1)}, RVec{Rat(1), Rat(-2), Rat(2)}})
        acc += evaluate_exact(h, root) / evaluate_exact(jt, root);
    return acc;
}

}  // namespace

TEST_CASE("prism residues via trace-inverse: monomial vanishes, jacobian counts") {
    Analyzer a(prism_system());
    CHECK(a.all_simple());

    LaurentPolynomial mono = parse_laurent("t1 t2 t3", T3);
    ResidueReport r = a.global_residue(mono);
    CHECK(r.exact);
    CHECK(r.method == ResidueReport::TraceInverse);
    CHECK(r.exact_value == 0);
    CHECK(prism_value_oracle(mono) == 0);

    ResidueReport rj = a.global_residue(a.jacobian());
    CHECK(rj.exact);
    CHECK(rj.exact_value == 2);  // sum of multiplicities
    CHECK(prism_value_oracle(a.jacobian()) == 2);

    // jacobian values at the two roots differ only by sign: 4 and -8 scaled
    LaurentPolynomial jt = a.jacobian();
    CHECK(evaluate_exact(jt, {Rat(1), Rat(-2), Rat(1)}) == 4);
    CHECK(evaluate_exact(jt, {Rat(1), Rat(-2), Rat(2)}) == -8);
}

TEST_CASE("euler vanishing for a univariate cubic via dlog form") {
    // f = x^2-3x+2: Res(x) = 1/J(1) + 2/J(2) with J = x(2x-3): -1 + ... = 0
    LaurentSystem sys({parse_laurent("x^2 - 3 x + 2", X)}, X);
    Analyzer a(sys);
    ResidueReport r = a.global_residue(parse_laurent("x", X));
    CHECK(r.exact);
    CHECK(r.exact_value == 0);
}

TEST_CASE("residue agrees with numeric-root summation") {
    Analyzer a(prism_system());
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<long> c(-5, 5), e(0, 2);
    for (int t = 0; t < 10; ++t) {
        LaurentPolynomial h(3);
        for (int k = 0; k < 4; ++k) h.add_term({e(rng), e(rng), e(rng)}, Rat(c(rng)));
        if (h.is_zero()) continue;
        ResidueReport exact = a.global_residue(h);
        ResidueReport numeric = a.global_residue_numeric(h);
        CHECK(numeric.method == ResidueReport::NumericRoots);
        CHECK_FALSE(numeric.exact);
        CHECK(std::abs(numeric.value - exact.value) <= 1e-9 * (1.0 + std::abs(exact.value)));
    }
}

TEST_CASE("residue linearity and ideal annihilation") {
    Analyzer a(prism_system());
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<long> c(-4, 4), e(-1, 2);
    auto rand_poly = [&] {
        LaurentPolynomial h(3);
        for (int k = 0; k < 3; ++k) h.add_term({e(rng), e(rng), e(rng)}, Rat(c(rng)));
        return h;
    };
    for (int t = 0; t < 25; ++t) {
        LaurentPolynomial h1 = rand_poly(), h2 = rand_poly();
        Rat a1 = Rat(c(rng)), a2 = Rat(c(rng));
        Rat lhs = a.global_residue(h1.scale(a1) + h2.scale(a2)).exact_value;
        Rat rhs = a1 * a.global_residue(h1).exact_value + a2 * a.global_residue(h2).exact_value;
        CHECK(lhs == rhs);
    }
    for (int t = 0; t < 25; ++t) {
        LaurentPolynomial h = rand_poly();
        int i = int(rng() % 3);
        ResidueReport r = a.global_residue(h * a.system().polys()[size_t(i)]);
        CHECK(r.exact);
        CHECK(r.exact_value == 0);
    }
}

TEST_CASE("empty torus variety gives a warned exact zero") {
    LaurentSystem sys({parse_laurent("t1 - 1", T2), parse_laurent("t1 - 2", T2)}, T2);
    Analyzer a(sys);
    CHECK(a.torus_zeros_empty());
    ResidueReport r = a.global_residue(parse_laurent("t1 t2", T2));
    CHECK(r.exact);
    CHECK(r.exact_value == 0);
    CHECK_FALSE(r.warning.empty());
}

TEST_CASE("infinite torus variety faults") {
    LaurentSystem sys({parse_laurent("t1 - 1", T2), parse_laurent("t1 - 1", T2)}, T2);
    Analyzer a(sys);
    CHECK_THROWS_AS(a.degree(), NotFiniteFault);
}

TEST_CASE("euler-jacobi certificate on the prism counterexample") {
    Analyzer a(prism_system());
    EulerJacobiCertificate cert = a.euler_jacobi_check();
    REQUIRE(cert.interior_points.size() == 1);
    CHECK(cert.interior_points[0] == ivec_of({1, 1, 1}));
    CHECK(cert.residues[0].exact);
    CHECK(cert.residues[0].exact_value == 0);
    CHECK(cert.all_vanish);
}

TEST_CASE("euler-jacobi on generic conic pairs") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<long> c(1, 9);
    int done = 0;
    for (int attempt = 0; attempt < 40 && done < 5; ++attempt) {
        std::vector<LaurentPolynomial> fs;
        for (int i = 0; i < 2; ++i) {
            LaurentPolynomial f(2);
            for (long a = 0; a <= 2; ++a)
                for (long b = 0; a + b <= 2; ++b)
                    f.add_term({a, b}, Rat((rng() % 2 ? 1 : -1) * c(rng)));
            fs.push_back(f);
        }
        LaurentSystem sys(fs, T2);
        Analyzer an(sys);
        if (an.degree() != 4 || !an.all_simple()) continue;
        ++done;
        EulerJacobiCertificate cert = an.euler_jacobi_check();
        CHECK(cert.interior_points.size() == 3);
        for (const auto& r : cert.residues) {
            CHECK(r.exact);
            CHECK(r.exact_value == 0);
        }
        CHECK(cert.all_vanish);
    }
    CHECK(done == 5);
}

TEST_CASE("deficient declared support breaks the vanishing") {
    Analyzer a(deficient_1d());
    EulerJacobiCertificate cert = a.euler_jacobi_check();
    REQUIRE(cert.interior_points.size() == 1);
    CHECK(cert.interior_points[0] == ivec_of({1}));
    CHECK(cert.residues[0].exact);
    CHECK(cert.residues[0].exact_value == 1);
    CHECK_FALSE(cert.all_vanish);
}

TEST_CASE("converse certificate finds p_J = x on the deficient fixture") {
    Analyzer a(deficient_1d());
    ConverseCertificate cert = a.converse_certificate();
    CHECK(cert.outcome == ConverseCertificate::FoundPJ);
    REQUIRE(cert.p_j.has_value());
    CHECK(*cert.p_j == parse_laurent("x", X));
}

TEST_CASE("converse certificate on the prism counterexample") {
    // value oracle over the rational roots: J^T |-> (4, -8), t1t2t3 |-> (-2, -4);
    // these are not proportional, so no interior representative exists
    Analyzer a(prism_system());
    ConverseCertificate cert = a.converse_certificate();
    CHECK(cert.outcome == ConverseCertificate::NoPJ);
    REQUIRE(cert.dual_witness.has_value());
    // witness annihilates the interior monomial's class but not the jacobian's
    const RVec& y = *cert.dual_witness;
    RVec w = normal_form_vector(parse_laurent("t1 t2 t3", T3), a.saturated(), a.quotient());
    RVec b = normal_form_vector(a.jacobian(), a.saturated(), a.quotient());
    Rat yw = 0, yb = 0;
    for (size_t i = 0; i < y.size(); ++i) {
        yw += y[i] * w[i];
        yb += y[i] * b[i];
    }
    CHECK(yw == 0);
    CHECK(yb != 0);
}

TEST_CASE("infinity audit of the prism counterexample") {
    Analyzer a(prism_system());
    InfinityAudit audit = a.audit_infinity();
    CHECK(audit.mixed_vol == 4);
    CHECK(audit.degree == 2);
    CHECK(audit.deficit() == 2);
    auto deficient = audit.deficient();
    REQUIRE(deficient.size() == 1);
    REQUIRE(deficient[0]->rays.size() == 1);
    CHECK(audit.fan.rays[size_t(deficient[0]->rays[0])] == ivec_of({-1, -1, 0}));
    REQUIRE(deficient[0]->finite_mod_cone.has_value());
    CHECK(*deficient[0]->finite_mod_cone);
}

TEST_CASE("infinity audit of a generic conic pair is clean") {
    std::mt19937_64 rng(79);
    std::uniform_int_distribution<long> c(1, 9);
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<LaurentPolynomial> fs;
        for (int i = 0; i < 2; ++i) {
            LaurentPolynomial f(2);
            for (long a = 0; a <= 2; ++a)
                for (long b = 0; a + b <= 2; ++b)
                    f.add_term({a, b}, Rat((rng() % 2 ? 1 : -1) * c(rng)));
            fs.push_back(f);
        }
        Analyzer an(LaurentSystem(fs, T2));
        if (an.degree() != 4) continue;
        InfinityAudit audit = an.audit_infinity();
        CHECK(audit.deficit() == 0);
        CHECK(audit.deficient().empty());
        break;
    }
}

TEST_CASE("infinity audit of the deficient 1d fixture") {
    Analyzer a(deficient_1d());
    InfinityAudit audit = a.audit_infinity();
    CHECK(audit.deficit() == 1);
    auto deficient = audit.deficient();
    REQUIRE(deficient.size() == 1);
    CHECK(audit.fan.rays[size_t(deficient[0]->rays[0])] == ivec_of({1}));
    CHECK(deficient[0]->facial[0].is_zero());
}

TEST_CASE("equivalence harness: three fixtures") {
    // deficient fixture: all three predicates false, still in agreement
    Analyzer a1(deficient_1d());
    EquivalenceReport r1 = a1.equivalence_harness();
    CHECK(r1.applicable);
    REQUIRE((r1.i && r1.ii && r1.iii));
    CHECK_FALSE(*r1.i);
    CHECK_FALSE(*r1.ii);
    CHECK_FALSE(*r1.iii);
    CHECK(r1.agree);

    // prism counterexample: not applicable, with ii true and i false
    Analyzer a2(prism_system());
    EquivalenceReport r2 = a2.equivalence_harness();
    CHECK_FALSE(r2.applicable);
    CHECK(r2.reason.find("indecomposable") != std::string::npos);
    REQUIRE((r2.i && r2.ii));
    CHECK_FALSE(*r2.i);
    CHECK(*r2.ii);

    // generic pair of dense conics: indecomposable supports, all true
    std::mt19937_64 rng(83);
    std::uniform_int_distribution<long> c(1, 9);
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<LaurentPolynomial> fs;
        for (int i = 0; i < 2; ++i) {
            LaurentPolynomial f(2);
            for (long a = 0; a <= 2; ++a)
                for (long b = 0; a + b <= 2; ++b)
                    f.add_term({a, b}, Rat((rng() % 2 ? 1 : -1) * c(rng)));
            fs.push_back(f);
        }
        Analyzer an(LaurentSystem(fs, T2));
        if (an.degree() != 4) continue;
        EquivalenceReport rep = an.equivalence_harness();
        CHECK(rep.applicable);
        CHECK(*rep.i);
        CHECK(*rep.ii);
        CHECK(*rep.iii);
        CHECK(rep.agree);
        break;
    }
}

TEST_CASE("harness flags an unverifiable boundary-finiteness hypothesis") {
    // both polynomials declared on 2*simplex but missing every monomial on
    // the hypotenuse face: the facial system there vanishes identically, so
    // its zero set is positive-dimensional modulo the cone
    LatticePolytope big = LatticePolytope::convex_hull(
        {ivec_of({0, 0}), ivec_of({2, 0}), ivec_of({0, 2})}, 2);
    LaurentPolynomial f1(2), f2(2);
    f1.add_term({0, 0}, Rat(1));
    f1.add_term({1, 0}, Rat(2));
    f1.add_term({0, 1}, Rat(3));
    f2.add_term({0, 0}, Rat(2));
    f2.add_term({1, 0}, Rat(-1));
    f2.add_term({0, 1}, Rat(1));
    LaurentSystem sys({f1, f2}, T2, std::vector<LatticePolytope>{big, big});
    Analyzer a(sys);
    REQUIRE(a.degree() == 1);  // the underlying linear pair has one root
    InfinityAudit audit = a.audit_infinity();
    CHECK(audit.deficit() >= 0);
    bool found_unverified = false;
    for (const ConeAudit* c : audit.deficient())
        if (c->finite_mod_cone && !*c->finite_mod_cone) found_unverified = true;
    CHECK(found_unverified);
    EquivalenceReport rep = a.equivalence_harness();
    CHECK_FALSE(rep.applicable);
    CHECK_FALSE(rep.hypothesis_verified);
    CHECK(rep.reason.find("hypothesis unverified") != std::string::npos);
}

TEST_CASE("deformation residue approximates the multiple-root limit") {
    // (x-1)^2 on [0,2]: omega = x dx / (x (x-1)^2) has residue 0 at the double root
    LatticePolytope support = LatticePolytope::convex_hull({ivec_of({0}), ivec_of({2})}, 1);
    LaurentSystem sys({parse_laurent("x^2 - 2 x + 1", X)}, X, std::vector<LatticePolytope>{support});
    Analyzer a(sys);
    CHECK_FALSE(a.all_simple());
    ResidueReport r = a.global_residue(parse_laurent("x", X));
    CHECK(r.method == ResidueReport::Deformation);
    CHECK_FALSE(r.exact);
    CHECK(std::abs(r.value) < 1e-3);
}
