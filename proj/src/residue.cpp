#include "toric/residue.hpp"

#include <algorithm>
#include <random>

#include "toric/errors.hpp"

namespace toric {

std::vector<const ConeAudit*> InfinityAudit::deficient() const {
    std::vector<const ConeAudit*> out;
    for (const ConeAudit& c : cones)
        if (c.solvable) out.push_back(&c);
    return out;
}

Analyzer::Analyzer(LaurentSystem system, RunConfig cfg)
    : system_(std::move(system)), cfg_(cfg) {
    if (!system_.square()) throw InputError("analysis requires a square system (n polynomials in n variables)");
}

const SaturatedIdeal& Analyzer::saturated() {
    if (!sat_) sat_ = saturate_to_torus(system_, cfg_);
    return *sat_;
}

const QuotientStructure& Analyzer::quotient() {
    if (!quot_) quot_ = quotient_structure(saturated());
    return *quot_;
}

const LaurentPolynomial& Analyzer::jacobian() {
    if (!jac_) jac_ = torus_jacobian(system_);
    return *jac_;
}

int Analyzer::degree() { return quotient().degree(); }

Rat Analyzer::mixed_vol() {
    if (!mv_) {
        std::vector<LatticePolytope> supports;
        for (int i = 0; i < system_.size(); ++i) supports.push_back(system_.support(i));
        mv_ = mixed_volume(PolytopeSequence(std::move(supports)));
    }
    return *mv_;
}

bool Analyzer::torus_zeros_empty() { return degree() == 0; }

bool Analyzer::all_simple() {
    if (!mjac_checked_) {
        mjac_checked_ = true;
        if (degree() > 0) {
            RatMatrix mj = multiplication_matrix(jacobian(), saturated(), quotient());
            auto inv = inverse(mj);
            if (inv) mjac_inv_ = std::move(*inv);
        }
    }
    return degree() > 0 && mjac_inv_.has_value();
}

const TorusRoots& Analyzer::roots() {
    if (!roots_) roots_ = numeric_roots(quotient(), system_, cfg_);
    return *roots_;
}

ResidueReport Analyzer::global_residue(const LaurentPolynomial& h) {
    ResidueReport rep;
    if (torus_zeros_empty()) {
        rep.method = ResidueReport::TraceInverse;
        rep.exact = true;
        rep.exact_value = 0;
        rep.value = 0.0;
        rep.warning = "V_T(f) is empty; the residue is an empty sum";
        return rep;
    }
    if (all_simple()) {
        RatMatrix mh = multiplication_matrix(h, saturated(), quotient());
        Rat value = mh.mul(*mjac_inv_).trace();
        rep.method = ResidueReport::TraceInverse;
        rep.exact = true;
        rep.exact_value = value;
        rep.value = to_double(value);
        return rep;
    }
    return deformation_residue(h);
}

std::complex<double> Analyzer::residue_via_roots(const LaurentPolynomial& h) {
    std::complex<double> acc = 0.0;
    for (const TorusRootPoint& pt : roots().points) {
        if (pt.multiplicity != 1)
            throw Fault("residue_via_roots requires simple zeros; found multiplicity " +
                        std::to_string(pt.multiplicity));
        acc += evaluate(h, pt.coords) / evaluate(jacobian(), pt.coords);
    }
    return acc;
}

ResidueReport Analyzer::global_residue_numeric(const LaurentPolynomial& h) {
    ResidueReport rep;
    rep.method = ResidueReport::NumericRoots;
    rep.exact = false;
    rep.value = residue_via_roots(h);
    return rep;
}

// Deformed system f + eps*g with a fixed seeded g on the same declared
// supports, evaluated at eps = 1e-4, 1e-5, 1e-6 and Richardson-extrapolated.
ResidueReport Analyzer::deformation_residue(const LaurentPolynomial& h) {
    std::mt19937_64 rng(cfg_.seed ^ 0x5851f42d4c957f2dull);
    std::uniform_int_distribution<long> coef(1, 9);
    std::vector<LaurentPolynomial> gs;
    for (int i = 0; i < system_.size(); ++i) {
        LaurentPolynomial g(system_.nvars());
        for (const IVec& pt : system_.support(i).lattice_points())
            g.add_term(ivec_to_expo(pt), Rat((rng() % 2 ? 1 : -1) * coef(rng)));
        gs.push_back(std::move(g));
    }
    auto residue_at = [&](const Rat& eps) -> std::complex<double> {
        std::vector<LaurentPolynomial> polys;
        for (int i = 0; i < system_.size(); ++i)
            polys.push_back(system_.polys()[size_t(i)] + gs[size_t(i)].scale(eps));
        LaurentSystem deformed(polys, system_.variables());
        Analyzer sub(deformed, cfg_);
        if (sub.torus_zeros_empty())
            throw Fault("deformation produced an empty torus variety; change the seed");
        if (sub.all_simple()) {
            ResidueReport r = sub.global_residue(h);
            return r.value;
        }
        return sub.residue_via_roots(h);
    };
    std::complex<double> r4 = residue_at(Rat(1, 10000));
    std::complex<double> r5 = residue_at(Rat(1, 100000));
    std::complex<double> r6 = residue_at(Rat(1, 1000000));
    std::complex<double> e1 = (10.0 * r5 - r4) / 9.0;
    std::complex<double> e2 = (10.0 * r6 - r5) / 9.0;
    ResidueReport rep;
    rep.method = ResidueReport::Deformation;
    rep.exact = false;
    rep.value = (100.0 * e2 - e1) / 99.0;
    rep.warning = "multiple torus zeros; value is a deformation estimate";
    return rep;
}

EulerJacobiCertificate Analyzer::euler_jacobi_check() {
    EulerJacobiCertificate cert;
    cert.interior_points = system_.total_support().interior_lattice_points();
    double tol = cfg_.tolerance;
    for (const IVec& m : cert.interior_points) {
        LaurentPolynomial mono = LaurentPolynomial::monomial(system_.nvars(), ivec_to_expo(m), Rat(1));
        ResidueReport r = global_residue(mono);
        cert.all_vanish = cert.all_vanish && r.vanishes(tol);
        cert.residues.push_back(std::move(r));
    }
    return cert;
}

ConverseCertificate Analyzer::converse_certificate() {
    if (torus_zeros_empty())
        throw Fault("converse certificate requires a nonempty torus variety");
    ConverseCertificate cert;
    cert.interior_points = system_.total_support().interior_lattice_points();
    int d = degree();
    int k = int(cert.interior_points.size());

    RatMatrix W(d, k);
    for (int j = 0; j < k; ++j) {
        LaurentPolynomial mono =
            LaurentPolynomial::monomial(system_.nvars(), ivec_to_expo(cert.interior_points[size_t(j)]), Rat(1));
        RVec col = normal_form_vector(mono, saturated(), quotient());
        for (int r = 0; r < d; ++r) W.at(r, j) = col[size_t(r)];
    }
    RVec b = normal_form_vector(jacobian(), saturated(), quotient());

    LinearSolution sol = solve_linear(W, b);
    if (sol.particular) {
        LaurentPolynomial pj(system_.nvars());
        for (int j = 0; j < k; ++j)
            pj.add_term(ivec_to_expo(cert.interior_points[size_t(j)]), (*sol.particular)[size_t(j)]);
        // soundness: the difference must reduce to zero exactly
        RVec check = normal_form_vector(jacobian() - pj, saturated(), quotient());
        for (const Rat& x : check)
            if (x != 0) throw Fault("converse certificate failed its own soundness check");
        cert.outcome = ConverseCertificate::FoundPJ;
        cert.p_j = std::move(pj);
        return cert;
    }

    // dual witness: a functional vanishing on every interior class but not on J^T
    RankKernel left = rank_and_kernel(W.transpose());
    for (const RVec& y : left.kernel) {
        Rat pairing = 0;
        for (int r = 0; r < d; ++r) pairing += y[size_t(r)] * b[size_t(r)];
        if (pairing != 0) {
            cert.outcome = ConverseCertificate::NoPJ;
            cert.dual_witness = y;
            return cert;
        }
    }
    throw Fault("inconsistent converse state: no solution and no separating functional");
}

namespace {

// Rewrite a facial system in coordinates of the quotient lattice of the cone
// (rank n - dim tau) and test zero-dimensionality of its torus ideal.
bool facial_finite_mod_cone(const std::vector<LaurentPolynomial>& facial,
                            const std::vector<IVec>& cone_rays, int nvars, const RunConfig& cfg) {
    std::vector<IVec> rows = cone_rays;
    std::vector<IVec> basis = integer_kernel(IntMatrix::from_rows(rows));
    int nd = int(basis.size());
    std::vector<std::string> vars;
    for (int i = 0; i < nd; ++i) vars.push_back("u" + std::to_string(i + 1));
    if (nd == 0) return true;  // at most the single quotient-torus point

    RatMatrix Bt(nvars, nd);
    for (int c = 0; c < nd; ++c)
        for (int r = 0; r < nvars; ++r) Bt.at(r, c) = Rat(basis[size_t(c)][size_t(r)]);

    std::vector<LaurentPolynomial> reduced;
    for (const LaurentPolynomial& f : facial) {
        if (f.is_zero()) continue;  // vanishes identically; cuts nothing
        const Expo base = f.terms().begin()->first;
        LaurentPolynomial g(nd);
        for (const auto& [e, c] : f.terms()) {
            RVec rhs(static_cast<size_t>(nvars));
            for (int r = 0; r < nvars; ++r) rhs[size_t(r)] = Rat(e[size_t(r)] - base[size_t(r)]);
            LinearSolution sol = solve_linear(Bt, rhs);
            if (!sol.particular) throw Fault("facial support escapes the cone's orthogonal lattice");
            Expo q(static_cast<size_t>(nd));
            for (int i = 0; i < nd; ++i) {
                if ((*sol.particular)[size_t(i)].get_den() != 1)
                    throw Fault("facial support not integral in the quotient lattice");
                q[size_t(i)] = (*sol.particular)[size_t(i)].get_num().get_si();
            }
            g.add_term(q, c);
        }
        reduced.push_back(std::move(g));
    }
    LaurentSystem quot_sys(reduced.empty() ? std::vector<LaurentPolynomial>{LaurentPolynomial(nd)}
                                           : reduced,
                           vars);
    SaturatedIdeal sat = saturate_to_torus(quot_sys, cfg);
    return sat.zero_dimensional();
}

}  // namespace

InfinityAudit Analyzer::audit_infinity() {
    const LatticePolytope& P = system_.total_support();
    if (!P.full_dimensional())
        throw InputError("audit_infinity: the declared supports do not span; their sum must be full-dimensional");
    InfinityAudit audit;
    audit.fan = normal_fan(P);
    audit.mixed_vol = mixed_vol();
    audit.degree = degree();

    for (const Cone& cone : audit.fan.cones) {
        if (cone.dim < 1) continue;
        ConeAudit ca;
        ca.rays = cone.rays;
        ca.w = IVec(size_t(system_.nvars()));
        for (int ri : cone.rays)
            for (int k = 0; k < system_.nvars(); ++k) ca.w[size_t(k)] += audit.fan.rays[size_t(ri)][size_t(k)];
        LaurentSystem facial = facial_system(system_, ca.w);
        ca.facial = facial.polys();
        SaturatedIdeal sat = saturate_to_torus(facial, cfg_);
        ca.solvable = !sat.is_unit();
        if (ca.solvable) {
            std::vector<IVec> rays;
            for (int ri : ca.rays) rays.push_back(audit.fan.rays[size_t(ri)]);
            ca.finite_mod_cone = facial_finite_mod_cone(ca.facial, rays, system_.nvars(), cfg_);
        }
        audit.cones.push_back(std::move(ca));
    }
    return audit;
}

EquivalenceReport Analyzer::equivalence_harness() {
    EquivalenceReport rep;
    std::vector<LatticePolytope> supports;
    for (int i = 0; i < system_.size(); ++i) supports.push_back(system_.support(i));
    SequenceCheck indec = is_indecomposable(PolytopeSequence(std::move(supports)));

    try {
        degree();
    } catch (const NotFiniteFault&) {
        rep.applicable = false;
        rep.reason = "not applicable: V_T(f) is not finite";
        return rep;
    }

    rep.audit = audit_infinity();
    rep.i = rep.audit->deficit() == 0;
    rep.euler_jacobi = euler_jacobi_check();
    rep.ii = rep.euler_jacobi->all_vanish;
    if (!torus_zeros_empty()) {
        rep.converse = converse_certificate();
        rep.iii = rep.converse->outcome == ConverseCertificate::NoPJ;
    }

    rep.hypothesis_verified = true;
    for (const ConeAudit* c : rep.audit->deficient())
        if (!c->finite_mod_cone || !*c->finite_mod_cone) rep.hypothesis_verified = false;

    if (!indec.ok) {
        rep.applicable = false;
        rep.reason = "not applicable: supports not indecomposable (witness subset {";
        for (size_t i = 0; i < indec.witness_subset.size(); ++i)
            rep.reason += (i ? "," : "") + std::to_string(indec.witness_subset[i] + 1);
        rep.reason += "})";
    } else if (torus_zeros_empty()) {
        rep.applicable = false;
        rep.reason = "not applicable: V_T(f) is empty";
    } else if (!rep.hypothesis_verified) {
        rep.applicable = false;
        rep.reason = "hypothesis unverified: a deficient facial system is not finite modulo its cone";
    } else {
        rep.applicable = true;
    }

    if (rep.i && rep.ii && rep.iii)
        rep.agree = (*rep.i == *rep.ii) && (*rep.ii == *rep.iii);
    return rep;
}

ResidueReport global_residue(const LaurentSystem& system, const LaurentPolynomial& h,
                             const RunConfig& cfg) {
    Analyzer a(system, cfg);
    return a.global_residue(h);
}

EulerJacobiCertificate euler_jacobi_check(const LaurentSystem& system, const RunConfig& cfg) {
    Analyzer a(system, cfg);
    return a.euler_jacobi_check();
}

ConverseCertificate converse_certificate(const LaurentSystem& system, const RunConfig& cfg) {
    Analyzer a(system, cfg);
    return a.converse_certificate();
}

InfinityAudit audit_infinity(const LaurentSystem& system, const RunConfig& cfg) {
    Analyzer a(system, cfg);
    return a.audit_infinity();
}

EquivalenceReport theorem_equivalence_harness(const LaurentSystem& system, const RunConfig& cfg) {
    Analyzer a(system, cfg);
    return a.equivalence_harness();
}

}  // namespace toric
