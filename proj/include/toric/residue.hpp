#pragma once

#include <memory>
#include <optional>
#include <string>

#include "toric/quotient.hpp"

namespace toric {

struct ResidueReport {
    enum Method { TraceInverse, NumericRoots, Deformation };
    Method method = TraceInverse;
    bool exact = false;
    Rat exact_value;                      // meaningful when exact
    std::complex<double> value{0.0, 0.0};  // numeric view, always set
    std::string warning;                  // e.g. empty V_T

    bool vanishes(double tol) const {
        return exact ? exact_value == 0 : std::abs(value) <= tol;
    }
};

struct EulerJacobiCertificate {
    std::vector<IVec> interior_points;
    std::vector<ResidueReport> residues;
    bool all_vanish = true;
};

struct ConverseCertificate {
    enum Outcome { FoundPJ, NoPJ };
    Outcome outcome = NoPJ;
    std::optional<LaurentPolynomial> p_j;  // supported in the interior, when found
    std::optional<RVec> dual_witness;      // functional on the quotient basis, when not
    std::vector<IVec> interior_points;
};

struct ConeAudit {
    std::vector<int> rays;   // indices into the audit fan's rays
    IVec w;                  // sum of primitive ray generators, in relint
    std::vector<LaurentPolynomial> facial;
    bool solvable = false;
    std::optional<bool> finite_mod_cone;  // facial finiteness in the quotient lattice
};

struct InfinityAudit {
    NormalFan fan;
    std::vector<ConeAudit> cones;  // every cone of dimension >= 1
    Rat mixed_vol;
    int degree = 0;
    Rat deficit() const { return mixed_vol - Rat(degree); }
    std::vector<const ConeAudit*> deficient() const;
};

struct EquivalenceReport {
    bool applicable = false;
    std::string reason;  // why not applicable / hypothesis unverified
    bool hypothesis_verified = false;
    std::optional<bool> i;    // deg(V_T) = MV (deficit zero)
    std::optional<bool> ii;   // all interior residues vanish
    std::optional<bool> iii;  // no interior representative of the torus jacobian
    bool agree = false;
    std::optional<InfinityAudit> audit;
    std::optional<EulerJacobiCertificate> euler_jacobi;
    std::optional<ConverseCertificate> converse;
};

// One-stop analysis context for a square system: caches the saturation, the
// quotient structure, the torus jacobian, and the derived certificates.
// Everything certificate-bearing is exact; floats appear only on the numeric
// fallback paths.
class Analyzer {
  public:
    Analyzer(LaurentSystem system, RunConfig cfg = {});

    const LaurentSystem& system() const { return system_; }
    const RunConfig& config() const { return cfg_; }
    const SaturatedIdeal& saturated();
    const QuotientStructure& quotient();
    const LaurentPolynomial& jacobian();
    int degree();
    Rat mixed_vol();
    bool torus_zeros_empty();
    // All torus zeros simple, detected exactly by invertibility of M_{J^T}.
    bool all_simple();

    ResidueReport global_residue(const LaurentPolynomial& h);
    // Cross-check path: sum of h(xi)/J^T(xi) over numeric roots (all simple).
    std::complex<double> residue_via_roots(const LaurentPolynomial& h);
    // Same sum packaged as a report with the numeric-roots method flag.
    ResidueReport global_residue_numeric(const LaurentPolynomial& h);

    EulerJacobiCertificate euler_jacobi_check();
    ConverseCertificate converse_certificate();
    InfinityAudit audit_infinity();
    EquivalenceReport equivalence_harness();

  private:
    ResidueReport deformation_residue(const LaurentPolynomial& h);

    LaurentSystem system_;
    RunConfig cfg_;
    std::optional<SaturatedIdeal> sat_;
    std::optional<QuotientStructure> quot_;
    std::optional<LaurentPolynomial> jac_;
    std::optional<RatMatrix> mjac_inv_;
    bool mjac_checked_ = false;
    std::optional<Rat> mv_;
    std::optional<TorusRoots> roots_;
    const TorusRoots& roots();
};

// Free functions matching the operation surface.
ResidueReport global_residue(const LaurentSystem& system, const LaurentPolynomial& h,
                             const RunConfig& cfg = {});
EulerJacobiCertificate euler_jacobi_check(const LaurentSystem& system, const RunConfig& cfg = {});
ConverseCertificate converse_certificate(const LaurentSystem& system, const RunConfig& cfg = {});
InfinityAudit audit_infinity(const LaurentSystem& system, const RunConfig& cfg = {});
EquivalenceReport theorem_equivalence_harness(const LaurentSystem& system, const RunConfig& cfg = {});

}  // namespace toric
