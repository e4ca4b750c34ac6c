#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/config.hpp"
#include "toric/laurent.hpp"
#include "toric/quotient.hpp"

namespace toric {

// Degree class in the Chow group Z^{n+r} / im(m -> (<m,eta_j>)_j), stored by
// its canonical coset representative (unique via column Hermite reduction).
struct DegreeClass {
    IVec rep;
    bool operator==(const DegreeClass& o) const { return rep == o.rep; }
    bool operator!=(const DegreeClass& o) const { return rep != o.rep; }
};

// Homogeneous coordinate ring data of the complete toric variety of a
// full-dimensional lattice polytope: one variable per ray of the normal fan,
// graded by the class group.
class CoxContext {
  public:
    static CoxContext build(const LatticePolytope& P);

    int torus_dim() const { return n_; }
    int nvars() const { return int(fan_.rays.size()); }
    int class_rank() const { return nvars() - n_; }
    const NormalFan& fan() const { return fan_; }
    const IntMatrix& degree_map() const { return degree_map_; }
    const std::vector<std::string>& variables() const { return vars_; }
    const DegreeClass& rho0() const { return rho0_; }
    const std::vector<std::vector<int>>& maximal_cones() const { return max_cones_; }

    DegreeClass class_of(const IVec& v) const;
    DegreeClass add(const DegreeClass& a, const DegreeClass& b) const;
    DegreeClass sub(const DegreeClass& a, const DegreeClass& b) const;
    DegreeClass scale(const DegreeClass& a, const Int& k) const;
    // m with degree_map * m = v, when v lies in the image lattice.
    std::optional<IVec> image_solve(const IVec& v) const;
    bool in_image(const IVec& v) const { return image_solve(v).has_value(); }
    // Offsets are a representative of an ample class iff each maximal cone has
    // its own Cartier vertex, strictly off the other facets.
    bool is_ample(const IVec& offsets) const;

  private:
    int n_ = 0;
    NormalFan fan_;
    IntMatrix degree_map_;
    std::shared_ptr<ColumnLattice> image_;
    std::vector<std::string> vars_;
    DegreeClass rho0_;
    std::vector<std::vector<int>> max_cones_;
};

// Homogeneous polynomial in the Cox variables.  `rep` is an offset vector
// consistent with every monomial (u - rep lies in the image lattice); it is
// the representative dehomogenization works against, so round trips through
// homogenize are exact.
struct CoxPolynomial {
    LaurentPolynomial poly;  // exponents nonnegative
    IVec rep;

    bool is_zero() const { return poly.is_zero(); }
};

CoxPolynomial cox_monomial(const CoxContext& ctx, const Expo& u, const Rat& c);
CoxPolynomial cox_add(const CoxContext& ctx, const CoxPolynomial& a, const CoxPolynomial& b);
CoxPolynomial cox_mul(const CoxContext& ctx, const CoxPolynomial& a, const CoxPolynomial& b);
CoxPolynomial cox_scale(const CoxPolynomial& a, const Rat& c);
CoxPolynomial cox_derivative(const CoxContext& ctx, const CoxPolynomial& a, int var);
DegreeClass degree_of(const CoxContext& ctx, const CoxPolynomial& f);
void validate_homogeneous(const CoxContext& ctx, const CoxPolynomial& f);

CoxPolynomial homogenize(const LaurentPolynomial& f, const LatticePolytope& support,
                         const CoxContext& ctx);
LaurentPolynomial dehomogenize(const CoxPolynomial& F, const CoxContext& ctx);
LaurentPolynomial dehomogenize_with_rep(const CoxPolynomial& F, const IVec& rep,
                                        const CoxContext& ctx);

struct GradedPiece {
    std::vector<IVec> lattice_points;  // m in P_alpha
    std::vector<Expo> monomials;       // x^{<m,eta>+a}
};
GradedPiece graded_piece(const DegreeClass& alpha, const CoxContext& ctx);

// dim S_alpha - rank of (G_i) -> sum G_i F_i from degrees alpha - deg F_i.
int graded_quotient_dim(const std::vector<CoxPolynomial>& gens, const DegreeClass& alpha,
                        const CoxContext& ctx);

struct CriticalData {
    std::vector<DegreeClass> degrees;
    DegreeClass rho_F;
};
CriticalData critical_degree(const std::vector<DegreeClass>& degrees, const CoxContext& ctx);

// Toric jacobian of n+1 polynomials whose degrees are integer multiples of a
// common ample class; I is a set of n ray indices with independent rays.
CoxPolynomial toric_jacobian_cox(const std::vector<CoxPolynomial>& F, const CoxContext& ctx,
                                 const std::vector<int>& ray_set);

// Determinant element of the monomial-wise decomposition over a maximal
// simplicial cone (rows ordered: vertex row first, then sigma's rays ascending).
CoxPolynomial delta_element(const std::vector<CoxPolynomial>& F, const std::vector<int>& sigma_rays,
                            const CoxContext& ctx);

struct EmptinessCertificate {
    bool empty = false;
    // per maximal cone: saturation of <F> by the cone's coordinate monomial is the unit ideal
    std::vector<std::pair<std::vector<int>, bool>> cone_unit;
};
EmptinessCertificate irrelevant_saturation(const std::vector<CoxPolynomial>& F,
                                           const CoxContext& ctx, const RunConfig& cfg = {});

struct MembershipResult {
    bool member = false;
    std::vector<CoxPolynomial> cofactors;  // H = sum cofactors[i] * F[i] when member
};
MembershipResult membership(const CoxPolynomial& H, const std::vector<CoxPolynomial>& F,
                            const CoxContext& ctx, const RunConfig& cfg = {});

// Saturated membership: some power of the cone monomial times H lies in <F>.
bool localized_membership(const CoxPolynomial& H, const std::vector<CoxPolynomial>& F,
                          const std::vector<int>& sigma_rays, const CoxContext& ctx,
                          const RunConfig& cfg = {});

// Torus-side evaluation of the toric residue of a critical-degree H against
// F_0..F_n, dropping index i: (-1)^i * Res^T_{f_j, j != i}(h / f_i).
// Requires the n-subsystem to have all its zeros simple and in the torus.
Rat toric_residue_torus_side(const std::vector<CoxPolynomial>& F, const CoxPolynomial& H, int drop,
                             const CoxContext& ctx, const RunConfig& cfg = {});

}  // namespace toric
