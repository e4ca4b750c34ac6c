#pragma once

#include <optional>

#include "toric/config.hpp"
#include "toric/groebner.hpp"
#include "toric/laurent.hpp"
#include "toric/matrix.hpp"

namespace toric {

// Reduced Groebner basis of the Laurent ideal <f_1,...,f_n> C[t^{+-1}],
// realized as the saturation (<shifted f_i> : (t_1...t_n)^inf) in C[t].
struct SaturatedIdeal {
    int nvars = 0;
    std::vector<std::string> variables;
    MonomialOrder order;            // grevlex on t_1..t_n
    std::vector<PolyQ> gens;        // unique reduced basis, monic
    std::vector<Expo> shifts;       // monomial multiplier that cleared each input
    long reductions = 0;
    long pairs = 0;

    bool is_unit() const { return is_unit_ideal(gens); }
    bool zero_dimensional() const { return is_zero_dimensional(gens, nvars); }
};

SaturatedIdeal saturate_to_torus(const LaurentSystem& system, const RunConfig& cfg = {});

// Standard monomial basis and multiplication matrices of the Artinian torus
// quotient.  All matrices are invertible (the t_i are units after saturation).
struct QuotientStructure {
    int nvars = 0;
    std::vector<Mono> basis;
    std::vector<RatMatrix> mult;      // M_{t_i}
    std::vector<RatMatrix> mult_inv;  // M_{t_i}^{-1}
    int degree() const { return int(basis.size()); }
};

QuotientStructure quotient_structure(const SaturatedIdeal& sat);

// Coordinates of the class of h over the standard monomial basis; negative
// exponents go through M_{t_i}^{-1}.
RVec normal_form_vector(const LaurentPolynomial& h, const SaturatedIdeal& sat,
                        const QuotientStructure& q);

// Matrix of multiplication by the class of h on the quotient.
RatMatrix multiplication_matrix(const LaurentPolynomial& h, const SaturatedIdeal& sat,
                                const QuotientStructure& q);

struct TorusRootPoint {
    CVec coords;
    int multiplicity = 1;
    bool exact = false;
    RVec rational;  // populated when exact
};

struct TorusRoots {
    std::vector<TorusRootPoint> points;
    int total_multiplicity() const;
};

// Numeric roots via the simultaneous eigenstructure of a seeded random
// combination of the multiplication matrices; rational points are certified
// exactly by substitution into the system.
TorusRoots numeric_roots(const QuotientStructure& q, const LaurentSystem& system,
                         const RunConfig& cfg = {});

}  // namespace toric
