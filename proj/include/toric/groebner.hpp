#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toric/numbers.hpp"

namespace toric {

using Mono = std::vector<int>;  // nonnegative exponents

// Graded reverse lexicographic order, optionally preceded by a lex block on
// variable 0 (the saturation variable), which makes it an elimination order.
struct MonomialOrder {
    enum Kind { Grevlex, ElimFirstVar } kind = Grevlex;
    int nvars = 0;

    int cmp(const Mono& a, const Mono& b) const;
    bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }
};

// Polynomial over Q with terms sorted ascending in the monomial order;
// the leading term is terms.back().
struct PolyQ {
    std::vector<std::pair<Mono, Rat>> terms;

    bool is_zero() const { return terms.empty(); }
    const Mono& leading_mono() const { return terms.back().first; }
    const Rat& leading_coeff() const { return terms.back().second; }
    int total_degree() const;
};

PolyQ poly_from_terms(std::vector<std::pair<Mono, Rat>> terms, const MonomialOrder& ord);
PolyQ poly_constant(int nvars, const Rat& c);
PolyQ add(const PolyQ& a, const PolyQ& b, const MonomialOrder& ord);
PolyQ sub(const PolyQ& a, const PolyQ& b, const MonomialOrder& ord);
PolyQ mul(const PolyQ& a, const PolyQ& b, const MonomialOrder& ord);
PolyQ mul_term(const PolyQ& a, const Mono& m, const Rat& c);
PolyQ scale(const PolyQ& a, const Rat& c);
bool equal(const PolyQ& a, const PolyQ& b);

bool mono_divides(const Mono& d, const Mono& m);
Mono mono_lcm(const Mono& a, const Mono& b);
Mono mono_sub(const Mono& a, const Mono& b);
Mono mono_add(const Mono& a, const Mono& b);

struct ReductionBudget {
    long cap = 100000;
    long used = 0;
    long pairs = 0;
    long basis_size = 0;
    void spend() {
        if (++used > cap) throw StepCapExceeded(used, pairs, basis_size);
    }
};

struct GroebnerResult {
    MonomialOrder order;
    std::vector<PolyQ> basis;                  // unique reduced GB, monic, sorted by LT
    std::vector<std::vector<PolyQ>> reps;      // when tracked: basis[k] = sum reps[k][i]*input[i]
    bool tracked = false;
    long reductions = 0;
    long pairs = 0;
};

// Buchberger with sugar-strategy pair selection and both classical criteria;
// throws StepCapExceeded past the budget.  With track_cofactors, every basis
// element carries its representation in terms of the input generators.
GroebnerResult buchberger(const std::vector<PolyQ>& gens, const MonomialOrder& ord,
                          long step_cap, bool track_cofactors = false);

// Full normal form; with quotients, also returns q_k per basis element with
// p = sum q_k * basis[k] + remainder.
PolyQ normal_form(const PolyQ& p, const std::vector<PolyQ>& basis, const MonomialOrder& ord,
                  ReductionBudget* budget = nullptr, std::vector<PolyQ>* quotients = nullptr);

bool is_unit_ideal(const std::vector<PolyQ>& basis);
// Finiteness criterion: every variable has a pure power among the leading terms.
bool is_zero_dimensional(const std::vector<PolyQ>& basis, int nvars);
// Monomials outside the leading term ideal, ascending; requires zero-dimensional.
std::vector<Mono> standard_monomials(const std::vector<PolyQ>& basis, int nvars,
                                     const MonomialOrder& ord);

std::string poly_to_string(const PolyQ& p, const std::vector<std::string>& vars);

}  // namespace toric
