#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

using Expo = std::vector<long>;  // exponent vector, entries may be negative

// Laurent polynomial with exact rational coefficients; no zero coefficients
// are stored, so the term map is a canonical form.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(int nvars) : nvars_(nvars) {}
    static LaurentPolynomial constant(int nvars, const Rat& c);
    static LaurentPolynomial monomial(int nvars, const Expo& e, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }
    Rat coeff(const Expo& e) const;
    void add_term(const Expo& e, const Rat& c);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial scale(const Rat& c) const;
    bool operator==(const LaurentPolynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // t_i d/dt_i: multiplies each coefficient by its i-th exponent.
    LaurentPolynomial euler_derivative(int i) const;

    std::vector<IVec> support() const;
    Rat coefficient_norm() const;  // sum of |coefficients|

  private:
    int nvars_ = 0;
    std::map<Expo, Rat> terms_;
};

// A system of Laurent polynomials with optional declared supports (Newton
// polytope overrides, possibly strictly larger than the monomials present).
class LaurentSystem {
  public:
    LaurentSystem(std::vector<LaurentPolynomial> polys, std::vector<std::string> variables,
                  std::optional<std::vector<LatticePolytope>> declared = std::nullopt);

    int nvars() const { return int(variables_.size()); }
    int size() const { return int(polys_.size()); }
    bool square() const { return size() == nvars(); }
    const std::vector<LaurentPolynomial>& polys() const { return polys_; }
    const std::vector<std::string>& variables() const { return variables_; }
    bool has_declared_supports() const { return declared_.has_value(); }

    // Declared support of the i-th polynomial (defaults to its Newton polytope).
    const LatticePolytope& support(int i) const;
    // Minkowski sum of all declared supports.
    const LatticePolytope& total_support() const;

  private:
    std::vector<LaurentPolynomial> polys_;
    std::vector<std::string> variables_;
    std::optional<std::vector<LatticePolytope>> declared_;
    mutable std::vector<std::optional<LatticePolytope>> support_cache_;
    mutable std::optional<LatticePolytope> total_cache_;
};

// Expression grammar (see README): terms joined by +/-, each term an optional
// rational coefficient followed by variable factors with optional integer
// exponents; '*' and whitespace between factors are optional.
LaurentPolynomial parse_laurent(const std::string& src, const std::vector<std::string>& variables);
std::string to_string(const LaurentPolynomial& f, const std::vector<std::string>& variables);

LatticePolytope newton_polytope(const LaurentPolynomial& f);

// det(t_i df_j/dt_i), rows = variables, columns = polynomials, in input order.
LaurentPolynomial torus_jacobian(const LaurentSystem& system);

// Determinant of a square matrix of polynomials (Laplace with memoization).
LaurentPolynomial matrix_determinant(const std::vector<std::vector<LaurentPolynomial>>& m, int nvars);

// Terms of each f_i minimizing <m, w> over the declared support; if the
// minimizing face carries no term of f_i the facial polynomial is zero.
LaurentSystem facial_system(const LaurentSystem& system, const IVec& w);

std::complex<double> evaluate(const LaurentPolynomial& f, const CVec& point);
Rat evaluate_exact(const LaurentPolynomial& f, const RVec& point);

IVec expo_to_ivec(const Expo& e);
Expo ivec_to_expo(const IVec& v);

}  // namespace toric
