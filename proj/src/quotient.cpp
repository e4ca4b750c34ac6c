#include "toric/quotient.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <random>

#include "toric/eigen_numeric.hpp"
#include "toric/errors.hpp"

namespace toric {

namespace {

// Shift a Laurent polynomial into the polynomial ring: multiply by the
// minimal monomial clearing negative exponents.
std::pair<PolyQ, Expo> clear_negatives(const LaurentPolynomial& f, const MonomialOrder& ord) {
    int n = f.nvars();
    Expo shift(size_t(n), 0);
    for (const auto& [e, c] : f.terms())
        for (int i = 0; i < n; ++i) shift[size_t(i)] = std::max(shift[size_t(i)], -e[size_t(i)]);
    std::vector<std::pair<Mono, Rat>> terms;
    for (const auto& [e, c] : f.terms()) {
        Mono m(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) m[size_t(i)] = int(e[size_t(i)] + shift[size_t(i)]);
        terms.emplace_back(std::move(m), c);
    }
    return {poly_from_terms(std::move(terms), ord), shift};
}

}  // namespace

SaturatedIdeal saturate_to_torus(const LaurentSystem& system, const RunConfig& cfg) {
    int n = system.nvars();
    SaturatedIdeal sat;
    sat.nvars = n;
    sat.variables = system.variables();
    sat.order = MonomialOrder{MonomialOrder::Grevlex, n};

    // ring Q[u, t_1..t_n] with u eliminated
    MonomialOrder elim{MonomialOrder::ElimFirstVar, n + 1};
    std::vector<PolyQ> gens;
    sat.shifts.resize(size_t(system.size()));
    for (int i = 0; i < system.size(); ++i) {
        const LaurentPolynomial& f = system.polys()[size_t(i)];
        sat.shifts[size_t(i)] = Expo(size_t(n), 0);
        if (f.is_zero()) continue;  // zero polynomial contributes nothing
        auto [p, shift] = clear_negatives(f, sat.order);
        sat.shifts[size_t(i)] = shift;
        std::vector<std::pair<Mono, Rat>> lifted;
        for (const auto& [m, c] : p.terms) {
            Mono l(size_t(n + 1), 0);
            for (int k = 0; k < n; ++k) l[size_t(k + 1)] = m[size_t(k)];
            lifted.emplace_back(std::move(l), c);
        }
        gens.push_back(poly_from_terms(std::move(lifted), elim));
    }
    if (!gens.empty() && n > 0) {
        // u * t_1...t_n - 1
        Mono prod(size_t(n + 1), 1);
        std::vector<std::pair<Mono, Rat>> terms{{prod, Rat(1)}, {Mono(size_t(n + 1), 0), Rat(-1)}};
        gens.push_back(poly_from_terms(std::move(terms), elim));
    }
    if (gens.empty()) return sat;  // zero ideal

    GroebnerResult gb = buchberger(gens, elim, cfg.groebner_step_cap);
    sat.reductions = gb.reductions;
    sat.pairs = gb.pairs;
    std::vector<PolyQ> restricted;
    for (const PolyQ& g : gb.basis) {
        bool pure = true;
        for (const auto& [m, c] : g.terms)
            if (m[0] != 0) pure = false;
        if (!pure) continue;
        std::vector<std::pair<Mono, Rat>> dropped;
        for (const auto& [m, c] : g.terms)
            dropped.emplace_back(Mono(m.begin() + 1, m.end()), c);
        restricted.push_back(poly_from_terms(std::move(dropped), sat.order));
    }
    // elimination preserves the reduced-basis property, but canonicalize anyway
    GroebnerResult fin = buchberger(restricted, sat.order, cfg.groebner_step_cap);
    sat.gens = std::move(fin.basis);
    sat.reductions += fin.reductions;
    sat.pairs += fin.pairs;
    return sat;
}

QuotientStructure quotient_structure(const SaturatedIdeal& sat) {
    if (!sat.zero_dimensional())
        throw NotFiniteFault("V_T(f) is not finite: the saturated ideal is positive-dimensional");
    QuotientStructure q;
    q.nvars = sat.nvars;
    q.basis = standard_monomials(sat.gens, sat.nvars, sat.order);
    int d = int(q.basis.size());
    std::map<Mono, int> index;
    for (int i = 0; i < d; ++i) index[q.basis[size_t(i)]] = i;

    ReductionBudget budget;
    budget.cap = 1L << 40;  // structural reductions are not user-capped
    for (int v = 0; v < sat.nvars; ++v) {
        RatMatrix M(d, d);
        for (int col = 0; col < d; ++col) {
            Mono m = q.basis[size_t(col)];
            m[size_t(v)] += 1;
            PolyQ p;
            p.terms.emplace_back(std::move(m), Rat(1));
            PolyQ nf = normal_form(p, sat.gens, sat.order, &budget);
            for (const auto& [mono, c] : nf.terms) M.at(index.at(mono), col) = c;
        }
        auto inv = inverse(M);
        if (!inv)
            throw Fault("multiplication by " + sat.variables[size_t(v)] +
                        " is singular on the quotient; saturation is inconsistent");
        q.mult.push_back(std::move(M));
        q.mult_inv.push_back(std::move(*inv));
    }
    return q;
}

RVec normal_form_vector(const LaurentPolynomial& h, const SaturatedIdeal& sat,
                        const QuotientStructure& q) {
    int d = q.degree();
    auto [p, shift] = clear_negatives(h, sat.order);
    ReductionBudget budget;
    budget.cap = 1L << 40;
    PolyQ nf = normal_form(p, sat.gens, sat.order, &budget);
    std::map<Mono, int> index;
    for (int i = 0; i < d; ++i) index[q.basis[size_t(i)]] = i;
    RVec v(static_cast<size_t>(d));
    for (const auto& [mono, c] : nf.terms) v[size_t(index.at(mono))] = c;
    // undo the clearing monomial: multiply by t^{-shift} via inverse matrices
    for (int i = 0; i < sat.nvars; ++i)
        for (long k = 0; k < shift[size_t(i)]; ++k) v = q.mult_inv[size_t(i)].apply(v);
    return v;
}

RatMatrix multiplication_matrix(const LaurentPolynomial& h, const SaturatedIdeal& sat,
                                const QuotientStructure& q) {
    int d = q.degree();
    RatMatrix acc(d, d);
    for (const auto& [e, c] : h.terms()) {
        RatMatrix term = RatMatrix::identity(d);
        for (int i = 0; i < sat.nvars; ++i) {
            const RatMatrix& step = e[size_t(i)] >= 0 ? q.mult[size_t(i)] : q.mult_inv[size_t(i)];
            for (long k = 0; k < std::abs(e[size_t(i)]); ++k) term = term.mul(step);
        }
        acc = acc.add(term.scale(c));
    }
    return acc;
}

int TorusRoots::total_multiplicity() const {
    int s = 0;
    for (const auto& p : points) s += p.multiplicity;
    return s;
}

namespace {

// Best rational approximation with bounded denominator (continued fractions).
std::optional<Rat> rationalize(double x, double tol, long max_den = 1000000) {
    if (!std::isfinite(x)) return std::nullopt;
    double a = x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(a);
        if (fl > 1e15 || fl < -1e15) break;
        long ai = long(fl);
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double approx = double(p1) / double(q1);
        if (std::abs(approx - x) <= tol) return make_rat(Int(p1), Int(q1));
        double frac = a - fl;
        if (frac < 1e-18) break;
        a = 1.0 / frac;
    }
    if (q1 > 0 && std::abs(double(p1) / double(q1) - x) <= tol) return make_rat(Int(p1), Int(q1));
    return std::nullopt;
}

}  // namespace

TorusRoots numeric_roots(const QuotientStructure& q, const LaurentSystem& system,
                         const RunConfig& cfg) {
    TorusRoots roots;
    int n = q.nvars;
    int d = q.degree();
    if (d == 0) return roots;

    // seeded random split combination
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> coef(1, 997);
    RatMatrix Mc(d, d);
    std::vector<int> cs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        cs[size_t(i)] = coef(rng);
        Mc = Mc.add(q.mult[size_t(i)].scale(Rat(cs[size_t(i)])));
    }

    std::vector<EigenPair> clusters = eigen_numeric(Mc, cfg.tolerance, cfg.eigen_dim_cap);

    Eigen::MatrixXcd M(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) M(r, c) = to_double(Mc.at(r, c));
    std::vector<Eigen::MatrixXcd> Mi(static_cast<size_t>(n), Eigen::MatrixXcd(d, d));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) Mi[size_t(i)](r, c) = to_double(q.mult[size_t(i)].at(r, c));

    double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    for (const EigenPair& cl : clusters) {
        int mu = cl.multiplicity;
        // generalized eigenspace = numeric kernel of (M - lambda I)^mu
        Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(d, d);
        Eigen::MatrixXcd S = M - cl.value * Eigen::MatrixXcd::Identity(d, d);
        for (int k = 0; k < mu; ++k) A = A * S;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        double spow = std::pow(scale, mu);
        if (d - mu - 1 >= 0 && sv(d - mu - 1) <= 1e3 * std::max(sv(d - mu), 1e-300) &&
            sv(d - mu - 1) <= 1e-4 * spow)
            throw EigenFault("numeric_roots: cluster separation ambiguous below tolerance; "
                             "retry with a smaller --tol or use the exact path");
        Eigen::MatrixXcd U = svd.matrixV().rightCols(mu);

        TorusRootPoint pt;
        pt.multiplicity = mu;
        pt.coords.resize(size_t(n));
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(U);
        std::complex<double> recombined = 0.0;
        for (int i = 0; i < n; ++i) {
            Eigen::MatrixXcd X = cod.solve(Mi[size_t(i)] * U);
            pt.coords[size_t(i)] = X.trace() / double(mu);
            recombined += double(cs[size_t(i)]) * pt.coords[size_t(i)];
        }
        if (std::abs(recombined - cl.value) > 1e5 * cfg.tolerance * std::max(1.0, std::abs(cl.value)))
            throw EigenFault("numeric_roots: eigenvalue does not match recombined coordinates; "
                             "cluster ambiguity below tolerance, retry with a smaller --tol");

        // exact certification of rational candidates by substitution
        RVec cand(static_cast<size_t>(n));
        bool all_rat = true;
        for (int i = 0; i < n && all_rat; ++i) {
            double re = pt.coords[size_t(i)].real(), im = pt.coords[size_t(i)].imag();
            if (std::abs(im) > 1e3 * cfg.tolerance) {
                all_rat = false;
                break;
            }
            auto r = rationalize(re, 1e3 * cfg.tolerance * std::max(1.0, std::abs(re)));
            if (!r || *r == 0) {
                all_rat = false;
                break;
            }
            cand[size_t(i)] = *r;
        }
        if (all_rat) {
            for (const LaurentPolynomial& f : system.polys())
                if (!f.is_zero() && evaluate_exact(f, cand) != 0) {
                    all_rat = false;
                    break;
                }
        }
        if (all_rat) {
            pt.exact = true;
            pt.rational = cand;
            for (int i = 0; i < n; ++i) pt.coords[size_t(i)] = to_double(cand[size_t(i)]);
        }
        roots.points.push_back(std::move(pt));
    }
    std::sort(roots.points.begin(), roots.points.end(), [](const TorusRootPoint& a, const TorusRootPoint& b) {
        for (size_t i = 0; i < a.coords.size(); ++i) {
            if (a.coords[i].real() != b.coords[i].real()) return a.coords[i].real() < b.coords[i].real();
            if (a.coords[i].imag() != b.coords[i].imag()) return a.coords[i].imag() < b.coords[i].imag();
        }
        return false;
    });
    return roots;
}

}  // namespace toric
