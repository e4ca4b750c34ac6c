#include "toric/cox.hpp"

#include <algorithm>
#include <numeric>

#include "toric/errors.hpp"
#include "toric/residue.hpp"

namespace toric {

namespace {

IVec ones(int k) { return IVec(size_t(k), Int(1)); }

IVec vec_add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec vec_sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Mono expo_to_mono(const Expo& e) {
    Mono m(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0) throw Fault("negative exponent in a Cox monomial");
        m[i] = int(e[i]);
    }
    return m;
}

PolyQ cox_to_polyq(const CoxPolynomial& f, const MonomialOrder& ord) {
    std::vector<std::pair<Mono, Rat>> terms;
    for (const auto& [e, c] : f.poly.terms()) terms.emplace_back(expo_to_mono(e), c);
    return poly_from_terms(std::move(terms), ord);
}

}  // namespace

CoxContext CoxContext::build(const LatticePolytope& P) {
    if (!P.full_dimensional()) throw InputError("Cox context requires a full-dimensional polytope");
    CoxContext ctx;
    ctx.n_ = P.ambient_dim();
    ctx.fan_ = normal_fan(P);
    int nv = int(ctx.fan_.rays.size());
    ctx.degree_map_ = IntMatrix(nv, ctx.n_);
    for (int j = 0; j < nv; ++j)
        for (int i = 0; i < ctx.n_; ++i) ctx.degree_map_.at(j, i) = ctx.fan_.rays[size_t(j)][size_t(i)];
    ctx.image_ = std::make_shared<ColumnLattice>(ctx.degree_map_);
    for (int j = 1; j <= nv; ++j) ctx.vars_.push_back("x" + std::to_string(j));
    ctx.rho0_ = DegreeClass{ctx.image_->reduce(ones(nv))};
    for (const Cone& c : ctx.fan_.cones)
        if (c.dim == ctx.n_) ctx.max_cones_.push_back(c.rays);
    return ctx;
}

DegreeClass CoxContext::class_of(const IVec& v) const { return DegreeClass{image_->reduce(v)}; }

DegreeClass CoxContext::add(const DegreeClass& a, const DegreeClass& b) const {
    return class_of(vec_add(a.rep, b.rep));
}

DegreeClass CoxContext::sub(const DegreeClass& a, const DegreeClass& b) const {
    return class_of(vec_sub(a.rep, b.rep));
}

DegreeClass CoxContext::scale(const DegreeClass& a, const Int& k) const {
    IVec r(a.rep.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.rep[i] * k;
    return class_of(r);
}

std::optional<IVec> CoxContext::image_solve(const IVec& v) const { return image_->solve(v); }

bool CoxContext::is_ample(const IVec& offsets) const {
    for (const std::vector<int>& cone : max_cones_) {
        RatMatrix A(int(cone.size()), n_);
        RVec b(cone.size());
        for (size_t r = 0; r < cone.size(); ++r) {
            for (int c = 0; c < n_; ++c) A.at(int(r), c) = Rat(fan_.rays[size_t(cone[r])][size_t(c)]);
            b[r] = Rat(-offsets[size_t(cone[r])]);
        }
        LinearSolution sol = solve_linear(A, b);
        if (!sol.particular || !sol.kernel.empty()) return false;  // not Cartier at the cone
        for (int j = 0; j < nvars(); ++j) {
            if (std::find(cone.begin(), cone.end(), j) != cone.end()) continue;
            Rat s = 0;
            for (int c = 0; c < n_; ++c) s += Rat(fan_.rays[size_t(j)][size_t(c)]) * (*sol.particular)[size_t(c)];
            if (s <= Rat(-offsets[size_t(j)])) return false;  // vertex touches a foreign facet
        }
    }
    return true;
}

CoxPolynomial cox_monomial(const CoxContext& ctx, const Expo& u, const Rat& c) {
    CoxPolynomial f;
    f.poly = LaurentPolynomial::monomial(ctx.nvars(), u, c);
    f.rep = expo_to_ivec(u);
    return f;
}

void validate_homogeneous(const CoxContext& ctx, const CoxPolynomial& f) {
    for (const auto& [e, c] : f.poly.terms())
        if (!ctx.in_image(vec_sub(expo_to_ivec(e), f.rep)))
            throw InputError("polynomial is not homogeneous for its degree representative");
}

CoxPolynomial cox_add(const CoxContext& ctx, const CoxPolynomial& a, const CoxPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (ctx.class_of(a.rep) != ctx.class_of(b.rep))
        throw InputError("cannot add Cox polynomials of different degrees");
    CoxPolynomial r;
    r.poly = a.poly + b.poly;
    r.rep = a.rep;
    return r;
}

CoxPolynomial cox_mul(const CoxContext& ctx, const CoxPolynomial& a, const CoxPolynomial& b) {
    (void)ctx;
    CoxPolynomial r;
    r.poly = a.poly * b.poly;
    r.rep = vec_add(a.rep, b.rep);
    return r;
}

CoxPolynomial cox_scale(const CoxPolynomial& a, const Rat& c) {
    CoxPolynomial r;
    r.poly = a.poly.scale(c);
    r.rep = a.rep;
    return r;
}

CoxPolynomial cox_derivative(const CoxContext& ctx, const CoxPolynomial& a, int var) {
    CoxPolynomial r;
    r.poly = LaurentPolynomial(ctx.nvars());
    for (const auto& [e, c] : a.poly.terms()) {
        if (e[size_t(var)] == 0) continue;
        Expo d = e;
        d[size_t(var)] -= 1;
        r.poly.add_term(d, c * Rat(e[size_t(var)]));
    }
    r.rep = a.rep;
    r.rep[size_t(var)] -= 1;
    return r;
}

DegreeClass degree_of(const CoxContext& ctx, const CoxPolynomial& f) {
    return ctx.class_of(f.rep);
}

CoxPolynomial homogenize(const LaurentPolynomial& f, const LatticePolytope& support,
                         const CoxContext& ctx) {
    if (support.ambient_dim() != ctx.torus_dim())
        throw InputError("homogenize: support dimension mismatch");
    int nv = ctx.nvars();
    CoxPolynomial F;
    F.rep = IVec(size_t(nv));
    for (int j = 0; j < nv; ++j) F.rep[size_t(j)] = support.facet_offset(ctx.fan().rays[size_t(j)]);
    F.poly = LaurentPolynomial(nv);
    for (const auto& [e, c] : f.terms()) {
        IVec m = expo_to_ivec(e);
        Expo u(static_cast<size_t>(nv));
        for (int j = 0; j < nv; ++j) {
            Int s = 0;
            for (int i = 0; i < ctx.torus_dim(); ++i) s += m[size_t(i)] * ctx.fan().rays[size_t(j)][size_t(i)];
            s += F.rep[size_t(j)];
            if (s < 0)
                throw InputError("homogenize: monomial " + ivec_to_string(m) +
                                 " falls outside the declared support");
            u[size_t(j)] = s.get_si();
        }
        F.poly.add_term(u, c);
    }
    return F;
}

LaurentPolynomial dehomogenize_with_rep(const CoxPolynomial& F, const IVec& rep,
                                        const CoxContext& ctx) {
    LaurentPolynomial f(ctx.torus_dim());
    for (const auto& [e, c] : F.poly.terms()) {
        auto m = ctx.image_solve(vec_sub(expo_to_ivec(e), rep));
        if (!m)
            throw InputError("dehomogenize: monomial does not match the degree representative");
        f.add_term(ivec_to_expo(*m), c);
    }
    return f;
}

LaurentPolynomial dehomogenize(const CoxPolynomial& F, const CoxContext& ctx) {
    return dehomogenize_with_rep(F, F.rep, ctx);
}

GradedPiece graded_piece(const DegreeClass& alpha, const CoxContext& ctx) {
    GradedPiece out;
    out.lattice_points = hrep_lattice_points(ctx.fan().rays, alpha.rep);
    for (const IVec& m : out.lattice_points) {
        Expo u(size_t(ctx.nvars()));
        for (int j = 0; j < ctx.nvars(); ++j) {
            Int s = alpha.rep[size_t(j)];
            for (int i = 0; i < ctx.torus_dim(); ++i) s += m[size_t(i)] * ctx.fan().rays[size_t(j)][size_t(i)];
            u[size_t(j)] = s.get_si();
        }
        out.monomials.push_back(std::move(u));
    }
    return out;
}

int graded_quotient_dim(const std::vector<CoxPolynomial>& gens, const DegreeClass& alpha,
                        const CoxContext& ctx) {
    GradedPiece Sa = graded_piece(alpha, ctx);
    std::map<Expo, int> row;
    for (size_t i = 0; i < Sa.monomials.size(); ++i) row[Sa.monomials[i]] = int(i);
    std::vector<RVec> cols;
    for (const CoxPolynomial& F : gens) {
        validate_homogeneous(ctx, F);
        if (F.is_zero()) continue;
        DegreeClass beta = ctx.sub(alpha, degree_of(ctx, F));
        GradedPiece Sb = graded_piece(beta, ctx);
        for (const Expo& g : Sb.monomials) {
            RVec col(Sa.monomials.size());
            for (const auto& [e, c] : F.poly.terms()) {
                Expo u(e.size());
                for (size_t k = 0; k < e.size(); ++k) u[k] = e[k] + g[k];
                auto it = row.find(u);
                if (it == row.end()) throw Fault("graded product escaped the target graded piece");
                col[size_t(it->second)] += c;
            }
            cols.push_back(std::move(col));
        }
    }
    if (cols.empty()) return int(Sa.monomials.size());
    RatMatrix M(int(Sa.monomials.size()), int(cols.size()));
    for (int c = 0; c < M.cols(); ++c)
        for (int r = 0; r < M.rows(); ++r) M.at(r, c) = cols[size_t(c)][size_t(r)];
    return int(Sa.monomials.size()) - rank_and_kernel(M).rank;
}

CriticalData critical_degree(const std::vector<DegreeClass>& degrees, const CoxContext& ctx) {
    if (int(degrees.size()) != ctx.torus_dim() + 1)
        throw InputError("critical degree expects n+1 degrees");
    CriticalData out;
    out.degrees = degrees;
    IVec acc(size_t(ctx.nvars()));
    for (const DegreeClass& d : degrees) acc = vec_add(acc, d.rep);
    out.rho_F = ctx.class_of(vec_sub(acc, ones(ctx.nvars())));
    return out;
}

namespace {

// k_i and a representative of the common ample class with k_i * alpha = deg F_i.
struct CommonAmple {
    std::vector<Int> k;
    IVec alpha_rep;
};

CommonAmple infer_common_ample(const std::vector<CoxPolynomial>& F, const CoxContext& ctx) {
    // project to the free part of the class group via the left kernel of the
    // degree map, infer the multiples there, then solve for the class itself
    std::vector<IVec> Y = integer_kernel(ctx.degree_map().transpose());
    size_t r = Y.size();
    auto project = [&](const IVec& v) {
        IVec out(r);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < v.size(); ++j) out[i] += Y[i][j] * v[j];
        return out;
    };
    std::vector<IVec> vs;
    for (const CoxPolynomial& f : F) vs.push_back(project(f.rep));

    Int g = 0;
    size_t base = 0;
    for (size_t i = 0; i < vs.size(); ++i) {
        Int content = 0;
        for (const Int& x : vs[i]) content = gcd(content, x);
        if (content != 0) { base = i; g = content; break; }
    }
    if (g == 0) throw Fault("toric jacobian: degrees project to zero; no common ample class");
    IVec w(vs[base].size());
    for (size_t j = 0; j < w.size(); ++j) w[j] = vs[base][j] / g;

    CommonAmple out;
    for (const IVec& v : vs) {
        // v = k * w componentwise
        Int k = 0;
        for (size_t j = 0; j < w.size(); ++j)
            if (w[j] != 0) { k = v[j] / w[j]; break; }
        for (size_t j = 0; j < w.size(); ++j)
            if (v[j] != k * w[j])
                throw Fault("toric jacobian: degrees are not multiples of a common ample class");
        if (k <= 0)
            throw Fault("toric jacobian: degree multiples must be positive integers");
        out.k.push_back(k);
    }

    // solve k_base * a = rep_base modulo the image lattice
    int nv = ctx.nvars();
    IntMatrix stacked(nv, nv + ctx.torus_dim());
    for (int i = 0; i < nv; ++i) stacked.at(i, i) = out.k[base];
    for (int i = 0; i < nv; ++i)
        for (int c = 0; c < ctx.torus_dim(); ++c) stacked.at(i, nv + c) = ctx.degree_map().at(i, c);
    auto sol = ColumnLattice(stacked).solve(F[base].rep);
    if (!sol) throw Fault("toric jacobian: common class equation k*alpha = alpha_i has no integer solution");
    out.alpha_rep = IVec(sol->begin(), sol->begin() + nv);

    for (size_t i = 0; i < F.size(); ++i) {
        IVec scaled(static_cast<size_t>(nv));
        for (int j = 0; j < nv; ++j) scaled[size_t(j)] = out.alpha_rep[size_t(j)] * out.k[i];
        if (!(ctx.class_of(scaled) == ctx.class_of(F[i].rep)))
            throw Fault("toric jacobian: degrees are not multiples of a common ample class");
    }
    if (!ctx.is_ample(ctx.class_of(out.alpha_rep).rep))
        throw Fault("toric jacobian: the common class is not ample");
    return out;
}

CoxPolynomial cox_det(const CoxContext& ctx, const std::vector<std::vector<CoxPolynomial>>& m,
                      const IVec& rep) {
    std::vector<std::vector<LaurentPolynomial>> plain;
    for (const auto& row : m) {
        std::vector<LaurentPolynomial> pr;
        for (const auto& f : row) pr.push_back(f.poly);
        plain.push_back(std::move(pr));
    }
    CoxPolynomial out;
    out.poly = matrix_determinant(plain, ctx.nvars());
    out.rep = rep;
    return out;
}

}  // namespace

CoxPolynomial toric_jacobian_cox(const std::vector<CoxPolynomial>& F, const CoxContext& ctx,
                                 const std::vector<int>& ray_set) {
    int n = ctx.torus_dim();
    if (int(F.size()) != n + 1) throw InputError("toric jacobian expects n+1 polynomials");
    std::vector<int> I = ray_set;
    std::sort(I.begin(), I.end());
    if (int(I.size()) != n) throw InputError("toric jacobian: the ray set must have n indices");
    for (const CoxPolynomial& f : F) validate_homogeneous(ctx, f);

    IntMatrix rays(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) rays.at(r, c) = ctx.fan().rays[size_t(I[size_t(r)])][size_t(c)];
    Int dI = rays.det();
    if (dI == 0) throw InputError("toric jacobian: chosen rays are linearly dependent");

    CommonAmple ka = infer_common_ample(F, ctx);

    std::vector<std::vector<CoxPolynomial>> m(size_t(n + 1));
    for (int j = 0; j <= n; ++j) m[0].push_back(cox_scale(F[size_t(j)], Rat(ka.k[size_t(j)])));
    for (int s = 0; s < n; ++s) {
        m[size_t(s + 1)].reserve(size_t(n + 1));
        for (int j = 0; j <= n; ++j)
            m[size_t(s + 1)].push_back(cox_derivative(ctx, F[size_t(j)], I[size_t(s)]));
    }
    IVec rep(size_t(ctx.nvars()));
    for (const CoxPolynomial& f : F) rep = vec_add(rep, f.rep);
    rep = vec_sub(rep, ones(ctx.nvars()));
    CoxPolynomial det = cox_det(ctx, m, rep);  // rep after the division below

    // divide exactly by d_I * prod_{j not in I} x_j
    Expo divisor(size_t(ctx.nvars()), 0);
    for (int j = 0; j < ctx.nvars(); ++j)
        if (std::find(I.begin(), I.end(), j) == I.end()) divisor[size_t(j)] = 1;
    LaurentPolynomial quotient(ctx.nvars());
    for (const auto& [e, c] : det.poly.terms()) {
        Expo q(e.size());
        for (size_t idx = 0; idx < e.size(); ++idx) {
            q[idx] = e[idx] - divisor[idx];
            if (q[idx] < 0)
                throw Fault("toric jacobian: non-exact division; the degree hypothesis is violated");
        }
        quotient.add_term(q, c / Rat(dI));
    }
    det.poly = std::move(quotient);
    validate_homogeneous(ctx, det);
    return det;
}

CoxPolynomial delta_element(const std::vector<CoxPolynomial>& F, const std::vector<int>& sigma_rays,
                            const CoxContext& ctx) {
    int n = ctx.torus_dim();
    if (int(F.size()) != n + 1) throw InputError("delta element expects n+1 polynomials");
    std::vector<int> sigma = sigma_rays;
    std::sort(sigma.begin(), sigma.end());
    bool is_max = false;
    for (const auto& mc : ctx.maximal_cones()) {
        std::vector<int> sorted = mc;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == sigma) is_max = true;
    }
    if (!is_max) throw InputError("delta element: the ray set is not a maximal cone of the fan");
    if (int(sigma.size()) != n) throw InputError("delta element: cone is not simplicial");
    for (const CoxPolynomial& f : F) validate_homogeneous(ctx, f);

    // monomial-wise decomposition: F_j = sum_s F_{s,j} x_{sigma[s]} + F_{0,j} * x^{complement}
    std::vector<std::vector<CoxPolynomial>> m(size_t(n + 1),
                                              std::vector<CoxPolynomial>(size_t(n + 1)));
    for (int j = 0; j <= n; ++j) {
        std::vector<LaurentPolynomial> rows(size_t(n + 1), LaurentPolynomial(ctx.nvars()));
        for (const auto& [e, c] : F[size_t(j)].poly.terms()) {
            int hit = -1;
            for (size_t s = 0; s < sigma.size(); ++s)
                if (e[size_t(sigma[s])] > 0) { hit = int(s); break; }
            if (hit >= 0) {
                Expo q = e;
                q[size_t(sigma[size_t(hit)])] -= 1;
                rows[size_t(hit + 1)].add_term(q, c);
            } else {
                Expo q = e;
                for (int v = 0; v < ctx.nvars(); ++v) {
                    if (std::find(sigma.begin(), sigma.end(), v) != sigma.end()) continue;
                    if (q[size_t(v)] == 0)
                        throw Fault("delta element: vertex term not divisible by the complement "
                                    "monomial; degree not ample for the cone");
                    q[size_t(v)] -= 1;
                }
                rows[0].add_term(q, c);
            }
        }
        for (int s = 0; s <= n; ++s) {
            m[size_t(s)][size_t(j)].poly = std::move(rows[size_t(s)]);
            m[size_t(s)][size_t(j)].rep = F[size_t(j)].rep;  // bookkeeping only
        }
    }
    IVec rep(size_t(ctx.nvars()));
    for (const CoxPolynomial& f : F) rep = vec_add(rep, f.rep);
    rep = vec_sub(rep, ones(ctx.nvars()));
    CoxPolynomial delta = cox_det(ctx, m, rep);
    validate_homogeneous(ctx, delta);
    return delta;
}

namespace {

// Saturation of <F> by a single monomial via the auxiliary-variable trick;
// returns the reduced basis in the original variables.
std::vector<PolyQ> saturate_by_monomial(const std::vector<CoxPolynomial>& F, const Expo& mono,
                                        const CoxContext& ctx, const RunConfig& cfg) {
    int nv = ctx.nvars();
    MonomialOrder elim{MonomialOrder::ElimFirstVar, nv + 1};
    std::vector<PolyQ> gens;
    for (const CoxPolynomial& f : F) {
        if (f.is_zero()) continue;
        std::vector<std::pair<Mono, Rat>> lifted;
        for (const auto& [e, c] : f.poly.terms()) {
            Mono l(size_t(nv + 1), 0);
            for (int k = 0; k < nv; ++k) l[size_t(k + 1)] = int(e[size_t(k)]);
            lifted.emplace_back(std::move(l), c);
        }
        gens.push_back(poly_from_terms(std::move(lifted), elim));
    }
    {
        Mono u(size_t(nv + 1), 0);
        u[0] = 1;
        for (int k = 0; k < nv; ++k) u[size_t(k + 1)] = int(mono[size_t(k)]);
        std::vector<std::pair<Mono, Rat>> terms{{u, Rat(1)}, {Mono(size_t(nv + 1), 0), Rat(-1)}};
        gens.push_back(poly_from_terms(std::move(terms), elim));
    }
    GroebnerResult gb = buchberger(gens, elim, cfg.groebner_step_cap);
    MonomialOrder plain{MonomialOrder::Grevlex, nv};
    std::vector<PolyQ> restricted;
    for (const PolyQ& g : gb.basis) {
        bool pure = true;
        for (const auto& [mn, c] : g.terms)
            if (mn[0] != 0) pure = false;
        if (!pure) continue;
        std::vector<std::pair<Mono, Rat>> dropped;
        for (const auto& [mn, c] : g.terms) dropped.emplace_back(Mono(mn.begin() + 1, mn.end()), c);
        restricted.push_back(poly_from_terms(std::move(dropped), plain));
    }
    return buchberger(restricted, plain, cfg.groebner_step_cap).basis;
}

}  // namespace

EmptinessCertificate irrelevant_saturation(const std::vector<CoxPolynomial>& F,
                                           const CoxContext& ctx, const RunConfig& cfg) {
    EmptinessCertificate cert;
    cert.empty = true;
    for (const std::vector<int>& cone : ctx.maximal_cones()) {
        Expo mono(size_t(ctx.nvars()), 0);
        for (int j = 0; j < ctx.nvars(); ++j)
            if (std::find(cone.begin(), cone.end(), j) == cone.end()) mono[size_t(j)] = 1;
        bool unit = is_unit_ideal(saturate_by_monomial(F, mono, ctx, cfg));
        cert.cone_unit.emplace_back(cone, unit);
        cert.empty = cert.empty && unit;
    }
    return cert;
}

MembershipResult membership(const CoxPolynomial& H, const std::vector<CoxPolynomial>& F,
                            const CoxContext& ctx, const RunConfig& cfg) {
    validate_homogeneous(ctx, H);
    for (const CoxPolynomial& f : F) validate_homogeneous(ctx, f);
    MonomialOrder ord{MonomialOrder::Grevlex, ctx.nvars()};
    std::vector<PolyQ> gens;
    for (const CoxPolynomial& f : F) gens.push_back(cox_to_polyq(f, ord));
    GroebnerResult gb = buchberger(gens, ord, cfg.groebner_step_cap, /*track=*/true);

    ReductionBudget budget;
    budget.cap = cfg.groebner_step_cap;
    std::vector<PolyQ> quotients;
    PolyQ rem = normal_form(cox_to_polyq(H, ord), gb.basis, ord, &budget, &quotients);
    MembershipResult out;
    if (!rem.is_zero()) return out;
    out.member = true;

    std::vector<PolyQ> cof(F.size());
    for (size_t k = 0; k < gb.basis.size(); ++k) {
        if (quotients[k].is_zero()) continue;
        for (size_t i = 0; i < F.size(); ++i)
            if (!gb.reps[k][i].is_zero())
                cof[i] = add(cof[i], mul(quotients[k], gb.reps[k][i], ord), ord);
    }
    // exact identity check H = sum cof_i F_i
    PolyQ rebuilt;
    for (size_t i = 0; i < F.size(); ++i) rebuilt = add(rebuilt, mul(cof[i], gens[i], ord), ord);
    if (!equal(rebuilt, cox_to_polyq(H, ord)))
        throw Fault("membership: cofactor identity failed verification");

    for (size_t i = 0; i < F.size(); ++i) {
        CoxPolynomial g;
        g.poly = LaurentPolynomial(ctx.nvars());
        for (const auto& [mn, c] : cof[i].terms) {
            Expo e(mn.size());
            for (size_t k = 0; k < mn.size(); ++k) e[k] = mn[k];
            g.poly.add_term(e, c);
        }
        g.rep = vec_sub(H.rep, F[i].rep);
        out.cofactors.push_back(std::move(g));
    }
    return out;
}

bool localized_membership(const CoxPolynomial& H, const std::vector<CoxPolynomial>& F,
                          const std::vector<int>& sigma_rays, const CoxContext& ctx,
                          const RunConfig& cfg) {
    Expo mono(size_t(ctx.nvars()), 0);
    for (int j = 0; j < ctx.nvars(); ++j)
        if (std::find(sigma_rays.begin(), sigma_rays.end(), j) == sigma_rays.end())
            mono[size_t(j)] = 1;
    std::vector<PolyQ> sat = saturate_by_monomial(F, mono, ctx, cfg);
    MonomialOrder ord{MonomialOrder::Grevlex, ctx.nvars()};
    ReductionBudget budget;
    budget.cap = cfg.groebner_step_cap;
    return normal_form(cox_to_polyq(H, ord), sat, ord, &budget).is_zero();
}

Rat toric_residue_torus_side(const std::vector<CoxPolynomial>& F, const CoxPolynomial& H, int drop,
                             const CoxContext& ctx, const RunConfig& cfg) {
    int n = ctx.torus_dim();
    if (int(F.size()) != n + 1) throw InputError("toric residue expects n+1 polynomials");
    if (drop < 0 || drop > n) throw InputError("toric residue: invalid dropped index");

    IVec crit(size_t(ctx.nvars()));
    for (const CoxPolynomial& f : F) crit = vec_add(crit, f.rep);
    crit = vec_sub(crit, ones(ctx.nvars()));
    LaurentPolynomial h = dehomogenize_with_rep(H, crit, ctx);

    std::vector<std::string> tvars;
    for (int i = 1; i <= n; ++i) tvars.push_back("t" + std::to_string(i));

    std::vector<LaurentPolynomial> sub_polys;
    std::vector<LatticePolytope> sub_supports;
    for (int j = 0; j <= n; ++j) {
        if (j == drop) continue;
        sub_polys.push_back(dehomogenize(F[size_t(j)], ctx));
        std::vector<RVec> verts = hrep_vertices(ctx.fan().rays, F[size_t(j)].rep);
        std::vector<IVec> lattice_verts;
        for (const RVec& v : verts) {
            IVec iv(v.size());
            for (size_t k = 0; k < v.size(); ++k) {
                if (v[k].get_den() != 1)
                    throw Fault("toric residue: degree polytope has a non-lattice vertex");
                iv[k] = v[k].get_num();
            }
            lattice_verts.push_back(std::move(iv));
        }
        sub_supports.push_back(LatticePolytope::convex_hull(lattice_verts, n));
    }
    LaurentSystem subsystem(sub_polys, tvars, sub_supports);

    Analyzer sub(subsystem, cfg);
    InfinityAudit audit = sub.audit_infinity();
    if (!audit.deficient().empty())
        throw Fault("toric residue: the remaining system has zeros at the toric boundary; "
                    "torus-side evaluation does not apply");
    if (sub.torus_zeros_empty()) return 0;
    if (!sub.all_simple())
        throw Fault("toric residue: the remaining system has multiple zeros; exact torus-side "
                    "evaluation requires simple zeros");

    LaurentPolynomial fi = dehomogenize(F[size_t(drop)], ctx);
    RatMatrix Mh = multiplication_matrix(h, sub.saturated(), sub.quotient());
    RatMatrix Mfi = multiplication_matrix(fi, sub.saturated(), sub.quotient());
    auto Mfi_inv = inverse(Mfi);
    if (!Mfi_inv)
        throw Fault("toric residue: the dropped polynomial vanishes at a zero of the others");
    RatMatrix Mj = multiplication_matrix(torus_jacobian(subsystem), sub.saturated(), sub.quotient());
    auto Mj_inv = inverse(Mj);
    if (!Mj_inv) throw Fault("toric residue: jacobian is singular on the quotient");
    Rat value = Mh.mul(*Mfi_inv).mul(*Mj_inv).trace();
    return drop % 2 == 0 ? value : -value;
}

}  // namespace toric
