#include "toric/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "toric/errors.hpp"

namespace toric {

namespace {

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k > n || k < 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

IVec sub(const IVec& a, const IVec& b) {
    IVec d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Integer equations cutting out the linear span of the given vectors;
// empty input spans {0} (equations = identity rows).
std::vector<IVec> span_equations(const std::vector<IVec>& dirs, int n) {
    if (dirs.empty()) {
        std::vector<IVec> eq;
        for (int i = 0; i < n; ++i) {
            IVec e(n);
            e[size_t(i)] = 1;
            eq.push_back(e);
        }
        return eq;
    }
    RankKernel rk = rank_and_kernel(RatMatrix::from_int(IntMatrix::from_rows(dirs)));
    std::vector<IVec> eq;
    for (const RVec& v : rk.kernel) {
        Int lcm = 1;
        for (const Rat& x : v) lcm = lcm / gcd(lcm, Int(x.get_den())) * Int(x.get_den());
        IVec w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = Int(v[i] * Rat(lcm));
        eq.push_back(std::move(w));
    }
    return eq;
}

int affine_rank(const std::vector<IVec>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<IVec> dirs;
    for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
    return IntMatrix::from_rows(dirs).rank();
}

}  // namespace

const std::vector<Facet>& LatticePolytope::facets() const {
    if (!full_dimensional()) throw Fault("facets requested on a non-full-dimensional polytope");
    return facets_;
}

const LatticePolytope& LatticePolytope::projection() const {
    if (!proj_) throw Fault("projection requested on a full-dimensional polytope");
    return *proj_;
}

LatticePolytope LatticePolytope::convex_hull(const std::vector<IVec>& points, int ambient_dim) {
    if (points.empty()) throw InputError("convex_hull: empty point set");
    if (ambient_dim > 6) throw InputError("convex_hull: ambient dimension above the supported cap 6");
    for (const IVec& p : points)
        if (int(p.size()) != ambient_dim) throw InputError("convex_hull: point dimension mismatch");

    std::vector<IVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolytope P;
    P.ambient_ = ambient_dim;
    if (pts.size() == 1) {
        P.dim_ = 0;
        P.vertices_ = pts;
        P.base_ = pts[0];
        return P;
    }

    std::vector<IVec> dirs;
    for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
    std::vector<IVec> eqs = span_equations(dirs, ambient_dim);
    int d = ambient_dim - int(eqs.size());
    P.dim_ = d;

    if (d < ambient_dim) {
        // project onto a lattice basis of the (saturated) direction lattice
        P.base_ = pts[0];  // lex-min input point is a vertex
        P.hull_basis_ = integer_kernel(IntMatrix::from_rows(eqs));
        RatMatrix B(ambient_dim, d);
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < ambient_dim; ++r) B.at(r, c) = Rat(P.hull_basis_[size_t(c)][size_t(r)]);
        std::vector<IVec> flat;
        for (const IVec& p : pts) {
            IVec rel = sub(p, P.base_);
            RVec rhs(rel.size());
            for (size_t i = 0; i < rel.size(); ++i) rhs[i] = Rat(rel[i]);
            LinearSolution sol = solve_linear(B, rhs);
            if (!sol.particular) throw Fault("convex_hull: point escapes its affine hull");
            IVec c(static_cast<size_t>(d));
            for (int i = 0; i < d; ++i) {
                const Rat& x = (*sol.particular)[size_t(i)];
                if (x.get_den() != 1) throw Fault("convex_hull: non-integral hull coordinate");
                c[size_t(i)] = x.get_num();
            }
            flat.push_back(std::move(c));
        }
        auto proj = std::make_shared<LatticePolytope>(convex_hull(flat, d));
        // pull projected vertices back to the ambient space
        for (const IVec& v : proj->vertices()) {
            IVec amb = P.base_;
            for (int i = 0; i < d; ++i)
                for (int r = 0; r < ambient_dim; ++r) amb[size_t(r)] += v[size_t(i)] * P.hull_basis_[size_t(i)][size_t(r)];
            P.vertices_.push_back(std::move(amb));
        }
        std::sort(P.vertices_.begin(), P.vertices_.end());
        P.proj_ = std::move(proj);
        return P;
    }

    // full-dimensional: candidate facet hyperplanes through n affinely
    // independent points, kept when all points lie on one side
    int n = ambient_dim;
    std::set<std::pair<IVec, Int>> seen;
    std::vector<Facet> facets;
    for_each_combination(int(pts.size()), n, [&](const std::vector<int>& idx) {
        std::vector<IVec> local;
        for (size_t i = 1; i < idx.size(); ++i) local.push_back(sub(pts[size_t(idx[i])], pts[size_t(idx[0])]));
        if (n > 1 && IntMatrix::from_rows(local).rank() != n - 1) return;
        std::vector<IVec> kern = n == 1 ? std::vector<IVec>{{Int(1)}}
                                        : integer_kernel(IntMatrix::from_rows(local));
        if (kern.size() != 1) return;
        IVec eta = kern[0];
        Int s0 = dot(pts[size_t(idx[0])], eta);
        Int smin = s0, smax = s0;
        for (const IVec& p : pts) {
            Int s = dot(p, eta);
            smin = std::min(smin, s);
            smax = std::max(smax, s);
        }
        if (s0 != smin && s0 != smax) return;
        if (s0 == smax && s0 != smin) {
            for (Int& x : eta) x = -x;
            s0 = -s0;
        }
        Int a = -s0;
        if (!seen.insert({eta, a}).second) return;
        Facet f;
        f.normal = std::move(eta);
        f.offset = a;
        facets.push_back(std::move(f));
    });

    // vertices: points whose tight normals span the space
    std::vector<IVec> verts;
    for (const IVec& p : pts) {
        std::vector<IVec> tight_normals;
        for (const Facet& f : facets)
            if (dot(p, f.normal) == -f.offset) tight_normals.push_back(f.normal);
        if (!tight_normals.empty() && IntMatrix::from_rows(tight_normals).rank() == n)
            verts.push_back(p);
    }
    std::sort(verts.begin(), verts.end());
    std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
    });
    for (Facet& f : facets)
        for (size_t vi = 0; vi < verts.size(); ++vi)
            if (dot(verts[vi], f.normal) == -f.offset) f.tight.push_back(int(vi));
    P.vertices_ = std::move(verts);
    P.facets_ = std::move(facets);
    return P;
}

bool LatticePolytope::contains(const IVec& p) const {
    if (dim_ == 0) return p == vertices_[0];
    if (full_dimensional()) {
        for (const Facet& f : facets_)
            if (dot(p, f.normal) < -f.offset) return false;
        return true;
    }
    IVec rel = sub(p, base_);
    RatMatrix B(ambient_, dim_);
    for (int c = 0; c < dim_; ++c)
        for (int r = 0; r < ambient_; ++r) B.at(r, c) = Rat(hull_basis_[size_t(c)][size_t(r)]);
    RVec rhs(rel.size());
    for (size_t i = 0; i < rel.size(); ++i) rhs[i] = Rat(rel[i]);
    LinearSolution sol = solve_linear(B, rhs);
    if (!sol.particular) return false;
    IVec c(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        if ((*sol.particular)[size_t(i)].get_den() != 1) return false;
        c[size_t(i)] = (*sol.particular)[size_t(i)].get_num();
    }
    return proj_->contains(c);
}

Int LatticePolytope::facet_offset(const IVec& eta) const {
    Int m = dot(vertices_[0], eta);
    for (const IVec& v : vertices_) m = std::min(m, dot(v, eta));
    return -m;
}

namespace {

std::vector<IVec> box_points(const std::vector<IVec>& verts) {
    size_t n = verts[0].size();
    IVec lo = verts[0], hi = verts[0];
    for (const IVec& v : verts)
        for (size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    std::vector<IVec> out;
    IVec cur = lo;
    while (true) {
        out.push_back(cur);
        size_t i = 0;
        while (i < n && cur[i] == hi[i]) {
            cur[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        cur[i] += 1;
    }
    return out;
}

}  // namespace

std::vector<IVec> LatticePolytope::lattice_points() const {
    if (dim_ == 0) return {vertices_[0]};
    if (!full_dimensional()) {
        std::vector<IVec> out;
        for (const IVec& c : proj_->lattice_points()) {
            IVec amb = base_;
            for (int i = 0; i < dim_; ++i)
                for (int r = 0; r < ambient_; ++r) amb[size_t(r)] += c[size_t(i)] * hull_basis_[size_t(i)][size_t(r)];
            out.push_back(std::move(amb));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<IVec> out;
    for (const IVec& p : box_points(vertices_)) {
        bool in = true;
        for (const Facet& f : facets_)
            if (dot(p, f.normal) < -f.offset) { in = false; break; }
        if (in) out.push_back(p);
    }
    return out;
}

std::vector<IVec> LatticePolytope::interior_lattice_points() const {
    if (dim_ == 0) return {vertices_[0]};  // relint of a point is the point
    if (!full_dimensional()) {
        std::vector<IVec> out;
        for (const IVec& c : proj_->interior_lattice_points()) {
            IVec amb = base_;
            for (int i = 0; i < dim_; ++i)
                for (int r = 0; r < ambient_; ++r) amb[size_t(r)] += c[size_t(i)] * hull_basis_[size_t(i)][size_t(r)];
            out.push_back(std::move(amb));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<IVec> out;
    for (const IVec& p : box_points(vertices_)) {
        bool in = true;
        for (const Facet& f : facets_)
            if (dot(p, f.normal) <= -f.offset) { in = false; break; }
        if (in) out.push_back(p);
    }
    return out;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dim() != q.ambient_dim()) throw InputError("minkowski_sum: ambient dimension mismatch");
    std::vector<IVec> sums;
    for (const IVec& a : p.vertices())
        for (const IVec& b : q.vertices()) {
            IVec s(a.size());
            for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            sums.push_back(std::move(s));
        }
    return LatticePolytope::convex_hull(sums, p.ambient_dim());
}

namespace {

// Pyramid decomposition from the lex-min vertex: N(P) equals the sum over
// facets missing that vertex of (lattice height) * N(facet), computed in the
// facet's own lattice coordinates.  Deterministic by construction.
Rat relative_normalized_volume(const LatticePolytope& p) {
    if (p.dim() == 0) return 1;
    const LatticePolytope& full = p.full_dimensional() ? p : p.projection();
    if (full.dim() != full.ambient_dim()) throw Fault("volume: projection not full-dimensional");
    const IVec v0 = full.vertices()[0];
    Rat total = 0;
    for (const Facet& f : full.facets()) {
        Int h = dot(v0, f.normal) + f.offset;
        if (h == 0) continue;
        std::vector<IVec> fverts;
        for (int vi : f.tight) fverts.push_back(full.vertices()[size_t(vi)]);
        LatticePolytope face = LatticePolytope::convex_hull(fverts, full.ambient_dim());
        total += Rat(h) * relative_normalized_volume(face);
    }
    return total;
}

}  // namespace

Rat normalized_volume(const LatticePolytope& p) {
    if (!p.full_dimensional()) return 0;
    return relative_normalized_volume(p);
}

PolytopeSequence::PolytopeSequence(std::vector<LatticePolytope> polys) : polys_(std::move(polys)) {
    if (polys_.empty()) throw InputError("PolytopeSequence: empty");
    ambient_ = polys_[0].ambient_dim();
    for (const auto& p : polys_)
        if (p.ambient_dim() != ambient_) throw InputError("PolytopeSequence: mixed ambient dimensions");
}

const LatticePolytope& PolytopeSequence::subset_sum(std::uint64_t mask) const {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    LatticePolytope result = [&] {
        int low = -1;
        for (int i = 0; i < size(); ++i)
            if (mask & (1ull << i)) { low = i; break; }
        if (low < 0) throw InputError("subset_sum: empty subset");
        std::uint64_t rest = mask & ~(1ull << low);
        if (rest == 0) return polys_[size_t(low)];
        return minkowski_sum(subset_sum(rest), polys_[size_t(low)]);
    }();
    return cache_.emplace(mask, std::move(result)).first->second;
}

Rat mixed_volume(const PolytopeSequence& seq) {
    int n = seq.ambient_dim();
    if (seq.size() != n) throw InputError("mixed_volume: sequence length must equal the ambient dimension");
    Rat acc = 0;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        int bits = __builtin_popcountll(mask);
        Rat v = normalized_volume(seq.subset_sum(mask));
        if ((n - bits) % 2 == 0)
            acc += v;
        else
            acc -= v;
    }
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return acc / Rat(fact);
}

namespace {

// Subsets of {0..n-1} in lexicographic prefix order: {0},{0,1},{0,1,2},...,
// {0,2},...,{n-1}.  Stable witness order for the sequence checks.
void prefix_subsets(int n, std::vector<int>& cur, int next,
                    const std::function<bool(const std::vector<int>&)>& fn) {
    for (int i = next; i < n; ++i) {
        cur.push_back(i);
        if (!fn(cur)) { cur.pop_back(); continue; }
        prefix_subsets(n, cur, i + 1, fn);
        cur.pop_back();
    }
}

int subset_sum_dim(const PolytopeSequence& seq, const std::vector<int>& J) {
    std::vector<IVec> dirs;
    for (int j : J) {
        const auto& verts = seq[j].vertices();
        for (size_t i = 1; i < verts.size(); ++i) dirs.push_back(sub(verts[i], verts[0]));
    }
    if (dirs.empty()) return 0;
    return IntMatrix::from_rows(dirs).rank();
}

}  // namespace

SequenceCheck is_essential(const PolytopeSequence& seq) {
    int n = seq.ambient_dim();
    if (seq.size() != n) throw InputError("is_essential: sequence length must equal the ambient dimension");
    SequenceCheck out;
    std::vector<int> cur;
    prefix_subsets(n, cur, 0, [&](const std::vector<int>& J) {
        if (!out.ok) return false;
        if (subset_sum_dim(seq, J) < int(J.size())) {
            out.ok = false;
            out.witness_subset = J;
            return false;
        }
        return true;
    });
    return out;
}

SequenceCheck is_indecomposable(const PolytopeSequence& seq) {
    SequenceCheck ess = is_essential(seq);
    if (!ess.ok) return ess;
    int n = seq.ambient_dim();
    SequenceCheck out;
    std::vector<int> cur;
    prefix_subsets(n, cur, 0, [&](const std::vector<int>& J) {
        if (!out.ok) return false;
        if (int(J.size()) > n - 1) return false;
        if (subset_sum_dim(seq, J) != int(J.size())) return true;
        std::uint64_t mask = 0;
        for (int j : J) mask |= 1ull << j;
        std::vector<IVec> relint = seq.subset_sum(mask).interior_lattice_points();
        if (!relint.empty()) {
            out.ok = false;
            out.witness_subset = J;
            out.witness_point = relint.front();
            return false;
        }
        return true;
    });
    return out;
}

std::vector<const Cone*> NormalFan::maximal() const {
    std::vector<const Cone*> out;
    for (const Cone& c : cones)
        if (c.dim == ambient) out.push_back(&c);
    return out;
}

NormalFan normal_fan(const LatticePolytope& p) {
    if (!p.full_dimensional()) throw InputError("normal_fan: polytope must be full-dimensional");
    NormalFan fan;
    fan.ambient = p.ambient_dim();
    for (const Facet& f : p.facets()) {
        fan.rays.push_back(f.normal);
        fan.offsets.push_back(f.offset);
    }

    // faces as vertex sets: close the facet incidence sets under intersection
    std::set<std::vector<int>> faces;
    std::vector<std::vector<int>> work;
    for (const Facet& f : p.facets()) {
        if (faces.insert(f.tight).second) work.push_back(f.tight);
    }
    while (!work.empty()) {
        std::vector<int> cur = work.back();
        work.pop_back();
        for (const Facet& f : p.facets()) {
            std::vector<int> inter;
            std::set_intersection(cur.begin(), cur.end(), f.tight.begin(), f.tight.end(),
                                  std::back_inserter(inter));
            if (inter.empty() || inter == cur) continue;
            if (faces.insert(inter).second) work.push_back(inter);
        }
    }

    std::set<std::vector<int>> seen_ray_sets;
    for (const std::vector<int>& face : faces) {
        std::vector<int> tight_facets;
        for (size_t j = 0; j < p.facets().size(); ++j) {
            const auto& t = p.facets()[j].tight;
            if (std::includes(t.begin(), t.end(), face.begin(), face.end()))
                tight_facets.push_back(int(j));
        }
        if (!seen_ray_sets.insert(tight_facets).second) continue;
        std::vector<IVec> fverts;
        for (int vi : face) fverts.push_back(p.vertices()[size_t(vi)]);
        Cone cone;
        cone.rays = tight_facets;
        cone.dim = fan.ambient - affine_rank(fverts);
        if (face.size() == 1) cone.vertex = p.vertices()[size_t(face[0])];
        fan.cones.push_back(std::move(cone));
    }
    std::sort(fan.cones.begin(), fan.cones.end(), [](const Cone& a, const Cone& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.rays < b.rays;
    });
    return fan;
}

std::vector<RVec> hrep_vertices(const std::vector<IVec>& normals, const IVec& offsets) {
    if (normals.empty()) return {};
    int n = int(normals[0].size());
    int m = int(normals.size());
    std::vector<RVec> verts;
    std::set<RVec> seen;
    for_each_combination(m, n, [&](const std::vector<int>& idx) {
        RatMatrix A(n, n);
        RVec b(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) A.at(r, c) = Rat(normals[size_t(idx[size_t(r)])][size_t(c)]);
            b[size_t(r)] = Rat(-offsets[size_t(idx[size_t(r)])]);
        }
        LinearSolution sol = solve_linear(A, b);
        if (!sol.particular || !sol.kernel.empty()) return;
        const RVec& x = *sol.particular;
        for (int j = 0; j < m; ++j) {
            Rat s = 0;
            for (int c = 0; c < n; ++c) s += Rat(normals[size_t(j)][size_t(c)]) * x[size_t(c)];
            if (s < Rat(-offsets[size_t(j)])) return;
        }
        if (seen.insert(x).second) verts.push_back(x);
    });
    return verts;
}

std::vector<IVec> hrep_lattice_points(const std::vector<IVec>& normals, const IVec& offsets) {
    std::vector<RVec> verts = hrep_vertices(normals, offsets);
    if (verts.empty()) return {};
    size_t n = verts[0].size();
    IVec lo(n), hi(n);
    for (size_t i = 0; i < n; ++i) {
        Rat mn = verts[0][i], mx = verts[0][i];
        for (const RVec& v : verts) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        mpz_cdiv_q(lo[i].get_mpz_t(), mn.get_num().get_mpz_t(), mn.get_den().get_mpz_t());
        mpz_fdiv_q(hi[i].get_mpz_t(), mx.get_num().get_mpz_t(), mx.get_den().get_mpz_t());
        if (lo[i] > hi[i]) return {};
    }
    std::vector<IVec> out;
    IVec cur = lo;
    while (true) {
        bool in = true;
        for (size_t j = 0; j < normals.size(); ++j)
            if (dot(cur, normals[j]) < -offsets[j]) { in = false; break; }
        if (in) out.push_back(cur);
        size_t i = 0;
        while (i < n && cur[i] == hi[i]) {
            cur[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        cur[i] += 1;
    }
    return out;
}

}  // namespace toric
