#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "toric/matrix.hpp"

namespace toric {

struct Facet {
    IVec normal;              // primitive inner normal: <m, normal> >= -offset
    Int offset;
    std::vector<int> tight;   // vertex indices on the facet
};

// Exact lattice polytope with both vertex and facet representations.
// Lower-dimensional polytopes carry their affine hull: a base vertex, a
// lattice basis of the direction lattice, and the full-dimensional
// projection expressed in those coordinates.
class LatticePolytope {
  public:
    static LatticePolytope convex_hull(const std::vector<IVec>& points, int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == ambient_; }
    const std::vector<IVec>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const;  // full-dimensional only

    const IVec& hull_base() const { return base_; }
    const std::vector<IVec>& hull_basis() const { return hull_basis_; }
    const LatticePolytope& projection() const;  // 0 < dim < ambient only

    bool contains(const IVec& p) const;
    // -min <m, eta> over the polytope (support offset in direction -eta).
    Int facet_offset(const IVec& eta) const;

    std::vector<IVec> lattice_points() const;
    std::vector<IVec> interior_lattice_points() const;  // relative interior

    bool operator==(const LatticePolytope& o) const {
        return ambient_ == o.ambient_ && vertices_ == o.vertices_;
    }

  private:
    int ambient_ = 0;
    int dim_ = 0;
    std::vector<IVec> vertices_;           // sorted lexicographically
    std::vector<Facet> facets_;            // populated when full-dimensional
    IVec base_;                            // lex-min vertex when dim < ambient
    std::vector<IVec> hull_basis_;         // direction lattice basis (dim_ rows)
    std::shared_ptr<const LatticePolytope> proj_;
};

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

// n! times the Euclidean volume; 0 when not full-dimensional.
Rat normalized_volume(const LatticePolytope& p);

struct Cone {
    std::vector<int> rays;       // indices into NormalFan::rays, sorted
    int dim = 0;
    std::optional<IVec> vertex;  // m_sigma annotation for maximal cones
};

struct NormalFan {
    int ambient = 0;
    std::vector<IVec> rays;      // primitive facet normals
    std::vector<Int> offsets;    // facet offsets of the source polytope
    std::vector<Cone> cones;     // dims 1..n, deduplicated, deterministic order
    std::vector<const Cone*> maximal() const;
};

NormalFan normal_fan(const LatticePolytope& p);

class PolytopeSequence {
  public:
    explicit PolytopeSequence(std::vector<LatticePolytope> polys);
    int size() const { return int(polys_.size()); }
    int ambient_dim() const { return ambient_; }
    const LatticePolytope& operator[](int i) const { return polys_[size_t(i)]; }
    // Minkowski sum of the subset encoded by the bitmask; cached.
    const LatticePolytope& subset_sum(std::uint64_t mask) const;

  private:
    std::vector<LatticePolytope> polys_;
    int ambient_ = 0;
    mutable std::map<std::uint64_t, LatticePolytope> cache_;
};

// Normalized so that MV(P,...,P) = normalized_volume(P); inclusion-exclusion
// over subset Minkowski sums divided by n!.
Rat mixed_volume(const PolytopeSequence& seq);

struct SequenceCheck {
    bool ok = true;
    std::vector<int> witness_subset;  // 0-based indices, on failure
    std::optional<IVec> witness_point;
};

SequenceCheck is_essential(const PolytopeSequence& seq);
SequenceCheck is_indecomposable(const PolytopeSequence& seq);

// Vertex/lattice-point enumeration for an H-representation {m : <m, eta_j> >= -a_j}.
// The region must be bounded; an infeasible system yields empty results.
std::vector<RVec> hrep_vertices(const std::vector<IVec>& normals, const IVec& offsets);
std::vector<IVec> hrep_lattice_points(const std::vector<IVec>& normals, const IVec& offsets);

}  // namespace toric
