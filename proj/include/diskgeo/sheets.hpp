#pragma once

// Bones (codimension-2 simplices), their dual rings of facets, local geodesic
// disks and the sectional curvature of a bone,
//
//   K = (2 - m)/6 + (2/3) Σ_k 1/p_k,
//
// where m is the number of facets hinging on the bone and p_k are the facet
// counts of its m petal bones.

#include "diskgeo/complex.hpp"
#include "diskgeo/frame_flow.hpp"
#include "diskgeo/numeric.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace diskgeo {

struct BoneRing {
    Simplex bone;
    std::size_t m = 0;                 // facets hinging on the bone
    std::vector<Simplex> ring;         // facets in cyclic dual-graph order
    std::vector<VertexId> ring_vertices;  // link cycle: ring[k] = bone ∪ {v_k, v_{k+1}}
};

/// Throws invalid_input if `bone` is not a codimension-2 simplex and
/// non_manifold_at_bone if the hinging facets do not form a single cycle.
BoneRing bone_ring(const SimplicialComplex& c, const Simplex& bone);

struct SheetPatch {
    Simplex bone;
    std::vector<VertexId> ordering;       // bone vertices, head first
    Frame transport_frame;                // ordering followed by the two ring vertices of the first ring facet
    std::vector<Simplex> petal_bones;     // m of them, ring order
    std::vector<std::size_t> petal_numbers;
    std::vector<Simplex> facets;          // canonical order
    Graph dual_subgraph;                  // labels as in dual_graph(c)
};

/// Local geodesic disk: the hinging facets plus every facet around the petal
/// bones found by flowing each hinging facet once. Empty `ordering` means the
/// sorted bone.
SheetPatch local_disk(const SimplicialComplex& c, const Simplex& bone, std::vector<VertexId> ordering = {});

/// Sum over hinging facets y of 1/(3 l1) + 1/(3 l2), plus (2 - m)/6, with
/// l = |stable star of a petal bone| / 2 and the petal bones found by
/// intersecting y, T(y) and the two ring neighbours of y.
Rational sectional_curvature_listing(const SimplicialComplex& c, const Simplex& bone,
                                     std::vector<VertexId> ordering = {});

/// (2 - m)/6 + (2/3) Σ 1/p_k with petal bones (bone minus head) ∪ {v} for the
/// ring vertices v and p_k their facet counts.
Rational sectional_curvature_closed_form(const SimplicialComplex& c, const Simplex& bone,
                                         std::vector<VertexId> ordering = {});

/// Listing value; throws internal if the closed form disagrees.
Rational sectional_curvature(const SimplicialComplex& c, const Simplex& bone, std::vector<VertexId> ordering = {});

struct SectionalSpectrum {
    int dimension = -1;
    std::size_t bones = 0;
    std::map<Rational, std::size_t> counts;
    Rational total;
    Integer euler;
};

/// Sectional curvature over every bone, in parallel; aggregation is in canonical bone order.
SectionalSpectrum sectional_spectrum(const SimplicialComplex& c, unsigned threads = 1);

struct Sheet {
    std::vector<SheetPatch> patches;
    bool closed = false;                           // growth ran out of frontier
    std::size_t boundary_bones = 0;                // frontier bones without a ring cycle
    std::map<Simplex, std::size_t> facet_multiplicity;  // immersion count per facet
    Graph dual_subgraph;                            // on the embedded facet set
};

/// Breadth-first union of local disks seeded at `bone`; a petal bone b' reached
/// from ordering (h, o_1, ..., o_k) is grown with ordering (o_1, ..., o_k, v).
Sheet grow_sheet(const SimplicialComplex& c, const Simplex& bone, std::vector<VertexId> ordering,
                 std::size_t max_patches);

}  // namespace diskgeo
