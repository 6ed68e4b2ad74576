#pragma once

// The frame bundle of ordered facets and the geodesic permutation T:
//
//   T(x_0, x_1, ..., x_q) = (x_1, ..., x_q, x_0')
//
// where x_0' is the vertex opposite x_0 across the wall {x_1, ..., x_q}. At a
// boundary wall (one cofacet) the frame rotates on itself and x_0 is appended
// again, which turns the flow into a billiard.

#include "diskgeo/complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace diskgeo {

/// Ordered facet (x_0, ..., x_q); x_0 is the base point.
using Frame = std::vector<VertexId>;

std::string to_string(const Frame& f);

struct Orbit {
    std::vector<Frame> frames;
    std::uint64_t period = 0;
    bool boundary_touching = false;  // some step used self-rotation
};

struct CycleSummary {
    Frame start;  // lowest frame id on the cycle
    std::uint64_t period = 0;
    bool boundary_touching = false;
};

struct OrbitPartition {
    std::uint64_t bundle_size = 0;
    std::vector<CycleSummary> cycles;  // in order of their lowest frame id
    bool ergodic = false;              // exactly one cycle
};

/// Involutions on the doubled bundle, as index permutations. Index i < N is
/// the open copy of frame i, index N + i its closed copy.
struct InvolutionPair {
    std::vector<std::uint64_t> a;
    std::vector<std::uint64_t> b;
};

/// Flow on a fixed geodesic-ready complex. Construction validates readiness
/// (pure, every wall with 1 or 2 cofacets) and throws not_geodesic_ready
/// otherwise.
class FrameFlow {
public:
    explicit FrameFlow(const SimplicialComplex& c);

    const SimplicialComplex& complex() const noexcept { return complex_; }
    int dimension() const noexcept { return q_; }
    std::size_t facet_count() const noexcept { return facets_.size(); }
    /// f_q · (q+1)!
    std::uint64_t bundle_size() const noexcept { return bundle_size_; }

    Frame step(const Frame& f) const;
    Frame step_inverse(const Frame& f) const;
    /// Ordered wall (x_1, ..., x_q) crossed by the step out of f.
    Frame wall_map(const Frame& f) const;
    bool is_boundary_step(const Frame& f) const;

    Orbit orbit(const Frame& start) const;
    OrbitPartition orbit_partition() const;

    /// Bijection between frames and [0, bundle_size): facet index · (q+1)! + Lehmer rank.
    std::uint64_t frame_id(const Frame& f) const;
    Frame frame_at(std::uint64_t id) const;

    /// Open side: A = T into the closed copy. Closed side: the tail vertex is
    /// reflected across the wall spanned by the first q entries and moved to
    /// the front, landing in the open copy. B swaps the copies.
    InvolutionPair involution_factorization() const;

    /// Closure of the facets visited by the orbit.
    SimplicialComplex orbit_complex(const Orbit& o) const;

private:
    // Facet index of the frame's underlying set; throws invalid_input.
    std::size_t facet_index(const Frame& f) const;
    // Opposite of `apex` across `wall` (sorted); apex itself at a boundary wall.
    VertexId reflect(const std::vector<VertexId>& wall, VertexId apex) const;

    SimplicialComplex complex_;
    int q_;
    std::vector<Simplex> facets_;
    std::uint64_t factorial_ = 1;
    std::uint64_t bundle_size_ = 0;
    // wall index in the complex -> up to two apex vertices
    std::unordered_map<std::size_t, std::pair<VertexId, VertexId>> mirrors_;
};

/// Bundle permutations from the involutions, used to verify A² = B² = id and
/// (B∘A)|open = T.
struct InvolutionCheck {
    bool a_is_involution = false;
    bool b_is_involution = false;
    bool restriction_matches_flow = false;
    bool ok() const noexcept { return a_is_involution && b_is_involution && restriction_matches_flow; }
};

InvolutionCheck verify_involutions(const FrameFlow& flow, const InvolutionPair& pair);

/// Orbit projected to the dual graph: the facet walk with 1-based facet labels
/// of strata(c, 0); consecutive repeats are self-rotations.
std::vector<VertexId> facet_walk(const FrameFlow& flow, const Orbit& o);

}  // namespace diskgeo
