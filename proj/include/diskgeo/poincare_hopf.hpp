#pragma once

// Pushing the energies ω(x) = (-1)^dim(x) of all simplices to vertices. A rule
// first sends every simplex to a facet containing it, then every facet to one
// of its vertices. The resulting integer divisor always sums to χ.

#include "diskgeo/complex.hpp"
#include "diskgeo/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace diskgeo {

/// SplitMix64 finalizer. Streams are derived as mix(mix(seed ^ mix(domain)) + index),
/// so every (seed, domain, index) triple is an independent reproducible draw.
std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t stream_draw(std::uint64_t seed, std::uint64_t domain, std::uint64_t index) noexcept;

enum class RuleProvenance { min_functions, random };

std::string to_string(RuleProvenance p);

struct EnergyRule {
    RuleProvenance provenance = RuleProvenance::random;
    std::uint64_t seed = 0;
    /// Complex index of the chosen facet, per simplex (canonical order).
    std::vector<std::size_t> facet_of;
    /// Chosen vertex, per facet ordinal in strata(c, 0).
    std::vector<VertexId> vertex_of_facet;

    VertexId target(const SimplicialComplex& c, std::size_t simplex) const;
};

/// Per simplex the facet above it with the smallest g, then that facet's
/// vertex with the smallest f. The chosen vertex need not lie in the simplex.
/// Throws invalid_input on a non-pure complex, missing or non-injective values.
EnergyRule min_rule(const SimplicialComplex& c, const std::map<VertexId, double>& f, const std::vector<double>& g);
/// Same with f and g drawn from `seed`; injective since they are ranks of a
/// seeded shuffle.
EnergyRule min_rule(const SimplicialComplex& c, std::uint64_t seed);

/// Uniform choice of facet per simplex and of vertex per facet, from per-simplex
/// and per-facet streams. Throws invalid_input on a non-pure complex.
EnergyRule random_rule(const SimplicialComplex& c, std::uint64_t seed);

/// Throws invalid_input unless every chosen facet contains its simplex and
/// every chosen vertex lies in its facet.
void validate_rule(const SimplicialComplex& c, const EnergyRule& r);

struct Divisor {
    std::map<VertexId, Integer> indices;  // every vertex, zeros included
    Integer total;
};

/// Throws internal if the total differs from χ.
Divisor push_energy(const SimplicialComplex& c, const EnergyRule& r);

struct SelfMapCensus {
    std::size_t cycles = 0;
    std::size_t fixed_points = 0;    // cycles of length 1
    std::size_t cycle_vertices = 0;
    std::size_t tree_vertices = 0;   // vertices not on a cycle
    std::vector<std::size_t> cycle_lengths;  // ascending
};

struct VertexSelfMap {
    std::map<VertexId, VertexId> image;
    SelfMapCensus census;
};

/// The rule restricted to vertices, as a functional graph.
VertexSelfMap vertex_self_map(const SimplicialComplex& c, const EnergyRule& r);

}  // namespace diskgeo
