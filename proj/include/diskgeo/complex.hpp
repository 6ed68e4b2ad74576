#pragma once

// Finite abstract simplicial complexes and their purely combinatorial
// constructions: closure, Whitney complexes, stars, unit spheres, strata,
// barycentric refinement and the facet dual graph.

#include "diskgeo/numeric.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace diskgeo {

/// Opaque positive vertex label.
using VertexId = std::int64_t;

/// Non-empty, strictly increasing vertex sequence.
class Simplex {
public:
    /// Sorts the input; throws invalid_input on empty input, duplicate or
    /// non-positive labels.
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<VertexId> vertices);

    /// Trusts the caller: `vertices` must already be strictly sorted and non-empty.
    static Simplex from_sorted(std::vector<VertexId> vertices) {
        Simplex s;
        s.vertices_ = std::move(vertices);
        return s;
    }

    std::span<const VertexId> vertices() const noexcept { return vertices_; }
    const std::vector<VertexId>& vector() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(VertexId v) const noexcept;
    bool is_subset_of(const Simplex& other) const noexcept;
    Simplex without(VertexId v) const;
    Simplex with(VertexId v) const;

    /// Canonical order: by dimension, then lexicographic.
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept;
    friend bool operator==(const Simplex& a, const Simplex& b) noexcept = default;

private:
    Simplex() = default;
    std::vector<VertexId> vertices_;
};

/// "1,2,3"; also the stable DOT node name.
std::string to_string(const Simplex& s);

std::strong_ordering canonical_compare(std::span<const VertexId> a, std::span<const VertexId> b) noexcept;

/// Simple undirected graph on positive labels.
struct Graph {
    std::vector<VertexId> vertices;                       // sorted, unique
    std::vector<std::pair<VertexId, VertexId>> edges;     // first < second, sorted, unique

    /// Normalizes and validates: rejects loops, non-positive labels and edges
    /// whose endpoints are missing from `vertices` (endpoints are added when
    /// `vertices` is empty).
    static Graph make(std::vector<VertexId> vertices, std::vector<std::pair<VertexId, VertexId>> edges);

    std::vector<VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const;
    bool adjacent(VertexId a, VertexId b) const;
};

struct FVector {
    std::vector<Integer> counts;  // f_0 .. f_q
    Integer euler;

    friend bool operator==(const FVector&, const FVector&) = default;
};

std::string to_string(const FVector& f);

/// Immutable, canonically ordered complex with a containment index built once.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// `simplices` must be canonically sorted, duplicate-free and closed under
    /// non-empty subsets; closure is verified while the index is built and a
    /// violation throws invalid_input.
    static SimplicialComplex from_canonical(std::vector<Simplex> simplices);

    bool empty() const noexcept { return simplices_.empty(); }
    std::size_t size() const noexcept { return simplices_.size(); }
    /// -1 for the empty complex.
    int dimension() const noexcept { return dim_offsets_.empty() ? -1 : static_cast<int>(dim_offsets_.size()) - 2; }

    std::span<const Simplex> simplices() const noexcept { return simplices_; }
    const Simplex& operator[](std::size_t i) const { return simplices_[i]; }

    /// Index range [first, last) of the simplices of dimension `dim`.
    std::pair<std::size_t, std::size_t> dimension_range(int dim) const noexcept;
    std::span<const Simplex> of_dimension(int dim) const noexcept;

    std::optional<std::size_t> find(std::span<const VertexId> vertices) const noexcept;
    std::optional<std::size_t> find(const Simplex& s) const noexcept { return find(s.vertices()); }
    bool contains(const Simplex& s) const noexcept { return find(s).has_value(); }

    /// Indices of all simplices containing simplex `i` (including `i`), canonical order.
    std::span<const std::uint32_t> up_set(std::size_t i) const noexcept { return up_sets_[i]; }

    std::vector<VertexId> vertex_ids() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) noexcept {
        return a.simplices_ == b.simplices_;
    }

private:
    std::vector<Simplex> simplices_;
    std::vector<std::size_t> dim_offsets_;  // dim_offsets_[d] = first index of dimension d; last entry = size
    std::vector<std::vector<std::uint32_t>> up_sets_;
};

/// All non-empty subsets of the input sets; throws invalid_input on an empty set.
SimplicialComplex generate_closure(std::span<const std::vector<VertexId>> sets);
SimplicialComplex generate_closure(std::initializer_list<std::vector<VertexId>> sets);

/// Complex of all cliques of `g`.
SimplicialComplex whitney(const Graph& g);

/// codim 0: facets, 1: walls, 2: bones, relative to the complex dimension.
std::vector<Simplex> strata(const SimplicialComplex& c, int codim);

FVector f_vector(const SimplicialComplex& c);
Integer euler_characteristic(const SimplicialComplex& c);

/// True iff non-empty and every maximal simplex has the top dimension.
bool is_pure(const SimplicialComplex& c);

std::vector<Simplex> open_star(const SimplicialComplex& c, const Simplex& x);
std::vector<Simplex> stable_star(const SimplicialComplex& c, const Simplex& x);
SimplicialComplex unit_sphere(const SimplicialComplex& c, const Simplex& x);
SimplicialComplex unit_sphere(const SimplicialComplex& c, std::size_t index);

/// Vertices v with wall ∪ {v} a facet. Throws invalid_input when `wall` is
/// not a codimension-1 simplex of `c`.
std::vector<VertexId> mirror(const SimplicialComplex& c, const Simplex& wall);

/// c minus the open star of x.
SimplicialComplex complement_of_star(const SimplicialComplex& c, const Simplex& x);
SimplicialComplex complement_of_star(const SimplicialComplex& c, std::size_t index);

/// Chains under strict inclusion; vertex k+1 stands for simplex k of `c`.
SimplicialComplex barycentric(const SimplicialComplex& c);
SimplicialComplex barycentric(const SimplicialComplex& c, int depth);
/// Number of simplices barycentric(c) would have, without building it.
Integer barycentric_size(const SimplicialComplex& c);

/// Vertex k+1 stands for simplex k; edges join comparable simplices.
Graph comparability_graph(const SimplicialComplex& c);
/// Vertex k+1 stands for facet k of strata(c, 0); edges join facets sharing a wall.
/// Throws invalid_input on a non-pure complex.
Graph dual_graph(const SimplicialComplex& c);

/// Parses "1,2,3" (whitespace tolerated) into a vertex sequence, order preserved.
std::vector<VertexId> parse_vertex_list(std::string_view text);

}  // namespace diskgeo
