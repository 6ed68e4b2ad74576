#pragma once

// Recursive combinatorial recognition of contractible complexes, spheres and
// manifolds, plus the wall census that decides whether the geodesic flow is
// defined.
//
//   contractible: the one-point complex, or some vertex x has a contractible
//                 unit sphere and a contractible complement of its open star.
//   d-sphere:     the empty complex for d = -1; otherwise a d-manifold with a
//                 vertex whose star complement is contractible.
//   q-manifold:   pure of dimension q, every unit sphere a (q-1)-sphere.

#include "diskgeo/complex.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace diskgeo {

enum class Decision { no, yes, undecided };

std::string to_string(Decision d);

struct RecognitionOptions {
    /// Check only vertex unit spheres (heuristic) instead of every simplex.
    bool vertex_links_only = false;
    /// Complexes with more simplices than this are not examined.
    std::size_t size_ceiling = 50'000;
};

struct WallCensus {
    std::vector<std::pair<Simplex, std::size_t>> cofacet_counts;  // canonical wall order
    std::size_t boundary_walls = 0;   // count 1
    std::size_t interior_walls = 0;   // count 2
    std::size_t branching_walls = 0;  // count > 2
};

enum class VerdictKind { sphere, manifold, contractible, manifold_with_boundary, geodesic_ready, none, undecided };

std::string to_string(VerdictKind k);

struct TopologyVerdict {
    VerdictKind kind = VerdictKind::none;
    int dimension = -1;
    std::optional<VertexId> witness;  // vertex used by the recursive definition
    WallCensus wall_census;
};

/// Memoizing recognizer. The cache is keyed by the complex itself after
/// order-preserving relabeling to 1..n and bucketed by the sorted
/// (dimension, comparability-degree) profile. Safe for concurrent use.
class Recognizer {
public:
    explicit Recognizer(RecognitionOptions options = {});
    ~Recognizer();
    Recognizer(const Recognizer&) = delete;
    Recognizer& operator=(const Recognizer&) = delete;

    Decision contractible(const SimplicialComplex& c, std::optional<VertexId>* witness = nullptr);
    Decision sphere(const SimplicialComplex& c, int d, std::optional<VertexId>* witness = nullptr);
    Decision manifold(const SimplicialComplex& c, int q);

    /// First simplex (canonical order) whose unit sphere is not a
    /// (q-1)-sphere, for a pure q-dimensional complex.
    std::optional<Simplex> first_bad_link(const SimplicialComplex& c, int q);

    const RecognitionOptions& options() const noexcept { return options_; }
    std::size_t cache_size() const;

private:
    struct Memo;

    bool contractible_impl(const SimplicialComplex& c);
    bool sphere_impl(const SimplicialComplex& c, int d);
    bool manifold_impl(const SimplicialComplex& c, int q);

    RecognitionOptions options_;
    std::unique_ptr<Memo> memo_;
};

/// Convenience wrappers with default options; throw too_large when undecided.
bool is_contractible(const SimplicialComplex& c);
bool is_sphere(const SimplicialComplex& c, int d);
bool is_manifold(const SimplicialComplex& c, int q);

WallCensus wall_census(const SimplicialComplex& c);

/// geodesic_ready iff pure and every wall has 1 or 2 cofacets.
TopologyVerdict geodesic_readiness(const SimplicialComplex& c);

/// Summary used by the `check` command.
struct CheckReport {
    bool pure = false;
    int dimension = -1;
    Decision manifold = Decision::no;
    Decision sphere = Decision::no;
    Decision contractible = Decision::no;
    bool geodesic_ready = false;
    std::size_t boundary_walls = 0;
    /// Set when vertex links are spheres but some higher-dimensional link is not.
    std::optional<Simplex> higher_link_failure;
    TopologyVerdict verdict;
};

CheckReport check(const SimplicialComplex& c, const RecognitionOptions& options = {});

}  // namespace diskgeo
