#include "diskgeo/topology.hpp"

#include "diskgeo/error.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

namespace diskgeo {

std::string to_string(Decision d) {
    switch (d) {
        case Decision::no: return "no";
        case Decision::yes: return "yes";
        case Decision::undecided: return "undecided: too large";
    }
    return "unknown";
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::sphere: return "sphere";
        case VerdictKind::manifold: return "manifold";
        case VerdictKind::contractible: return "contractible";
        case VerdictKind::manifold_with_boundary: return "manifold_with_boundary";
        case VerdictKind::geodesic_ready: return "geodesic_ready";
        case VerdictKind::none: return "none";
        case VerdictKind::undecided: return "undecided";
    }
    return "unknown";
}

namespace {

enum class Query : std::uint8_t { contractible, sphere, manifold };

struct Key {
    Query query;
    int parameter;
    std::uint64_t profile_hash;
    std::vector<VertexId> content;  // size-prefixed relabeled simplices

    bool operator==(const Key& o) const noexcept {
        return query == o.query && parameter == o.parameter && profile_hash == o.profile_hash && content == o.content;
    }
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        return static_cast<std::size_t>(k.profile_hash ^ (static_cast<std::uint64_t>(k.query) << 56) ^
                                        (static_cast<std::uint64_t>(k.parameter + 2) << 48));
    }
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Key make_key(Query query, int parameter, const SimplicialComplex& c) {
    Key key{query, parameter, 0, {}};

    // Isomorphism-invariant bucket: sorted (dimension, degree) pairs of the
    // comparability graph; degree = strict supersets + proper non-empty subsets.
    std::vector<std::pair<int, std::size_t>> profile;
    profile.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& s = c[i];
        std::size_t degree = (c.up_set(i).size() - 1) + ((std::size_t{1} << s.size()) - 2);
        profile.emplace_back(s.dimension(), degree);
    }
    std::sort(profile.begin(), profile.end());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& [d, deg] : profile) h = mix(mix(h, static_cast<std::uint64_t>(d)), deg);
    key.profile_hash = h;

    // Exact content under order-preserving relabeling; canonical order survives it.
    const auto labels = c.vertex_ids();
    key.content.reserve(c.size() * 3);
    for (const auto& s : c.simplices()) {
        key.content.push_back(static_cast<VertexId>(s.size()));
        for (VertexId v : s.vertices()) {
            auto rank = std::lower_bound(labels.begin(), labels.end(), v) - labels.begin();
            key.content.push_back(static_cast<VertexId>(rank));
        }
    }
    return key;
}

bool is_connected(const SimplicialComplex& c) {
    const auto labels = c.vertex_ids();
    if (labels.empty()) return false;
    std::vector<std::size_t> parent(labels.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto rank = [&](VertexId v) {
        return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
    };
    std::size_t components = labels.size();
    for (const auto& e : c.of_dimension(1)) {
        auto a = root(rank(e[0])), b = root(rank(e[1]));
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

// A vertex lying in every maximal simplex makes c a cone; cones are
// contractible under the recursive definition (induct on the base).
bool is_cone(const SimplicialComplex& c) {
    std::size_t maximal_total = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.up_set(i).size() == 1) ++maximal_total;
    for (std::size_t v = 0; v < c.of_dimension(0).size(); ++v) {
        std::size_t maximal_above = 0;
        for (auto j : c.up_set(v))
            if (c.up_set(j).size() == 1) ++maximal_above;
        if (maximal_above == maximal_total) return true;
    }
    return false;
}

}  // namespace

struct Recognizer::Memo {
    mutable std::shared_mutex mutex;
    std::unordered_map<Key, bool, KeyHash> table;

    std::optional<bool> get(const Key& k) const {
        std::shared_lock lock(mutex);
        auto it = table.find(k);
        if (it == table.end()) return std::nullopt;
        return it->second;
    }
    void put(Key k, bool value) {
        std::unique_lock lock(mutex);
        table.emplace(std::move(k), value);
    }
};

Recognizer::Recognizer(RecognitionOptions options) : options_(options), memo_(std::make_unique<Memo>()) {}
Recognizer::~Recognizer() = default;

std::size_t Recognizer::cache_size() const {
    std::shared_lock lock(memo_->mutex);
    return memo_->table.size();
}

bool Recognizer::contractible_impl(const SimplicialComplex& c) {
    if (c.empty()) return false;
    if (c.size() == 1) return true;
    // Necessary conditions: contractible complexes are connected with χ = 1.
    if (euler_characteristic(c) != 1 || !is_connected(c)) return false;
    if (is_cone(c)) return true;

    Key key = make_key(Query::contractible, 0, c);
    if (auto hit = memo_->get(key)) return *hit;

    bool result = false;
    const std::size_t n_vertices = c.of_dimension(0).size();
    for (std::size_t v = 0; v < n_vertices && !result; ++v) {
        result = contractible_impl(unit_sphere(c, v)) && contractible_impl(complement_of_star(c, v));
    }
    memo_->put(std::move(key), result);
    return result;
}

bool Recognizer::sphere_impl(const SimplicialComplex& c, int d) {
    if (d == -1) return c.empty();
    if (c.empty() || c.dimension() != d) return false;
    if (euler_characteristic(c) != 1 + (d % 2 == 0 ? 1 : -1)) return false;

    Key key = make_key(Query::sphere, d, c);
    if (auto hit = memo_->get(key)) return *hit;

    bool result = manifold_impl(c, d);
    if (result) {
        result = false;
        const std::size_t n_vertices = c.of_dimension(0).size();
        for (std::size_t v = 0; v < n_vertices && !result; ++v) result = contractible_impl(complement_of_star(c, v));
    }
    memo_->put(std::move(key), result);
    return result;
}

bool Recognizer::manifold_impl(const SimplicialComplex& c, int q) {
    if (c.empty() || c.dimension() != q || !is_pure(c)) return false;
    if (q == 0) return true;  // every unit sphere is empty

    Key key = make_key(Query::manifold, q, c);
    if (auto hit = memo_->get(key)) return *hit;

    const std::size_t limit = options_.vertex_links_only ? c.of_dimension(0).size() : c.size();
    bool result = true;
    for (std::size_t i = 0; i < limit && result; ++i) result = sphere_impl(unit_sphere(c, i), q - 1);
    memo_->put(std::move(key), result);
    return result;
}

Decision Recognizer::contractible(const SimplicialComplex& c, std::optional<VertexId>* witness) {
    if (c.size() > options_.size_ceiling) return Decision::undecided;
    bool result = contractible_impl(c);
    if (witness) {
        witness->reset();
        if (result && c.size() > 1) {
            for (std::size_t v = 0; v < c.of_dimension(0).size(); ++v) {
                if (contractible_impl(unit_sphere(c, v)) && contractible_impl(complement_of_star(c, v))) {
                    *witness = c[v][0];
                    break;
                }
            }
        } else if (result) {
            *witness = c[0][0];
        }
    }
    return result ? Decision::yes : Decision::no;
}

Decision Recognizer::sphere(const SimplicialComplex& c, int d, std::optional<VertexId>* witness) {
    if (c.size() > options_.size_ceiling) return Decision::undecided;
    bool result = sphere_impl(c, d);
    if (witness) {
        witness->reset();
        if (result && d >= 0) {
            for (std::size_t v = 0; v < c.of_dimension(0).size(); ++v) {
                if (contractible_impl(complement_of_star(c, v))) {
                    *witness = c[v][0];
                    break;
                }
            }
        }
    }
    return result ? Decision::yes : Decision::no;
}

Decision Recognizer::manifold(const SimplicialComplex& c, int q) {
    if (c.size() > options_.size_ceiling) return Decision::undecided;
    return manifold_impl(c, q) ? Decision::yes : Decision::no;
}

std::optional<Simplex> Recognizer::first_bad_link(const SimplicialComplex& c, int q) {
    if (c.size() > options_.size_ceiling)
        throw Error(ErrorKind::too_large, "complex exceeds the recognition size ceiling");
    if (c.empty() || c.dimension() != q || !is_pure(c)) return std::nullopt;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!sphere_impl(unit_sphere(c, i), q - 1)) return c[i];
    return std::nullopt;
}

namespace {

bool decided(Decision d, const char* what) {
    if (d == Decision::undecided)
        throw Error(ErrorKind::too_large, std::string(what) + ": undecided, complex exceeds the size ceiling");
    return d == Decision::yes;
}

}  // namespace

bool is_contractible(const SimplicialComplex& c) {
    Recognizer r;
    return decided(r.contractible(c), "contractibility");
}

bool is_sphere(const SimplicialComplex& c, int d) {
    Recognizer r;
    return decided(r.sphere(c, d), "sphere recognition");
}

bool is_manifold(const SimplicialComplex& c, int q) {
    Recognizer r;
    return decided(r.manifold(c, q), "manifold recognition");
}

WallCensus wall_census(const SimplicialComplex& c) {
    WallCensus census;
    if (c.empty() || c.dimension() < 1) return census;
    const int q = c.dimension();
    auto [first, last] = c.dimension_range(q - 1);
    for (std::size_t w = first; w < last; ++w) {
        std::size_t count = 0;
        for (auto j : c.up_set(w))
            if (c[j].dimension() == q) ++count;
        census.cofacet_counts.emplace_back(c[w], count);
        if (count == 1) ++census.boundary_walls;
        else if (count == 2) ++census.interior_walls;
        else if (count > 2) ++census.branching_walls;
    }
    return census;
}

TopologyVerdict geodesic_readiness(const SimplicialComplex& c) {
    TopologyVerdict verdict;
    verdict.dimension = c.dimension();
    verdict.wall_census = wall_census(c);
    const bool ready = is_pure(c) && verdict.wall_census.branching_walls == 0;
    verdict.kind = ready ? VerdictKind::geodesic_ready : VerdictKind::none;
    return verdict;
}

CheckReport check(const SimplicialComplex& c, const RecognitionOptions& options) {
    CheckReport report;
    report.pure = is_pure(c);
    report.dimension = c.dimension();
    report.verdict = geodesic_readiness(c);
    report.geodesic_ready = report.verdict.kind == VerdictKind::geodesic_ready;
    report.boundary_walls = report.verdict.wall_census.boundary_walls;

    Recognizer recognizer(options);
    const int q = c.dimension();
    std::optional<VertexId> sphere_witness, contractible_witness;
    report.manifold = recognizer.manifold(c, q);
    report.sphere = recognizer.sphere(c, q, &sphere_witness);
    report.contractible = recognizer.contractible(c, &contractible_witness);

    if (options.vertex_links_only && report.manifold == Decision::yes) {
        Recognizer literal(RecognitionOptions{false, options.size_ceiling});
        report.higher_link_failure = literal.first_bad_link(c, q);
    } else if (!options.vertex_links_only && report.manifold == Decision::no && report.pure && q >= 1) {
        Recognizer vertex_only(RecognitionOptions{true, options.size_ceiling});
        if (vertex_only.manifold(c, q) == Decision::yes) report.higher_link_failure = recognizer.first_bad_link(c, q);
    }

    auto& v = report.verdict;
    if (report.manifold == Decision::undecided) {
        v.kind = VerdictKind::undecided;
    } else if (report.sphere == Decision::yes) {
        v.kind = VerdictKind::sphere;
        v.witness = sphere_witness;
    } else if (report.manifold == Decision::yes) {
        v.kind = VerdictKind::manifold;
    } else if (report.contractible == Decision::yes) {
        v.kind = VerdictKind::contractible;
        v.witness = contractible_witness;
    } else if (report.geodesic_ready && report.boundary_walls > 0) {
        v.kind = VerdictKind::manifold_with_boundary;  // census only
    }
    return report;
}

}  // namespace diskgeo
