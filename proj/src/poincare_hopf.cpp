#include "diskgeo/poincare_hopf.hpp"

#include "diskgeo/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace diskgeo {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_draw(std::uint64_t seed, std::uint64_t domain, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed ^ splitmix64(domain)) + index);
}

std::string to_string(RuleProvenance p) {
    return p == RuleProvenance::min_functions ? "min_functions" : "random";
}

namespace {

// Stream domains.
constexpr std::uint64_t kFacetChoice = 1;
constexpr std::uint64_t kVertexChoice = 2;
constexpr std::uint64_t kVertexValues = 3;
constexpr std::uint64_t kFacetValues = 4;

void require_pure(const SimplicialComplex& c) {
    if (!is_pure(c)) throw Error(ErrorKind::invalid_input, "energy rules need a pure complex");
}

std::vector<std::size_t> facets_above(const SimplicialComplex& c, std::size_t i) {
    std::vector<std::size_t> out;
    for (auto j : c.up_set(i))
        if (c[j].dimension() == c.dimension()) out.push_back(j);
    return out;
}

// Ranks of (draw, index) pairs: an injective seeded shuffle.
std::vector<double> seeded_ranks(std::uint64_t seed, std::uint64_t domain, std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::uint64_t> draws(n);
    for (std::size_t i = 0; i < n; ++i) draws[i] = stream_draw(seed, domain, i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return draws[a] != draws[b] ? draws[a] < draws[b] : a < b;
    });
    std::vector<double> rank(n);
    for (std::size_t k = 0; k < n; ++k) rank[order[k]] = static_cast<double>(k);
    return rank;
}

}  // namespace

VertexId EnergyRule::target(const SimplicialComplex& c, std::size_t simplex) const {
    return vertex_of_facet[facet_of[simplex] - c.dimension_range(c.dimension()).first];
}

EnergyRule min_rule(const SimplicialComplex& c, const std::map<VertexId, double>& f, const std::vector<double>& g) {
    require_pure(c);
    const auto [first, last] = c.dimension_range(c.dimension());
    if (g.size() != last - first)
        throw Error(ErrorKind::invalid_input, "g needs one value per facet (" + std::to_string(last - first) + ")");
    if (std::set<double>(g.begin(), g.end()).size() != g.size())
        throw Error(ErrorKind::invalid_input, "g is not injective");
    std::set<double> fvalues;
    for (VertexId v : c.vertex_ids()) {
        auto it = f.find(v);
        if (it == f.end()) throw Error(ErrorKind::invalid_input, "f has no value at vertex " + std::to_string(v));
        if (!fvalues.insert(it->second).second) throw Error(ErrorKind::invalid_input, "f is not injective");
    }

    EnergyRule r;
    r.provenance = RuleProvenance::min_functions;
    r.facet_of.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto above = facets_above(c, i);
        r.facet_of[i] = *std::min_element(above.begin(), above.end(),
                                          [&](std::size_t a, std::size_t b) { return g[a - first] < g[b - first]; });
    }
    for (std::size_t k = first; k < last; ++k) {
        const auto vs = c[k].vertices();
        r.vertex_of_facet.push_back(
            *std::min_element(vs.begin(), vs.end(), [&](VertexId a, VertexId b) { return f.at(a) < f.at(b); }));
    }
    return r;
}

EnergyRule min_rule(const SimplicialComplex& c, std::uint64_t seed) {
    require_pure(c);
    const auto vertices = c.vertex_ids();
    const auto fr = seeded_ranks(seed, kVertexValues, vertices.size());
    std::map<VertexId, double> f;
    for (std::size_t i = 0; i < vertices.size(); ++i) f.emplace(vertices[i], fr[i]);
    const auto g = seeded_ranks(seed, kFacetValues, c.of_dimension(c.dimension()).size());
    EnergyRule r = min_rule(c, f, g);
    r.seed = seed;
    return r;
}

EnergyRule random_rule(const SimplicialComplex& c, std::uint64_t seed) {
    require_pure(c);
    EnergyRule r;
    r.provenance = RuleProvenance::random;
    r.seed = seed;
    r.facet_of.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto above = facets_above(c, i);
        r.facet_of[i] = above[stream_draw(seed, kFacetChoice, i) % above.size()];
    }
    const auto [first, last] = c.dimension_range(c.dimension());
    for (std::size_t k = first; k < last; ++k)
        r.vertex_of_facet.push_back(c[k][stream_draw(seed, kVertexChoice, k) % c[k].size()]);
    return r;
}

void validate_rule(const SimplicialComplex& c, const EnergyRule& r) {
    const auto [first, last] = c.dimension_range(c.dimension());
    if (r.facet_of.size() != c.size() || r.vertex_of_facet.size() != last - first)
        throw Error(ErrorKind::invalid_input, "rule does not match the complex");
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto fi = r.facet_of[i];
        if (fi < first || fi >= last || !c[i].is_subset_of(c[fi]))
            throw Error(ErrorKind::invalid_input, "rule sends {" + to_string(c[i]) + "} to a facet not containing it");
    }
    for (std::size_t k = first; k < last; ++k)
        if (!c[k].contains(r.vertex_of_facet[k - first]))
            throw Error(ErrorKind::invalid_input, "rule sends facet {" + to_string(c[k]) + "} outside itself");
}

Divisor push_energy(const SimplicialComplex& c, const EnergyRule& r) {
    validate_rule(c, r);
    Divisor d;
    for (VertexId v : c.vertex_ids()) d.indices.emplace(v, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int sign = c[i].dimension() % 2 == 0 ? 1 : -1;
        d.indices[r.target(c, i)] += sign;
        d.total += sign;
    }
    if (d.total != euler_characteristic(c))
        throw Error(ErrorKind::internal, "divisor total " + d.total.str() + " differs from the Euler characteristic");
    return d;
}

VertexSelfMap vertex_self_map(const SimplicialComplex& c, const EnergyRule& r) {
    validate_rule(c, r);
    VertexSelfMap m;
    const auto [first, last] = c.dimension_range(0);
    for (std::size_t i = first; i < last; ++i) m.image.emplace(c[i][0], r.target(c, i));

    // Iterate each vertex to its eventual cycle; colour 0 unseen, 1 on the
    // current path, 2 finished.
    std::map<VertexId, int> colour;
    std::set<VertexId> on_cycle;
    for (const auto& [start, _] : m.image) {
        if (colour[start] == 2) continue;
        std::vector<VertexId> path;
        VertexId v = start;
        while (colour[v] == 0) {
            colour[v] = 1;
            path.push_back(v);
            v = m.image.at(v);
        }
        if (colour[v] == 1) {
            std::size_t length = 0;
            VertexId w = v;
            do {
                on_cycle.insert(w);
                ++length;
                w = m.image.at(w);
            } while (w != v);
            m.census.cycle_lengths.push_back(length);
        }
        for (VertexId p : path) colour[p] = 2;
    }
    std::sort(m.census.cycle_lengths.begin(), m.census.cycle_lengths.end());
    m.census.cycles = m.census.cycle_lengths.size();
    m.census.fixed_points = static_cast<std::size_t>(
        std::count(m.census.cycle_lengths.begin(), m.census.cycle_lengths.end(), std::size_t{1}));
    m.census.cycle_vertices = on_cycle.size();
    m.census.tree_vertices = m.image.size() - on_cycle.size();
    return m;
}

}  // namespace diskgeo
