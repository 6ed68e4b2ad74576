#include "diskgeo/complex.hpp"

#include "diskgeo/error.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace diskgeo {

namespace {

constexpr std::size_t kMaxSimplexSize = 24;

void require_subset_enumerable(std::size_t n) {
    if (n > kMaxSimplexSize) {
        throw Error(ErrorKind::too_large,
                    "simplex with " + std::to_string(n) + " vertices exceeds the enumeration limit of " +
                        std::to_string(kMaxSimplexSize));
    }
}

// Appends every non-empty subset of `v` (as sorted vectors) to `out`.
void append_subsets(const std::vector<VertexId>& v, std::vector<Simplex>& out) {
    require_subset_enumerable(v.size());
    const std::uint32_t n = static_cast<std::uint32_t>(v.size());
    std::vector<VertexId> buf;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        buf.clear();
        for (std::uint32_t k = 0; k < n; ++k)
            if (mask & (1u << k)) buf.push_back(v[k]);
        out.push_back(Simplex::from_sorted(buf));
    }
}

SimplicialComplex from_unsorted(std::vector<Simplex> simplices) {
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    return SimplicialComplex::from_canonical(std::move(simplices));
}

}  // namespace

// ---------------------------------------------------------------------------
// Simplex

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw Error(ErrorKind::invalid_input, "simplex must be non-empty");
    std::sort(vertices_.begin(), vertices_.end());
    if (vertices_.front() <= 0) throw Error(ErrorKind::invalid_input, "vertex labels must be positive");
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error(ErrorKind::invalid_input, "simplex has a repeated vertex");
}

Simplex::Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::contains(VertexId v) const noexcept {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const noexcept {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

Simplex Simplex::without(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(vertices_.size());
    for (VertexId w : vertices_)
        if (w != v) out.push_back(w);
    if (out.empty()) throw Error(ErrorKind::invalid_input, "removing the last vertex of a simplex");
    return from_sorted(std::move(out));
}

Simplex Simplex::with(VertexId v) const {
    std::vector<VertexId> out = vertices_;
    auto it = std::lower_bound(out.begin(), out.end(), v);
    if (it != out.end() && *it == v) return *this;
    out.insert(it, v);
    return from_sorted(std::move(out));
}

std::strong_ordering canonical_compare(std::span<const VertexId> a, std::span<const VertexId> b) noexcept {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept {
    return canonical_compare(a.vertices(), b.vertices());
}

std::string to_string(const Simplex& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

std::vector<VertexId> parse_vertex_list(std::string_view text) {
    std::vector<VertexId> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view token = text.substr(pos, next - pos);
        while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
        while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
        VertexId value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value <= 0)
            throw Error(ErrorKind::invalid_input, "expected a comma-separated list of positive integers, got '" +
                                                      std::string(text) + "'");
        out.push_back(value);
        pos = next + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Graph

Graph Graph::make(std::vector<VertexId> vertices, std::vector<std::pair<VertexId, VertexId>> edges) {
    Graph g;
    const bool infer_vertices = vertices.empty();
    for (auto& [a, b] : edges) {
        if (a == b) throw Error(ErrorKind::invalid_input, "graph has a loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (infer_vertices) {
            vertices.push_back(a);
            vertices.push_back(b);
        }
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (!vertices.empty() && vertices.front() <= 0)
        throw Error(ErrorKind::invalid_input, "vertex labels must be positive");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [a, b] : edges) {
        if (!std::binary_search(vertices.begin(), vertices.end(), a) ||
            !std::binary_search(vertices.begin(), vertices.end(), b))
            throw Error(ErrorKind::invalid_input, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                      ") has an endpoint outside the vertex set");
    }
    g.vertices = std::move(vertices);
    g.edges = std::move(edges);
    return g;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Graph::degree(VertexId v) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [v](const auto& e) { return e.first == v || e.second == v; }));
}

bool Graph::adjacent(VertexId a, VertexId b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::pair{a, b});
}

std::string to_string(const FVector& f) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < f.counts.size(); ++i) {
        if (i) os << ',';
        os << f.counts[i];
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::from_canonical(std::vector<Simplex> simplices) {
    SimplicialComplex c;
    c.simplices_ = std::move(simplices);
    const auto& s = c.simplices_;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i - 1] < s[i]))
            throw Error(ErrorKind::invalid_input, "simplices are not in strict canonical order");
    }
    if (s.empty()) return c;
    if (s.size() > UINT32_MAX) throw Error(ErrorKind::too_large, "complex exceeds 2^32 simplices");

    const int top = s.back().dimension();
    c.dim_offsets_.assign(static_cast<std::size_t>(top) + 2, 0);
    {
        std::size_t i = 0;
        for (int d = 0; d <= top; ++d) {
            c.dim_offsets_[d] = i;
            while (i < s.size() && s[i].dimension() == d) ++i;
        }
        c.dim_offsets_[top + 1] = s.size();
    }

    // Every non-empty subset of every simplex is looked up once; a miss means
    // the input is not closed.
    c.up_sets_.assign(s.size(), {});
    std::vector<VertexId> buf;
    for (std::size_t j = 0; j < s.size(); ++j) {
        const auto& v = s[j].vector();
        require_subset_enumerable(v.size());
        const std::uint32_t n = static_cast<std::uint32_t>(v.size());
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            buf.clear();
            for (std::uint32_t k = 0; k < n; ++k)
                if (mask & (1u << k)) buf.push_back(v[k]);
            auto idx = c.find(buf);
            if (!idx) {
                throw Error(ErrorKind::invalid_input,
                            "set {" + to_string(s[j]) + "} has a face missing from the complex; not closed");
            }
            c.up_sets_[*idx].push_back(static_cast<std::uint32_t>(j));
        }
    }
    return c;
}

std::pair<std::size_t, std::size_t> SimplicialComplex::dimension_range(int dim) const noexcept {
    if (dim < 0 || dim > dimension()) return {0, 0};
    return {dim_offsets_[dim], dim_offsets_[dim + 1]};
}

std::span<const Simplex> SimplicialComplex::of_dimension(int dim) const noexcept {
    auto [first, last] = dimension_range(dim);
    return std::span<const Simplex>(simplices_).subspan(first, last - first);
}

std::optional<std::size_t> SimplicialComplex::find(std::span<const VertexId> vertices) const noexcept {
    if (vertices.empty()) return std::nullopt;
    auto [first, last] = dimension_range(static_cast<int>(vertices.size()) - 1);
    auto it = std::lower_bound(simplices_.begin() + static_cast<std::ptrdiff_t>(first),
                               simplices_.begin() + static_cast<std::ptrdiff_t>(last), vertices,
                               [](const Simplex& a, std::span<const VertexId> b) {
                                   return canonical_compare(a.vertices(), b) < 0;
                               });
    if (it == simplices_.begin() + static_cast<std::ptrdiff_t>(last)) return std::nullopt;
    if (canonical_compare(it->vertices(), vertices) != 0) return std::nullopt;
    return static_cast<std::size_t>(it - simplices_.begin());
}

std::vector<VertexId> SimplicialComplex::vertex_ids() const {
    std::vector<VertexId> out;
    for (const auto& s : of_dimension(0)) out.push_back(s[0]);
    return out;
}

// ---------------------------------------------------------------------------
// Constructions

SimplicialComplex generate_closure(std::span<const std::vector<VertexId>> sets) {
    std::vector<Simplex> all;
    for (const auto& set : sets) {
        if (set.empty()) throw Error(ErrorKind::invalid_input, "empty set among the generators");
        std::vector<VertexId> v = set;
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        if (v.front() <= 0) throw Error(ErrorKind::invalid_input, "vertex labels must be positive");
        append_subsets(v, all);
    }
    return from_unsorted(std::move(all));
}

SimplicialComplex generate_closure(std::initializer_list<std::vector<VertexId>> sets) {
    std::vector<std::vector<VertexId>> v(sets);
    return generate_closure(std::span<const std::vector<VertexId>>(v));
}

SimplicialComplex whitney(const Graph& g) {
    std::map<VertexId, std::vector<VertexId>> higher;  // neighbors with larger label
    for (VertexId v : g.vertices) higher[v];
    for (const auto& [a, b] : g.edges) higher[a].push_back(b);
    for (auto& [v, n] : higher) std::sort(n.begin(), n.end());

    // Each clique is produced once, as an increasing sequence, by extending
    // with common larger neighbors.
    std::vector<Simplex> cliques;
    std::vector<VertexId> current;
    auto extend = [&](auto&& self, const std::vector<VertexId>& candidates) -> void {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            VertexId v = candidates[i];
            current.push_back(v);
            cliques.push_back(Simplex::from_sorted(current));
            const auto& hv = higher[v];
            std::vector<VertexId> next;
            std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                                  hv.begin(), hv.end(), std::back_inserter(next));
            self(self, next);
            current.pop_back();
        }
    };
    extend(extend, g.vertices);
    return from_unsorted(std::move(cliques));
}

std::vector<Simplex> strata(const SimplicialComplex& c, int codim) {
    if (c.empty()) throw Error(ErrorKind::invalid_input, "strata of the empty complex");
    if (codim < 0 || codim > 2) throw Error(ErrorKind::invalid_input, "codimension must be 0, 1 or 2");
    auto layer = c.of_dimension(c.dimension() - codim);
    return {layer.begin(), layer.end()};
}

FVector f_vector(const SimplicialComplex& c) {
    FVector f;
    for (int d = 0; d <= c.dimension(); ++d) {
        Integer n = c.of_dimension(d).size();
        f.euler += (d % 2 == 0) ? n : Integer(-n);
        f.counts.push_back(std::move(n));
    }
    return f;
}

Integer euler_characteristic(const SimplicialComplex& c) {
    Integer chi = 0;
    for (const auto& s : c.simplices()) chi += (s.dimension() % 2 == 0) ? 1 : -1;
    return chi;
}

bool is_pure(const SimplicialComplex& c) {
    if (c.empty()) return false;
    auto [top_first, _] = c.dimension_range(c.dimension());
    for (std::size_t i = 0; i < top_first; ++i)
        if (c.up_set(i).size() == 1) return false;
    return true;
}

namespace {

std::size_t require_index(const SimplicialComplex& c, const Simplex& x) {
    auto idx = c.find(x);
    if (!idx) throw Error(ErrorKind::invalid_input, "simplex {" + to_string(x) + "} is not in the complex");
    return *idx;
}

}  // namespace

std::vector<Simplex> open_star(const SimplicialComplex& c, const Simplex& x) {
    std::vector<Simplex> out;
    for (auto j : c.up_set(require_index(c, x))) out.push_back(c[j]);
    return out;
}

std::vector<Simplex> stable_star(const SimplicialComplex& c, const Simplex& x) {
    const std::size_t i = require_index(c, x);
    std::vector<Simplex> out;
    for (auto j : c.up_set(i))
        if (j != i) out.push_back(c[j]);
    return out;
}

SimplicialComplex unit_sphere(const SimplicialComplex& c, std::size_t index) {
    // s ∈ closure(U(x)) iff s ∪ x ∈ c, so the sphere is made of the faces of
    // maximal simplices above x that do not contain x.
    const Simplex& x = c[index];
    std::vector<Simplex> out;
    std::vector<VertexId> buf;
    for (auto j : c.up_set(index)) {
        if (c.up_set(j).size() != 1) continue;  // not maximal
        const auto& y = c[j].vector();
        const auto n = static_cast<std::uint32_t>(y.size());
        std::uint32_t xmask = 0;
        for (std::uint32_t k = 0; k < n; ++k)
            if (x.contains(y[k])) xmask |= 1u << k;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if ((mask & xmask) == xmask) continue;
            buf.clear();
            for (std::uint32_t k = 0; k < n; ++k)
                if (mask & (1u << k)) buf.push_back(y[k]);
            out.push_back(Simplex::from_sorted(buf));
        }
    }
    return from_unsorted(std::move(out));
}

SimplicialComplex unit_sphere(const SimplicialComplex& c, const Simplex& x) {
    return unit_sphere(c, require_index(c, x));
}

std::vector<VertexId> mirror(const SimplicialComplex& c, const Simplex& wall) {
    auto idx = c.find(wall);
    if (!idx || wall.dimension() != c.dimension() - 1)
        throw Error(ErrorKind::invalid_input, "{" + to_string(wall) + "} is not a wall of the complex");
    std::vector<VertexId> out;
    for (auto j : c.up_set(*idx)) {
        const Simplex& f = c[j];
        if (f.dimension() != c.dimension()) continue;
        for (VertexId v : f.vertices())
            if (!wall.contains(v)) out.push_back(v);
    }
    return out;
}

SimplicialComplex complement_of_star(const SimplicialComplex& c, std::size_t index) {
    std::vector<bool> removed(c.size(), false);
    for (auto j : c.up_set(index)) removed[j] = true;
    std::vector<Simplex> kept;
    kept.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!removed[i]) kept.push_back(c[i]);
    // Filtering preserves canonical order; from_canonical re-verifies closure.
    return SimplicialComplex::from_canonical(std::move(kept));
}

SimplicialComplex complement_of_star(const SimplicialComplex& c, const Simplex& x) {
    return complement_of_star(c, require_index(c, x));
}

SimplicialComplex barycentric(const SimplicialComplex& c) {
    std::vector<Simplex> chains;
    std::vector<VertexId> chain;
    // Up-sets are canonically ordered, so labels along a chain increase.
    auto grow = [&](auto&& self, std::size_t last) -> void {
        chains.push_back(Simplex::from_sorted(chain));
        for (auto j : c.up_set(last)) {
            if (j == last) continue;
            chain.push_back(static_cast<VertexId>(j) + 1);
            self(self, j);
            chain.pop_back();
        }
    };
    for (std::size_t i = 0; i < c.size(); ++i) {
        chain.assign(1, static_cast<VertexId>(i) + 1);
        grow(grow, i);
    }
    return from_unsorted(std::move(chains));
}

SimplicialComplex barycentric(const SimplicialComplex& c, int depth) {
    if (depth < 0) throw Error(ErrorKind::invalid_input, "refinement depth must be non-negative");
    SimplicialComplex out = c;
    for (int k = 0; k < depth; ++k) out = barycentric(out);
    return out;
}

Integer barycentric_size(const SimplicialComplex& c) {
    // chains(i) = 1 + Σ_{j ⊋ i} chains(j); supersets come later canonically.
    std::vector<Integer> chains(c.size());
    Integer total = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        Integer n = 1;
        for (auto j : c.up_set(i))
            if (j != i) n += chains[j];
        total += n;
        chains[i] = std::move(n);
    }
    return total;
}

Graph comparability_graph(const SimplicialComplex& c) {
    std::vector<VertexId> vertices(c.size());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < c.size(); ++i) {
        vertices[i] = static_cast<VertexId>(i) + 1;
        for (auto j : c.up_set(i))
            if (j != i) edges.emplace_back(static_cast<VertexId>(i) + 1, static_cast<VertexId>(j) + 1);
    }
    return Graph::make(std::move(vertices), std::move(edges));
}

Graph dual_graph(const SimplicialComplex& c) {
    if (!is_pure(c)) throw Error(ErrorKind::invalid_input, "dual graph requires a pure complex");
    const int q = c.dimension();
    auto [facet_first, facet_last] = c.dimension_range(q);
    std::vector<VertexId> vertices;
    for (std::size_t i = facet_first; i < facet_last; ++i) vertices.push_back(static_cast<VertexId>(i - facet_first) + 1);
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (q >= 1) {
        auto [wall_first, wall_last] = c.dimension_range(q - 1);
        for (std::size_t w = wall_first; w < wall_last; ++w) {
            std::vector<VertexId> cofacets;
            for (auto j : c.up_set(w))
                if (c[j].dimension() == q) cofacets.push_back(static_cast<VertexId>(j - facet_first) + 1);
            for (std::size_t a = 0; a < cofacets.size(); ++a)
                for (std::size_t b = a + 1; b < cofacets.size(); ++b) edges.emplace_back(cofacets[a], cofacets[b]);
        }
    }
    return Graph::make(std::move(vertices), std::move(edges));
}

}  // namespace diskgeo
