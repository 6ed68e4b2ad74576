#include "diskgeo/frame_flow.hpp"

#include "diskgeo/error.hpp"

#include <algorithm>
#include <limits>

namespace diskgeo {

std::string to_string(const Frame& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f[i]);
    }
    return out + ")";
}

FrameFlow::FrameFlow(const SimplicialComplex& c) : complex_(c), q_(c.dimension()) {
    if (!is_pure(complex_)) throw Error(ErrorKind::not_geodesic_ready, "the geodesic flow needs a pure complex");
    auto top = complex_.of_dimension(q_);
    facets_.assign(top.begin(), top.end());

    for (int k = 2; k <= q_ + 1; ++k) {
        if (factorial_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k))
            throw Error(ErrorKind::too_large, "frame bundle size overflows 64 bits");
        factorial_ *= static_cast<std::uint64_t>(k);
    }
    if (facets_.size() > std::numeric_limits<std::uint64_t>::max() / factorial_)
        throw Error(ErrorKind::too_large, "frame bundle size overflows 64 bits");
    bundle_size_ = facets_.size() * factorial_;

    if (q_ == 0) return;
    auto [first, last] = complex_.dimension_range(q_ - 1);
    for (std::size_t w = first; w < last; ++w) {
        const Simplex& wall = complex_[w];
        std::pair<VertexId, VertexId> apexes{0, 0};
        std::size_t count = 0;
        for (auto j : complex_.up_set(w)) {
            const Simplex& f = complex_[j];
            if (f.dimension() != q_) continue;
            VertexId apex = 0;
            for (VertexId v : f.vertices())
                if (!wall.contains(v)) apex = v;
            if (++count > 2)
                throw Error(ErrorKind::not_geodesic_ready,
                            "wall {" + to_string(wall) + "} has more than two cofacets");
            (count == 1 ? apexes.first : apexes.second) = apex;
        }
        mirrors_.emplace(w, apexes);
    }
}

std::size_t FrameFlow::facet_index(const Frame& f) const {
    if (f.size() != static_cast<std::size_t>(q_) + 1)
        throw Error(ErrorKind::invalid_input, "frame " + to_string(f) + " does not have " +
                                                  std::to_string(q_ + 1) + " entries");
    std::vector<VertexId> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    auto it = std::lower_bound(facets_.begin(), facets_.end(), sorted,
                               [](const Simplex& a, const std::vector<VertexId>& b) {
                                   return canonical_compare(a.vertices(), b) < 0;
                               });
    if (it == facets_.end() || it->vector() != sorted)
        throw Error(ErrorKind::invalid_input, "frame " + to_string(f) + " is not an ordered facet");
    return static_cast<std::size_t>(it - facets_.begin());
}

VertexId FrameFlow::reflect(const std::vector<VertexId>& wall, VertexId apex) const {
    auto idx = complex_.find(wall);
    if (!idx) throw Error(ErrorKind::invalid_input, "wall not found in the complex");
    auto it = mirrors_.find(*idx);
    if (it == mirrors_.end()) throw Error(ErrorKind::internal, "wall missing from the mirror table");
    const auto [a, b] = it->second;
    if (apex == a) return b == 0 ? apex : b;
    if (apex == b) return a;
    throw Error(ErrorKind::invalid_input, "vertex " + std::to_string(apex) + " is not opposite to the wall");
}

Frame FrameFlow::step(const Frame& f) const {
    facet_index(f);
    if (q_ == 0) return f;
    std::vector<VertexId> wall(f.begin() + 1, f.end());
    std::sort(wall.begin(), wall.end());
    Frame out(f.begin() + 1, f.end());
    out.push_back(reflect(wall, f.front()));
    return out;
}

Frame FrameFlow::step_inverse(const Frame& f) const {
    facet_index(f);
    if (q_ == 0) return f;
    std::vector<VertexId> wall(f.begin(), f.end() - 1);
    std::sort(wall.begin(), wall.end());
    Frame out;
    out.reserve(f.size());
    out.push_back(reflect(wall, f.back()));
    out.insert(out.end(), f.begin(), f.end() - 1);
    return out;
}

Frame FrameFlow::wall_map(const Frame& f) const {
    facet_index(f);
    return Frame(f.begin() + 1, f.end());
}

bool FrameFlow::is_boundary_step(const Frame& f) const {
    facet_index(f);
    if (q_ == 0) return true;
    std::vector<VertexId> wall(f.begin() + 1, f.end());
    std::sort(wall.begin(), wall.end());
    return reflect(wall, f.front()) == f.front();
}

std::uint64_t FrameFlow::frame_id(const Frame& f) const {
    const std::size_t facet = facet_index(f);
    const auto& sorted = facets_[facet].vector();
    const std::size_t n = sorted.size();
    std::vector<bool> used(n, false);
    std::uint64_t rank = 0;
    std::uint64_t weight = factorial_;
    for (std::size_t k = 0; k < n; ++k) {
        weight /= static_cast<std::uint64_t>(n - k);
        const auto pos = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), f[k]) - sorted.begin());
        std::uint64_t smaller_unused = 0;
        for (std::size_t j = 0; j < pos; ++j)
            if (!used[j]) ++smaller_unused;
        rank += smaller_unused * weight;
        used[pos] = true;
    }
    return facet * factorial_ + rank;
}

Frame FrameFlow::frame_at(std::uint64_t id) const {
    if (id >= bundle_size_) throw Error(ErrorKind::invalid_input, "frame id out of range");
    const auto& sorted = facets_[id / factorial_].vector();
    std::uint64_t rank = id % factorial_;
    std::vector<VertexId> pool = sorted;
    Frame out;
    out.reserve(sorted.size());
    std::uint64_t weight = factorial_;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        weight /= static_cast<std::uint64_t>(sorted.size() - k);
        const auto digit = static_cast<std::size_t>(rank / weight);
        rank %= weight;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

Orbit FrameFlow::orbit(const Frame& start) const {
    Orbit o;
    Frame current = start;
    do {
        if (o.period == bundle_size_)
            throw Error(ErrorKind::internal, "orbit exceeded the bundle size; the step is not a bijection");
        o.boundary_touching = o.boundary_touching || is_boundary_step(current);
        o.frames.push_back(current);
        ++o.period;
        current = step(current);
    } while (current != start);
    return o;
}

OrbitPartition FrameFlow::orbit_partition() const {
    if (bundle_size_ > (std::uint64_t{1} << 34))
        throw Error(ErrorKind::too_large, "frame bundle too large to partition");
    OrbitPartition partition;
    partition.bundle_size = bundle_size_;
    std::vector<bool> visited(bundle_size_, false);
    std::uint64_t covered = 0;
    for (std::uint64_t id = 0; id < bundle_size_; ++id) {
        if (visited[id]) continue;
        CycleSummary cycle;
        cycle.start = frame_at(id);
        Frame current = cycle.start;
        do {
            const auto cid = frame_id(current);
            if (visited[cid]) throw Error(ErrorKind::internal, "cycles overlap; the step is not a bijection");
            visited[cid] = true;
            cycle.boundary_touching = cycle.boundary_touching || is_boundary_step(current);
            ++cycle.period;
            current = step(current);
        } while (current != cycle.start);
        covered += cycle.period;
        partition.cycles.push_back(std::move(cycle));
    }
    if (covered != bundle_size_) throw Error(ErrorKind::internal, "cycles do not cover the frame bundle");
    partition.ergodic = partition.cycles.size() == 1;
    return partition;
}

InvolutionPair FrameFlow::involution_factorization() const {
    const std::uint64_t n = bundle_size_;
    InvolutionPair pair;
    pair.a.resize(2 * n);
    pair.b.resize(2 * n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const Frame f = frame_at(i);
        pair.a[i] = n + frame_id(step(f));
        pair.a[n + i] = frame_id(step_inverse(f));
        pair.b[i] = n + i;
        pair.b[n + i] = i;
    }
    return pair;
}

SimplicialComplex FrameFlow::orbit_complex(const Orbit& o) const {
    std::vector<std::vector<VertexId>> facets;
    for (const auto& f : o.frames) facets.push_back(f);
    return generate_closure(std::span<const std::vector<VertexId>>(facets));
}

InvolutionCheck verify_involutions(const FrameFlow& flow, const InvolutionPair& pair) {
    const std::uint64_t n = flow.bundle_size();
    InvolutionCheck check;
    if (pair.a.size() != 2 * n || pair.b.size() != 2 * n) return check;
    check.a_is_involution = check.b_is_involution = check.restriction_matches_flow = true;
    for (std::uint64_t i = 0; i < 2 * n; ++i) {
        if (pair.a[pair.a[i]] != i) check.a_is_involution = false;
        if (pair.b[pair.b[i]] != i) check.b_is_involution = false;
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t composed = pair.b[pair.a[i]];
        if (composed >= n || composed != flow.frame_id(flow.step(flow.frame_at(i))))
            check.restriction_matches_flow = false;
    }
    return check;
}

std::vector<VertexId> facet_walk(const FrameFlow& flow, const Orbit& o) {
    std::vector<VertexId> walk;
    const auto& c = flow.complex();
    const auto [first, last] = c.dimension_range(flow.dimension());
    for (const auto& f : o.frames) {
        std::vector<VertexId> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        auto idx = c.find(sorted);
        if (!idx || *idx < first || *idx >= last) throw Error(ErrorKind::internal, "orbit frame is not a facet");
        walk.push_back(static_cast<VertexId>(*idx - first) + 1);
    }
    return walk;
}

}  // namespace diskgeo
