#include "diskgeo/sheets.hpp"

#include "diskgeo/error.hpp"
#include "diskgeo/frame_flow.hpp"
#include "diskgeo/parallel.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace diskgeo {

namespace {

std::size_t require_bone(const SimplicialComplex& c, const Simplex& bone) {
    auto idx = c.find(bone);
    if (!idx || c.dimension() < 2 || bone.dimension() != c.dimension() - 2)
        throw Error(ErrorKind::invalid_input, "{" + to_string(bone) + "} is not a bone of the complex");
    return *idx;
}

std::vector<VertexId> resolve_ordering(const Simplex& bone, std::vector<VertexId> ordering) {
    if (ordering.empty()) return bone.vector();
    std::vector<VertexId> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != bone.vector())
        throw Error(ErrorKind::invalid_input, "ordering is not a permutation of the bone {" + to_string(bone) + "}");
    return ordering;
}

std::vector<std::size_t> facets_above(const SimplicialComplex& c, std::size_t index) {
    std::vector<std::size_t> out;
    for (auto j : c.up_set(index))
        if (c[j].dimension() == c.dimension()) out.push_back(j);
    return out;
}

std::vector<VertexId> intersect(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// One application of the flow, on ordered facets given by vertex sequences.
Frame flow_step(const SimplicialComplex& c, const Frame& frame) {
    std::vector<VertexId> wall(frame.begin() + 1, frame.end());
    std::sort(wall.begin(), wall.end());
    std::vector<VertexId> others;
    for (VertexId v : mirror(c, Simplex::from_sorted(wall)))
        if (v != frame.front()) others.push_back(v);
    if (others.size() > 1)
        throw Error(ErrorKind::not_geodesic_ready, "wall {" + to_string(Simplex::from_sorted(wall)) +
                                                       "} has more than two cofacets");
    Frame out(frame.begin() + 1, frame.end());
    out.push_back(others.empty() ? frame.front() : others.front());
    return out;
}

struct FlowedFacet {
    Frame frame;                       // ordering followed by the two ring vertices
    std::vector<VertexId> petal_a, petal_b;  // y ∩ T(y) ∩ a, y ∩ T(y) ∩ b
};

// The per-facet step shared by the listing sum and the local disk.
std::vector<FlowedFacet> flow_hinging_facets(const SimplicialComplex& c, const Simplex& bone,
                                             const std::vector<VertexId>& ordering,
                                             const std::vector<std::size_t>& hinging) {
    std::vector<FlowedFacet> out;
    for (auto yi : hinging) {
        const auto& y = c[yi].vector();
        FlowedFacet ff;
        ff.frame = ordering;
        for (VertexId v : y)
            if (!bone.contains(v)) ff.frame.push_back(v);

        Frame z = flow_step(c, ff.frame);
        std::sort(z.begin(), z.end());
        const auto yz = intersect(y, z);

        std::vector<std::size_t> neighbours;
        for (auto other : hinging) {
            if (other == yi) continue;
            if (intersect(y, c[other].vector()).size() == bone.size() + 1) neighbours.push_back(other);
        }
        if (neighbours.size() != 2)
            throw Error(ErrorKind::non_manifold_at_bone, "facet {" + to_string(c[yi]) + "} has " +
                                                             std::to_string(neighbours.size()) +
                                                             " ring neighbours around bone {" + to_string(bone) + "}");
        ff.petal_a = intersect(yz, c[neighbours[0]].vector());
        ff.petal_b = intersect(yz, c[neighbours[1]].vector());
        out.push_back(std::move(ff));
    }
    return out;
}

Rational half_stable_star(const SimplicialComplex& c, const std::vector<VertexId>& x) {
    auto idx = c.find(x);
    if (!idx) throw Error(ErrorKind::internal, "petal bone missing from the complex");
    const auto stable = c.up_set(*idx).size() - 1;
    if (stable == 0) throw Error(ErrorKind::non_manifold_at_bone, "petal bone with an empty stable star");
    return Rational(static_cast<long long>(stable), 2);
}

Graph induced_dual_subgraph(const SimplicialComplex& c, const std::vector<Simplex>& facets) {
    const int q = c.dimension();
    const auto [first, last] = c.dimension_range(q);
    std::vector<VertexId> labels;
    for (const auto& f : facets) labels.push_back(static_cast<VertexId>(*c.find(f) - first) + 1);
    std::sort(labels.begin(), labels.end());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t a = 0; a < facets.size(); ++a)
        for (std::size_t b = a + 1; b < facets.size(); ++b)
            if (intersect(facets[a].vector(), facets[b].vector()).size() == static_cast<std::size_t>(q))
                edges.emplace_back(static_cast<VertexId>(*c.find(facets[a]) - first) + 1,
                                   static_cast<VertexId>(*c.find(facets[b]) - first) + 1);
    return Graph::make(std::move(labels), std::move(edges));
}

}  // namespace

BoneRing bone_ring(const SimplicialComplex& c, const Simplex& bone) {
    const std::size_t idx = require_bone(c, bone);
    const auto hinging = facets_above(c, idx);
    BoneRing r{bone, hinging.size(), {}, {}};

    auto adjacent = [&](std::size_t a, std::size_t b) {
        return intersect(c[a].vector(), c[b].vector()).size() == bone.size() + 1;
    };
    auto fail = [&](const std::string& why) {
        return Error(ErrorKind::non_manifold_at_bone, "bone {" + to_string(bone) + "}: " + why);
    };
    if (hinging.size() < 3) throw fail("fewer than three hinging facets");
    for (auto a : hinging) {
        std::size_t degree = 0;
        for (auto b : hinging)
            if (a != b && adjacent(a, b)) ++degree;
        if (degree != 2) throw fail("hinging facets do not form a cycle");
    }

    // Walk the cycle from the canonically first facet towards its smaller neighbour.
    std::vector<std::size_t> order{hinging.front()};
    std::size_t previous = hinging.front();
    std::size_t current = 0;
    for (auto b : hinging)
        if (b != previous && adjacent(previous, b)) {
            current = b;
            break;
        }
    while (current != hinging.front()) {
        if (order.size() > hinging.size()) throw fail("ring walk did not close");
        order.push_back(current);
        std::size_t next = current;
        for (auto b : hinging)
            if (b != current && b != previous && adjacent(current, b)) {
                next = b;
                break;
            }
        previous = current;
        current = next;
    }
    if (order.size() != hinging.size()) throw fail("hinging facets form more than one cycle");

    for (auto f : order) r.ring.push_back(c[f]);
    // ring[k] ∩ ring[k+1] = bone ∪ {v_{k+1}}; v_0 is shared by the first and last facet.
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto shared = intersect(c[order[(k + order.size() - 1) % order.size()]].vector(), c[order[k]].vector());
        for (VertexId v : shared)
            if (!bone.contains(v)) r.ring_vertices.push_back(v);
    }
    return r;
}

Rational sectional_curvature_listing(const SimplicialComplex& c, const Simplex& bone, std::vector<VertexId> ordering) {
    const std::size_t idx = require_bone(c, bone);
    ordering = resolve_ordering(bone, std::move(ordering));
    const auto hinging = facets_above(c, idx);
    Rational sum = 0;
    for (const auto& ff : flow_hinging_facets(c, bone, ordering, hinging)) {
        sum += 1 / (3 * half_stable_star(c, ff.petal_a)) + 1 / (3 * half_stable_star(c, ff.petal_b));
    }
    return sum + Rational(2 - static_cast<long long>(hinging.size()), 6);
}

Rational sectional_curvature_closed_form(const SimplicialComplex& c, const Simplex& bone,
                                         std::vector<VertexId> ordering) {
    ordering = resolve_ordering(bone, std::move(ordering));
    const BoneRing ring = bone_ring(c, bone);
    const Simplex rest = bone.size() > 1 ? bone.without(ordering.front()) : bone;
    Rational petal_sum = 0;
    for (VertexId v : ring.ring_vertices) {
        std::vector<VertexId> petal = bone.size() > 1 ? rest.with(v).vector() : std::vector<VertexId>{v};
        auto pidx = c.find(petal);
        if (!pidx) throw Error(ErrorKind::internal, "petal bone missing from the complex");
        const auto p = facets_above(c, *pidx).size();
        petal_sum += Rational(1, static_cast<long long>(p));
    }
    const auto m = static_cast<long long>(ring.m);
    return Rational(2 - m, 6) + Rational(2, 3) * petal_sum;
}

Rational sectional_curvature(const SimplicialComplex& c, const Simplex& bone, std::vector<VertexId> ordering) {
    Rational listing = sectional_curvature_listing(c, bone, ordering);
    Rational closed = sectional_curvature_closed_form(c, bone, ordering);
    if (listing != closed)
        throw Error(ErrorKind::internal, "bone {" + to_string(bone) + "}: listing sum " + to_string(listing) +
                                             " differs from closed form " + to_string(closed));
    return listing;
}

SectionalSpectrum sectional_spectrum(const SimplicialComplex& c, unsigned threads) {
    if (c.dimension() < 2) throw Error(ErrorKind::invalid_input, "sectional curvature needs dimension >= 2");
    const auto bones = c.of_dimension(c.dimension() - 2);
    std::vector<Rational> values(bones.size());
    parallel_for(bones.size(), threads, [&](std::size_t i) { values[i] = sectional_curvature(c, bones[i]); });

    SectionalSpectrum s;
    s.dimension = c.dimension();
    s.bones = bones.size();
    s.euler = euler_characteristic(c);
    s.total = 0;
    for (const auto& v : values) {
        ++s.counts[v];
        s.total += v;
    }
    return s;
}

SheetPatch local_disk(const SimplicialComplex& c, const Simplex& bone, std::vector<VertexId> ordering) {
    require_bone(c, bone);
    ordering = resolve_ordering(bone, std::move(ordering));
    const BoneRing ring = bone_ring(c, bone);

    std::vector<std::size_t> hinging;
    for (const auto& f : ring.ring) hinging.push_back(*c.find(f));
    const auto flowed = flow_hinging_facets(c, bone, ordering, hinging);

    SheetPatch patch{bone, ordering, flowed.front().frame, {}, {}, {}, {}};
    std::set<Simplex> facets(ring.ring.begin(), ring.ring.end());
    std::set<Simplex> seen_petals;
    auto add_petal = [&](const std::vector<VertexId>& petal) {
        Simplex p = Simplex::from_sorted(petal);
        const auto pidx = *c.find(p);
        const auto above = facets_above(c, pidx);
        for (auto j : above) facets.insert(c[j]);
        if (seen_petals.insert(p).second) {
            patch.petal_bones.push_back(p);
            patch.petal_numbers.push_back(above.size());
        }
    };
    for (const auto& ff : flowed) {
        add_petal(ff.petal_a);
        add_petal(ff.petal_b);
    }
    patch.facets.assign(facets.begin(), facets.end());
    patch.dual_subgraph = induced_dual_subgraph(c, patch.facets);
    return patch;
}

Sheet grow_sheet(const SimplicialComplex& c, const Simplex& bone, std::vector<VertexId> ordering,
                 std::size_t max_patches) {
    ordering = resolve_ordering(bone, std::move(ordering));
    Sheet sheet;
    std::set<Simplex> grown;
    std::set<Simplex> blocked;
    std::deque<std::pair<Simplex, std::vector<VertexId>>> frontier;
    frontier.emplace_back(bone, ordering);

    while (!frontier.empty() && sheet.patches.size() < max_patches) {
        auto [b, ord] = std::move(frontier.front());
        frontier.pop_front();
        if (grown.count(b) || blocked.count(b)) continue;

        SheetPatch patch = [&]() -> SheetPatch {
            try {
                return local_disk(c, b, ord);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::non_manifold_at_bone) throw;
                return SheetPatch{b, {}, {}, {}, {}, {}, {}};
            }
        }();
        if (patch.facets.empty()) {
            blocked.insert(b);
            ++sheet.boundary_bones;
            continue;
        }
        grown.insert(b);
        for (const auto& f : patch.facets) ++sheet.facet_multiplicity[f];
        for (const auto& petal : patch.petal_bones) {
            if (grown.count(petal) || blocked.count(petal)) continue;
            // Shared vertices keep their inherited order; the new vertex goes last.
            std::vector<VertexId> next;
            for (VertexId v : ord)
                if (petal.contains(v)) next.push_back(v);
            for (VertexId v : petal.vertices())
                if (std::find(next.begin(), next.end(), v) == next.end()) next.push_back(v);
            frontier.emplace_back(petal, std::move(next));
        }
        sheet.patches.push_back(std::move(patch));
    }

    sheet.closed = std::none_of(frontier.begin(), frontier.end(), [&](const auto& item) {
        return !grown.count(item.first) && !blocked.count(item.first);
    });
    std::vector<Simplex> embedded;
    for (const auto& [f, _] : sheet.facet_multiplicity) embedded.push_back(f);
    sheet.dual_subgraph = induced_dual_subgraph(c, embedded);
    return sheet;
}

}  // namespace diskgeo
