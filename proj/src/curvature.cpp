#include "diskgeo/curvature.hpp"

#include "diskgeo/error.hpp"

#include <algorithm>
#include <functional>

namespace diskgeo {

Partition Partition::make(std::vector<int> parts) {
    if (parts.empty()) throw Error(ErrorKind::invalid_input, "partition needs at least one part");
    for (int p : parts)
        if (p < 1) throw Error(ErrorKind::invalid_input, "partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition{std::move(parts)};
}

long long Partition::sum() const noexcept {
    long long s = 0;
    for (int p : parts) s += p;
    return s;
}

std::string to_string(const Partition& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts[i]);
    }
    return out + ")";
}

Rational partition_curvature(const Partition& p) {
    if (p.parts.empty()) throw Error(ErrorKind::invalid_input, "partition needs at least one part");
    Rational inverse_sum = 0;
    for (int part : p.parts) {
        if (part < 1) throw Error(ErrorKind::invalid_input, "partition parts must be positive");
        inverse_sum += Rational(1, part);
    }
    return Rational(2 - static_cast<long long>(p.parts.size()), 6) + Rational(2, 3) * inverse_sum;
}

// ---------------------------------------------------------------------------
// Surfaces

namespace {

std::size_t vertex_index(const SimplicialComplex& c, VertexId v) {
    const VertexId one[1] = {v};
    auto idx = c.find(std::span<const VertexId>(one));
    if (!idx) throw Error(ErrorKind::invalid_input, "vertex " + std::to_string(v) + " is not in the complex");
    return *idx;
}

std::vector<VertexId> neighbours(const SimplicialComplex& c, std::size_t vidx) {
    std::vector<VertexId> out;
    const VertexId v = c[vidx][0];
    for (auto j : c.up_set(vidx))
        if (c[j].dimension() == 1) out.push_back(c[j][0] == v ? c[j][1] : c[j][0]);
    return out;
}

void require_surface(const SimplicialComplex& c) {
    if (!is_closed_surface(c)) throw Error(ErrorKind::invalid_input, "complex is not a closed 2-manifold");
}

// Assumes a closed surface.
Rational second_order(const SimplicialComplex& c, VertexId v) {
    std::vector<int> degrees;
    for (VertexId w : neighbours(c, vertex_index(c, v)))
        degrees.push_back(static_cast<int>(neighbours(c, vertex_index(c, w)).size()));
    return partition_curvature(Partition::make(std::move(degrees)));
}

}  // namespace

bool is_closed_surface(const SimplicialComplex& c) {
    if (c.dimension() != 2 || !is_pure(c)) return false;
    for (std::size_t e = c.dimension_range(1).first; e < c.dimension_range(1).second; ++e)
        if (c.up_set(e).size() != 3) return false;  // the edge and two triangles
    for (std::size_t v = 0; v < c.of_dimension(0).size(); ++v) {
        // Link edges: triangle minus v. Each link vertex has degree 2 (by the
        // edge condition); connectedness makes it a single cycle.
        const VertexId centre = c[v][0];
        std::vector<std::pair<VertexId, VertexId>> link;
        for (auto j : c.up_set(v)) {
            if (c[j].dimension() != 2) continue;
            std::vector<VertexId> rest;
            for (VertexId w : c[j].vertices())
                if (w != centre) rest.push_back(w);
            link.emplace_back(rest[0], rest[1]);
        }
        if (link.size() < 3) return false;
        std::vector<bool> used(link.size(), false);
        VertexId start = link[0].first, current = link[0].second;
        used[0] = true;
        std::size_t steps = 1;
        while (current != start) {
            bool advanced = false;
            for (std::size_t k = 0; k < link.size(); ++k) {
                if (used[k]) continue;
                if (link[k].first == current || link[k].second == current) {
                    current = link[k].first == current ? link[k].second : link[k].first;
                    used[k] = true;
                    advanced = true;
                    ++steps;
                    break;
                }
            }
            if (!advanced) return false;
        }
        if (steps != link.size()) return false;
    }
    return true;
}

std::size_t vertex_degree(const SimplicialComplex& c, VertexId v) {
    return neighbours(c, vertex_index(c, v)).size();
}

Rational vertex_curvature_2m(const SimplicialComplex& c, VertexId v) {
    require_surface(c);
    return second_order(c, v);
}

std::size_t sphere_degree(const SimplicialComplex& c, VertexId v) {
    require_surface(c);
    std::size_t total = 0;
    for (VertexId w : neighbours(c, vertex_index(c, v))) total += vertex_degree(c, w);
    return total;
}

Rational ih_triangle_curvature(const SimplicialComplex& c, const Simplex& triangle) {
    if (triangle.dimension() != 2 || !c.contains(triangle))
        throw Error(ErrorKind::invalid_input, "{" + to_string(triangle) + "} is not a triangle of the complex");
    Rational k(-1, 2);
    for (VertexId v : triangle.vertices()) k += Rational(1, static_cast<long long>(vertex_degree(c, v)));
    return k;
}

namespace {

Rational first_order(const SimplicialComplex& c, VertexId v, FirstOrderKind kind, bool surface_checked) {
    const std::size_t vidx = vertex_index(c, v);
    if (kind == FirstOrderKind::eberhard) {
        if (!surface_checked) require_surface(c);
        return 1 - Rational(static_cast<long long>(neighbours(c, vidx).size()), 6);
    }
    const SimplicialComplex sphere = unit_sphere(c, vidx);
    Rational k = 1;  // the f_{-1} = 1 term
    for (int d = 0; d <= sphere.dimension(); ++d) {
        const auto f = static_cast<long long>(sphere.of_dimension(d).size());
        k += (d % 2 == 0 ? -1 : 1) * Rational(f, d + 2);
    }
    return k;
}

}  // namespace

Rational first_order_curvature(const SimplicialComplex& c, VertexId v, FirstOrderKind kind) {
    return first_order(c, v, kind, false);
}

std::map<Rational, std::size_t> CurvatureReport::value_counts() const {
    std::map<Rational, std::size_t> counts;
    for (const auto& [_, value] : values) ++counts[value];
    return counts;
}

CurvatureReport gauss_bonnet_2m(const SimplicialComplex& c) {
    require_surface(c);
    CurvatureReport r;
    r.euler = euler_characteristic(c);
    for (VertexId v : c.vertex_ids()) {
        Rational k = second_order(c, v);
        r.total += k;
        r.values.emplace(Simplex::from_sorted({v}), std::move(k));
    }
    if (r.total != Rational(r.euler))
        throw Error(ErrorKind::internal, "Gauss-Bonnet violated: total " + to_string(r.total) + " vs euler " +
                                             r.euler.str());
    return r;
}

CurvatureReport triangle_curvatures(const SimplicialComplex& c) {
    require_surface(c);
    CurvatureReport r;
    r.euler = euler_characteristic(c);
    for (const auto& t : c.of_dimension(2)) {
        Rational k = ih_triangle_curvature(c, t);
        r.total += k;
        r.values.emplace(t, std::move(k));
    }
    return r;
}

CurvatureReport first_order_report(const SimplicialComplex& c, FirstOrderKind kind) {
    if (kind == FirstOrderKind::eberhard) require_surface(c);
    CurvatureReport r;
    r.euler = euler_characteristic(c);
    for (VertexId v : c.vertex_ids()) {
        Rational k = first_order(c, v, kind, true);
        r.total += k;
        r.values.emplace(Simplex::from_sorted({v}), std::move(k));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Partitions

std::vector<std::pair<Partition, Rational>> partition_scan(int n, const PartitionFilter& filter) {
    if (n < 1) throw Error(ErrorKind::invalid_input, "partition scan needs n >= 1");
    if (filter.min_part < 1) throw Error(ErrorKind::invalid_input, "minimum part must be positive");
    std::vector<std::pair<Partition, Rational>> out;
    std::vector<int> parts;
    auto allowed = [&](int p) {
        return std::find(filter.excluded_parts.begin(), filter.excluded_parts.end(), p) == filter.excluded_parts.end();
    };
    // Parts are generated non-increasing, so the first part decides the order.
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            if (parts.size() >= filter.min_parts) {
                Partition p{parts};
                Rational k = partition_curvature(p);
                out.emplace_back(std::move(p), std::move(k));
            }
            return;
        }
        for (int part = std::min(remaining, max_part); part >= filter.min_part; --part) {
            if (!allowed(part)) continue;
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

ScanSummary summarize_scan(int n, const PartitionFilter& filter) {
    ScanSummary s;
    s.n = n;
    for (auto& [p, k] : partition_scan(n, filter)) {
        ++s.count;
        if (!s.minimum || k < *s.minimum) s.minimum = k;
        if (k == 0) s.zero.emplace_back(p, k);
        if (k < 0) s.negative.emplace_back(p, k);
    }
    return s;
}

ThresholdReport threshold_verify(int n_max, int family_n_max, int fives_m_max) {
    if (n_max < 33) throw Error(ErrorKind::invalid_input, "threshold verification needs n_max >= 33");
    ThresholdReport r;
    for (int n = 1; n <= n_max; ++n) r.scans.push_back(summarize_scan(n));

    r.positive_up_to_31 = true;
    for (const auto& s : r.scans) {
        if (s.n > 31) break;
        if (s.minimum && *s.minimum <= 0) {
            r.positive_up_to_31 = false;
            r.failures.push_back("n=" + std::to_string(s.n) + " has a non-positive curvature");
        }
    }

    const auto& s32 = r.scans[31];
    r.zero_set_at_32 = s32.negative.empty() && s32.zero.size() == 1 &&
                       s32.zero.front().first == Partition::make({8, 8, 8, 8});
    if (!r.zero_set_at_32) r.failures.push_back("n=32: zero set is not exactly {(8,8,8,8)} or negatives exist");

    const std::vector<std::pair<Partition, Rational>> expected33 = {
        {Partition::make({10, 9, 7, 7}), Rational(-2, 945)},
        {Partition::make({10, 8, 8, 7}), Rational(-1, 210)},
        {Partition::make({9, 9, 8, 7}), Rational(-5, 756)},
        {Partition::make({9, 8, 8, 8}), Rational(-1, 108)},
    };
    r.negative_set_at_33 = r.scans[32].negative == expected33;
    if (!r.negative_set_at_33) r.failures.push_back("n=33: negative set differs from the four expected cases");

    r.family_n_minus_12 = true;
    for (int n = 16; n <= family_n_max; ++n) {
        const Rational k = partition_curvature(Partition::make({n - 12, 4, 4, 4}));
        if (k != Rational(1, 6) + Rational(2, 3 * (n - 12)) || k <= 0) {
            r.family_n_minus_12 = false;
            r.failures.push_back("family (n-12,4,4,4) fails at n=" + std::to_string(n));
            break;
        }
    }

    r.family_all_fives = true;
    for (int m = 1; m <= fives_m_max; ++m) {
        const Rational k = partition_curvature(Partition{std::vector<int>(static_cast<std::size_t>(m), 5)});
        if (k != Rational(1, 3) - Rational(m, 30) || ((k < 0) != (m > 10))) {
            r.family_all_fives = false;
            r.failures.push_back("all-fives family fails at m=" + std::to_string(m));
            break;
        }
    }
    return r;
}

}  // namespace diskgeo
