#pragma once

// Curvatures on 2-manifolds and on abstract integer partitions.
//
// For a vertex v of degree d(v) in a 2-manifold,
//   K(v) = (2 - d(v))/6 + (2/3) Σ_{w ∈ S(v)} 1/d(w),
// which is the partition curvature of the neighbour-degree partition and sums
// to the Euler characteristic.

#include "diskgeo/complex.hpp"
#include "diskgeo/numeric.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace diskgeo {

/// Parts sorted descending.
struct Partition {
    std::vector<int> parts;

    static Partition make(std::vector<int> parts);
    std::size_t count() const noexcept { return parts.size(); }
    long long sum() const noexcept;

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::string to_string(const Partition& p);

/// (2 - m)/6 + (2/3) Σ 1/p_k; requires m >= 1 and every part >= 1.
Rational partition_curvature(const Partition& p);

/// Pure of dimension 2, every edge in exactly two triangles and every vertex
/// link a single cycle.
bool is_closed_surface(const SimplicialComplex& c);

std::size_t vertex_degree(const SimplicialComplex& c, VertexId v);

/// Throws invalid_input unless `c` is a closed surface.
Rational vertex_curvature_2m(const SimplicialComplex& c, VertexId v);
std::size_t sphere_degree(const SimplicialComplex& c, VertexId v);
/// -1/2 + Σ 1/d over the triangle's three vertex degrees.
Rational ih_triangle_curvature(const SimplicialComplex& c, const Simplex& triangle);

enum class FirstOrderKind { eberhard, levitt };

/// eberhard: 1 - d(v)/6 (closed surfaces only).
/// levitt:   1 - f_0(S(v))/2 + f_1(S(v))/3 - f_2(S(v))/4 + ... (any complex).
Rational first_order_curvature(const SimplicialComplex& c, VertexId v, FirstOrderKind kind);

struct CurvatureReport {
    std::map<Simplex, Rational> values;  // per site: vertex or triangle
    Rational total;
    Integer euler;

    std::map<Rational, std::size_t> value_counts() const;
};

/// Per-vertex second-order curvature; throws internal if the total is not χ.
CurvatureReport gauss_bonnet_2m(const SimplicialComplex& c);
/// Per-triangle Ishida-Higuchi curvature.
CurvatureReport triangle_curvatures(const SimplicialComplex& c);
CurvatureReport first_order_report(const SimplicialComplex& c, FirstOrderKind kind);

struct PartitionFilter {
    int min_part = 4;             // every part >= min_part
    std::size_t min_parts = 4;    // m >= min_parts
    std::vector<int> excluded_parts;
};

/// Partitions of n passing the filter, largest parts first, with their curvature.
std::vector<std::pair<Partition, Rational>> partition_scan(int n, const PartitionFilter& filter = {});

struct ScanSummary {
    int n = 0;
    std::size_t count = 0;
    std::optional<Rational> minimum;
    std::vector<std::pair<Partition, Rational>> zero;
    std::vector<std::pair<Partition, Rational>> negative;
};

ScanSummary summarize_scan(int n, const PartitionFilter& filter = {});

struct ThresholdReport {
    std::vector<ScanSummary> scans;  // n = 1 .. n_max
    bool positive_up_to_31 = false;
    bool zero_set_at_32 = false;
    bool negative_set_at_33 = false;
    bool family_n_minus_12 = false;  // K(n-12,4,4,4) = 1/6 + 2/(3(n-12)) > 0
    bool family_all_fives = false;   // K(5,...,5) = 1/3 - m/30, negative iff m > 10
    std::vector<std::string> failures;

    bool ok() const noexcept {
        return positive_up_to_31 && zero_set_at_32 && negative_set_at_33 && family_n_minus_12 && family_all_fives;
    }
};

/// Requires n_max >= 33. Family identities are checked exactly for
/// n in [16, family_n_max] and m in [1, fives_m_max].
ThresholdReport threshold_verify(int n_max, int family_n_max = 10'000, int fives_m_max = 1'000);

}  // namespace diskgeo
