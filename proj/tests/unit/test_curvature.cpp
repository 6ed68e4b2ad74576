#include "diskgeo/catalog.hpp"
#include "diskgeo/curvature.hpp"
#include "diskgeo/error.hpp"
#include "diskgeo/sheets.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace diskgeo;

TEST_CASE("partition curvature") {
    CHECK(partition_curvature(Partition::make({5, 5, 5, 4, 4})) == Rational(7, 30));
    CHECK(partition_curvature(Partition::make({8, 8, 8, 8})) == 0);
    CHECK(partition_curvature(Partition::make({10, 9, 7, 7})) == Rational(-2, 945));
    for (int m = 1; m <= 40; ++m)
        CHECK(partition_curvature(Partition{std::vector<int>(static_cast<std::size_t>(m), 4)}) == Rational(1, 3));
    CHECK(Partition::make({4, 9, 7}).parts == std::vector<int>{9, 7, 4});
    CHECK(to_string(Partition::make({4, 9, 7})) == "(9,7,4)");
    CHECK_THROWS_AS(Partition::make({}), Error);
    CHECK_THROWS_AS(Partition::make({3, 0}), Error);
    for (const auto& p : oracle::partitions(20, 1, 1))
        CHECK(partition_curvature(Partition::make(p)) == oracle::curvature(p));
}

TEST_CASE("vertex curvature on surfaces") {
    const auto ico = catalog_complex("icosahedron");
    CHECK(vertex_curvature_2m(ico, 1) == Rational(1, 6));
    CHECK(vertex_curvature_2m(catalog_complex("octahedron"), 4) == Rational(1, 3));
    for (VertexId v = 1; v <= 13; ++v) CHECK(vertex_curvature_2m(catalog_complex("torus13"), v) == 0);
    CHECK(sphere_degree(ico, 1) == 25);
    CHECK(sphere_degree(catalog_complex("octahedron"), 1) == 16);
    CHECK_THROWS_AS(vertex_curvature_2m(catalog_complex("rp3"), 1), Error);
    CHECK_THROWS_AS(vertex_curvature_2m(catalog_complex("simplex2"), 1), Error);
    CHECK_THROWS_AS(vertex_curvature_2m(ico, 99), Error);
}

TEST_CASE("closed surface detection") {
    for (const auto& name : support::closed_surfaces()) {
        CAPTURE(name);
        CHECK(is_closed_surface(catalog_complex(name)));
    }
    CHECK_FALSE(is_closed_surface(catalog_complex("simplex2")));
    CHECK_FALSE(is_closed_surface(catalog_complex("rp3")));
    // Two octahedra sharing a vertex: edges are fine, the vertex link is two cycles.
    std::vector<std::vector<VertexId>> facets = {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6},
                                                 {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}};
    for (auto f : std::vector<std::vector<VertexId>>(facets)) {
        for (auto& v : f) v = v == 1 ? 1 : v + 10;
        facets.push_back(f);
    }
    CHECK_FALSE(is_closed_surface(generate_closure(std::span<const std::vector<VertexId>>(facets))));
}

TEST_CASE("Gauss-Bonnet on surfaces") {
    for (const auto& name : support::closed_surfaces()) {
        CAPTURE(name);
        const auto c = catalog_complex(name);
        const auto r = gauss_bonnet_2m(c);
        CHECK(r.total == Rational(r.euler));
        const auto o = support::to_oracle(c);
        for (const auto& [site, value] : r.values) {
            CHECK(value == oracle::surface_curvature(o, site[0]));
            // Second-order vertex curvature is the sectional curvature of the vertex bone.
            CHECK(value == sectional_curvature(c, site));
        }
        CHECK(triangle_curvatures(c).total == Rational(r.euler));
    }
    for (const char* cat : {"cat3", "cat4", "cat7", "cat11"}) {
        const auto r = gauss_bonnet_2m(catalog_complex(cat));
        CHECK(r.total == 2);
        for (const auto& [_, value] : r.values) CHECK(value > 0);
    }
    CHECK(gauss_bonnet_2m(catalog_complex("icosahedron")).value_counts() ==
          std::map<Rational, std::size_t>{{Rational(1, 6), 12}});
}

TEST_CASE("triangle and first-order curvatures") {
    const auto ico = catalog_complex("icosahedron");
    for (const auto& t : ico.of_dimension(2)) CHECK(ih_triangle_curvature(ico, t) == Rational(1, 10));
    CHECK(triangle_curvatures(ico).total == 2);
    CHECK_THROWS_AS(ih_triangle_curvature(ico, ico.of_dimension(1).front()), Error);
    // Every refined triangle has one vertex each of degree 4, 6 and 8.
    const auto b1 = catalog_complex("octahedron-b1");
    std::set<Rational> values;
    for (const auto& t : b1.of_dimension(2)) values.insert(ih_triangle_curvature(b1, t));
    CHECK(values == std::set<Rational>{Rational(1, 24)});

    for (auto kind : {FirstOrderKind::eberhard, FirstOrderKind::levitt}) {
        CHECK(first_order_curvature(ico, 1, kind) == Rational(1, 6));
        CHECK(first_order_curvature(catalog_complex("octahedron"), 1, kind) == Rational(1, 3));
    }
    const auto t1 = catalog_complex("torus13-b1");
    for (VertexId v : t1.vertex_ids()) {
        CHECK(first_order_curvature(t1, v, FirstOrderKind::eberhard) ==
              first_order_curvature(t1, v, FirstOrderKind::levitt));
    }
    CHECK(first_order_report(t1, FirstOrderKind::levitt).total == 0);
    CHECK(first_order_report(catalog_complex("rp3"), FirstOrderKind::levitt).total == 0);
    CHECK_THROWS_AS(first_order_curvature(catalog_complex("rp3"), 1, FirstOrderKind::eberhard), Error);
}

TEST_CASE("Eberhard curvature is linear in the degree") {
    const auto b1 = catalog_complex("icosahedron-b1");
    for (VertexId v : b1.vertex_ids()) {
        const auto d = static_cast<long long>(vertex_degree(b1, v));
        CHECK(first_order_curvature(b1, v, FirstOrderKind::eberhard) == 1 - Rational(d, 6));
    }
}

TEST_CASE("partition scan matches the oracle") {
    for (int n = 1; n <= 33; ++n) {
        CAPTURE(n);
        const auto scan = partition_scan(n);
        const auto expected = oracle::partitions(n, 4, 4);
        REQUIRE(scan.size() == expected.size());
        for (const auto& [p, k] : scan) {
            CHECK(expected.count(p.parts) == 1);
            CHECK(k == oracle::curvature(p.parts));
        }
    }
    PartitionFilter five{5, 4, {}};
    CHECK(partition_scan(20, five).size() == oracle::partitions(20, 5, 4).size());
    PartitionFilter no_six{4, 4, {6}};
    for (const auto& [p, _] : partition_scan(30, no_six))
        CHECK(std::find(p.parts.begin(), p.parts.end(), 6) == p.parts.end());
    CHECK_THROWS_AS(partition_scan(0), Error);
}

TEST_CASE("threshold theorem") {
    const auto r = threshold_verify(40);
    CHECK(r.ok());
    CHECK(r.positive_up_to_31);
    CHECK(r.zero_set_at_32);
    CHECK(r.negative_set_at_33);
    CHECK(r.scans[30].minimum.has_value());
    CHECK(*r.scans[30].minimum > 0);
    CHECK(partition_curvature(Partition::make({88, 4, 4, 4})) == Rational(1, 6) + Rational(1, 132));
    CHECK(partition_curvature(Partition{std::vector<int>(11, 5)}) == Rational(-1, 30));
    CHECK_THROWS_AS(threshold_verify(32), Error);
}
