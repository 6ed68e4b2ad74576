#include "diskgeo/complex.hpp"
#include "diskgeo/error.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace diskgeo;

namespace {

std::vector<long long> f_of(const SimplicialComplex& c) {
    std::vector<long long> out;
    for (const auto& v : f_vector(c).counts) out.push_back(static_cast<long long>(v));
    return out;
}

std::vector<std::string> names(const SimplicialComplex& c) {
    std::vector<std::string> out;
    for (const auto& s : c.simplices()) out.push_back(to_string(s));
    return out;
}

}  // namespace

TEST_CASE("simplex validation") {
    CHECK(Simplex({3, 1, 2}).vector() == std::vector<VertexId>{1, 2, 3});
    CHECK_THROWS_AS(Simplex(std::vector<VertexId>{}), Error);
    CHECK_THROWS_AS(Simplex({1, 1}), Error);
    CHECK_THROWS_AS(Simplex({0, 1}), Error);
    CHECK(Simplex({1, 2}) < Simplex({1, 2, 3}));
    CHECK(Simplex({2, 3}) > Simplex({1, 4}));
    CHECK(Simplex({1, 2, 4}).without(2) == Simplex({1, 4}));
    CHECK(Simplex({1, 4}).with(2) == Simplex({1, 2, 4}));
    CHECK(to_string(Simplex({1, 2, 3})) == "1,2,3");
}

TEST_CASE("parse_vertex_list keeps order") {
    CHECK(parse_vertex_list("3, 1,2") == std::vector<VertexId>{3, 1, 2});
    CHECK_THROWS_AS(parse_vertex_list("1,,2"), Error);
    CHECK_THROWS_AS(parse_vertex_list("a"), Error);
}

TEST_CASE("generate_closure") {
    CHECK(names(generate_closure({{1, 2}, {2, 3}})) == std::vector<std::string>{"1", "2", "3", "1,2", "2,3"});
    CHECK(names(generate_closure({{1}})) == std::vector<std::string>{"1"});
    CHECK_THROWS_AS(generate_closure({{1, 2}, {}}), Error);
    CHECK(generate_closure(std::span<const std::vector<VertexId>>{}).empty());
    CHECK(generate_closure(std::span<const std::vector<VertexId>>{}).dimension() == -1);
}

TEST_CASE("from_canonical rejects a missing face") {
    std::vector<Simplex> broken{Simplex({1}), Simplex({2}), Simplex({1, 2, 3})};
    CHECK_THROWS_AS(SimplicialComplex::from_canonical(broken), Error);
}

TEST_CASE("whitney") {
    const auto k3 = whitney(Graph::make({}, {{1, 2}, {2, 3}, {1, 3}}));
    CHECK(names(k3) == std::vector<std::string>{"1", "2", "3", "1,2", "1,3", "2,3", "1,2,3"});
    const auto c4 = whitney(Graph::make({}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    CHECK(f_of(c4) == std::vector<long long>{4, 4});
    const auto oct = catalog_complex("octahedron");
    CHECK(f_of(oct) == std::vector<long long>{6, 12, 8});
    CHECK(euler_characteristic(oct) == 2);
    CHECK_THROWS_AS(Graph::make({}, {{1, 1}}), Error);
}

TEST_CASE("strata") {
    const auto oct = catalog_complex("octahedron");
    CHECK(strata(oct, 0).size() == 8);
    CHECK(strata(catalog_complex("rp3"), 2).size() == 51);
    const auto path = catalog_complex("path3");
    CHECK(strata(path, 1) == std::vector<Simplex>{Simplex({1}), Simplex({2}), Simplex({3}), Simplex({4})});
    CHECK(strata(path, 2).empty());
}

TEST_CASE("f-vectors and euler agree with the oracle") {
    for (const auto& name : support::small_catalog()) {
        CAPTURE(name);
        const auto c = catalog_complex(name);
        const auto o = support::to_oracle(c);
        CHECK(f_of(c) == oracle::f_vector(o));
        CHECK(euler_characteristic(c) == oracle::euler(o));
        CHECK(f_vector(c).euler == euler_characteristic(c));
    }
}

TEST_CASE("unit spheres agree with the oracle") {
    for (const char* name : {"octahedron", "rp2", "rp3", "path3", "simplex3"}) {
        CAPTURE(name);
        const auto c = catalog_complex(name);
        const auto o = support::to_oracle(c);
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto expected = oracle::unit_sphere(o, oracle::Set(c[i].vector().begin(), c[i].vector().end()));
            CHECK(support::to_oracle(unit_sphere(c, i)) == expected);
        }
    }
}

TEST_CASE("stars, unit spheres and mirrors on the octahedron") {
    const auto oct = catalog_complex("octahedron");
    const auto vertex_link = unit_sphere(oct, Simplex({1}));
    CHECK(f_of(vertex_link) == std::vector<long long>{4, 4});
    // Edge {1,3}: the cofacet apexes are 5 and 6, the link the 4-cycle 1-5-3-6.
    const auto edge_link = unit_sphere(oct, Simplex({1, 3}));
    CHECK(names(edge_link) == std::vector<std::string>{"1", "3", "5", "6", "1,5", "1,6", "3,5", "3,6"});
    const auto facet_link = unit_sphere(oct, Simplex({1, 3, 5}));
    CHECK(f_of(facet_link) == std::vector<long long>{3, 3});
    CHECK(open_star(oct, Simplex({1})).size() == 9);
    CHECK(stable_star(oct, Simplex({1})).size() == 8);
    CHECK_THROWS_AS(open_star(oct, Simplex({1, 2})), Error);

    for (const auto& wall : strata(oct, 1)) CHECK(mirror(oct, wall).size() == 2);
    CHECK(mirror(catalog_complex("path3"), Simplex({1})) == std::vector<VertexId>{2});
    const auto tet = catalog_complex("simplex3");
    for (const auto& wall : strata(tet, 1)) CHECK(mirror(tet, wall).size() == 1);
    CHECK_THROWS_AS(mirror(oct, Simplex({1})), Error);
}

TEST_CASE("complement of a star") {
    const auto oct = catalog_complex("octahedron");
    const auto disk = complement_of_star(oct, Simplex({1}));
    CHECK(f_of(disk) == std::vector<long long>{5, 8, 4});
    CHECK(euler_characteristic(disk) == 1);
    CHECK(complement_of_star(catalog_complex("point"), Simplex({1})).empty());
    const auto k3 = catalog_complex("simplex2");
    CHECK(names(complement_of_star(k3, Simplex({1}))) == std::vector<std::string>{"2", "3", "2,3"});
}

TEST_CASE("barycentric refinement") {
    CHECK(f_of(barycentric(generate_closure({{1, 2}}))) == std::vector<long long>{3, 2});
    for (const char* name : {"octahedron", "rp2", "rp3", "torus13", "path3", "simplex3"}) {
        CAPTURE(name);
        const auto c = catalog_complex(name);
        const auto b = barycentric(c);
        CHECK(f_of(b) == oracle::barycentric_f_vector(support::to_oracle(c)));
        CHECK(euler_characteristic(b) == euler_characteristic(c));
        CHECK(barycentric_size(c) == b.size());
    }
    CHECK(f_of(barycentric(catalog_complex("rp3"))) == std::vector<long long>{182, 1142, 1920, 960});
    CHECK(f_of(barycentric(catalog_complex("octahedron"))) == std::vector<long long>{26, 72, 48});
    CHECK(barycentric(catalog_complex("octahedron"), 2) == barycentric(barycentric(catalog_complex("octahedron"))));
}

TEST_CASE("comparability and dual graphs") {
    const auto oct = catalog_complex("octahedron");
    const Graph dual = dual_graph(oct);
    CHECK(dual.vertices.size() == 8);
    CHECK(dual.edges.size() == 12);
    for (VertexId v : dual.vertices) CHECK(dual.degree(v) == 3);
    const Graph path = dual_graph(catalog_complex("path3"));
    CHECK(path.edges == std::vector<std::pair<VertexId, VertexId>>{{1, 2}, {2, 3}});
    // Whitney of the comparability graph is the refinement.
    CHECK(whitney(comparability_graph(oct)) == barycentric(oct));
    CHECK_THROWS_AS(dual_graph(generate_closure({{1, 2, 3}, {3, 4}})), Error);
}

TEST_CASE("purity") {
    CHECK(is_pure(catalog_complex("octahedron")));
    CHECK_FALSE(is_pure(generate_closure({{1, 2, 3}, {3, 4}})));
    CHECK_FALSE(is_pure(SimplicialComplex{}));
}
