#include "diskgeo/catalog.hpp"
#include "diskgeo/error.hpp"
#include "diskgeo/parallel.hpp"
#include "diskgeo/topology.hpp"

#include <doctest.h>

using namespace diskgeo;

TEST_CASE("contractibility") {
    CHECK(is_contractible(catalog_complex("point")));
    CHECK(is_contractible(catalog_complex("simplex3")));
    CHECK(is_contractible(catalog_complex("path3")));
    CHECK_FALSE(is_contractible(whitney(Graph::make({}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}))));
    CHECK_FALSE(is_contractible(SimplicialComplex{}));
    CHECK_FALSE(is_contractible(generate_closure({{1}, {2}})));
    // Octahedron with one vertex star removed is a disk.
    CHECK(is_contractible(complement_of_star(catalog_complex("octahedron"), Simplex({1}))));
    // χ = 1 without being contractible.
    CHECK_FALSE(is_contractible(catalog_complex("rp2")));
}

TEST_CASE("contractibility witness") {
    Recognizer r;
    std::optional<VertexId> witness;
    CHECK(r.contractible(catalog_complex("path3"), &witness) == Decision::yes);
    REQUIRE(witness.has_value());
    CHECK(*witness >= 1);
    CHECK(*witness <= 4);
}

TEST_CASE("spheres") {
    CHECK(is_sphere(SimplicialComplex{}, -1));
    CHECK_FALSE(is_sphere(catalog_complex("point"), -1));
    CHECK(is_sphere(generate_closure({{1}, {2}}), 0));
    CHECK(is_sphere(catalog_complex("cycle5"), 1));
    CHECK(is_sphere(catalog_complex("octahedron"), 2));
    CHECK(is_sphere(catalog_complex("icosahedron"), 2));
    CHECK_FALSE(is_sphere(catalog_complex("simplex2"), 2));
    CHECK_FALSE(is_sphere(catalog_complex("torus13"), 2));
    CHECK_FALSE(is_sphere(catalog_complex("rp2"), 2));
    for (const char* cat : {"cat3", "cat4", "cat7", "cat11"}) CHECK(is_sphere(catalog_complex(cat), 2));
}

TEST_CASE("manifolds") {
    CHECK(is_manifold(catalog_complex("octahedron"), 2));
    CHECK(is_manifold(catalog_complex("rp3"), 3));
    CHECK(is_manifold(catalog_complex("rp2"), 2));
    CHECK(is_manifold(catalog_complex("torus13"), 2));
    CHECK_FALSE(is_manifold(catalog_complex("path3"), 1));
    CHECK_FALSE(is_manifold(catalog_complex("octahedron"), 3));
    CHECK_FALSE(is_manifold(generate_closure({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}), 2));
}

TEST_CASE("manifold recognition is stable under refinement") {
    for (const char* name : {"octahedron", "icosahedron", "rp2", "rp3"}) {
        CAPTURE(name);
        const auto c = catalog_complex(name);
        const int q = c.dimension();
        CHECK(is_manifold(c, q));
        CHECK(is_manifold(barycentric(c), q));
    }
}

TEST_CASE("size ceiling yields undecided") {
    Recognizer r(RecognitionOptions{false, 10});
    CHECK(r.manifold(catalog_complex("octahedron"), 2) == Decision::undecided);
    CHECK_THROWS_AS(r.first_bad_link(catalog_complex("octahedron"), 2), Error);
    CHECK(to_string(Decision::undecided) == "undecided: too large");
}

TEST_CASE("memo is shared between threads") {
    Recognizer r;
    const auto c = catalog_complex("rp3");
    std::vector<Decision> results(8);
    parallel_for(results.size(), 4, [&](std::size_t i) { results[i] = r.manifold(c, 3); });
    for (auto d : results) CHECK(d == Decision::yes);
    CHECK(r.cache_size() > 0);
}

TEST_CASE("geodesic readiness") {
    const auto oct = geodesic_readiness(catalog_complex("octahedron"));
    CHECK(oct.kind == VerdictKind::geodesic_ready);
    CHECK(oct.wall_census.interior_walls == 12);
    CHECK(oct.wall_census.boundary_walls == 0);

    const auto path = geodesic_readiness(catalog_complex("path3"));
    CHECK(path.kind == VerdictKind::geodesic_ready);
    CHECK(path.wall_census.boundary_walls == 2);
    CHECK(path.wall_census.cofacet_counts.front() == std::pair<Simplex, std::size_t>{Simplex({1}), 1});
    CHECK(path.wall_census.cofacet_counts.back() == std::pair<Simplex, std::size_t>{Simplex({4}), 1});

    const auto book = geodesic_readiness(generate_closure({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}));
    CHECK(book.kind == VerdictKind::none);
    CHECK(book.wall_census.branching_walls == 1);

    CHECK(geodesic_readiness(generate_closure({{1, 2, 3}, {3, 4}})).kind == VerdictKind::none);
}

TEST_CASE("check report") {
    const auto rp3 = check(catalog_complex("rp3"));
    CHECK(rp3.pure);
    CHECK(rp3.manifold == Decision::yes);
    CHECK(rp3.sphere == Decision::no);
    CHECK(rp3.verdict.kind == VerdictKind::manifold);

    const auto oct = check(catalog_complex("octahedron"));
    CHECK(oct.verdict.kind == VerdictKind::sphere);
    CHECK(oct.verdict.witness.has_value());

    const auto path = check(catalog_complex("path3"));
    CHECK(path.verdict.kind == VerdictKind::contractible);
    CHECK(path.boundary_walls == 2);

    const auto fast = check(catalog_complex("torus13"), RecognitionOptions{true, 50'000});
    CHECK(fast.manifold == Decision::yes);
    CHECK_FALSE(fast.higher_link_failure.has_value());
}

TEST_CASE("vertex-link mode agrees with the full check on the catalog") {
    Recognizer fast(RecognitionOptions{true, 50'000});
    Recognizer full;
    for (const char* name : {"octahedron", "rp2", "rp3", "torus13", "path3", "cat11"}) {
        CAPTURE(name);
        const auto c = catalog_complex(name);
        CHECK(fast.manifold(c, c.dimension()) == full.manifold(c, c.dimension()));
    }
    // Two triangles glued to an octahedron edge: the edge has four cofacets.
    const auto c = generate_closure({{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5},
                                     {2, 4, 6}, {1, 3, 7}, {1, 3, 8}});
    CHECK(full.manifold(c, 2) == Decision::no);
    CHECK(fast.manifold(c, 2) == Decision::no);
}
