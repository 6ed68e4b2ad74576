#include "diskgeo/catalog.hpp"
#include "diskgeo/error.hpp"
#include "diskgeo/sheets.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace diskgeo;

namespace {

// The bone shown in the projective 3-space figure: five hinging tetrahedra
// with petal numbers (5,5,5,4,4). First such bone in canonical order.
Simplex figure_bone(const SimplicialComplex& rp3) {
    for (const auto& b : rp3.of_dimension(1)) {
        auto petals = local_disk(rp3, b).petal_numbers;
        std::sort(petals.begin(), petals.end());
        if (bone_ring(rp3, b).m == 5 && petals == std::vector<std::size_t>{4, 4, 5, 5, 5}) return b;
    }
    FAIL("no figure bone");
    return Simplex({1});
}

std::set<Rational> value_set(const SectionalSpectrum& s) {
    std::set<Rational> out;
    for (const auto& [v, _] : s.counts) out.insert(v);
    return out;
}

}  // namespace

TEST_CASE("bone rings") {
    const auto ico = catalog_complex("icosahedron");
    for (const auto& v : ico.of_dimension(0)) CHECK(bone_ring(ico, v).m == 5);
    const auto oct = catalog_complex("octahedron");
    const BoneRing r = bone_ring(oct, Simplex({1}));
    CHECK(r.m == 4);
    CHECK(r.ring_vertices.size() == 4);
    for (std::size_t k = 0; k < r.m; ++k) {
        CHECK(r.ring[k].contains(r.ring_vertices[k]));
        CHECK(r.ring[k].contains(r.ring_vertices[(k + 1) % r.m]));
    }
    CHECK_THROWS_AS(bone_ring(oct, Simplex({1, 3})), Error);
    try {
        bone_ring(catalog_complex("simplex2"), Simplex({1}));
        FAIL("expected non_manifold_at_bone");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::non_manifold_at_bone);
    }
}

TEST_CASE("local disks") {
    const auto ico = catalog_complex("icosahedron");
    const SheetPatch p = local_disk(ico, Simplex({1}));
    CHECK(p.petal_numbers == std::vector<std::size_t>(5, 5));
    // Closed star of the vertex plus the stars of its five neighbours.
    CHECK(p.facets.size() == 15);
    CHECK(p.transport_frame.size() == 3);
    CHECK(p.transport_frame.front() == 1);

    const auto rp3 = catalog_complex("rp3");
    const Simplex bone = figure_bone(rp3);
    const SheetPatch q = local_disk(rp3, bone);
    auto petals = q.petal_numbers;
    std::sort(petals.begin(), petals.end());
    CHECK(petals == std::vector<std::size_t>{4, 4, 5, 5, 5});
    CHECK(sectional_curvature(rp3, bone) == Rational(7, 30));
    CHECK_THROWS_AS(local_disk(rp3, bone, {1, 2}), Error);
}

TEST_CASE("sectional curvature values") {
    const auto ico = catalog_complex("icosahedron");
    CHECK(sectional_curvature(ico, Simplex({3})) == Rational(1, 6));
    CHECK(sectional_curvature(catalog_complex("octahedron"), Simplex({2})) == Rational(1, 3));
    const auto rp3 = catalog_complex("rp3");
    for (const auto& b : rp3.of_dimension(1)) {
        const Rational k = sectional_curvature(rp3, b);
        CHECK((k == Rational(1, 5) || k == Rational(7, 30)));
    }
}

TEST_CASE("listing sum agrees with the oracle for every ordering") {
    for (const char* name : {"octahedron", "icosahedron", "rp2", "torus13", "cat11", "rp3"}) {
        CAPTURE(name);
        const auto c = catalog_complex(name);
        const auto o = support::to_oracle(c);
        for (const auto& b : c.of_dimension(c.dimension() - 2)) {
            std::vector<VertexId> ordering = b.vector();
            do {
                const Rational listing = sectional_curvature_listing(c, b, ordering);
                CHECK(listing == oracle::sectional_listing(o, oracle::Set(ordering.begin(), ordering.end())));
                CHECK(listing == sectional_curvature_closed_form(c, b, ordering));
            } while (std::next_permutation(ordering.begin(), ordering.end()));
        }
    }
}

TEST_CASE("on 3-manifolds the value depends on the head vertex only") {
    const auto rp3 = catalog_complex("rp3");
    std::size_t dependent = 0;
    for (const auto& b : rp3.of_dimension(1)) {
        const Rational forward = sectional_curvature(rp3, b, {b[0], b[1]});
        const Rational backward = sectional_curvature(rp3, b, {b[1], b[0]});
        if (forward != backward) ++dependent;
    }
    // Frozen: 30 of the 51 edges of projective 3-space change value with the head.
    CHECK(dependent == 30);
}

TEST_CASE("sectional spectra") {
    const auto oct1 = sectional_spectrum(catalog_complex("octahedron-b1"));
    CHECK(value_set(oct1) == std::set<Rational>{Rational(1, 18), Rational(1, 12), Rational(1, 9)});
    CHECK(oct1.total == 2);

    const auto oct2 = sectional_spectrum(catalog_complex("octahedron-b2"), 4);
    CHECK(value_set(oct2) == std::set<Rational>{Rational(-1, 9), Rational(-1, 72), Rational(0), Rational(1, 72),
                                                Rational(1, 36), Rational(1, 9)});

    const auto torus = sectional_spectrum(catalog_complex("torus13-b2"), 3);
    CHECK(value_set(torus) == std::set<Rational>{Rational(-1, 3), Rational(-1, 36), Rational(0), Rational(1, 36),
                                                 Rational(1, 9)});
    CHECK(torus.total == 0);

    const auto cat3 = sectional_spectrum(catalog_complex("cat3"));
    CHECK(cat3.counts == std::map<Rational, std::size_t>{{Rational(1, 18), 12}, {Rational(1, 12), 8}, {Rational(1, 9), 6}});

    const auto rp3b = sectional_spectrum(catalog_complex("rp3-b1"), 2);
    for (const auto& v : value_set(rp3b))
        CHECK(std::set<Rational>{Rational(1, 9), Rational(1, 6), Rational(2, 9), Rational(1, 3)}.count(v) == 1);

    CHECK_THROWS_AS(sectional_spectrum(catalog_complex("cycle5")), Error);
}

TEST_CASE("spectra do not depend on the thread count") {
    const auto c = catalog_complex("torus13-b1");
    const auto one = sectional_spectrum(c, 1);
    const auto many = sectional_spectrum(c, 7);
    CHECK(one.counts == many.counts);
    CHECK(one.total == many.total);
}

TEST_CASE("growing sheets") {
    const auto ico = catalog_complex("icosahedron");
    const Sheet whole = grow_sheet(ico, Simplex({1}), {}, 1000);
    CHECK(whole.closed);
    CHECK(whole.facet_multiplicity.size() == 20);
    CHECK(whole.patches.size() == 12);

    const Sheet single = grow_sheet(ico, Simplex({1}), {}, 1);
    CHECK_FALSE(single.closed);
    CHECK(single.patches.size() == 1);
    CHECK(single.facet_multiplicity.size() == local_disk(ico, Simplex({1})).facets.size());

    // Frozen from a run to completion at the figure bone.
    const auto rp3 = catalog_complex("rp3");
    const Simplex bone = figure_bone(rp3);
    CHECK(to_string(bone) == "2,8");
    const Sheet sheet = grow_sheet(rp3, bone, {}, 1000);
    CHECK(sheet.closed);
    CHECK(sheet.patches.size() == 51);
    CHECK(sheet.boundary_bones == 0);
    CHECK(sheet.facet_multiplicity.size() == 40);
}
