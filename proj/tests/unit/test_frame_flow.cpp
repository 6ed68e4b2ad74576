#include "diskgeo/catalog.hpp"
#include "diskgeo/error.hpp"
#include "diskgeo/frame_flow.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace diskgeo;

namespace {

std::vector<std::size_t> periods(const OrbitPartition& p) {
    std::vector<std::size_t> out;
    for (const auto& c : p.cycles) out.push_back(c.period);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("steps on small complexes") {
    const FrameFlow triangle(catalog_complex("triangle"));
    CHECK(triangle.step({1, 2}) == Frame{2, 3});
    CHECK(triangle.step({2, 3}) == Frame{3, 1});
    CHECK(triangle.step({3, 1}) == Frame{1, 2});
    CHECK(triangle.step_inverse({2, 3}) == Frame{1, 2});

    const FrameFlow path(catalog_complex("path3"));
    CHECK(path.step({3, 4}) == Frame{4, 3});
    CHECK(path.is_boundary_step({3, 4}));
    CHECK_FALSE(path.is_boundary_step({1, 2}));
    CHECK(path.step_inverse({4, 3}) == Frame{3, 4});
    CHECK(path.wall_map({3, 4}) == Frame{4});

    const FrameFlow tet(catalog_complex("simplex3"));
    CHECK(tet.step({1, 2, 3, 4}) == Frame{2, 3, 4, 1});

    const FrameFlow oct(catalog_complex("octahedron"));
    CHECK(oct.wall_map({1, 3, 5}) == Frame{3, 5});
    CHECK(oct.step({1, 3, 5}) == Frame{3, 5, 2});
    CHECK(triangle.wall_map({1, 2}) == Frame{2});
}

TEST_CASE("invalid frames and unready complexes") {
    const FrameFlow oct(catalog_complex("octahedron"));
    CHECK_THROWS_AS(oct.step({1, 2, 3}), Error);
    CHECK_THROWS_AS(oct.step({1, 3}), Error);
    try {
        FrameFlow book(generate_closure({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}));
        FAIL("expected not_geodesic_ready");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_geodesic_ready);
    }
    CHECK_THROWS_AS(FrameFlow(generate_closure({{1, 2, 3}, {3, 4}})), Error);
}

TEST_CASE("orbits") {
    const FrameFlow path(catalog_complex("path3"));
    const Orbit o = path.orbit({1, 2});
    CHECK(o.period == 6);
    CHECK(o.frames == std::vector<Frame>{{1, 2}, {2, 3}, {3, 4}, {4, 3}, {3, 2}, {2, 1}});
    CHECK(o.boundary_touching);
    CHECK(facet_walk(path, o) == std::vector<VertexId>{1, 2, 3, 3, 2, 1});
    CHECK(path.orbit_complex(o) == catalog_complex("path3"));

    const FrameFlow tet(catalog_complex("simplex3"));
    CHECK(tet.orbit({1, 2, 3, 4}).period == 4);

    const auto c4 = whitney(Graph::make({}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    const FrameFlow circle(c4);
    const Orbit around = circle.orbit({1, 2});
    CHECK(around.period == 4);
    CHECK_FALSE(around.boundary_touching);
    CHECK(euler_characteristic(circle.orbit_complex(around)) == 0);
    CHECK(circle.orbit_complex(around) == c4);
}

TEST_CASE("orbit partitions") {
    const FrameFlow tet(catalog_complex("simplex3"));
    const auto p = tet.orbit_partition();
    CHECK(p.bundle_size == 24);
    CHECK(periods(p) == std::vector<std::size_t>(6, 4));
    CHECK_FALSE(p.ergodic);

    // Frozen from oracle::cycle_lengths: eight cycles of period six.
    const FrameFlow oct(catalog_complex("octahedron"));
    const auto po = oct.orbit_partition();
    CHECK(po.bundle_size == 48);
    CHECK(periods(po) == std::vector<std::size_t>(8, 6));

    const FrameFlow point(catalog_complex("point"));
    CHECK(point.orbit_partition().cycles.size() == 1);
    CHECK(point.orbit_partition().ergodic);
}

TEST_CASE("octahedron orbit complex") {
    // Frozen from the oracle: the orbit of (1,3,5) visits six facets forming an annulus.
    const FrameFlow oct(catalog_complex("octahedron"));
    const auto band = oct.orbit_complex(oct.orbit({1, 3, 5}));
    std::vector<long long> f;
    for (const auto& v : f_vector(band).counts) f.push_back(static_cast<long long>(v));
    CHECK(f == std::vector<long long>{6, 12, 6});
    CHECK(euler_characteristic(band) == 0);
}

TEST_CASE("flow matches the oracle and is a bijection") {
    for (const auto& name : support::small_catalog()) {
        CAPTURE(name);
        const auto c = catalog_complex(name);
        const FrameFlow flow(c);
        const auto facets = oracle::facets(support::to_oracle(c));
        std::set<std::uint64_t> image;
        for (std::uint64_t id = 0; id < flow.bundle_size(); ++id) {
            const Frame f = flow.frame_at(id);
            CHECK(flow.frame_id(f) == id);
            const Frame next = flow.step(f);
            CHECK(next == oracle::step(facets, oracle::Set(f.begin(), f.end())));
            CHECK(flow.step_inverse(next) == f);
            image.insert(flow.frame_id(next));
        }
        CHECK(image.size() == flow.bundle_size());
        std::vector<std::size_t> expected = oracle::cycle_lengths(facets);
        CHECK(periods(flow.orbit_partition()) == expected);
    }
}

TEST_CASE("involution factorization") {
    for (const char* name : {"path3", "cycle5", "octahedron", "rp3", "simplex3"}) {
        CAPTURE(name);
        const FrameFlow flow(catalog_complex(name));
        const auto pair = flow.involution_factorization();
        const auto check = verify_involutions(flow, pair);
        CHECK(check.a_is_involution);
        CHECK(check.b_is_involution);
        CHECK(check.restriction_matches_flow);
    }
    const FrameFlow path(catalog_complex("path3"));
    InvolutionPair broken = path.involution_factorization();
    std::swap(broken.a[0], broken.a[1]);
    CHECK_FALSE(verify_involutions(path, broken).ok());
}

TEST_CASE("frame ids are dense in canonical order") {
    const FrameFlow flow(catalog_complex("triangle"));
    CHECK(flow.frame_at(0) == Frame{1, 2});
    CHECK(flow.frame_at(1) == Frame{2, 1});
    CHECK(flow.frame_at(2) == Frame{1, 3});
    CHECK_THROWS_AS(flow.frame_at(6), Error);
}
