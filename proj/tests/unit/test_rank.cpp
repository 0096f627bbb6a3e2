/*
   Copyright 2026 The GRIL Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include "gril/error.hpp"
#include "gril/homology.hpp"
#include "gril/io.hpp"
#include "gril/rank.hpp"
#include "support.hpp"

using namespace gril;
namespace t = gril::testing;

namespace {

BiFiltration cycle_graph() {
    SimplicialComplex cx;
    for (VertexId v : {0U, 1U, 2U}) cx.add(Simplex{v});
    cx.add(Simplex{0, 1});
    cx.add(Simplex{1, 2});
    cx.add(Simplex{0, 2});
    return BiFiltration(cx, GridSpec{4}, std::vector<GridPoint>(6, GridPoint{0, 0}));
}

Region rectangle(GridPoint u, GridPoint v) {
    std::vector<GridPoint> pts;
    for (int x = u.i; x <= v.i; ++x) {
        for (int y = u.j; y <= v.j; ++y) pts.push_back({x, y});
    }
    return Region(pts);
}

}  // namespace

TEST_CASE("homology dimensions of small complexes") {
    auto k2 = t::k2_example();
    CHECK(homology_space(k2, {0, 0}, 0).dimension() == 0);
    CHECK(homology_space(k2, {4, 4}, 0).dimension() == 2);
    CHECK(homology_space(k2, {10, 10}, 0).dimension() == 1);
    auto c3 = cycle_graph();
    CHECK(homology_space(c3, {0, 0}, 1).dimension() == 1);
    CHECK(homology_space(c3, {0, 0}, 0).dimension() == 1);
}

TEST_CASE("homology dimensions agree with the dense reference") {
    t::Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto f = t::random_bifiltration(rng, 10, 6);
        std::vector<Simplex> uni(f.complex().simplices().begin(), f.complex().simplices().end());
        GridPoint u{t::uniform(rng, 0, 6), t::uniform(rng, 0, 6)};
        std::vector<Simplex> present;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (leq(f.value(i), u)) present.push_back(uni[i]);
        }
        for (int d = 0; d <= 2; ++d) {
            CHECK(homology_space(f, u, d).dimension() == t::dense_homology(present, uni, d).basis.size());
        }
    }
}

TEST_CASE("induced maps") {
    auto k2 = t::k2_example();
    auto id = induced_map(k2, {4, 4}, {4, 4}, 0);
    CHECK(id == gf2::Gf2Matrix::identity(2));
    auto merge = induced_map(k2, {4, 4}, {7, 7}, 0);
    CHECK(merge.nrows() == 1);
    CHECK(merge.ncols() == 2);
    CHECK(gf2::rank(merge) == 1);
    CHECK_THROWS_AS((void)induced_map(k2, {5, 5}, {4, 6}, 0), InvalidArgument);
}

TEST_CASE("rectangle ranks on the K2 example") {
    auto k2 = t::k2_example();
    CHECK(rectangle_rank(k2, {4, 4}, {4, 4}, 0) == 2);
    CHECK(rectangle_rank(k2, {3, 3}, {6, 6}, 0) == 1);
    CHECK(rectangle_rank(k2, {0, 0}, {6, 6}, 0) == 0);
    CHECK_THROWS_AS((void)rectangle_rank(k2, {6, 6}, {3, 3}, 0), InvalidArgument);
}

TEST_CASE("restriction to a path") {
    auto k2 = t::k2_example();
    BoundaryPath single{{{4, 4}}, {}};
    auto z = restrict_to_path(k2, single);
    REQUIRE(z.length() == 1);
    CHECK(z.steps[0].op == ZigzagOp::Insert);
    CHECK(z.steps[0].simplices == std::vector<Simplex>{Simplex{0}, Simplex{1}});

    BoundaryPath up{{{5, 6}, {6, 6}}, {Direction::Up}};
    auto zu = restrict_to_path(k2, up);
    REQUIRE(zu.length() == 2);
    CHECK(zu.steps[1].op == ZigzagOp::Insert);
    CHECK(zu.steps[1].simplices == std::vector<Simplex>{Simplex{0, 1}});

    BoundaryPath down{{{6, 6}, {6, 2}}, {Direction::Down}};
    auto zd = restrict_to_path(k2, down);
    CHECK(zd.steps[1].op == ZigzagOp::Delete);
    CHECK(zd.steps[1].simplices == std::vector<Simplex>{Simplex{0, 1}, Simplex{1}});
}

TEST_CASE("compute_rank on the K2 example") {
    auto k2 = t::k2_example();
    CHECK(compute_rank(k2, DiscreteWorm{{4, 4}, 1, 1, GridSpec{10}}, 0) == 2);
    CHECK(compute_rank(k2, DiscreteWorm{{4, 4}, 3, 1, GridSpec{10}}, 0) == 1);
    CHECK(compute_rank(k2, DiscreteWorm{{4, 4}, 1, 1, GridSpec{10}}, 0) ==
          t::region_oracle(k2, worm_region(DiscreteWorm{{4, 4}, 1, 1, GridSpec{10}}), 0));
    CHECK(compute_rank(k2, DiscreteWorm{{4, 4}, 3, 1, GridSpec{10}}, 0) ==
          t::region_oracle(k2, worm_region(DiscreteWorm{{4, 4}, 3, 1, GridSpec{10}}), 0));
    BiFiltration empty(SimplicialComplex{}, GridSpec{10}, {});
    CHECK(compute_rank(empty, DiscreteWorm{{4, 4}, 2, 2, GridSpec{10}}, 0) == 0);
}

TEST_CASE("rank oracle basics") {
    auto k2 = t::k2_example();
    CHECK(rank_oracle(k2, IntervalRegion(Region({{4, 4}})), 0) == 2);
    CHECK(rank_oracle(k2, IntervalRegion(rectangle({3, 3}, {6, 6})), 0) == rectangle_rank(k2, {3, 3}, {6, 6}, 0));
    CHECK_THROWS_AS(IntervalRegion(Region({{1, 1}, {3, 3}})), InvalidArgument);
    CHECK_THROWS_AS(IntervalRegion(Region({{1, 2}, {2, 1}, {2, 2}, {1, 1}, {3, 3}})), InvalidArgument);
}

TEST_CASE("library oracle agrees with the dense reference oracle") {
    t::Rng rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const int M = t::uniform(rng, 2, 8);
        auto f = t::random_bifiltration(rng, 10, M);
        auto w = t::random_worm(rng, M, 3);
        auto region = worm_region(w);
        for (int d = 0; d <= 1; ++d) CHECK(rank_oracle(f, IntervalRegion(region), d) == t::region_oracle(f, region, d));
    }
}

TEST_CASE("compute_rank equals the oracle on random worms") {
    t::Rng rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        const int M = t::uniform(rng, 1, 8);
        auto f = t::random_bifiltration(rng, 10, M);
        auto w = t::random_worm(rng, M, 3);
        auto ranks = compute_ranks(f, w, 1);
        INFO("trial " << trial);
        REQUIRE(ranks[0] == t::worm_oracle(f, w, 0));
        REQUIRE(ranks[1] == t::worm_oracle(f, w, 1));
    }
}

TEST_CASE("rectangles: worm rank equals rectangle rank") {
    t::Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const int M = t::uniform(rng, 2, 8);
        auto f = t::random_bifiltration(rng, 10, M);
        DiscreteWorm w{{t::uniform(rng, 0, M), t::uniform(rng, 0, M)}, t::uniform(rng, 1, M), 1, GridSpec{M}};
        const Region region = t::square_union(w);
        GridPoint lo = region.points().front(), hi = region.points().back();
        CHECK(region == rectangle(lo, hi));
        for (int d = 0; d <= 1; ++d) CHECK(compute_rank(f, w, d) == rectangle_rank(f, lo, hi, d));
    }
}

TEST_CASE("a worm reaching below the square has rank zero") {
    // Vertex at the origin: the clipped region at the corner always holds it.
    auto f = io::parse_bifiltration("bifil 2 8\n0 0 ; 0 0\n");
    CHECK(compute_rank(f, DiscreteWorm{{0, 0}, 1, 1, GridSpec{8}}, 0) == 0);
    CHECK(compute_rank(f, DiscreteWorm{{2, 3}, 2, 1, GridSpec{8}}, 0) == 1);
    CHECK(compute_rank(f, DiscreteWorm{{2, 3}, 3, 1, GridSpec{8}}, 0) == 0);
    CHECK(compute_rank(f, DiscreteWorm{{4, 4}, 2, 2, GridSpec{8}}, 0) == 1);
    CHECK(compute_rank(f, DiscreteWorm{{4, 4}, 3, 2, GridSpec{8}}, 0) == 0);
    CHECK(t::region_oracle(f, worm_region(DiscreteWorm{{0, 0}, 1, 1, GridSpec{8}}), 0) == 1);
}

TEST_CASE("clipping above the square leaves the rank unchanged") {
    t::Rng rng(91);
    for (int trial = 0; trial < 150; ++trial) {
        const int M = t::uniform(rng, 1, 5);
        auto f = t::random_bifiltration(rng, 8, M);
        auto w = t::random_worm(rng, M, 2);
        const Region whole = t::square_union(w, -1, 4 * M);
        for (int d = 0; d <= 1; ++d) CHECK(rank_oracle(f, IntervalRegion(whole), d) == t::worm_oracle(f, w, d));
    }
}

TEST_CASE("rank is antitone along nested worms") {
    t::Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int M = t::uniform(rng, 2, 8);
        auto f = t::random_bifiltration(rng, 10, M);
        auto w = t::random_worm(rng, M, 3);
        DiscreteWorm wider = w;
        wider.width_steps += t::uniform(rng, 1, 3);
        for (int d = 0; d <= 1; ++d) CHECK(compute_rank(f, w, d) >= compute_rank(f, wider, d));
    }
}

TEST_CASE("diagram maps compose") {
    t::Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const int M = t::uniform(rng, 2, 7);
        auto f = t::random_bifiltration(rng, 10, M);
        auto w = t::random_worm(rng, M, 2);
        const int dim = trial % 2;
        PosetDiagram dg(f, IntervalRegion(worm_region(w)), dim);
        auto pts = dg.points();
        for (int s = 0; s < 10; ++s) {
            GridPoint u = pts[static_cast<std::size_t>(t::uniform(rng, 0, static_cast<int>(pts.size()) - 1))];
            GridPoint v = pts[static_cast<std::size_t>(t::uniform(rng, 0, static_cast<int>(pts.size()) - 1))];
            GridPoint x = pts[static_cast<std::size_t>(t::uniform(rng, 0, static_cast<int>(pts.size()) - 1))];
            std::array<GridPoint, 3> tri{u, v, x};
            std::sort(tri.begin(), tri.end());
            if (!leq(tri[0], tri[1]) || !leq(tri[1], tri[2])) continue;
            auto direct = induced_map(f, tri[0], tri[2], dim);
            auto via = induced_map(f, tri[1], tri[2], dim).multiply(induced_map(f, tri[0], tri[1], dim));
            CHECK(direct == via);
            // Lattice paths inside a convex region stay inside it.
            CHECK(dg.composite(tri[0], tri[2]) == direct);
        }
    }
}
