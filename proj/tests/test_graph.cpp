#include <algorithm>

#include "doctest.h"

#include "geodex/errors.hpp"
#include "geodex/generators.hpp"
#include "geodex/graph.hpp"

using namespace geodex;

namespace {

bool has_block(const BlockCutTree& bct, VertexSet b) {
    return std::find(bct.blocks.begin(), bct.blocks.end(), b) != bct.blocks.end();
}

// Every subset of {0..n-1}.
std::vector<VertexSet> subsets(int n) {
    std::vector<VertexSet> out;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        VertexSet s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1U) s.insert(i);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("parse_graph") {
    Graph k2 = parse_graph("n 2\n0 1");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);

    Graph c3 = parse_graph("n 3\n0 1\n1 2\n2 0");
    CHECK(c3 == complete_graph(3));
    CHECK(c3 == cycle_graph(3));

    CHECK_THROWS(parse_graph("n 4\n0 1\n1 1"));
    CHECK_THROWS_AS(parse_graph("n 3\n0 5"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 3\n0 x"), ParseError);
    CHECK_THROWS_AS(parse_graph("0 1"), ParseError);

    // comments, blank lines and duplicate edges
    Graph g = parse_graph("# a path\n\nn 3\n0 1\n1 0\n# mid\n1 2\n");
    CHECK(g.size() == 2);
    CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("capacity is 128 vertices") {
    CHECK_NOTHROW(Graph(128, {}));
    CHECK_THROWS_AS(Graph(129, {}), CapacityError);
    CHECK_THROWS_AS(load_graph("/nonexistent/graph.edges"), ParseError);
}

TEST_CASE("distances") {
    CHECK(all_pairs_distances(path_graph(4))(0, 3) == 3);
    CHECK(all_pairs_distances(cycle_graph(6))(0, 3) == 3);
    Graph two_edges(4, {{0, 1}, {2, 3}});
    DistanceMatrix dm = all_pairs_distances(two_edges);
    CHECK(dm(0, 2) == DistanceMatrix::kInfinity);
    CHECK_FALSE(dm.reachable(1, 3));
    CHECK(dm(2, 3) == 1);
}

TEST_CASE("intervals") {
    Graph c6 = cycle_graph(6), c5 = cycle_graph(5);
    DistanceMatrix d6 = all_pairs_distances(c6), d5 = all_pairs_distances(c5);
    CHECK(interval(c6, d6, 2, 2) == VertexSet{2});
    CHECK(interval(c6, d6, 0, 3) == c6.vertices());
    CHECK(interval(c5, d5, 0, 2) == VertexSet{0, 1, 2});

    Graph two_edges(4, {{0, 1}, {2, 3}});
    DistanceMatrix dm = all_pairs_distances(two_edges);
    CHECK_THROWS_AS(interval(two_edges, dm, 0, 2), std::invalid_argument);
    CHECK(build_intervals(two_edges, dm)(0, 2).empty());
}

TEST_CASE("closure") {
    Graph p4 = path_graph(4);
    IntervalTable it = Geodesics(p4).intervals;
    CHECK(closure(it, {0, 3}) == p4.vertices());
    CHECK(closure(it, {}).empty());
    CHECK(closure(it, {2}) == VertexSet{2});
    CHECK(closure(Geodesics(cycle_graph(5)).intervals, {0, 2}) == VertexSet{0, 1, 2});
}

TEST_CASE("simplicial vertices") {
    CHECK(simplicial_vertices(complete_graph(5)) == VertexSet::range(5));
    CHECK(simplicial_vertices(path_graph(4)) == VertexSet{0, 3});
    CHECK(simplicial_vertices(cycle_graph(5)).empty());
    CHECK(simplicial_vertices(Graph(2, {})) == VertexSet{0, 1});
}

TEST_CASE("block-cut tree") {
    BlockCutTree paw = block_cut_tree(paw_graph());
    CHECK(paw.articulation_points == VertexSet{0});
    CHECK(paw.blocks.size() == 2);
    CHECK(has_block(paw, {0, 1, 2}));
    CHECK(has_block(paw, {0, 3}));

    BlockCutTree c6 = block_cut_tree(cycle_graph(6));
    CHECK(c6.articulation_points.empty());
    CHECK(c6.blocks.size() == 1);

    BlockCutTree p4 = block_cut_tree(path_graph(4));
    CHECK(p4.articulation_points == VertexSet{1, 2});
    CHECK(p4.blocks.size() == 3);
    CHECK(has_block(p4, {0, 1}));
    CHECK(has_block(p4, {1, 2}));
    CHECK(has_block(p4, {2, 3}));
}

TEST_CASE("block-cut tree invariants on random graphs") {
    Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_connected_graph(4 + i % 9, 0.25, rng);
        BlockCutTree bct = block_cut_tree(g);
        for (auto [u, v] : g.edges()) {
            int holding = 0;
            for (const VertexSet& b : bct.blocks) holding += b.contains(u) && b.contains(v);
            CHECK(holding == 1);
        }
        for (Vertex v : g.vertices().to_vector()) {
            const bool cut = connected_components(g, g.vertices() - VertexSet{v}).size() > 1;
            CHECK(cut == bct.articulation_points.contains(v));
        }
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(cycle_graph(5)).size() == 1);
    Graph k3_k2(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    auto comps = connected_components(k3_k2);
    REQUIRE(comps.size() == 2);
    std::vector<int> sizes{comps[0].size(), comps[1].size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{2, 3});
    CHECK(connected_components(Graph(3, {})).size() == 3);
}

TEST_CASE("recognize_family") {
    using K = GraphClassTag::Kind;
    CHECK(recognize_family(cycle_graph(7)) == GraphClassTag{K::Cycle, 7, 0, {}});
    CHECK(recognize_family(paw_graph()).kind == K::BlockGraph);
    CHECK(recognize_family(petersen_graph()).kind == K::General);
    CHECK(recognize_family(complete_graph(3)).kind == K::Complete);
    CHECK(recognize_family(star_graph(4)) == GraphClassTag{K::Star, 4, 0, {}});
    CHECK(recognize_family(complete_bipartite_graph(3, 2)) == GraphClassTag{K::CompleteBipartite, 3, 2, {}});
    CHECK(recognize_family(path_graph(5)).kind == K::Path);
    CHECK(recognize_family(fork_tree()).kind == K::Tree);
    CHECK(recognize_family(grid_graph({2, 3})) == GraphClassTag{K::Grid, 6, 0, {2, 3}});
    Graph c4_pendant(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    CHECK(recognize_family(c4_pendant).kind == K::Cactus);
    CHECK_THROWS_AS(recognize_family(Graph(2, {})), std::invalid_argument);
}

TEST_CASE("cartesian product") {
    Graph c4 = cartesian_product({path_graph(2), path_graph(2)});
    CHECK(recognize_family(c4).kind == GraphClassTag::Kind::Cycle);
    Graph g33 = cartesian_product({path_graph(3), path_graph(3)});
    CHECK(g33.order() == 9);
    CHECK(g33.size() == 12);
    Graph prism = cartesian_product({complete_graph(2), complete_graph(3)});
    CHECK(prism.order() == 6);
    CHECK(prism.size() == 9);
    REQUIRE(prism.product() != nullptr);
    CHECK(prism.product()->factors.size() == 2);
    CHECK_THROWS(cartesian_product({}));
}

TEST_CASE("interval symmetry, endpoints and closure monotonicity") {
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_connected_graph(3 + i % 8, 0.3, rng);
        Geodesics geo(g);
        const int n = g.order();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                CHECK(geo.intervals(u, v) == geo.intervals(v, u));
                CHECK(geo.intervals(u, v).contains(u));
                CHECK(geo.intervals(u, v).contains(v));
                geo.intervals(u, v).for_each([&](Vertex w) {
                    CHECK(geo.distances(u, w) + geo.distances(w, v) == geo.distances(u, v));
                });
            }
        if (n <= 8) {
            const auto all = subsets(n);
            for (const VertexSet& s : all) {
                const VertexSet c = closure(geo.intervals, s);
                CHECK(s.is_subset_of(c));
                for (int v = 0; v < n; ++v) {
                    VertexSet t = s;
                    t.insert(v);
                    CHECK(c.is_subset_of(closure(geo.intervals, t)));
                }
            }
        }
    }
}

TEST_CASE("simplicial vertices are never interior to a geodesic") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_connected_graph(3 + i % 9, 0.35, rng);
        Geodesics geo(g);
        simplicial_vertices(g).for_each([&](Vertex w) {
            for (int u = 0; u < g.order(); ++u)
                for (int v = 0; v < g.order(); ++v)
                    if (u != w && v != w) CHECK_FALSE(geo.intervals(u, v).contains(w));
        });
    }
}

TEST_CASE("product distances add up over the factors") {
    const std::vector<Graph> factors = {path_graph(2), path_graph(3), cycle_graph(3), cycle_graph(4), star_graph(2),
                                        star_graph(3), complete_graph(4)};
    for (const Graph& a : factors)
        for (const Graph& b : factors) {
            Graph p = cartesian_product({a, b});
            DistanceMatrix dp = all_pairs_distances(p), da = all_pairs_distances(a), db = all_pairs_distances(b);
            const int nb = b.order();
            for (int x = 0; x < p.order(); ++x)
                for (int y = 0; y < p.order(); ++y)
                    CHECK(dp(x, y) == da(x / nb, y / nb) + db(x % nb, y % nb));
        }
}

TEST_CASE("product closure is the product of the factor closures") {
    const std::vector<Graph> factors = {path_graph(2), path_graph(3), path_graph(4), cycle_graph(3), cycle_graph(4),
                                        star_graph(3)};
    for (const Graph& a : factors)
        for (const Graph& b : factors) {
            Graph p = cartesian_product({a, b});
            const IntervalTable ip = Geodesics(p).intervals, ia = Geodesics(a).intervals, ib = Geodesics(b).intervals;
            const int nb = b.order();
            for (const VertexSet& s1 : subsets(a.order()))
                for (const VertexSet& s2 : subsets(b.order())) {
                    VertexSet s, expect;
                    s1.for_each([&](Vertex x) { s2.for_each([&](Vertex y) { s.insert(x * nb + y); }); });
                    const VertexSet c1 = closure(ia, s1), c2 = closure(ib, s2);
                    c1.for_each([&](Vertex x) { c2.for_each([&](Vertex y) { expect.insert(x * nb + y); }); });
                    CHECK(closure(ip, s) == expect);
                }
        }
}

TEST_CASE("parallel kernels match the serial references") {
    Rng rng(17);
    for (int i = 0; i < 25; ++i) {
        Graph g = i % 5 == 0 ? Graph(40 + i, {}) : random_connected_graph(10 + 4 * i, 0.08, rng);
        DistanceMatrix par = all_pairs_distances(g), ser = serial::all_pairs_distances(g);
        CHECK(par == ser);
        CHECK(build_intervals(g, par) == serial::build_intervals(g, ser));
    }
}

TEST_CASE("vertex sets") {
    VertexSet s{0, 63, 64, 127};
    CHECK(s.size() == 4);
    CHECK(s.first() == 0);
    CHECK(s.str() == "{0,63,64,127}");
    CHECK((s - VertexSet{0}).first() == 63);
    CHECK(VertexSet::range(128).size() == 128);
    CHECK(VertexSet::range(70).size() == 70);
    CHECK(VertexSet{}.first() == -1);
}
