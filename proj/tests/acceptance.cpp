// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "geodex/closed_forms.hpp"
#include "geodex/decomposition.hpp"
#include "geodex/game.hpp"
#include "geodex/generators.hpp"

using namespace geodex;

namespace {

int failures = 0;
std::string detail;  // set by a criterion body to explain a failure

void criterion(const char* name, double limit_s, const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    detail.clear();
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && s >= limit_s) {
        ok = false;
        note += " over time limit";
    }
    if (!ok && !detail.empty()) note += " " + detail;
    if (!ok) ++failures;
    std::printf("%s  %-38s %8.3f s%s\n", ok ? "PASS" : "FAIL", name, s, note.c_str());
    std::fflush(stdout);
}

GrundyValue oracle(const Graph& g, VertexSet s = {}) { return GameEngine(g).grundy(s); }
Outcome oracle_outcome(const Graph& g) { return outcome_of(oracle(g)); }

std::vector<VertexSet> subsets(int n) {
    std::vector<VertexSet> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) s.insert(v);
        out.push_back(s);
    }
    return out;
}

VertexSet product_set(const VertexSet& a, const VertexSet& b, int nb) {
    VertexSet s;
    a.for_each([&](Vertex x) { b.for_each([&](Vertex y) { s.insert(x * nb + y); }); });
    return s;
}

}  // namespace

int main() {
    criterion("paths", 10, [] {
        for (int n = 1; n <= 14; ++n)
            if (oracle(path_graph(n)) != static_cast<GrundyValue>(n % 2)) return false;
        return true;
    });

    criterion("cycles", 30, [] {
        for (int n = 3; n <= 14; ++n)
            if (oracle(cycle_graph(n)) != static_cast<GrundyValue>(n % 2)) return false;
        for (int k = 2; k <= 7; ++k)
            if (oracle(cycle_graph(2 * k), {0}) != static_cast<GrundyValue>(k)) return false;
        for (int k = 1; k <= 6; ++k)
            if (oracle(cycle_graph(2 * k + 1), {0}) != 0) return false;
        for (int n = 4; n <= 13; ++n)
            for (int d = 1; d <= n / 2; ++d) {
                const auto expect = static_cast<GrundyValue>((n + 1) / 2 - d);
                if (oracle(cycle_graph(n), {0, d}) != expect || grundy_cycle_selected(n, d) != expect) return false;
            }
        return true;
    });

    criterion("complete, star, bipartite", 0, [] {
        for (int n = 1; n <= 10; ++n)
            if (oracle(complete_graph(n)) != static_cast<GrundyValue>(n % 2) || grundy_complete(n) != n % 2u)
                return false;
        for (int n = 1; n <= 9; ++n)
            if (oracle(star_graph(n)) != static_cast<GrundyValue>(1 - n % 2) || grundy_star(n) != 1u - n % 2)
                return false;
        for (int m = 2; m <= 10; ++m)
            for (int n = 2; m + n <= 12; ++n) {
                const GrundyValue v = oracle(complete_bipartite_graph(m, n));
                if (v != grundy_complete_bipartite(m, n) || (v != 0 && v != 2)) return false;
            }
        return true;
    });

    criterion("five-vertex tree fixture is P", 0, [] { return oracle_outcome(fork_tree()) == Outcome::P; });

    criterion("grids", 60, [] {
        std::vector<std::vector<int>> all;
        for (int a = 1; a <= 16; ++a) {
            all.push_back({a});
            for (int b = 1; a * b <= 16; ++b) {
                all.push_back({a, b});
                for (int c = 1; a * b * c <= 16; ++c) {
                    all.push_back({a, b, c});
                    for (int d = 1; a * b * c * d <= 16; ++d) all.push_back({a, b, c, d});
                }
            }
        }
        for (const auto& dims : all)
            if (oracle_outcome(grid_graph(dims)) != grid_outcome(dims)) return false;
        const std::vector<int> d33{3, 3}, d25{2, 5}, d35{3, 5}, d222{2, 2, 2};
        return grid_outcome(d33) == Outcome::N && grid_outcome(d25) == Outcome::P &&
               grid_outcome(d35) == Outcome::N && grid_outcome(d222) == Outcome::P;
    });

    criterion("product outcomes, distances, closure", 0, [] {
        const std::vector<std::pair<std::string, Graph>> factors = {
            {"P2", path_graph(2)},  {"P3", path_graph(3)},  {"P5", path_graph(5)},
            {"C3", cycle_graph(3)}, {"C5", cycle_graph(5)}, {"K1,2", star_graph(2)}};
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t j = i; j < factors.size(); ++j) {
                const Graph &a = factors[i].second, &b = factors[j].second;
                if (a.order() * b.order() > 16) continue;
                const std::vector<Outcome> parts{oracle_outcome(a), oracle_outcome(b)};
                const Outcome got = oracle_outcome(cartesian_product({a, b}));
                if (got != product_outcome(parts))
                    detail += factors[i].first + "x" + factors[j].first + " is " + to_string(got) + ", rule says " +
                              to_string(product_outcome(parts)) + "; ";
            }
        bool laws = true;
        const std::vector<Graph> small = {path_graph(2), path_graph(3), path_graph(4), cycle_graph(3),
                                          cycle_graph(4), star_graph(2), star_graph(3), complete_graph(4)};
        for (const Graph& a : small)
            for (const Graph& b : small) {
                Graph p = cartesian_product({a, b});
                const Geodesics gp(p), ga(a), gb(b);
                const int nb = b.order();
                for (int x = 0; x < p.order(); ++x)
                    for (int y = 0; y < p.order(); ++y)
                        if (gp.distances(x, y) != ga.distances(x / nb, y / nb) + gb.distances(x % nb, y % nb))
                            laws = false;
                for (const VertexSet& s1 : subsets(a.order()))
                    for (const VertexSet& s2 : subsets(b.order()))
                        if (closure(gp.intervals, product_set(s1, s2, nb)) !=
                            product_set(closure(ga.intervals, s1), closure(gb.intervals, s2), nb))
                            laws = false;
            }
        if (!laws) detail += "product distance or closure law violated";
        return detail.empty();
    });

    criterion("decomposition solvers", 0, [] {
        Rng rng(2024);
        for (int i = 0; i < 100; ++i) {
            Graph t = random_tree(1 + i % 14, rng);
            if (solve_tree(t) != oracle(t)) return false;
        }
        for (int i = 0; i < 100; ++i) {
            Graph b = random_block_graph(1 + i % 14, rng);
            if (solve_block_graph(b) != oracle(b)) return false;
        }
        for (int i = 0; i < 100; ++i) {
            Graph c = random_cactus(1 + i % 14, rng);
            if (solve_cactus(c) != oracle(c)) return false;
        }
        const Graph paw = paw_graph(), bowtie = bowtie_graph();
        return solve_block_graph(paw) == 0 && solve_cactus(paw) == 0 && oracle(paw) == 0 &&
               solve_block_graph(bowtie) == 1 && solve_cactus(bowtie) == 1 && oracle(bowtie) == 1;
    });

    criterion("lemma suites", 0, [] {
        Rng rng(99);
        for (int i = 0; i < 1000; ++i) {
            Graph g = random_connected_graph(1 + i % 10, 0.3, rng);
            GameEngine engine(g);
            const auto moves = engine.playout({}, PlayoutPolicy::random(i));
            if (!simplicial_vertices(g).is_subset_of(VertexSet::from(moves))) return false;
        }
        for (int i = 0; i < 100; ++i) {
            Vertex cut = -1;
            Graph g = random_graph_with_cut_vertex(3 + i % 8, rng, &cut);
            GrundyValue parts = 0;
            for (const ComponentPosition& p : split_at_selected_articulation(g, cut).parts) {
                std::vector<Vertex> labels;
                Graph h = g.induced(p.vertices, &labels);
                const auto local = static_cast<Vertex>(std::find(labels.begin(), labels.end(), cut) - labels.begin());
                parts ^= oracle(h, {local});
            }
            if (parts != oracle(g, {cut})) return false;
        }
        return nim_sum({7, 10}) == 13;
    });

    criterion("path claims", 0, [] {
        for (int m = 0; m <= 3; ++m) {
            const int n = 4 * m + 2;
            if (oracle(path_graph(n), {2 * m}) != 1) return false;
        }
        for (int n = 2; n <= 12; ++n)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (oracle(path_graph(n), {i, j}) != oracle(path_graph(n - (j - i)), {i})) return false;
        return true;
    });

    std::printf("%d failed\n", failures);
    return failures == 0 ? 0 : 1;
}
