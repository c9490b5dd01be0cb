#include "geodex/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace geodex {

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

Graph complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite graph needs m, n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) es.emplace_back(i, m + j);
    return Graph(m + n, es);
}

Graph grid_graph(const std::vector<int>& dims) {
    if (dims.empty()) throw std::invalid_argument("grid needs at least one dimension");
    std::vector<Graph> factors;
    for (int d : dims) factors.push_back(path_graph(d));
    return cartesian_product(factors);
}

Graph petersen_graph() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, es);
}

Graph paw_graph() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

Graph bowtie_graph() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}); }

Graph fork_tree() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}}); }

namespace {

Graph relabelled(int n, const std::vector<Edge>& es, Rng& rng) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> out;
    out.reserve(es.size());
    for (auto [u, v] : es) out.emplace_back(perm[u], perm[v]);
    return Graph(n, out);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Graph random_tree(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random tree needs n >= 1");
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.emplace_back(uniform(rng, 0, v - 1), v);
    return relabelled(n, es, rng);
}

Graph random_block_graph(int n, Rng& rng, int min_clique, int max_clique) {
    if (n < 1) throw std::invalid_argument("random block graph needs n >= 1");
    std::vector<Edge> es;
    int count = 1;
    while (count < n) {
        int attach = uniform(rng, 0, count - 1);
        int size = std::min(uniform(rng, min_clique, max_clique), n - count + 1);
        std::vector<Vertex> clique{attach};
        for (int i = 1; i < size; ++i) clique.push_back(count++);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) es.emplace_back(clique[i], clique[j]);
    }
    return relabelled(n, es, rng);
}

Graph random_cactus(int n, Rng& rng, int min_cycle, int max_cycle) {
    if (n < 1) throw std::invalid_argument("random cactus needs n >= 1");
    std::vector<Edge> es;
    int count = 1;
    while (count < n) {
        int attach = uniform(rng, 0, count - 1);
        int room = n - count;  // new vertices still allowed
        bool bridge = room < min_cycle - 1 || uniform(rng, 0, 2) == 0;
        if (bridge) {
            es.emplace_back(attach, count++);
            continue;
        }
        int len = std::min(uniform(rng, min_cycle, max_cycle), room + 1);
        Vertex prev = attach;
        for (int i = 1; i < len; ++i) {
            es.emplace_back(prev, count);
            prev = count++;
        }
        es.emplace_back(prev, attach);
    }
    return relabelled(n, es, rng);
}

Graph random_connected_graph(int n, double p, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.emplace_back(uniform(rng, 0, v - 1), v);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return relabelled(n, es, rng);
}

Graph random_graph_with_cut_vertex(int n, Rng& rng, Vertex* cut) {
    if (n < 3) throw std::invalid_argument("a cut vertex needs n >= 3");
    int left = uniform(rng, 2, n - 1);  // vertices 0..left-1, shared vertex left-1
    int right = n - left + 1;           // vertices left-1..n-1
    std::vector<Edge> es;
    std::bernoulli_distribution coin(0.35);
    auto add_part = [&](int base, int size) {
        for (int v = 1; v < size; ++v) es.emplace_back(base + uniform(rng, 0, v - 1), base + v);
        for (int u = 0; u < size; ++u)
            for (int v = u + 1; v < size; ++v)
                if (coin(rng)) es.emplace_back(base + u, base + v);
    };
    add_part(0, left);
    add_part(left - 1, right);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> out;
    for (auto [u, v] : es) out.emplace_back(perm[u], perm[v]);
    if (cut) *cut = perm[left - 1];
    return Graph(n, out);
}

Graph make_family(const FamilySpec& s) {
    Rng rng(s.seed);
    if (s.name == "path") return path_graph(s.n);
    if (s.name == "cycle") return cycle_graph(s.n);
    if (s.name == "complete") return complete_graph(s.n);
    if (s.name == "star") return star_graph(s.n);
    if (s.name == "complete-bipartite") return complete_bipartite_graph(s.m, s.n);
    if (s.name == "grid") return grid_graph(s.dims);
    if (s.name == "petersen") return petersen_graph();
    if (s.name == "paw") return paw_graph();
    if (s.name == "bowtie") return bowtie_graph();
    if (s.name == "fork") return fork_tree();
    if (s.name == "random-tree") return random_tree(s.n, rng);
    if (s.name == "random-block") return random_block_graph(s.n, rng);
    if (s.name == "random-cactus") return random_cactus(s.n, rng);
    if (s.name == "random") return random_connected_graph(s.n, 0.3, rng);
    throw std::invalid_argument("unknown family '" + s.name + "'");
}

}  // namespace geodex
