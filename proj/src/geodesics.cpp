// All-pairs BFS and interval tables. The OpenMP kernels parallelise over
// sources; the serial namespace keeps the straight-line versions they are
// tested and benchmarked against.

#include <vector>

#include "geodex/graph.hpp"

namespace geodex {

namespace {

void bfs_row(const Graph& g, Vertex src, std::vector<int>& row) {
    const int n = g.order();
    row.assign(n, DistanceMatrix::kInfinity);
    row[src] = 0;
    VertexSet seen = VertexSet::singleton(src);
    VertexSet frontier = seen;
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        VertexSet next;
        frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
        next -= seen;
        next.for_each([&](Vertex v) { row[v] = depth; });
        seen |= next;
        frontier = next;
    }
}

VertexSet interval_from(const DistanceMatrix& dm, Vertex u, Vertex v) {
    VertexSet out;
    if (!dm.reachable(u, v)) return out;
    const int d = dm(u, v);
    for (Vertex w = 0; w < dm.order(); ++w)
        if (dm.reachable(u, w) && dm.reachable(w, v) && dm(u, w) + dm(w, v) == d) out.insert(w);
    return out;
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm(n);
#pragma omp parallel
    {
        std::vector<int> row;
#pragma omp for schedule(static)
        for (Vertex s = 0; s < n; ++s) {
            bfs_row(g, s, row);
            for (Vertex t = 0; t < n; ++t) dm.at(s, t) = row[t];
        }
    }
    return dm;
}

IntervalTable build_intervals(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.order();
    std::vector<VertexSet> table(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(dynamic, 4)
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u; v < n; ++v) {
            VertexSet s = interval_from(dm, u, v);
            table[static_cast<std::size_t>(u) * n + v] = s;
            table[static_cast<std::size_t>(v) * n + u] = s;
        }
    return IntervalTable(n, std::move(table));
}

namespace serial {

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm(n);
    std::vector<int> row;
    for (Vertex s = 0; s < n; ++s) {
        bfs_row(g, s, row);
        for (Vertex t = 0; t < n; ++t) dm.at(s, t) = row[t];
    }
    return dm;
}

IntervalTable build_intervals(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.order();
    std::vector<VertexSet> table(static_cast<std::size_t>(n) * n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) table[static_cast<std::size_t>(u) * n + v] = interval_from(dm, u, v);
    return IntervalTable(n, std::move(table));
}

}  // namespace serial

}  // namespace geodex
