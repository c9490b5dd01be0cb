#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "geodex/graph.hpp"

namespace geodex {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,leaves}; vertex 0 is the centre.
Graph star_graph(int leaves);
/// K_{m,n}; vertices 0..m-1 form the first part.
Graph complete_bipartite_graph(int m, int n);
/// Product of paths, carrying product metadata.
Graph grid_graph(const std::vector<int>& dims);
Graph petersen_graph();
/// Triangle {0,1,2} with leaf 3 on vertex 0.
Graph paw_graph();
/// Triangles {0,1,2} and {0,3,4} sharing vertex 0.
Graph bowtie_graph();
/// Path 0-1-2-3 with leaf 4 on vertex 1.
Graph fork_tree();

/// Seeded generators. All of them finish with a uniformly random relabelling so
/// that vertex ids carry no structural hint. Same seed, same graph.
using Rng = std::mt19937_64;

/// Random recursive tree: vertex i attaches to a uniform earlier vertex.
Graph random_tree(int n, Rng& rng);
/// Cliques of size 2..5 glued at random existing vertices until n vertices.
Graph random_block_graph(int n, Rng& rng, int min_clique = 2, int max_clique = 5);
/// Cycles of length 3..7 and bridges glued at random existing vertices.
Graph random_cactus(int n, Rng& rng, int min_cycle = 3, int max_cycle = 7);
/// Random tree plus each remaining pair with probability p.
Graph random_connected_graph(int n, double p, Rng& rng);
/// Two random connected graphs identified at one vertex; that vertex is
/// returned through `cut` and is always an articulation point.
Graph random_graph_with_cut_vertex(int n, Rng& rng, Vertex* cut);

/// Named family with parameters, as accepted by the CLI and the service.
struct FamilySpec {
    std::string name;
    int n = 0;
    int m = 0;
    std::vector<int> dims;
    std::uint64_t seed = 1;
};

/// Names: path, cycle, complete, star, complete-bipartite, grid, petersen,
/// paw, bowtie, fork, random-tree, random-block, random-cactus, random.
/// Throws std::invalid_argument on unknown names or bad parameters.
Graph make_family(const FamilySpec& spec);

}  // namespace geodex
