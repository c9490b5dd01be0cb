#include "geodex/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "geodex/errors.hpp"

namespace geodex {

std::string VertexSet::str() const {
    std::string out = "{";
    bool first = true;
    for_each([&](Vertex v) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > VertexSet::kCapacity)
        throw CapacityError("graph has " + std::to_string(n) + " vertices; capacity is " +
                            std::to_string(VertexSet::kCapacity));
    adj_.assign(n, VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (adj_[u].contains(v)) continue;
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++m_;
    }
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        adj_[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<Vertex>* labels) const {
    std::vector<Vertex> old_of = keep.to_vector();
    std::vector<Vertex> new_of(n_, -1);
    for (std::size_t i = 0; i < old_of.size(); ++i) new_of[old_of[i]] = static_cast<Vertex>(i);
    std::vector<Edge> es;
    for (auto [u, v] : edges())
        if (keep.contains(u) && keep.contains(v)) es.emplace_back(new_of[u], new_of[v]);
    if (labels) *labels = old_of;
    return Graph(static_cast<int>(old_of.size()), es);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
    auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; };
    while (!s.empty() && issp(s.front())) s.remove_prefix(1);
    while (!s.empty() && issp(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> fields(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

int to_int(std::string_view tok, int line) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size() || value < 0)
        throw ParseError("line " + std::to_string(line) + ": expected a nonnegative integer, got '" +
                         std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::optional<int> n;
    std::vector<Edge> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        auto f = fields(line);
        if (!n) {
            if (f.size() != 2 || f[0] != "n")
                throw ParseError("line " + std::to_string(line_no) + ": expected 'n <count>'");
            n = to_int(f[1], line_no);
            if (*n > VertexSet::kCapacity)
                throw CapacityError("graph declares " + std::to_string(*n) + " vertices; capacity is " +
                                    std::to_string(VertexSet::kCapacity));
            continue;
        }
        if (f.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected '<u> <v>'");
        int u = to_int(f[0], line_no);
        int v = to_int(f[1], line_no);
        if (u >= *n || v >= *n)
            throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range for n = " +
                             std::to_string(*n));
        if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
    }
    if (!n) throw ParseError("missing 'n <count>' header");
    return Graph(*n, edges);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string format_graph(const Graph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Structure

VertexSet interval(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v) {
    if (!g.valid(u) || !g.valid(v)) throw std::invalid_argument("interval: vertex out of range");
    if (!dm.reachable(u, v)) throw std::invalid_argument("interval: endpoints in different components");
    VertexSet out;
    const int d = dm(u, v);
    for (Vertex w = 0; w < g.order(); ++w)
        if (dm.reachable(u, w) && dm(u, w) + dm(w, v) == d) out.insert(w);
    return out;
}

VertexSet closure(const IntervalTable& it, const VertexSet& s) {
    VertexSet out = s;
    std::vector<Vertex> members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) out |= it(members[i], members[j]);
    return out;
}

VertexSet simplicial_vertices(const Graph& g, const VertexSet& within) {
    VertexSet out;
    within.for_each([&](Vertex v) {
        VertexSet nb = g.neighbors(v) & within;
        bool clique = true;
        nb.for_each([&](Vertex a) {
            if (clique && !(nb - VertexSet::singleton(a)).is_subset_of(g.neighbors(a))) clique = false;
        });
        if (clique) out.insert(v);
    });
    return out;
}

VertexSet simplicial_vertices(const Graph& g) { return simplicial_vertices(g, g.vertices()); }

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp = VertexSet::singleton(left.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
            next &= within;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

bool is_connected(const Graph& g, const VertexSet& within) {
    return within.empty() || connected_components(g, within).size() == 1;
}

std::vector<VertexSet> branches_at(const Graph& g, const VertexSet& within, Vertex c) {
    return connected_components(g, within - VertexSet::singleton(c));
}

BlockCutTree block_cut_tree(const Graph& g, const VertexSet& within) {
    const int n = g.order();
    BlockCutTree out;
    out.blocks_of.assign(n, {});
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> stack;
    int timer = 0;

    auto emit_block = [&](Vertex u, Vertex v) {
        VertexSet block;
        while (!stack.empty()) {
            Edge e = stack.back();
            stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e == Edge{u, v}) break;
        }
        int idx = static_cast<int>(out.blocks.size());
        out.blocks.push_back(block);
        block.for_each([&](Vertex w) { out.blocks_of[w].push_back(idx); });
    };

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        (g.neighbors(u) & within).for_each([&](Vertex v) {
            if (disc[v] == -1) {
                ++children;
                stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != -1 || children > 1) out.articulation_points.insert(u);
                    emit_block(u, v);
                }
            } else if (v != parent && disc[v] < disc[u]) {
                low[u] = std::min(low[u], disc[v]);
                stack.emplace_back(u, v);
            }
        });
    };

    within.for_each([&](Vertex v) {
        if (disc[v] != -1) return;
        if ((g.neighbors(v) & within).empty()) {
            disc[v] = timer++;
            int idx = static_cast<int>(out.blocks.size());
            out.blocks.push_back(VertexSet::singleton(v));
            out.blocks_of[v].push_back(idx);
            return;
        }
        dfs(v, -1);
    });
    return out;
}

BlockCutTree block_cut_tree(const Graph& g) { return block_cut_tree(g, g.vertices()); }

bool is_clique(const Graph& g, const VertexSet& within) {
    bool ok = true;
    within.for_each([&](Vertex v) {
        if (ok && !(within - VertexSet::singleton(v)).is_subset_of(g.neighbors(v))) ok = false;
    });
    return ok;
}

namespace {

int induced_edges(const Graph& g, const VertexSet& within) {
    int twice = 0;
    within.for_each([&](Vertex v) { twice += (g.neighbors(v) & within).size(); });
    return twice / 2;
}

}  // namespace

bool is_tree(const Graph& g, const VertexSet& within) {
    return !within.empty() && is_connected(g, within) && induced_edges(g, within) == within.size() - 1;
}

bool is_tree(const Graph& g) { return is_tree(g, g.vertices()); }

bool is_cycle(const Graph& g, const VertexSet& within) {
    if (within.size() < 3 || !is_connected(g, within)) return false;
    bool ok = true;
    within.for_each([&](Vertex v) {
        if ((g.neighbors(v) & within).size() != 2) ok = false;
    });
    return ok;
}

bool is_block_graph(const Graph& g) {
    for (const VertexSet& b : block_cut_tree(g).blocks)
        if (!is_clique(g, b)) return false;
    return true;
}

bool is_cactus(const Graph& g) {
    for (const VertexSet& b : block_cut_tree(g).blocks)
        if (b.size() > 2 && !is_cycle(g, b)) return false;
    return true;
}

std::string GraphClassTag::name() const {
    switch (kind) {
        case Kind::Path: return "Path(" + std::to_string(n) + ")";
        case Kind::Cycle: return "Cycle(" + std::to_string(n) + ")";
        case Kind::Complete: return "Complete(" + std::to_string(n) + ")";
        case Kind::Star: return "Star(" + std::to_string(n) + ")";
        case Kind::CompleteBipartite:
            return "CompleteBipartite(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case Kind::Tree: return "Tree";
        case Kind::BlockGraph: return "BlockGraph";
        case Kind::Cactus: return "Cactus";
        case Kind::Grid: {
            std::string s = "Grid(";
            for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
            return s + ")";
        }
        case Kind::General: return "General";
    }
    return "General";
}

namespace {

// Returns the two parts when g is complete bipartite with both parts nonempty.
std::optional<std::pair<VertexSet, VertexSet>> complete_bipartition(const Graph& g) {
    const int n = g.order();
    if (n < 2) return std::nullopt;
    VertexSet a = g.vertices() - g.neighbors(0);
    VertexSet b = g.neighbors(0);
    if (b.empty()) return std::nullopt;
    bool ok = true;
    a.for_each([&](Vertex v) { ok = ok && g.neighbors(v) == b; });
    b.for_each([&](Vertex v) { ok = ok && g.neighbors(v) == a; });
    if (!ok) return std::nullopt;
    return std::make_pair(a, b);
}

bool is_path(const Graph& g) {
    if (!is_tree(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool is_path_factor(const Graph& f) { return f.order() >= 1 && is_path(f); }

}  // namespace

GraphClassTag recognize_family(const Graph& g) {
    using K = GraphClassTag::Kind;
    const int n = g.order();
    if (n == 0 || !is_connected(g, g.vertices()))
        throw std::invalid_argument("recognize_family: graph must be connected and nonempty");
    if (g.size() == n * (n - 1) / 2) return {K::Complete, n, 0, {}};
    if (is_cycle(g, g.vertices())) return {K::Cycle, n, 0, {}};
    if (auto parts = complete_bipartition(g)) {
        int p = parts->first.size(), q = parts->second.size();
        if (p > q) std::swap(p, q);
        if (p == 1) return {K::Star, q, 0, {}};
        return {K::CompleteBipartite, q, p, {}};
    }
    if (is_path(g)) return {K::Path, n, 0, {}};
    if (const ProductInfo* p = g.product()) {
        bool grid = std::all_of(p->factors.begin(), p->factors.end(), is_path_factor);
        if (grid) {
            GraphClassTag t{K::Grid, n, 0, {}};
            for (const Graph& f : p->factors) t.dims.push_back(f.order());
            return t;
        }
    }
    if (is_tree(g)) return {K::Tree, n, 0, {}};
    if (is_block_graph(g)) return {K::BlockGraph, n, 0, {}};
    if (is_cactus(g)) return {K::Cactus, n, 0, {}};
    return {K::General, n, 0, {}};
}

Graph cartesian_product(const std::vector<Graph>& factors) {
    if (factors.empty()) throw std::invalid_argument("cartesian_product: empty factor list");
    long long total = 1;
    for (const Graph& f : factors) {
        if (f.order() == 0) throw std::invalid_argument("cartesian_product: empty factor");
        total *= f.order();
        if (total > VertexSet::kCapacity)
            throw CapacityError("cartesian product exceeds " + std::to_string(VertexSet::kCapacity) + " vertices");
    }
    const int n = static_cast<int>(total);
    const int k = static_cast<int>(factors.size());
    // stride[i] = product of the sizes of factors after i
    std::vector<int> stride(k, 1);
    for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1].order();

    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 0; i < k; ++i) {
            int coord = (v / stride[i]) % factors[i].order();
            factors[i].neighbors(coord).for_each([&](Vertex c2) {
                if (c2 > coord) edges.emplace_back(v, v + (c2 - coord) * stride[i]);
            });
        }
    }
    Graph g(n, edges);
    auto info = std::make_shared<ProductInfo>();
    info->factors = factors;
    g.product_ = std::move(info);
    return g;
}

}  // namespace geodex
