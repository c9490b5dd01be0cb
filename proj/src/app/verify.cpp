#include "geodex/app/verify.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "geodex/closed_forms.hpp"
#include "geodex/decomposition.hpp"
#include "geodex/errors.hpp"
#include "geodex/generators.hpp"

namespace geodex::app {

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json mm = nlohmann::json::array();
    for (const Mismatch& m : mismatches)
        mm.push_back({{"instance", m.instance}, {"expected", m.expected}, {"got", m.got}});
    return {{"family", family},       {"instances", instances},
            {"seed", seed},           {"mismatches", mm},
            {"budget_exceeded", budget_exceeded}, {"elapsed_ms", elapsed_ms}};
}

namespace {

struct Check {
    std::string label;
    std::function<std::string()> expected;  // oracle side
    std::function<std::string()> got;       // solver side
};

void run(VerifyReport& rep, const Check& c) {
    ++rep.instances;
    std::string want;
    try {
        want = c.expected();
    } catch (const BudgetExceeded&) {
        rep.budget_exceeded.push_back(c.label);
        return;
    }
    std::string have;
    try {
        have = c.got();
    } catch (const std::exception& e) {
        have = std::string("error: ") + e.what();
    }
    if (have != want) rep.mismatches.push_back({c.label, want, have});
}

std::string oracle_grundy(const Graph& g, VertexSet s = {}) {
    GameEngine engine(g);
    return std::to_string(engine.grundy(s));
}

std::string oracle_outcome(const Graph& g) {
    GameEngine engine(g);
    return to_string(engine.outcome({}));
}

void random_suite(VerifyReport& rep, const VerifyRequest& req, Graph (*gen)(int, Rng&),
                  GrundyValue (*solver)(const Graph&)) {
    Rng rng(req.seed);
    std::uniform_int_distribution<int> size(1, std::max(1, req.max_n));
    for (int i = 0; i < req.count; ++i) {
        Graph g = gen(size(rng), rng);
        run(rep, {format_graph(g), [&] { return oracle_grundy(g); }, [&] { return std::to_string(solver(g)); }});
    }
}

void closed_form_suite(VerifyReport& rep, int max_n) {
    auto value = [&](std::string label, Graph g, GrundyValue formula) {
        run(rep, {std::move(label), [g] { return oracle_grundy(g); }, [formula] { return std::to_string(formula); }});
    };
    for (int n = 1; n <= std::min(max_n, 14); ++n) value("P" + std::to_string(n), path_graph(n), grundy_path(n));
    for (int n = 3; n <= std::min(max_n, 14); ++n) value("C" + std::to_string(n), cycle_graph(n), grundy_cycle(n));
    for (int n = 1; n <= 10; ++n) value("K" + std::to_string(n), complete_graph(n), grundy_complete(n));
    for (int n = 1; n <= 9; ++n) value("K1," + std::to_string(n), star_graph(n), grundy_star(n));
    for (int m = 2; m <= 10; ++m)
        for (int n = m; m + n <= 12; ++n)
            value("K" + std::to_string(m) + "," + std::to_string(n), complete_bipartite_graph(m, n),
                  grundy_complete_bipartite(m, n));
    for (int n = 3; n <= 13; ++n) {
        Graph c = cycle_graph(n);
        run(rep, {"C" + std::to_string(n) + "+{0}", [c] { return oracle_grundy(c, {0}); },
                  [n] { return std::to_string(grundy_cycle_selected(n)); }});
        for (int d = 1; d <= n / 2; ++d)
            run(rep, {"C" + std::to_string(n) + "+{0," + std::to_string(d) + "}",
                      [c, d] { return oracle_grundy(c, {0, d}); },
                      [n, d] { return std::to_string(grundy_cycle_selected(n, d)); }});
    }
}

void grid_dims(std::vector<int>& dims, int budget, std::vector<std::vector<int>>& out) {
    if (!dims.empty()) out.push_back(dims);
    if (dims.size() == 4) return;
    for (int d = 2; d <= budget; ++d) {
        dims.push_back(d);
        grid_dims(dims, budget / d, out);
        dims.pop_back();
    }
}

void product_suite(VerifyReport& rep) {
    // Grids: dimension lists with at most 16 vertices (factors of size >= 2;
    // size-1 factors are neutral and only repeat smaller grids).
    std::vector<std::vector<int>> all;
    std::vector<int> scratch;
    grid_dims(scratch, 16, all);
    for (const std::vector<int>& dims : all) {
        std::string label = "grid";
        for (int d : dims) label += " " + std::to_string(d);
        run(rep, {label, [dims] { return oracle_outcome(grid_graph(dims)); },
                  [dims] { return std::string(to_string(grid_outcome(dims))); }});
    }

    const std::vector<std::pair<std::string, Graph>> factors = {
        {"P2", path_graph(2)},  {"P3", path_graph(3)},  {"P5", path_graph(5)},
        {"C3", cycle_graph(3)}, {"C5", cycle_graph(5)}, {"K1,2", star_graph(2)},
    };
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i; j < factors.size(); ++j) {
            const auto& [na, a] = factors[i];
            const auto& [nb, b] = factors[j];
            if (a.order() * b.order() > 16) continue;
            run(rep, {na + "x" + nb, [a, b] { return oracle_outcome(cartesian_product({a, b})); },
                      [a, b] {
                          const std::vector<Outcome> o = {outcome_of(GameEngine(a).grundy({})),
                                                          outcome_of(GameEngine(b).grundy({}))};
                          return std::string(to_string(product_outcome(o)));
                      }});
        }
}

GrundyValue tree_solver(const Graph& g) { return solve_tree(g); }
GrundyValue block_solver(const Graph& g) { return solve_block_graph(g); }
GrundyValue cactus_solver(const Graph& g) { return solve_cactus(g); }
Graph block_gen(int n, Rng& rng) { return random_block_graph(n, rng); }
Graph cactus_gen(int n, Rng& rng) { return random_cactus(n, rng); }

}  // namespace

VerifyReport run_verify(const VerifyRequest& req) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.family = req.family;
    rep.seed = req.seed;
    if (req.family == "tree")
        random_suite(rep, req, random_tree, tree_solver);
    else if (req.family == "block")
        random_suite(rep, req, block_gen, block_solver);
    else if (req.family == "cactus")
        random_suite(rep, req, cactus_gen, cactus_solver);
    else if (req.family == "closed-forms")
        closed_form_suite(rep, req.max_n);
    else if (req.family == "product")
        product_suite(rep);
    else
        throw std::invalid_argument("unknown verify family '" + req.family +
                                    "' (tree, block, cactus, closed-forms, product)");
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace geodex::app
