#include "geodex/app/cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "geodex/app/service.hpp"
#include "geodex/app/verify.hpp"
#include "geodex/closed_forms.hpp"
#include "geodex/decomposition.hpp"
#include "geodex/errors.hpp"
#include "geodex/generators.hpp"

namespace geodex::app {

namespace {

struct Source {
    std::string input;
    std::string family;
    int n = 0;
    int m = 0;
    std::vector<int> dims;
    std::uint64_t seed = 1;

    Graph load() const {
        if (!input.empty()) return load_graph(input);
        if (family.empty()) throw std::invalid_argument("give --input or --family");
        return make_family({family, n, m, dims, seed});
    }
};

void add_source(CLI::App* cmd, Source& src) {
    cmd->add_option("--input", src.input, "Edge-list file");
    cmd->add_option("--family", src.family,
                    "path, cycle, complete, star, complete-bipartite, grid, petersen, paw, bowtie, fork, "
                    "random-tree, random-block, random-cactus, random");
    cmd->add_option("--n", src.n, "Family size (star: leaves; complete-bipartite: second part)");
    cmd->add_option("--m", src.m, "First part of complete-bipartite");
    cmd->add_option("--dims", src.dims, "Grid dimensions, e.g. 3,5")->delimiter(',');
    cmd->add_option("--seed", src.seed, "Seed for random families");
}

double ms_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

int do_solve(const Source& src, const std::string& solver, bool as_json, std::ostream& out) {
    Graph g = src.load();
    const auto start = std::chrono::steady_clock::now();
    SolveResult r = solve_with(g, solver);
    const double elapsed = ms_since(start);
    if (as_json) {
        nlohmann::json j{{"n", g.order()},
                         {"grundy", r.grundy ? nlohmann::json(*r.grundy) : nlohmann::json(nullptr)},
                         {"outcome", to_string(r.outcome)},
                         {"solver_used", r.solver},
                         {"elapsed_ms", elapsed}};
        out << j.dump() << "\n";
    } else {
        out << "n " << g.order() << "\n";
        out << "grundy " << (r.grundy ? std::to_string(*r.grundy) : "-") << "\n";
        out << "outcome " << to_string(r.outcome) << "\n";
        out << "solver " << r.solver << "\n";
        out << "elapsed_ms " << std::fixed << std::setprecision(3) << elapsed << "\n";
    }
    return 0;
}

int do_verify(const VerifyRequest& req, bool as_json, std::ostream& out) {
    VerifyReport rep = run_verify(req);
    if (as_json) {
        out << rep.to_json().dump() << "\n";
    } else {
        out << "family " << rep.family << "  instances " << rep.instances << "  seed " << rep.seed << "  mismatches "
            << rep.mismatches.size() << "  budget_exceeded " << rep.budget_exceeded.size() << "  elapsed_ms "
            << std::fixed << std::setprecision(1) << rep.elapsed_ms << "\n";
        for (const Mismatch& m : rep.mismatches)
            out << "MISMATCH expected " << m.expected << " got " << m.got << "\n" << m.instance << "\n";
    }
    return rep.ok() ? 0 : 1;
}

// Smallest meaningful parameter per family.
int family_floor(const std::string& name) {
    if (name == "cycle") return 3;
    if (name == "complete-bipartite") return 2;
    return 1;
}

int do_table(Source src, int min_n, int max_n, std::ostream& out) {
    if (min_n <= 0) min_n = family_floor(src.family);
    if (src.family == "complete-bipartite" && src.m == 0) src.m = 2;
    out << "param,grundy\n";
    for (int n = min_n; n <= max_n; ++n) {
        src.n = n;
        SolveResult r = solve_auto(src.load());
        GrundyValue g = r.grundy ? *r.grundy : GameEngine(src.load()).grundy({});
        out << n << "," << g << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed geodetic game solvers"};
    app.require_subcommand(1);

    Source src;
    std::string solver = "auto";
    bool as_json = false;
    CLI::App* solve = app.add_subcommand("solve", "Grundy value and outcome of a graph");
    add_source(solve, src);
    solve->add_option("--solver", solver, "auto, brute, tree, block, cactus, closed-form")
        ->check(CLI::IsMember({"auto", "brute", "tree", "block", "cactus", "closed-form"}));
    solve->add_flag("--json", as_json, "JSON output");

    VerifyRequest vreq;
    CLI::App* verify = app.add_subcommand("verify", "Compare a solver with the exhaustive search");
    verify->add_option("--family", vreq.family, "tree, block, cactus, closed-forms, product")
        ->required()
        ->check(CLI::IsMember({"tree", "block", "cactus", "closed-forms", "product"}));
    verify->add_option("--count", vreq.count, "Random instances");
    verify->add_option("--max-n", vreq.max_n, "Largest instance");
    verify->add_option("--seed", vreq.seed, "Generator seed");
    verify->add_flag("--json", as_json, "JSON output");

    Source tsrc;
    int min_n = 0, max_n = 10;
    CLI::App* table = app.add_subcommand("table", "CSV of Grundy values along a family");
    table->add_option("--family", tsrc.family, "Family name")->required();
    table->add_option("--m", tsrc.m, "Fixed first part for complete-bipartite");
    table->add_option("--seed", tsrc.seed, "Seed for random families");
    table->add_option("--min-n", min_n, "First parameter (default: family minimum)");
    table->add_option("--max-n", max_n, "Last parameter");

    std::string host = "127.0.0.1";
    int port = 8080;
    int ttl = 3600, budget_ms = 10'000;
    CLI::App* serve_cmd = app.add_subcommand("serve", "HTTP/JSON game service");
    serve_cmd->add_option("--port", port, "Port");
    serve_cmd->add_option("--host", host, "Bind address");
    serve_cmd->add_option("--ttl", ttl, "Idle session lifetime in seconds");
    serve_cmd->add_option("--budget-ms", budget_ms, "Per-request solver budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (*solve) return do_solve(src, solver, as_json, out);
        if (*verify) return do_verify(vreq, as_json, out);
        if (*table) return do_table(tsrc, min_n, max_n, out);
        if (*serve_cmd) {
            ServiceOptions opts;
            opts.ttl = std::chrono::seconds(ttl);
            opts.time_budget = std::chrono::milliseconds(budget_ms);
            GameService service(opts);
            err << "listening on " << host << ":" << port << "\n";
            return serve(service, host, port);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace geodex::app
