#include "geodex/app/service.hpp"

#include <random>
#include <sstream>

#include "httplib.h"

#include "geodex/errors.hpp"
#include "geodex/generators.hpp"

namespace geodex::app {

struct GameService::Session {
    std::mutex mu;
    std::string id;
    Graph graph;
    std::unique_ptr<GameEngine> engine;
    bool vs_engine = false;
    bool engine_first = false;
    std::vector<Vertex> history;
    VertexSet selected;
    std::chrono::steady_clock::time_point last_used;
};

namespace {

Response error(int status, const std::string& msg) { return {status, json{{"error", msg}}}; }

json to_json(const VertexSet& s) { return s.to_vector(); }

Graph graph_from(const json& body) {
    if (body.contains("graph")) {
        const json& g = body.at("graph");
        std::vector<Edge> edges;
        for (const json& e : g.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges must be [u, v] pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(g.at("n").get<int>(), edges);
    }
    if (body.contains("edges_text")) return parse_graph(body.at("edges_text").get<std::string>());
    if (body.contains("family")) {
        const json& f = body.at("family");
        FamilySpec spec;
        spec.name = f.at("name").get<std::string>();
        spec.n = f.value("n", 0);
        spec.m = f.value("m", 0);
        spec.dims = f.value("dims", std::vector<int>{});
        spec.seed = f.value("seed", std::uint64_t{1});
        return make_family(spec);
    }
    throw std::invalid_argument("body needs one of graph, edges_text, family");
}

}  // namespace

GameService::GameService(ServiceOptions opts) : opts_(opts) {
    id_state_ = opts_.seed ? opts_.seed : (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}();
}

GameService::~GameService() = default;

std::size_t GameService::session_count() {
    std::lock_guard lock(mu_);
    return sessions_.size();
}

std::size_t GameService::expire(std::chrono::steady_clock::time_point now) {
    std::lock_guard lock(mu_);
    std::size_t dropped = 0;
    for (auto it = sessions_.begin(); it != sessions_.end();) {
        // A session busy in another request is still in use.
        std::unique_lock slock(it->second->mu, std::try_to_lock);
        if (slock && now - it->second->last_used > opts_.ttl) {
            slock.unlock();
            it = sessions_.erase(it);
            ++dropped;
        } else {
            ++it;
        }
    }
    return dropped;
}

std::string GameService::fresh_id() {
    // splitmix64; ids only need to be unique and unguessable-ish
    std::uint64_t z = (id_state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << z;
    return os.str();
}

SearchOptions GameService::budgeted() const {
    SearchOptions o;
    o.deadline = std::chrono::steady_clock::now() + opts_.time_budget;
    return o;
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) {
    std::lock_guard lock(mu_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

namespace {

json snapshot(const GameEngine& engine, const std::string& id, bool vs_engine, bool engine_first,
              const std::vector<Vertex>& history, const VertexSet& selected) {
    const Graph& g = engine.graph();
    const VertexSet closed = engine.closure(selected);
    const VertexSet legal = g.vertices() - closed;
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    const bool terminal = legal.empty();
    json out{
        {"id", id},
        {"mode", vs_engine ? "vs-engine" : "two-human"},
        {"n", g.order()},
        {"edges", edges},
        {"selected", to_json(selected)},
        {"covered", to_json(closed - selected)},
        {"legal", to_json(legal)},
        {"history", history},
        {"to_move", static_cast<int>(history.size() % 2) + 1},
        {"terminal", terminal},
        // normal play: whoever moved last wins
        {"winner", terminal && !history.empty() ? json(static_cast<int>((history.size() - 1) % 2) + 1) : json(nullptr)},
    };
    if (vs_engine) out["engine_player"] = engine_first ? 1 : 2;
    return out;
}

}  // namespace

Response GameService::handle(const std::string& method, const std::string& path, const std::string& body) {
    expire();
    std::vector<std::string> parts;
    {
        std::stringstream ss(path);
        std::string piece;
        while (std::getline(ss, piece, '/'))
            if (!piece.empty()) parts.push_back(piece);
    }
    if (parts.empty() || parts[0] != "games") return error(404, "no such route");
    try {
        if (parts.size() == 1 && method == "POST") return create(body);
        if (parts.size() == 2 && method == "GET") return state(parts[1]);
        if (parts.size() == 2 && method == "DELETE") return remove(parts[1]);
        if (parts.size() == 3 && parts[2] == "moves" && method == "POST") return move(parts[1], body);
        if (parts.size() == 3 && parts[2] == "analysis" && method == "GET") return analysis(parts[1]);
    } catch (const BudgetExceeded& e) {
        return error(503, e.what());
    }
    return error(404, "no such route");
}

Response GameService::create(const std::string& body) {
    auto s = std::make_shared<Session>();
    try {
        json req = json::parse(body.empty() ? "{}" : body);
        if (!req.is_object()) return error(422, "body must be a JSON object");
        s->graph = graph_from(req);
        const std::string mode = req.value("mode", std::string("two-human"));
        if (mode != "two-human" && mode != "vs-engine") return error(422, "mode must be two-human or vs-engine");
        s->vs_engine = mode == "vs-engine";
        s->engine_first = s->vs_engine && req.value("engine_first", false);
    } catch (const json::exception& e) {
        return error(422, e.what());
    } catch (const std::exception& e) {  // ParseError, CapacityError, invalid_argument
        return error(422, e.what());
    }
    s->engine = std::make_unique<GameEngine>(s->graph);
    s->last_used = std::chrono::steady_clock::now();

    json extra = json::object();
    if (s->engine_first && !s->engine->is_terminal({})) {
        s->engine->set_deadline(budgeted().deadline);
        Vertex v = *s->engine->best_move({}, PlayoutPolicy::optimal());
        s->history.push_back(v);
        s->selected.insert(v);
        extra["engine_move"] = v;
    }
    {
        std::lock_guard lock(mu_);
        do s->id = fresh_id();
        while (sessions_.count(s->id));
        sessions_.emplace(s->id, s);
    }
    json out = snapshot(*s->engine, s->id, s->vs_engine, s->engine_first, s->history, s->selected);
    out.update(extra);
    return {201, out};
}

Response GameService::state(const std::string& id) {
    auto s = find(id);
    if (!s) return error(404, "unknown session");
    std::lock_guard lock(s->mu);
    s->last_used = std::chrono::steady_clock::now();
    return {200, snapshot(*s->engine, s->id, s->vs_engine, s->engine_first, s->history, s->selected)};
}

Response GameService::remove(const std::string& id) {
    std::lock_guard lock(mu_);
    if (!sessions_.erase(id)) return error(404, "unknown session");
    return {200, json{{"deleted", id}}};
}

Response GameService::move(const std::string& id, const std::string& body) {
    auto s = find(id);
    if (!s) return error(404, "unknown session");
    Vertex v;
    try {
        json req = json::parse(body);
        if (!req.is_object() || !req.contains("vertex") || !req.at("vertex").is_number_integer())
            return error(422, "body must be {\"vertex\": int}");
        v = req.at("vertex").get<Vertex>();
    } catch (const json::exception& e) {
        return error(422, e.what());
    }

    std::lock_guard lock(s->mu);
    s->last_used = std::chrono::steady_clock::now();
    try {
        s->selected = s->engine->apply_move(s->selected, v);
    } catch (const IllegalMove& e) {
        return error(409, e.what());
    }
    s->history.push_back(v);

    json extra = json::object();
    if (s->vs_engine && !s->engine->is_terminal(s->selected)) {
        s->engine->set_deadline(budgeted().deadline);
        std::optional<Vertex> reply;
        try {
            reply = s->engine->best_move(s->selected, PlayoutPolicy::optimal());
        } catch (const BudgetExceeded&) {
            // Keep the human move; the engine owes a reply on the next request.
            s->history.pop_back();
            s->selected.erase(v);
            throw;
        }
        s->history.push_back(*reply);
        s->selected.insert(*reply);
        extra["engine_move"] = *reply;
    }
    json out = snapshot(*s->engine, s->id, s->vs_engine, s->engine_first, s->history, s->selected);
    out.update(extra);
    return {200, out};
}

Response GameService::analysis(const std::string& id) {
    auto s = find(id);
    if (!s) return error(404, "unknown session");
    std::lock_guard lock(s->mu);
    s->last_used = std::chrono::steady_clock::now();
    s->engine->set_deadline(budgeted().deadline);
    AnalysisReport r = s->engine->analyze(s->selected);
    json options = json::array();
    for (auto [v, g] : r.options) options.push_back({{"vertex", v}, {"grundy", g}});
    return {200, json{{"grundy", r.grundy},
                      {"outcome", to_string(r.outcome)},
                      {"options", options},
                      {"best_move", r.best_move ? json(*r.best_move) : json(nullptr)}}};
}

// ---------------------------------------------------------------------------

void mount(httplib::Server& server, GameService& service) {
    auto route = [&service](const httplib::Request& req, httplib::Response& res) {
        Response r = service.handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(r.body.dump(), "application/json; charset=utf-8");
    };
    server.Post(R"(/games.*)", route);
    server.Get(R"(/games.*)", route);
    server.Delete(R"(/games.*)", route);
    server.Options(R"(/games.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
}

int serve(GameService& service, const std::string& host, int port) {
    httplib::Server server;
    mount(server, service);
    return server.listen(host, port) ? 0 : 1;
}

}  // namespace geodex::app
