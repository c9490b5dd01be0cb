#include <thread>

#include "doctest.h"
#include "httplib.h"

#include "geodex/app/service.hpp"
#include "geodex/generators.hpp"

using namespace geodex;
using geodex::app::GameService;
using geodex::app::json;

namespace {

json create(GameService& svc, const json& body, int expect = 201) {
    auto r = svc.handle("POST", "/games", body.dump());
    REQUIRE(r.status == expect);
    return r.body;
}

// Keys every state response carries, with their JSON types.
void check_state_schema(const json& s) {
    CHECK(s.at("id").is_string());
    CHECK(s.at("n").is_number_integer());
    CHECK(s.at("edges").is_array());
    for (const json& e : s.at("edges")) CHECK((e.is_array() && e.size() == 2));
    for (const char* k : {"selected", "covered", "legal", "history"}) {
        CHECK(s.at(k).is_array());
        for (const json& v : s.at(k)) CHECK(v.is_number_integer());
    }
    CHECK(s.at("to_move").is_number_integer());
    CHECK(s.at("terminal").is_boolean());
    CHECK((s.at("winner").is_null() || s.at("winner").is_number_integer()));
    CHECK(s.at("mode").is_string());
}

// The state must match the engine on the position replayed from history.
void check_against_engine(const json& s) {
    std::vector<Edge> edges;
    for (const json& e : s.at("edges")) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    Graph g(s.at("n").get<int>(), edges);
    GameEngine engine(g);
    VertexSet sel;
    for (const json& v : s.at("history")) sel = engine.apply_move(sel, v.get<int>());
    CHECK(VertexSet::from(s.at("selected").get<std::vector<Vertex>>()) == sel);
    CHECK(VertexSet::from(s.at("legal").get<std::vector<Vertex>>()) == engine.legal_moves(sel));
    CHECK(VertexSet::from(s.at("covered").get<std::vector<Vertex>>()) == engine.closure(sel) - sel);
    CHECK(s.at("terminal").get<bool>() == engine.is_terminal(sel));
}

}  // namespace

TEST_CASE("C_6 against the engine ends after its reply") {
    GameService svc;
    json g = create(svc, {{"family", {{"name", "cycle"}, {"n", 6}}}, {"mode", "vs-engine"}});
    check_state_schema(g);
    CHECK(g["legal"].size() == 6);
    const std::string id = g["id"];

    auto r = svc.handle("POST", "/games/" + id + "/moves", R"({"vertex": 0})");
    REQUIRE(r.status == 200);
    CHECK(r.body["engine_move"] == 3);
    CHECK(r.body["terminal"] == true);
    CHECK(r.body["winner"] == 2);
    CHECK(r.body["history"] == json::array({0, 3}));
    check_state_schema(r.body);
    check_against_engine(r.body);
}

TEST_CASE("errors") {
    GameService svc;
    json g = create(svc, {{"graph", {{"n", 3}, {"edges", {{0, 1}, {1, 2}}}}}});
    const std::string id = g["id"];
    CHECK(svc.handle("POST", "/games/" + id + "/moves", R"({"vertex": 0})").status == 200);
    CHECK(svc.handle("POST", "/games/" + id + "/moves", R"({"vertex": 2})").status == 200);
    // covered middle vertex
    CHECK(svc.handle("POST", "/games/" + id + "/moves", R"({"vertex": 1})").status == 409);
    CHECK(svc.handle("POST", "/games/" + id + "/moves", R"({"vertex": 0})").status == 409);
    CHECK(svc.handle("POST", "/games/" + id + "/moves", R"({"vertex": 17})").status == 409);

    CHECK(svc.handle("POST", "/games/" + id + "/moves", R"({"vertex": "zero"})").status == 422);
    CHECK(svc.handle("POST", "/games/" + id + "/moves", R"({"v": 0})").status == 422);
    CHECK(svc.handle("POST", "/games/" + id + "/moves", "not json").status == 422);

    CHECK(svc.handle("GET", "/games/nope", "").status == 404);
    CHECK(svc.handle("POST", "/games/nope/moves", R"({"vertex": 0})").status == 404);
    CHECK(svc.handle("GET", "/games/nope/analysis", "").status == 404);
    CHECK(svc.handle("DELETE", "/games/nope", "").status == 404);
    CHECK(svc.handle("GET", "/elsewhere", "").status == 404);

    CHECK(svc.handle("POST", "/games", "{]").status == 422);
    CHECK(svc.handle("POST", "/games", R"({"graph": {"n": 2, "edges": [[0, 0]]}})").status == 422);
    CHECK(svc.handle("POST", "/games", R"({"graph": {"n": 200, "edges": []}})").status == 422);
    CHECK(svc.handle("POST", "/games", R"({"family": {"name": "nonsense"}})").status == 422);
    CHECK(svc.handle("POST", "/games", R"({"family": {"name": "path", "n": 3}, "mode": "solo"})").status == 422);
    CHECK(svc.handle("POST", "/games", R"({})").status == 422);
}

TEST_CASE("analysis") {
    GameService svc;
    json g = create(svc, {{"family", {{"name", "path"}, {"n", 5}}}});
    auto r = svc.handle("GET", "/games/" + g["id"].get<std::string>() + "/analysis", "");
    REQUIRE(r.status == 200);
    CHECK(r.body["grundy"] == 1);
    CHECK(r.body["outcome"] == "N");
    CHECK(r.body["best_move"] == 2);
    REQUIRE(r.body["options"].size() == 5);
    for (const json& o : r.body["options"]) {
        CHECK(o.at("vertex").is_number_integer());
        CHECK(o.at("grundy").is_number_integer());
    }
}

TEST_CASE("time budget answers 503") {
    app::ServiceOptions opts;
    opts.time_budget = std::chrono::milliseconds(0);
    GameService svc(opts);
    json g = create(svc, {{"family", {{"name", "random"}, {"n", 40}, {"seed", 3}}}});
    CHECK(svc.handle("GET", "/games/" + g["id"].get<std::string>() + "/analysis", "").status == 503);
    // a rejected engine reply leaves the position untouched
    json e = create(svc, {{"family", {{"name", "random"}, {"n", 40}, {"seed", 3}}}, {"mode", "vs-engine"}});
    const std::string id = e["id"];
    CHECK(svc.handle("POST", "/games/" + id + "/moves", R"({"vertex": 0})").status == 503);
    CHECK(svc.handle("GET", "/games/" + id, "").body["history"].empty());
}

TEST_CASE("engine can move first") {
    GameService svc;
    json g = create(svc, {{"family", {{"name", "path"}, {"n", 5}}}, {"mode", "vs-engine"}, {"engine_first", true}});
    CHECK(g["engine_move"] == 2);
    CHECK(g["history"] == json::array({2}));
    CHECK(g["engine_player"] == 1);
    CHECK(g["to_move"] == 2);
}

TEST_CASE("two-human sessions alternate and replay deterministically") {
    GameService svc;
    Rng rng(12);
    for (int round = 0; round < 5; ++round) {
        json g = create(svc, {{"family", {{"name", "random-cactus"}, {"n", 12}, {"seed", round}}}});
        const std::string id = g["id"];
        json s = g;
        for (int step = 0; step < 20 && !s["terminal"].get<bool>(); ++step) {
            const auto legal = s["legal"].get<std::vector<int>>();
            const int v = legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)];
            auto r = svc.handle("POST", "/games/" + id + "/moves", json{{"vertex", v}}.dump());
            REQUIRE(r.status == 200);
            CHECK(r.body["to_move"] == static_cast<int>(r.body["history"].size() % 2) + 1);
            s = svc.handle("GET", "/games/" + id, "").body;
            CHECK(s == r.body);
            check_against_engine(s);
        }
        CHECK(s["terminal"] == true);
    }
}

TEST_CASE("sessions: unique ids, delete, expiry") {
    app::ServiceOptions opts;
    opts.ttl = std::chrono::seconds(60);
    GameService svc(opts);
    std::set<std::string> ids;
    for (int i = 0; i < 50; ++i) ids.insert(create(svc, {{"family", {{"name", "path"}, {"n", 2}}}})["id"]);
    CHECK(ids.size() == 50);
    CHECK(svc.session_count() == 50);

    const std::string gone = *ids.begin();
    CHECK(svc.handle("DELETE", "/games/" + gone, "").status == 200);
    CHECK(svc.handle("GET", "/games/" + gone, "").status == 404);
    CHECK(svc.session_count() == 49);

    CHECK(svc.expire(std::chrono::steady_clock::now()) == 0);
    CHECK(svc.expire(std::chrono::steady_clock::now() + std::chrono::seconds(61)) == 49);
    CHECK(svc.session_count() == 0);
}

TEST_CASE("concurrent sessions") {
    GameService svc;
    std::vector<std::thread> threads;
    std::atomic<int> failures{0};
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] {
            auto r = svc.handle("POST", "/games", json{{"family", {{"name", "cycle"}, {"n", 6 + t}}}, {"mode", "vs-engine"}}.dump());
            if (r.status != 201) ++failures;
            const std::string id = r.body["id"];
            for (int k = 0; k < 4; ++k) {
                auto a = svc.handle("GET", "/games/" + id + "/analysis", "");
                auto s = svc.handle("GET", "/games/" + id, "");
                if (a.status != 200 || s.status != 200) ++failures;
            }
        });
    for (auto& th : threads) th.join();
    CHECK(failures == 0);
}

TEST_CASE("live HTTP round trip") {
    GameService svc;
    httplib::Server server;
    app::mount(server, svc);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread listener([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto created = client.Post("/games", R"({"family": {"name": "cycle", "n": 6}, "mode": "vs-engine"})",
                               "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    CHECK(created->get_header_value("Content-Type").find("application/json") == 0);
    const std::string id = json::parse(created->body)["id"];

    auto moved = client.Post("/games/" + id + "/moves", R"({"vertex": 0})", "application/json");
    REQUIRE(moved);
    CHECK(moved->status == 200);
    json state = json::parse(moved->body);
    CHECK(state["engine_move"] == 3);
    CHECK(state["terminal"] == true);

    auto again = client.Post("/games/" + id + "/moves", R"({"vertex": 1})", "application/json");
    REQUIRE(again);
    CHECK(again->status == 409);

    auto got = client.Get("/games/" + id);
    REQUIRE(got);
    CHECK(json::parse(got->body)["legal"].empty());

    auto missing = client.Get("/games/unknown");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    auto deleted = client.Delete("/games/" + id);
    REQUIRE(deleted);
    CHECK(deleted->status == 200);

    server.stop();
    listener.join();
}
