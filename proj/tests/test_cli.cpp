#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

// end-to-end checks of the command line binary

namespace {
std::pair<int, std::string> run(const std::string& args) {
    std::string cmd = std::string(MOEBIUS_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}
}  // namespace

TEST_CASE("count subcommand prints exact rationals") {
    auto [code, out] = run("count 2 1 4");
    CHECK(code == 0);
    CHECK(out.find("\"1/8\"") != std::string::npos);
    CHECK(out.find("\"3/8\"") != std::string::npos);
    auto [code2, out2] = run("count 0 3 1 1 1");
    CHECK(code2 == 0);
    CHECK(out2.find("\"0\"") != std::string::npos);
}

TEST_CASE("method flag selects the engine and values agree") {
    auto a = run("count 1 3 2 2 2 --method rec");
    auto b = run("count 1 3 2 2 2 --method sym");
    auto c = run("count 1 3 2 2 2 --method direct");
    CHECK(a.first == 0);
    // the \"N\" payloads must agree across engines
    auto payload = [](const std::string& s) {
        size_t at = s.find("\"N\"");
        return s.substr(at, s.find(']', at) - at);
    };
    CHECK(payload(a.second) == payload(b.second));
    CHECK(payload(a.second) == payload(c.second));
}

TEST_CASE("exit codes distinguish failure classes") {
    CHECK(run("count 0 2 1 1").first == 1);                      // precondition
    CHECK(run("enumerate 0 8").first == 2);                      // budget
    CHECK(run("enumerate 0 8 --budget 6 --force-budget").first != 2);
}

TEST_CASE("mon subcommand reads graph files") {
    std::string path = "cli_graph.json";
    {
        std::ofstream f(path);
        f << R"({"faceLabels":[],"pairing":[[0,3],[1,4],[2,5]],"signs":{"0":1,"1":0,"2":1},)"
          << R"("vertices":[[0,1,2],[5,4,3]]})";
    }
    auto [code, out] = run("mon " + path + " --metric 1,1,1");
    CHECK(code == 0);
    CHECK(out.find("\"1/3\"") != std::string::npos);  // (2 b^2 + b)/3
    CHECK(out.find("\"2/3\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("euler table in csv form") {
    auto [code, out] = run("--format csv euler --max-two-g 2 --max-n 3");
    CHECK(code == 0);
    CHECK(out.find("1/2") != std::string::npos);       // chi_{0,3}
    CHECK(out.find("two_g") != std::string::npos);     // header row
}

TEST_CASE("cache admin round trip") {
    auto purge = run("--cache-dir . cache purge");
    CHECK(purge.first == 0);
    auto count = run("--cache-dir . count 2 2 4 4");
    CHECK(count.first == 0);
    auto listed = run("--cache-dir . cache list");
    CHECK(listed.first == 0);
    CHECK(listed.second.find("(2,2;4,4)") != std::string::npos);
    auto verified = run("--cache-dir . cache verify");
    CHECK(verified.first == 0);
    auto again = run("--cache-dir . count 2 2 4 4");
    CHECK(again.second.find("\"N\"") != std::string::npos);
    // purge then recompute gives the identical document
    auto repurge = run("--cache-dir . cache purge");
    CHECK(repurge.first == 0);
    auto fresh = run("--cache-dir . count 2 2 4 4");
    CHECK(fresh.second == again.second);
    run("--cache-dir . cache purge");
}

TEST_CASE("outputs embed config, version and seed") {
    auto [code, out] = run("count 0 3 2 2 2");
    CHECK(out.find("\"version\"") != std::string::npos);
    CHECK(out.find("\"seed\"") != std::string::npos);
    CHECK(out.find("\"config\"") != std::string::npos);
}
