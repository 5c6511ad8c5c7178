#include <doctest.h>

#include <fstream>

#include "chaingraph/reports.hpp"
#include "support/cli_harness.hpp"

using namespace chaingraph;
using fixtures::MockNode;
using fixtures::run_cli;
using fixtures::slurp;
using fixtures::TempDir;

namespace {

struct Workspace {
    TempDir dir{"cli"};
    MockNode node;

    std::string cache() const { return (dir.path() / "cache").string(); }
    std::string out(const std::string& name = "out") const { return (dir.path() / name).string(); }

    std::vector<std::string> args(std::initializer_list<std::string> extra) const {
        std::vector<std::string> a{"--rpc-url", "http://mock", "--cache-dir", cache()};
        a.insert(a.end(), extra.begin(), extra.end());
        return a;
    }
};

/// Ten blocks 200..209; block 200 reproduces the one-block metrics row.
void seed_chain(MockNode& node) {
    node.add(fixtures::block_with_pairs(200, fixtures::table1_row1_pairs(), 1));
    for (int b = 201; b < 210; ++b) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 12; ++i) pairs.emplace_back(b * 3 + i, b * 3 + (i * 7) % 13);
        pairs.emplace_back(0, b);
        node.add(fixtures::block_with_pairs(b, pairs, b % 3));
    }
}

}  // namespace

TEST_CASE("fetch fills the cache once") {
    Workspace w;
    seed_chain(w.node);
    auto cold = run_cli(w.args({"fetch", "--start-block", "200", "--num-blocks", "10"}), &w.node);
    CHECK(cold.code == 0);
    CHECK(cold.out == "10 fetched, 0 cached (10 blocks 200:10)\n");
    auto warm = run_cli(w.args({"fetch", "--start-block", "200", "--num-blocks", "10"}), &w.node);
    CHECK(warm.out == "0 fetched, 10 cached (10 blocks 200:10)\n");
    for (const auto& [n, calls] : w.node.calls()) CHECK(calls == 1);
}

TEST_CASE("fetch resumes a partial range") {
    Workspace w;
    seed_chain(w.node);
    REQUIRE(run_cli(w.args({"fetch", "--snapshot", "200:4"}), &w.node).code == 0);
    auto rest = run_cli(w.args({"fetch", "--snapshot", "200:10"}), &w.node);
    CHECK(rest.out == "6 fetched, 4 cached (10 blocks 200:10)\n");
    CHECK(w.node.calls().size() == 10);
}

TEST_CASE("newest blocks without a start") {
    Workspace w;
    seed_chain(w.node);
    auto r = run_cli(w.args({"fetch", "--num-blocks", "3"}), &w.node);
    CHECK(r.out == "3 fetched, 0 cached (3 blocks 207:3)\n");
}

TEST_CASE("analyze writes the metrics row") {
    Workspace w;
    seed_chain(w.node);
    auto r = run_cli(w.args({"analyze", "--snapshot", "200:1", "--out-dir", w.out(), "--format", "pretty"}), &w.node);
    REQUIRE(r.code == 0);
    auto metrics = fixtures::body_of(slurp(w.out() + "/metrics.csv"));
    CHECK(metrics == std::string(kMetricsHeader) + "\n1,55,40,0,0,15,19,18\n");
    auto distances = fixtures::body_of(slurp(w.out() + "/distances.csv"));
    CHECK(distances.find("19,18,") != std::string::npos);
    CHECK(distances.find(",EXACT,2,EXACT,19,") != std::string::npos);
    auto degree = fixtures::body_of(slurp(w.out() + "/degree.csv"));
    CHECK(degree == "degree,count\n1,46\n2,8\n18,1\n");
    CHECK(r.out.find("# nodes largest comp") != std::string::npos);
    CHECK(r.out.find("wrote ") != std::string::npos);
    auto header = slurp(w.out() + "/metrics.csv");
    CHECK(header.starts_with("# tool chaingraph "));
    CHECK(header.find("# snapshot 200:1\n") != std::string::npos);
    CHECK(slurp(w.out() + "/graph.net").starts_with("% tool chaingraph "));
}

TEST_CASE("analyze rejects an empty range") {
    Workspace w;
    seed_chain(w.node);
    auto r = run_cli(w.args({"analyze", "--start-block", "200", "--num-blocks", "0"}), &w.node);
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(run_cli(w.args({"analyze", "--snapshot", "200:0"}), &w.node).code == 1);
}

TEST_CASE("outputs are identical across runs and thread counts") {
    Workspace w;
    seed_chain(w.node);
    std::vector<std::string> files{"metrics.csv", "degree.csv", "degree_weighted.csv", "degree_loglog.csv",
                                   "distances.csv", "graph.net"};
    std::map<std::string, std::string> first;
    for (const char* threads : {"1", "2", "4"}) {
        std::string out = w.out(std::string("t") + threads);
        auto r = run_cli(w.args({"analyze", "--snapshot", "200:10", "--out-dir", out, "--threads", threads}), &w.node);
        REQUIRE(r.code == 0);
        auto sw = run_cli(w.args({"smallworld", "--snapshot", "200:10", "--out-dir", out, "--threads", threads,
                                  "--trials", "3"}),
                          &w.node);
        REQUIRE(sw.code == 0);
        for (const auto& f : files) {
            auto text = slurp(out + "/" + f);
            if (first.count(f))
                CHECK(text == first[f]);
            else
                first[f] = text;
        }
        auto text = slurp(out + "/smallworld.csv");
        if (first.count("sw"))
            CHECK(text == first["sw"]);
        else
            first["sw"] = text;
    }
}

TEST_CASE("smallworld rows") {
    Workspace w;
    seed_chain(w.node);
    auto r = run_cli(w.args({"smallworld", "--snapshot", "200:1", "--out-dir", w.out()}), &w.node);
    REQUIRE(r.code == 0);
    auto body = fixtures::body_of(slurp(w.out() + "/smallworld.csv"));
    CHECK(body.starts_with(std::string(kSmallWorldHeader) + "\n1,19,18,0,"));
    CHECK(body.find(",0,5,1,EXACT,EXACT\n") != std::string::npos);

    TempDir net_dir("net");
    auto net = net_dir.path() / "k4.net";
    std::ofstream(net) << "*Vertices 4\n*Edges\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
    auto k4 = run_cli({"smallworld", "--input-net", net.string(), "--out-dir", w.out("k4")});
    REQUIRE(k4.code == 0);
    CHECK(fixtures::body_of(slurp(w.out("k4") + "/smallworld.csv")) ==
          std::string(kSmallWorldHeader) + "\n-,4,6,1,1,1,1,1,5,1,EXACT,EXACT\n");
}

TEST_CASE("snapshots") {
    Workspace w;
    seed_chain(w.node);
    auto r = run_cli(w.args({"snapshots", "--snapshot", "200:1", "--snapshot", "201:5", "--out-dir", w.out()}),
                     &w.node);
    REQUIRE(r.code == 0);
    auto body = fixtures::body_of(slurp(w.out() + "/snapshots.csv"));
    CHECK(std::count(body.begin(), body.end(), '\n') == 3);
    CHECK(body.find("\n200,1,55,19,40,18,15,") != std::string::npos);
    CHECK(run_cli(w.args({"snapshots", "--snapshot", "200:1"}), &w.node).code == 1);

    auto partial = run_cli(
        w.args({"snapshots", "--snapshot", "200:1", "--snapshot", "900:2", "--out-dir", w.out("p")}), &w.node);
    CHECK(partial.code == 1);
    auto pbody = fixtures::body_of(slurp(w.out("p") + "/snapshots.csv"));
    CHECK(pbody.find("200,1,55,") != std::string::npos);
    CHECK(pbody.find("900,2,,,,,,,,error: ") != std::string::npos);
}

TEST_CASE("miners command") {
    Workspace w;
    seed_chain(w.node);
    auto r = run_cli(w.args({"miners", "--snapshot", "200:10", "--out-dir", w.out()}), &w.node);
    REQUIRE(r.code == 0);
    auto dist = fixtures::body_of(slurp(w.out() + "/miner_distribution.csv"));
    // miner 1: 200, 202, 205, 208; miner 0: 201, 204, 207; miner 2: 203, 206, 209
    CHECK(dist == "blocks_mined,num_miners\n3,2\n4,1\n");
}

TEST_CASE("export formats") {
    Workspace w;
    seed_chain(w.node);
    REQUIRE(run_cli(w.args({"export", "--snapshot", "200:2", "--out-dir", w.out(), "--format", "pajek"}), &w.node)
                .code == 0);
    REQUIRE(run_cli(w.args({"export", "--snapshot", "200:2", "--out-dir", w.out()}), &w.node).code == 0);
    CHECK(fixtures::body_of(slurp(w.out() + "/graph.net"), '%').starts_with("*Vertices "));
    CHECK(fixtures::body_of(slurp(w.out() + "/edges.csv")).starts_with("src,dst,weight\n"));
}

TEST_CASE("offline miss is an error") {
    Workspace w;
    seed_chain(w.node);
    auto r = run_cli(w.args({"analyze", "--snapshot", "200:2", "--offline", "--out-dir", w.out()}), &w.node);
    CHECK(r.code == 1);
    CHECK(r.err.find("not cached") != std::string::npos);
    CHECK(w.node.total_calls() == 0);
}

TEST_CASE("bad arguments") {
    CHECK(run_cli({}).code != 0);
    CHECK(run_cli({"analyze", "--format", "xml"}).code != 0);
    CHECK(run_cli({"bogus"}).code != 0);
}
