#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "chaingraph/graph.hpp"
#include "chaingraph/pajek.hpp"
#include "support/fixtures.hpp"

using namespace chaingraph;
using fixtures::addr;

namespace {

AccountId label(const char* s) { return AccountId::from_label(s); }

std::vector<BlockRecord> random_blocks(std::uint64_t seed, int nblocks, int accounts) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, accounts - 1), ntx(0, 30);
    std::vector<BlockRecord> out;
    for (int b = 0; b < nblocks; ++b) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0, k = ntx(rng); i < k; ++i) pairs.emplace_back(pick(rng), pick(rng));
        out.push_back(fixtures::block_with_pairs(1000 + b, pairs));
    }
    return out;
}

}  // namespace

TEST_CASE("single transaction") {
    auto b = fixtures::block_with_pairs(1, {{1, 2}});
    auto g = build_graph(std::span(&b, 1));
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    const EdgeData* e = g.edge(0, 1);
    REQUIRE(e);
    CHECK(e->weight == 1);
}

TEST_CASE("both directions pool into one edge") {
    auto b = fixtures::block_with_pairs(1, {{1, 2}, {2, 1}, {1, 2}});
    auto g = build_graph(std::span(&b, 1));
    CHECK(g.edge_count() == 1);
    const EdgeData* e = g.edge(1, 0);
    REQUIRE(e);
    CHECK(e->weight == 3);
    CHECK(e->forward_count + e->reverse_count == 3);
    // addr(1) sorts before addr(2)
    CHECK(e->forward_count == 2);
    CHECK(e->reverse_count == 1);
}

TEST_CASE("self transaction is a loop") {
    auto b = fixtures::block_with_pairs(1, {{4, 4}, {4, 4}});
    auto g = build_graph(std::span(&b, 1));
    CHECK(g.node_count() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(g.loop_count(0) == 2);
    CHECK(g.total_transactions() == 2);
}

TEST_CASE("contract creation gets a synthetic node") {
    BlockRecord b;
    b.number = 1;
    b.hash = fixtures::block_hash(1);
    b.miner = addr(0);
    b.transactions.push_back(fixtures::tx(1, addr(1), std::nullopt));
    b.transactions.push_back(fixtures::tx(2, addr(1), std::nullopt));
    auto g = build_graph(std::span(&b, 1));
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    auto creation = node_for_recipient(b.transactions[0]);
    CHECK(creation.str().starts_with("created!"));
    CHECK(creation.str().size() == 8 + 16);
    CHECK(g.find(creation).has_value());
    CHECK(creation != node_for_recipient(b.transactions[1]));
}

TEST_CASE("addresses are case-folded") {
    auto lower = AccountId::from_address("0xabcdef0000000000000000000000000000000001");
    auto mixed = AccountId::from_address("0xABCdef0000000000000000000000000000000001");
    CHECK(lower == mixed);
    CHECK(AccountId::from_label(lower.str()) == lower);
}

TEST_CASE("graph invariants on random blocks") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto blocks = random_blocks(seed, 8, 25);
        auto g = build_graph(blocks);
        std::uint64_t tx = 0;
        for (const auto& b : blocks) tx += b.transactions.size();
        std::uint64_t weights = 0, loops = 0;
        for (const auto& e : g.edges()) {
            CHECK(e.u < e.v);
            CHECK(e.data.weight == e.data.forward_count + e.data.reverse_count);
            weights += e.data.weight;
        }
        for (NodeId v = 0; v < g.node_count(); ++v) loops += g.loop_count(v);
        CHECK(weights + loops == tx);
        CHECK(g.total_transactions() == tx);

        // Order-insensitive up to node numbering.
        std::vector<TxRecord> all;
        for (const auto& b : blocks) all.insert(all.end(), b.transactions.begin(), b.transactions.end());
        std::mt19937_64 rng(seed);
        std::shuffle(all.begin(), all.end(), rng);
        BlockRecord shuffled = blocks.front();
        shuffled.transactions = all;
        auto h = build_graph(std::span(&shuffled, 1));
        CHECK(fixtures::edge_multiset(g) == fixtures::edge_multiset(h));
        for (const auto& e : g.edges()) {
            auto hu = h.find(g.label(e.u)), hv = h.find(g.label(e.v));
            REQUIRE(hu);
            REQUIRE(hv);
            CHECK(*h.edge(*hu, *hv) == e.data);
        }
    }
}

TEST_CASE("simple projection") {
    auto b = fixtures::block_with_pairs(1, {{1, 2}, {2, 1}, {3, 3}, {2, 3}});
    auto g = build_graph(std::span(&b, 1));
    auto s = project_simple(g);
    CHECK(s.node_count() == 3);
    CHECK(s.edge_count() == 2);
    SimpleGraph dup(4, {{0, 1}, {1, 0}, {2, 2}, {0, 1}, {3, 1}});
    CHECK(dup.edge_count() == 2);
    CHECK(dup.degree(2) == 0);
    CHECK(dup.has_edge(1, 3));
    CHECK_FALSE(dup.has_edge(0, 3));
    CHECK(dup.edge_list() == std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {1, 3}});
}

TEST_CASE("induced subgraph") {
    SimpleGraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    std::vector<NodeId> keep{1, 2, 4};
    auto sub = induced_subgraph(g, keep);
    CHECK(sub.original == keep);
    CHECK(sub.graph.node_count() == 3);
    CHECK(sub.graph.edge_list() == std::vector<std::pair<NodeId, NodeId>>{{0, 1}});
}

TEST_CASE("pajek exact bytes") {
    TransactionGraph g;
    g.add_transactions(label("a"), label("b"), 3);
    std::ostringstream out;
    export_pajek(g, out);
    CHECK(out.str() == "*Vertices 2\n1 \"a\"\n2 \"b\"\n*Edges\n1 2 3\n");

    std::ostringstream empty;
    export_pajek(TransactionGraph{}, empty);
    CHECK(empty.str() == "*Vertices 0\n*Edges\n");
}

TEST_CASE("pajek loops sort first") {
    TransactionGraph g;
    g.add_transactions(label("a"), label("b"), 1);
    g.add_transactions(label("a"), label("a"), 2);
    std::ostringstream out;
    export_pajek(g, out);
    CHECK(out.str() == "*Vertices 2\n1 \"a\"\n2 \"b\"\n*Edges\n1 1 2\n1 2 1\n");
}

TEST_CASE("pajek round trip") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto blocks = random_blocks(seed * 31, 6, 50);
        auto g = build_graph(blocks);
        std::ostringstream out;
        export_pajek(g, out);
        std::istringstream in(out.str());
        auto back = import_pajek(in);
        CHECK(back.node_count() == g.node_count());
        CHECK(fixtures::edge_multiset(back) == fixtures::edge_multiset(g));
        std::ostringstream again;
        export_pajek(back, again);
        CHECK(again.str() == out.str());
    }
}

TEST_CASE("pajek import dialect") {
    std::istringstream in(
        "% comment\n"
        "*Vertices 3\n"
        "1 \"x\"\n"
        "2 y\n"
        "*Edges\n"
        "1 2\n"
        "*Arcs\n"
        "2 1 4\n"
        "3 1 1\n");
    auto g = import_pajek(in);
    CHECK(g.node_count() == 3);
    CHECK(g.label(1).str() == "y");
    CHECK(g.label(2).str() == "3");
    CHECK(g.edge(0, 1)->weight == 5);
    CHECK(g.edge(0, 2)->weight == 1);
}

TEST_CASE("pajek import errors") {
    auto fails = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(import_pajek(in), PajekError);
    };
    fails("*Edges\n1 2 1\n");
    fails("*Vertices x\n");
    fails("*Vertices 2\n*Edges\n1 3 1\n");
    fails("*Vertices 2\n*Edges\n0 1 1\n");
    fails("*Vertices 2\n*Edges\n1 2 0\n");
    fails("*Vertices 2\n*Edges\n1 2 1.5\n");
    fails("*Vertices 2\n*Edges\n1 2 -1\n");
    fails("*Vertices 2\n1 \"a\"\n2 \"a\"\n*Edges\n");
}

TEST_CASE("edge csv") {
    TransactionGraph g;
    g.add_transactions(label("a"), label("b"), 2);
    g.add_transactions(label("b"), label("b"), 1);
    std::ostringstream out;
    export_edge_csv(g, out);
    CHECK(out.str() == "src,dst,weight\na,b,2\nb,b,1\n");
}
