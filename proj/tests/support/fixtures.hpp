#pragma once

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "chaingraph/block.hpp"
#include "chaingraph/block_cache.hpp"
#include "chaingraph/block_json.hpp"
#include "chaingraph/errors.hpp"
#include "chaingraph/graph.hpp"
#include "chaingraph/hex.hpp"
#include "chaingraph/rpc_client.hpp"

namespace fixtures {

using namespace chaingraph;

inline std::string hex_of(std::uint64_t v, std::size_t digits) {
    std::string s(digits, '0');
    for (std::size_t i = 0; i < digits && v; ++i, v >>= 4) s[digits - 1 - i] = "0123456789abcdef"[v & 0xf];
    return s;
}

/// Deterministic distinct address for an integer id.
inline AccountId addr(std::uint64_t i) { return AccountId::from_address("0x" + hex_of(i + 1, 40)); }

inline std::string tx_hash(std::uint64_t i) { return "0x" + hex_of(0x9000000000000000ull ^ i, 16) + std::string(48, '0'); }

inline std::string block_hash(std::uint64_t n) { return "0x" + hex_of(0xb10c000000000000ull + n, 64); }

inline TxRecord tx(std::uint64_t id, const AccountId& from, std::optional<AccountId> to, std::uint64_t value = 1) {
    return TxRecord{tx_hash(id), from, std::move(to), Wei(value)};
}

/// Block whose transactions are the given (from, to) id pairs.
inline BlockRecord block_with_pairs(std::uint64_t number, const std::vector<std::pair<int, int>>& pairs,
                                    std::uint64_t miner = 999) {
    BlockRecord b;
    b.number = number;
    b.hash = block_hash(number);
    b.timestamp = 1'500'000'000 + number * 14;
    b.miner = addr(miner);
    std::uint64_t k = number * 100000;
    for (auto [f, t] : pairs) b.transactions.push_back(tx(k++, addr(f), addr(t)));
    return b;
}

/// A forest reproducing the 1-block row of the general-metrics table:
/// 55 nodes, 40 edges, 15 components, largest a 19-node star (18 edges).
/// The rest: 10 isolated pairs and 4 four-node paths.
inline std::vector<std::pair<int, int>> table1_row1_pairs() {
    std::vector<std::pair<int, int>> p;
    int next = 0;
    int hub = next++;
    for (int i = 0; i < 18; ++i) p.emplace_back(hub, next++);
    for (int i = 0; i < 10; ++i) {
        p.emplace_back(next, next + 1);
        next += 2;
    }
    for (int i = 0; i < 4; ++i) {
        p.emplace_back(next, next + 1);
        p.emplace_back(next + 2, next + 1);
        p.emplace_back(next + 2, next + 3);
        next += 4;
    }
    return p;
}

inline SimpleGraph star(std::size_t leaves) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return SimpleGraph(leaves + 1, e);
}

inline SimpleGraph path(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return SimpleGraph(n, e);
}

inline SimpleGraph complete(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return SimpleGraph(n, e);
}

/// Ring lattice (each node linked to k/2 neighbors per side) with a fraction
/// of edges rewired to random targets.
inline SimpleGraph watts_strogatz(std::size_t n, std::size_t k, double rewire, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<NodeId> pick(0, NodeId(n - 1));
    std::set<std::pair<NodeId, NodeId>> edges;
    auto norm = [](NodeId a, NodeId b) { return a < b ? std::pair(a, b) : std::pair(b, a); };
    for (NodeId v = 0; v < n; ++v)
        for (std::size_t j = 1; j <= k / 2; ++j) edges.insert(norm(v, NodeId((v + j) % n)));
    std::vector<std::pair<NodeId, NodeId>> list(edges.begin(), edges.end());
    for (auto& e : list) {
        if (coin(rng) >= rewire) continue;
        for (int tries = 0; tries < 32; ++tries) {
            NodeId t = pick(rng);
            auto cand = norm(e.first, t);
            if (t == e.first || edges.count(cand)) continue;
            edges.erase(norm(e.first, e.second));
            edges.insert(cand);
            e = cand;
            break;
        }
    }
    return SimpleGraph(n, std::vector<std::pair<NodeId, NodeId>>(edges.begin(), edges.end()));
}

/// JSON-RPC response body a node would send for `block`.
inline std::string response_body(const BlockRecord& block) {
    nlohmann::json doc = {{"jsonrpc", "2.0"}, {"id", block.number}, {"result", block_to_json(block)}};
    return doc.dump();
}

/// In-memory node: serves a fixed set of blocks and counts requests per height.
class MockNode final : public RpcTransport {
  public:
    void add(const BlockRecord& b) {
        std::lock_guard lock(mu_);
        blocks_[b.number] = b;
        head_ = std::max(head_, b.number);
    }
    /// The next `n` requests fail with a TransportError.
    void fail_next(int n) { failures_ = n; }
    void set_rpc_error(bool on) { rpc_error_ = on; }

    std::string post(const std::string& body) override {
        auto req = nlohmann::json::parse(body);
        std::lock_guard lock(mu_);
        ++total_calls_;
        if (failures_ > 0) {
            --failures_;
            throw TransportError("simulated timeout");
        }
        if (rpc_error_)
            return R"({"jsonrpc":"2.0","id":1,"error":{"code":-32005,"message":"rate limited"}})";
        if (req["method"] == "eth_blockNumber")
            return nlohmann::json{{"jsonrpc", "2.0"}, {"id", req["id"]}, {"result", hex::encode_quantity(head_)}}.dump();
        std::uint64_t n = std::stoull(req["params"][0].get<std::string>(), nullptr, 16);
        ++calls_[n];
        auto it = blocks_.find(n);
        if (it == blocks_.end()) return R"({"jsonrpc":"2.0","id":1,"result":null})";
        return response_body(it->second);
    }

    std::map<std::uint64_t, int> calls() const {
        std::lock_guard lock(mu_);
        return calls_;
    }
    int total_calls() const {
        std::lock_guard lock(mu_);
        return total_calls_;
    }

  private:
    mutable std::mutex mu_;
    std::map<std::uint64_t, BlockRecord> blocks_;
    std::map<std::uint64_t, int> calls_;
    std::uint64_t head_ = 0;
    int total_calls_ = 0;
    std::atomic<int> failures_{0};
    bool rpc_error_ = false;
};

/// Temporary directory removed on scope exit.
class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("chaingraph-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Strips leading comment lines (the provenance header).
inline std::string body_of(const std::string& text, char marker = '#') {
    std::istringstream in(text);
    std::string line, out;
    bool header = true;
    while (std::getline(in, line)) {
        if (header && !line.empty() && line[0] == marker) continue;
        header = false;
        out += line + '\n';
    }
    return out;
}

/// Canonical (label, label, weight) multiset of a transaction graph.
inline std::multiset<std::tuple<std::string, std::string, std::uint64_t>> edge_multiset(const TransactionGraph& g) {
    std::multiset<std::tuple<std::string, std::string, std::uint64_t>> s;
    for (const auto& e : g.edges()) {
        auto a = g.label(e.u).str(), b = g.label(e.v).str();
        if (b < a) std::swap(a, b);
        s.emplace(a, b, e.data.weight);
    }
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.loop_count(v)) s.emplace(g.label(v).str(), g.label(v).str(), g.loop_count(v));
    return s;
}

}  // namespace fixtures
