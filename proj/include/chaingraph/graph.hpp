#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chaingraph/block.hpp"

namespace chaingraph {

using NodeId = std::uint32_t;

/// Transactions pooled over an unordered account pair. "forward" counts
/// transactions whose sender label sorts before the recipient label, so the
/// split does not depend on node numbering.
struct EdgeData {
    std::uint64_t weight = 0;
    std::uint64_t forward_count = 0;
    std::uint64_t reverse_count = 0;

    friend bool operator==(const EdgeData&, const EdgeData&) = default;
};

struct WeightedEdge {
    NodeId u;  // u < v
    NodeId v;
    EdgeData data;
};

/// Weighted account-interaction graph. Nodes are numbered densely in order of
/// first appearance. Self-transactions are kept as per-node loop counts and
/// never appear in the edge map.
class TransactionGraph {
  public:
    /// Returns the existing id when the account is already present.
    NodeId add_node(const AccountId& account);
    [[nodiscard]] std::optional<NodeId> find(const AccountId& account) const;

    /// Records `count` transactions from `sender` to `recipient`.
    void add_transactions(const AccountId& sender, const AccountId& recipient, std::uint64_t count = 1);

    void add_block(const BlockRecord& block);

    [[nodiscard]] std::size_t node_count() const noexcept { return labels_.size(); }
    /// Distinct unordered pairs with at least one transaction; loops excluded.
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] std::uint64_t total_transactions() const noexcept { return total_tx_; }

    [[nodiscard]] const AccountId& label(NodeId id) const { return labels_.at(id); }
    [[nodiscard]] std::span<const AccountId> labels() const noexcept { return labels_; }
    [[nodiscard]] std::uint64_t loop_count(NodeId id) const { return loops_.at(id); }
    [[nodiscard]] const EdgeData* edge(NodeId a, NodeId b) const;

    /// All edges, sorted by (u, v).
    [[nodiscard]] std::vector<WeightedEdge> edges() const;

    template <class F>
    void for_each_edge(F&& f) const {
        for (const auto& [key, data] : edges_) f(NodeId(key >> 32), NodeId(key & 0xffffffffu), data);
    }

  private:
    static std::uint64_t key(NodeId a, NodeId b) {
        if (a > b) std::swap(a, b);
        return (std::uint64_t(a) << 32) | b;
    }

    std::vector<AccountId> labels_;
    std::unordered_map<AccountId, NodeId> index_;
    std::unordered_map<std::uint64_t, EdgeData> edges_;
    std::vector<std::uint64_t> loops_;
    std::uint64_t total_tx_ = 0;
};

/// Node that receives a transaction: its recipient, or a synthetic
/// `created!<hash prefix>` node for contract creations.
AccountId node_for_recipient(const TxRecord& tx);

TransactionGraph build_graph(std::span<const BlockRecord> blocks);

/// Undirected, loop-free, unweighted graph in compressed adjacency form.
/// Neighbor lists are sorted ascending.
class SimpleGraph {
  public:
    SimpleGraph() : offsets_(1, 0) {}
    /// Duplicate edges collapse; loops are dropped.
    SimpleGraph(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges);

    [[nodiscard]] std::size_t node_count() const noexcept { return offsets_.size() - 1; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
    [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] bool has_edge(NodeId a, NodeId b) const;
    /// Each edge once as (u, v) with u < v, sorted.
    [[nodiscard]] std::vector<std::pair<NodeId, NodeId>> edge_list() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

  private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
};

SimpleGraph project_simple(const TransactionGraph& g);

/// Subgraph induced by `nodes` (ascending). `original[i]` is the source id of node i.
struct InducedSubgraph {
    SimpleGraph graph;
    std::vector<NodeId> original;
};
InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const NodeId> nodes);

}  // namespace chaingraph
