#include "chaingraph/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace chaingraph {

NodeId TransactionGraph::add_node(const AccountId& account) {
    auto [it, inserted] = index_.try_emplace(account, NodeId(labels_.size()));
    if (inserted) {
        if (labels_.size() >= std::numeric_limits<NodeId>::max())
            throw std::length_error("too many nodes for 32-bit node ids");
        labels_.push_back(account);
        loops_.push_back(0);
    }
    return it->second;
}

std::optional<NodeId> TransactionGraph::find(const AccountId& account) const {
    auto it = index_.find(account);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void TransactionGraph::add_transactions(const AccountId& sender, const AccountId& recipient,
                                        std::uint64_t count) {
    if (count == 0) return;
    NodeId a = add_node(sender);
    NodeId b = add_node(recipient);
    total_tx_ += count;
    if (a == b) {
        loops_[a] += count;
        return;
    }
    EdgeData& e = edges_[key(a, b)];
    e.weight += count;
    if (sender < recipient)
        e.forward_count += count;
    else
        e.reverse_count += count;
}

void TransactionGraph::add_block(const BlockRecord& block) {
    for (const auto& tx : block.transactions) add_transactions(tx.sender, node_for_recipient(tx));
}

const EdgeData* TransactionGraph::edge(NodeId a, NodeId b) const {
    auto it = edges_.find(key(a, b));
    return it == edges_.end() ? nullptr : &it->second;
}

std::vector<WeightedEdge> TransactionGraph::edges() const {
    std::vector<WeightedEdge> out;
    out.reserve(edges_.size());
    for_each_edge([&](NodeId u, NodeId v, const EdgeData& d) { out.push_back({u, v, d}); });
    std::sort(out.begin(), out.end(),
              [](const WeightedEdge& x, const WeightedEdge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    return out;
}

AccountId node_for_recipient(const TxRecord& tx) {
    return tx.recipient ? *tx.recipient : AccountId::for_creation(tx.tx_hash);
}

TransactionGraph build_graph(std::span<const BlockRecord> blocks) {
    TransactionGraph g;
    for (const auto& b : blocks) g.add_block(b);
    return g;
}

SimpleGraph::SimpleGraph(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges) {
    for (auto& [u, v] : edges) {
        if (u >= node_count || v >= node_count) throw std::out_of_range("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    offsets_.assign(node_count + 1, 0);
    for (const auto& [u, v] : edges) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < node_count; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted by (u, v): v-lists fill ascending in u, u-lists ascending in v.
    // Each list receives smaller ids (as v-side) before larger ones (as u-side),
    // so the final lists come out sorted without a second pass.
    for (const auto& [u, v] : edges) adjacency_[cursor[v]++] = u;
    for (const auto& [u, v] : edges) adjacency_[cursor[u]++] = v;
}

bool SimpleGraph::has_edge(NodeId a, NodeId b) const {
    auto n = neighbors(a);
    return std::binary_search(n.begin(), n.end(), b);
}

std::vector<std::pair<NodeId, NodeId>> SimpleGraph::edge_list() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

SimpleGraph project_simple(const TransactionGraph& g) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(g.edge_count());
    g.for_each_edge([&](NodeId u, NodeId v, const EdgeData&) { edges.emplace_back(u, v); });
    return SimpleGraph(g.node_count(), std::move(edges));
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const NodeId> nodes) {
    constexpr NodeId absent = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> local(g.node_count(), absent);
    for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = NodeId(i);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u : nodes)
        for (NodeId v : g.neighbors(u))
            if (u < v && local[v] != absent) edges.emplace_back(local[u], local[v]);
    return {SimpleGraph(nodes.size(), std::move(edges)), std::vector<NodeId>(nodes.begin(), nodes.end())};
}

}  // namespace chaingraph
