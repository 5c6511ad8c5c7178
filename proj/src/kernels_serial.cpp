#include "kernels_common.hpp"

namespace chaingraph::kernels::serial {

std::vector<std::uint64_t> triangles_per_node(const SimpleGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::uint64_t> tri(n, 0);
    detail::OrientedGraph og(g);
    for (NodeId u = 0; u < n; ++u) {
        auto out_u = og.out(u);
        for (NodeId w : out_u) {
            detail::for_each_common(out_u, og.out(w), [&](NodeId x) {
                ++tri[u];
                ++tri[w];
                ++tri[x];
            });
        }
    }
    return tri;
}

std::vector<SourceStats> bfs_from_sources(const SimpleGraph& g, std::span<const NodeId> sources) {
    std::vector<SourceStats> out(sources.size());
    detail::BfsWorkspace ws(g.node_count());
    for (std::size_t i = 0; i < sources.size(); ++i) out[i] = ws.run(g, sources[i]);
    return out;
}

}  // namespace chaingraph::kernels::serial
