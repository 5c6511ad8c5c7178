#include "kernels_common.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chaingraph::kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

namespace parallel {

std::vector<std::uint64_t> triangles_per_node(const SimpleGraph& g) {
    const std::int64_t n = static_cast<std::int64_t>(g.node_count());
    std::vector<std::uint64_t> tri(static_cast<std::size_t>(n), 0);
    detail::OrientedGraph og(g);

    // Integer increments commute, so atomics keep the result thread-count independent.
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t ui = 0; ui < n; ++ui) {
        const NodeId u = static_cast<NodeId>(ui);
        auto out_u = og.out(u);
        std::uint64_t local_u = 0;
        for (NodeId w : out_u) {
            std::uint64_t via_w = 0;
            detail::for_each_common(out_u, og.out(w), [&](NodeId x) {
                ++via_w;
#pragma omp atomic
                ++tri[x];
            });
            if (via_w) {
#pragma omp atomic
                tri[w] += via_w;
                local_u += via_w;
            }
        }
        if (local_u) {
#pragma omp atomic
            tri[u] += local_u;
        }
    }
    return tri;
}

std::vector<SourceStats> bfs_from_sources(const SimpleGraph& g, std::span<const NodeId> sources) {
    const std::int64_t k = static_cast<std::int64_t>(sources.size());
    std::vector<SourceStats> out(sources.size());
#pragma omp parallel
    {
        detail::BfsWorkspace ws(g.node_count());
#pragma omp for schedule(dynamic, 8)
        for (std::int64_t i = 0; i < k; ++i) out[std::size_t(i)] = ws.run(g, sources[std::size_t(i)]);
    }
    return out;
}

}  // namespace parallel
}  // namespace chaingraph::kernels
