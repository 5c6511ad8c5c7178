#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "chaingraph/block.hpp"
#include "chaingraph/block_cache.hpp"
#include "chaingraph/rpc_client.hpp"

namespace chaingraph {

struct RetryPolicy {
    int attempts = 3;
    std::chrono::milliseconds initial_backoff{250};  // doubled after each failure
};

struct FetchOptions {
    RetryPolicy retry;
    std::size_t max_in_flight = 4;
    // Blocks loaded per reorder window; bounds memory while keeping workers busy.
    std::size_t window = 256;
    bool offline = false;
};

struct FetchStats {
    std::uint64_t fetched = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t corrupt_refetched = 0;
};

/// Single block with retries on TransportError only. RPC and parse errors propagate at once.
FetchedBlock fetch_block(const RpcClient& client, std::uint64_t number, const RetryPolicy& retry);

using BlockSink = std::function<void(const BlockRecord&)>;

/// Streams [spec.start_block, spec.end_block()) to `sink` in ascending order.
///
/// Cached blocks are served from `cache`; misses are fetched with up to
/// `max_in_flight` concurrent requests and persisted before being yielded.
/// A corrupt cache entry triggers a refetch of that block alone. `client`
/// may be null, in which case (as with `offline`) any miss raises CacheMiss.
FetchStats fetch_range(const RpcClient* client, const BlockCache& cache, const SnapshotSpec& spec,
                       const FetchOptions& options, const BlockSink& sink);

std::vector<BlockRecord> fetch_range(const RpcClient* client, const BlockCache& cache,
                                     const SnapshotSpec& spec, const FetchOptions& options,
                                     FetchStats* stats = nullptr);

}  // namespace chaingraph
