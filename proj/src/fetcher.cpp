#include "chaingraph/fetcher.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "chaingraph/errors.hpp"

namespace chaingraph {

FetchedBlock fetch_block(const RpcClient& client, std::uint64_t number, const RetryPolicy& retry) {
    auto backoff = retry.initial_backoff;
    for (int attempt = 1;; ++attempt) {
        try {
            return client.get_block_by_number(number);
        } catch (const TransportError&) {
            if (attempt >= std::max(1, retry.attempts)) throw;
        }
        std::this_thread::sleep_for(backoff);
        backoff *= 2;
    }
}

namespace {

// Fetches `numbers` concurrently into `slots` (indexed by number - base).
void fetch_missing(const RpcClient& client, const BlockCache& cache, const FetchOptions& options,
                   std::uint64_t base, const std::vector<std::uint64_t>& numbers,
                   std::vector<std::optional<BlockRecord>>& slots) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::uint64_t first_error_number = UINT64_MAX;

    auto worker = [&] {
        while (!stop.load()) {
            std::size_t i = next.fetch_add(1);
            if (i >= numbers.size()) return;
            std::uint64_t number = numbers[i];
            try {
                FetchedBlock fb = fetch_block(client, number, options.retry);
                cache.store(number, fb.raw_body);
                slots[number - base] = std::move(fb.block);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (number < first_error_number) {
                    first_error_number = number;
                    first_error = std::current_exception();
                }
                stop.store(true);
            }
        }
    };

    std::size_t workers = std::clamp<std::size_t>(options.max_in_flight, 1, numbers.size());
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

FetchStats fetch_range(const RpcClient* client, const BlockCache& cache, const SnapshotSpec& spec,
                       const FetchOptions& options, const BlockSink& sink) {
    spec.validate();
    FetchStats stats;
    const std::uint64_t window = std::max<std::size_t>(options.window, 1);

    for (std::uint64_t lo = spec.start_block; lo < spec.end_block();) {
        const std::uint64_t hi = std::min(spec.end_block(), lo + window);
        std::vector<std::optional<BlockRecord>> slots(hi - lo);
        std::vector<std::uint64_t> missing;

        for (std::uint64_t number = lo; number < hi; ++number) {
            auto found = cache.load(number);
            switch (found.status) {
                case BlockCache::Status::hit:
                    slots[number - lo] = std::move(found.block);
                    ++stats.cache_hits;
                    break;
                case BlockCache::Status::corrupt:
                    ++stats.corrupt_refetched;
                    missing.push_back(number);
                    break;
                case BlockCache::Status::miss:
                    missing.push_back(number);
                    break;
            }
        }

        if (!missing.empty()) {
            if (options.offline || client == nullptr) throw CacheMiss(missing.front());
            fetch_missing(*client, cache, options, lo, missing, slots);
            stats.fetched += missing.size();
        }

        for (auto& slot : slots) sink(*slot);
        lo = hi;
    }
    return stats;
}

std::vector<BlockRecord> fetch_range(const RpcClient* client, const BlockCache& cache,
                                     const SnapshotSpec& spec, const FetchOptions& options,
                                     FetchStats* stats) {
    std::vector<BlockRecord> blocks;
    auto s = fetch_range(client, cache, spec, options,
                         [&](const BlockRecord& b) { blocks.push_back(b); });
    if (stats) *stats = s;
    return blocks;
}

}  // namespace chaingraph
