#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "chaingraph/block.hpp"

namespace chaingraph {

struct MinerHistogram {
    std::map<AccountId, std::uint64_t> per_miner;        // miner -> blocks mined
    std::map<std::uint64_t, std::uint64_t> distribution;  // blocks mined -> miners
    std::optional<SnapshotSpec> range;                    // empty for no blocks
    std::uint64_t total_blocks = 0;
};

/// Incremental fold over a block stream; merge() combines shards.
class MinerCounter {
  public:
    void add(const BlockRecord& block);
    void merge(const MinerCounter& other);
    [[nodiscard]] MinerHistogram finish() const;

  private:
    std::map<AccountId, std::uint64_t> per_miner_;
    std::uint64_t total_ = 0;
    std::uint64_t lowest_ = UINT64_MAX;
};

MinerHistogram miner_distribution(std::span<const BlockRecord> blocks);

}  // namespace chaingraph
