#include "chaingraph/miners.hpp"

#include <algorithm>

namespace chaingraph {

void MinerCounter::add(const BlockRecord& block) {
    ++per_miner_[block.miner];
    ++total_;
    lowest_ = std::min(lowest_, block.number);
}

void MinerCounter::merge(const MinerCounter& other) {
    for (const auto& [miner, n] : other.per_miner_) per_miner_[miner] += n;
    total_ += other.total_;
    lowest_ = std::min(lowest_, other.lowest_);
}

MinerHistogram MinerCounter::finish() const {
    MinerHistogram h;
    h.per_miner = per_miner_;
    h.total_blocks = total_;
    for (const auto& [miner, n] : per_miner_) ++h.distribution[n];
    if (total_ > 0) h.range = SnapshotSpec{lowest_, total_};
    return h;
}

MinerHistogram miner_distribution(std::span<const BlockRecord> blocks) {
    MinerCounter c;
    for (const auto& b : blocks) c.add(b);
    return c.finish();
}

}  // namespace chaingraph
