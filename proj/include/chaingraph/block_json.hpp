#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "chaingraph/block.hpp"

namespace chaingraph {

/// Parses the `result` object of `eth_getBlockByNumber(n, true)`.
/// Hex quantities are decoded, addresses lowercased, transaction order kept.
/// Throws ParseError naming the first missing or malformed field.
BlockRecord parse_block_json(std::string_view raw);
BlockRecord parse_block_json(const nlohmann::json& result);

/// Inverse of parse_block_json for the fields this tool keeps.
nlohmann::json block_to_json(const BlockRecord& block);

}  // namespace chaingraph
