#include "chaingraph/block_json.hpp"

#include "chaingraph/errors.hpp"
#include "chaingraph/hex.hpp"

namespace chaingraph {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path + key, "missing required field");
    return *it;
}

const std::string& require_string(const json& obj, const char* key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_string()) throw ParseError(path + key, "expected a hex string");
    return v.get_ref<const std::string&>();
}

TxRecord parse_tx(const json& tx, const std::string& path) {
    if (!tx.is_object())
        throw ParseError(path, "expected a full transaction object (request with fullTx=true)");
    TxRecord rec;
    rec.tx_hash = hex::parse_fixed_bytes(require_string(tx, "hash", path), 32, path + "hash");
    rec.sender = AccountId::from_address(require_string(tx, "from", path), path + "from");
    const json& to = require(tx, "to", path);
    if (!to.is_null()) {
        if (!to.is_string()) throw ParseError(path + "to", "expected an address or null");
        rec.recipient = AccountId::from_address(to.get_ref<const std::string&>(), path + "to");
    }
    rec.value = hex::parse_wei(require_string(tx, "value", path), path + "value");
    return rec;
}

}  // namespace

BlockRecord parse_block_json(std::string_view raw) {
    json doc = json::parse(raw, nullptr, false);
    if (doc.is_discarded()) throw ParseError("result", "not valid JSON");
    return parse_block_json(doc);
}

BlockRecord parse_block_json(const json& result) {
    if (!result.is_object()) throw ParseError("result", "expected a block object");
    BlockRecord block;
    block.number = hex::parse_quantity(require_string(result, "number", ""), "number");
    block.hash = hex::parse_fixed_bytes(require_string(result, "hash", ""), 32, "hash");
    block.timestamp = hex::parse_quantity(require_string(result, "timestamp", ""), "timestamp");
    block.miner = AccountId::from_address(require_string(result, "miner", ""), "miner");

    const json& txs = require(result, "transactions", "");
    if (!txs.is_array()) throw ParseError("transactions", "expected an array");
    block.transactions.reserve(txs.size());
    for (std::size_t i = 0; i < txs.size(); ++i)
        block.transactions.push_back(parse_tx(txs[i], "transactions[" + std::to_string(i) + "]."));
    return block;
}

json block_to_json(const BlockRecord& block) {
    json txs = json::array();
    for (const auto& tx : block.transactions) {
        txs.push_back({
            {"hash", tx.tx_hash},
            {"from", tx.sender.str()},
            {"to", tx.recipient ? json(tx.recipient->str()) : json(nullptr)},
            {"value", hex::encode_wei(tx.value)},
        });
    }
    return {
        {"number", hex::encode_quantity(block.number)},
        {"hash", block.hash},
        {"timestamp", hex::encode_quantity(block.timestamp)},
        {"miner", block.miner.str()},
        {"transactions", std::move(txs)},
    };
}

}  // namespace chaingraph
