#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chaingraph {

/// Transferred value in wei. The chain caps it at 2^256 - 1.
using Wei = boost::multiprecision::uint256_t;

/// Account identifier: either a canonical lowercase "0x" + 40 hex address, or a
/// synthetic id for contract creations ("created!<16 hex>").
class AccountId {
  public:
    AccountId() = default;

    /// Validates and lowercases a 20-byte hex address. Idempotent on canonical input.
    /// Throws ParseError (field = `field`) on wrong length or non-hex characters.
    static AccountId from_address(std::string_view text, std::string_view field = "address");

    /// Synthetic node for a contract-creating transaction, keyed by its hash.
    static AccountId for_creation(std::string_view tx_hash);

    /// Accepts anything previously produced by `str()`; used when reading Pajek labels.
    static AccountId from_label(std::string_view label);

    [[nodiscard]] const std::string& str() const noexcept { return value_; }
    [[nodiscard]] bool is_synthetic() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return value_.empty(); }

    friend auto operator<=>(const AccountId&, const AccountId&) = default;

  private:
    explicit AccountId(std::string v) : value_(std::move(v)) {}
    std::string value_;
};

struct TxRecord {
    std::string tx_hash;  // 0x + 64 lowercase hex
    AccountId sender;
    std::optional<AccountId> recipient;  // absent for contract creation
    Wei value{0};

    friend bool operator==(const TxRecord&, const TxRecord&) = default;
};

struct BlockRecord {
    std::uint64_t number = 0;
    std::string hash;  // 0x + 64 lowercase hex
    std::uint64_t timestamp = 0;
    AccountId miner;
    std::vector<TxRecord> transactions;

    friend bool operator==(const BlockRecord&, const BlockRecord&) = default;
};

/// Half-open block range [start_block, start_block + count).
struct SnapshotSpec {
    std::uint64_t start_block = 0;
    std::uint64_t count = 1;

    /// Throws std::invalid_argument when count == 0 or the range overflows.
    void validate() const;
    [[nodiscard]] std::uint64_t end_block() const { return start_block + count; }
    /// Parses "start:count".
    static SnapshotSpec parse(std::string_view text);
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const SnapshotSpec&, const SnapshotSpec&) = default;
};

}  // namespace chaingraph

template <>
struct std::hash<chaingraph::AccountId> {
    std::size_t operator()(const chaingraph::AccountId& id) const noexcept {
        return std::hash<std::string>{}(id.str());
    }
};
