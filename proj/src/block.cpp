#include "chaingraph/block.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

#include "chaingraph/errors.hpp"
#include "chaingraph/hex.hpp"

namespace chaingraph {

namespace {
constexpr std::string_view kCreationPrefix = "created!";
constexpr std::size_t kCreationHexChars = 16;
}  // namespace

AccountId AccountId::from_address(std::string_view text, std::string_view field) {
    return AccountId(hex::parse_fixed_bytes(text, 20, field));
}

AccountId AccountId::for_creation(std::string_view tx_hash) {
    std::string_view digits = tx_hash;
    if (digits.starts_with("0x") || digits.starts_with("0X")) digits.remove_prefix(2);
    std::string id(kCreationPrefix);
    for (std::size_t i = 0; i < kCreationHexChars; ++i) {
        char c = i < digits.size() ? digits[i] : '0';
        if (c >= 'A' && c <= 'F') c = static_cast<char>(c - 'A' + 'a');
        id.push_back(c);
    }
    return AccountId(std::move(id));
}

AccountId AccountId::from_label(std::string_view label) {
    if (label.starts_with(kCreationPrefix)) return AccountId(std::string(label));
    if (label.size() == 42 && label.starts_with("0x")) {
        try {
            return from_address(label);
        } catch (const ParseError&) {
        }
    }
    // Foreign Pajek files carry arbitrary labels; keep them verbatim.
    return AccountId(std::string(label));
}

bool AccountId::is_synthetic() const noexcept { return value_.starts_with(kCreationPrefix); }

void SnapshotSpec::validate() const {
    if (count == 0) throw std::invalid_argument("snapshot block count must be >= 1");
    if (start_block > std::numeric_limits<std::uint64_t>::max() - count)
        throw std::invalid_argument("snapshot range overflows");
}

SnapshotSpec SnapshotSpec::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("snapshot must be start:count, got \"" + std::string(text) + "\"");
    auto number = [&](std::string_view part) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
            throw std::invalid_argument("bad number in snapshot \"" + std::string(text) + "\"");
        return v;
    };
    SnapshotSpec spec{number(text.substr(0, colon)), number(text.substr(colon + 1))};
    spec.validate();
    return spec;
}

std::string SnapshotSpec::to_string() const {
    return std::to_string(start_block) + ":" + std::to_string(count);
}

}  // namespace chaingraph
