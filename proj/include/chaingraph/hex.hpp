#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "chaingraph/block.hpp"

namespace chaingraph::hex {

[[nodiscard]] bool is_hex_digit(char c) noexcept;

/// Decodes a JSON-RPC quantity ("0x10" -> 16). Throws ParseError naming `field`.
[[nodiscard]] std::uint64_t parse_quantity(std::string_view text, std::string_view field);

/// Same as parse_quantity but for values up to 256 bits.
[[nodiscard]] Wei parse_wei(std::string_view text, std::string_view field);

/// Validates "0x" + 2*bytes hex digits and returns it lowercased.
[[nodiscard]] std::string parse_fixed_bytes(std::string_view text, std::size_t bytes,
                                            std::string_view field);

/// Encodes a quantity the way nodes do: minimal digits, "0x0" for zero.
[[nodiscard]] std::string encode_quantity(std::uint64_t value);
[[nodiscard]] std::string encode_wei(const Wei& value);

}  // namespace chaingraph::hex
