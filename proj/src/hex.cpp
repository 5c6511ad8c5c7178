#include "chaingraph/hex.hpp"

#include <algorithm>
#include <charconv>

#include "chaingraph/errors.hpp"

namespace chaingraph::hex {

namespace {

std::string_view strip_prefix(std::string_view text, std::string_view field) {
    if (text.size() < 2 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X'))
        throw ParseError(std::string(field), "expected 0x-prefixed hex, got \"" + std::string(text) + "\"");
    return text.substr(2);
}

void require_digits(std::string_view digits, std::string_view field, std::string_view original) {
    if (digits.empty())
        throw ParseError(std::string(field), "empty hex quantity \"" + std::string(original) + "\"");
    if (!std::all_of(digits.begin(), digits.end(), is_hex_digit))
        throw ParseError(std::string(field), "non-hex character in \"" + std::string(original) + "\"");
}

char lower(char c) { return (c >= 'A' && c <= 'F') ? static_cast<char>(c - 'A' + 'a') : c; }

}  // namespace

bool is_hex_digit(char c) noexcept {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

std::uint64_t parse_quantity(std::string_view text, std::string_view field) {
    auto digits = strip_prefix(text, field);
    require_digits(digits, field, text);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(std::string(field), "quantity exceeds 64 bits: \"" + std::string(text) + "\"");
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw ParseError(std::string(field), "invalid quantity \"" + std::string(text) + "\"");
    return value;
}

Wei parse_wei(std::string_view text, std::string_view field) {
    auto digits = strip_prefix(text, field);
    require_digits(digits, field, text);
    auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return Wei{0};
    digits = digits.substr(first);
    if (digits.size() > 64)
        throw ParseError(std::string(field), "value exceeds 256 bits: \"" + std::string(text) + "\"");
    Wei value{0};
    for (char c : digits) {
        unsigned d = (c <= '9') ? unsigned(c - '0') : unsigned(lower(c) - 'a' + 10);
        value = (value << 4) | d;
    }
    return value;
}

std::string parse_fixed_bytes(std::string_view text, std::size_t bytes, std::string_view field) {
    auto digits = strip_prefix(text, field);
    if (digits.size() != 2 * bytes)
        throw ParseError(std::string(field), "expected " + std::to_string(bytes) + " bytes, got \"" +
                                                 std::string(text) + "\"");
    require_digits(digits, field, text);
    std::string out = "0x";
    out.reserve(2 + digits.size());
    std::transform(digits.begin(), digits.end(), std::back_inserter(out), lower);
    return out;
}

std::string encode_quantity(std::uint64_t value) {
    char buf[2 + 16];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, 16);
    (void)ec;
    return "0x" + std::string(buf, ptr);
}

std::string encode_wei(const Wei& value) {
    if (value == 0) return "0x0";
    static constexpr char digits[] = "0123456789abcdef";
    std::string rev;
    Wei v = value;
    while (v != 0) {
        rev.push_back(digits[static_cast<unsigned>(v & 0xf)]);
        v >>= 4;
    }
    return "0x" + std::string(rev.rbegin(), rev.rend());
}

}  // namespace chaingraph::hex
