#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "chaingraph/block.hpp"

namespace chaingraph {

/// On-disk block cache: one file per block, named by zero-padded height.
///
/// File layout: the verbatim JSON-RPC response body, then a final line
/// `#sha256:<hex digest of the body>`. Writes go to a temporary file that is
/// renamed into place, so a reader never observes a half-written block.
class BlockCache {
  public:
    enum class Status { hit, miss, corrupt };

    struct Lookup {
        Status status = Status::miss;
        std::optional<BlockRecord> block;
    };

    /// Creates the directory if needed.
    explicit BlockCache(std::filesystem::path dir);

    [[nodiscard]] const std::filesystem::path& dir() const noexcept { return dir_; }
    [[nodiscard]] std::filesystem::path path_for(std::uint64_t number) const;

    /// `corrupt` covers checksum mismatch, unparsable body, or a height mismatch.
    [[nodiscard]] Lookup load(std::uint64_t number) const;

    void store(std::uint64_t number, std::string_view raw_body) const;

    /// The exact bytes store() writes; exposed for tests and tooling.
    static std::string encode_entry(std::string_view raw_body);
    /// Returns the body if the checksum line verifies.
    static std::optional<std::string> decode_entry(std::string_view file_contents);

  private:
    std::filesystem::path dir_;
};

}  // namespace chaingraph
