#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chaingraph {

// Base for every failure raised while talking to a node or reading chain data.
class ChainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Network-level failure (connect, timeout, HTTP 429/5xx). Retryable.
class TransportError : public ChainError {
  public:
    using ChainError::ChainError;
};

// The node answered with a JSON-RPC error object (or a non-retryable HTTP status).
class RpcError : public ChainError {
  public:
    RpcError(int code, const std::string& message)
        : ChainError("rpc error " + std::to_string(code) + ": " + message), code_(code) {}
    [[nodiscard]] int code() const noexcept { return code_; }

  private:
    int code_;
};

class BlockNotFound : public ChainError {
  public:
    explicit BlockNotFound(std::uint64_t number)
        : ChainError("block " + std::to_string(number) + " not found (beyond chain head?)"),
          number_(number) {}
    [[nodiscard]] std::uint64_t number() const noexcept { return number_; }

  private:
    std::uint64_t number_;
};

// Malformed payload. `field()` names the offending JSON field.
class ParseError : public ChainError {
  public:
    ParseError(std::string field, const std::string& what)
        : ChainError("parse error in '" + field + "': " + what), field_(std::move(field)) {}
    [[nodiscard]] const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

// Raised in offline mode when a block is not in the local cache.
class CacheMiss : public ChainError {
  public:
    explicit CacheMiss(std::uint64_t number)
        : ChainError("block " + std::to_string(number) + " not cached and network access disabled"),
          number_(number) {}
    [[nodiscard]] std::uint64_t number() const noexcept { return number_; }

  private:
    std::uint64_t number_;
};

}  // namespace chaingraph
