#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "chaingraph/block.hpp"

namespace chaingraph {

/// Moves one JSON-RPC request body to a node and returns the raw response body.
/// Implementations must be callable from several threads at once.
/// Throws TransportError for retryable failures, RpcError for anything else.
class RpcTransport {
  public:
    virtual ~RpcTransport() = default;
    virtual std::string post(const std::string& body) = 0;
};

/// HTTP(S) POST transport. `url` may embed a provider API key in its path.
class HttpTransport final : public RpcTransport {
  public:
    explicit HttpTransport(std::string url,
                           std::chrono::seconds connect_timeout = std::chrono::seconds(10),
                           std::chrono::seconds read_timeout = std::chrono::seconds(60));
    std::string post(const std::string& body) override;

  private:
    std::string scheme_host_port_;
    std::string path_;
    std::chrono::seconds connect_timeout_;
    std::chrono::seconds read_timeout_;
};

/// A block as the node returned it, plus its parsed form.
struct FetchedBlock {
    std::string raw_body;  // verbatim response body, cached byte-for-byte
    BlockRecord block;
};

/// Thin typed layer over a transport. Does no retrying; see fetch_block.
class RpcClient {
  public:
    explicit RpcClient(RpcTransport& transport) : transport_(&transport) {}

    /// eth_getBlockByNumber(number, true). Throws BlockNotFound on a null result.
    FetchedBlock get_block_by_number(std::uint64_t number) const;

    /// eth_blockNumber.
    std::uint64_t block_number() const;

    /// Request body for eth_getBlockByNumber; the id is the block height so bodies are stable.
    static std::string block_request_body(std::uint64_t number);

  private:
    RpcTransport* transport_;
};

/// Extracts `result` from a JSON-RPC response body, raising RpcError for error objects.
nlohmann::json decode_rpc_response(std::string_view body);

}  // namespace chaingraph
