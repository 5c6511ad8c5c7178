#include "chaingraph/rpc_client.hpp"

#include <regex>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "chaingraph/block_json.hpp"
#include "chaingraph/errors.hpp"
#include "chaingraph/hex.hpp"

namespace chaingraph {

using nlohmann::json;

HttpTransport::HttpTransport(std::string url, std::chrono::seconds connect_timeout,
                             std::chrono::seconds read_timeout)
    : connect_timeout_(connect_timeout), read_timeout_(read_timeout) {
    static const std::regex re(R"(^(https?://[^/]+)(/.*)?$)", std::regex::icase);
    std::smatch m;
    if (!std::regex_match(url, m, re))
        throw std::invalid_argument("rpc url must look like http(s)://host[:port][/path], got \"" + url + "\"");
    scheme_host_port_ = m[1].str();
    path_ = m[2].matched ? m[2].str() : "/";
}

std::string HttpTransport::post(const std::string& body) {
    // One client per call keeps concurrent posts independent.
    httplib::Client cli(scheme_host_port_);
    cli.set_connection_timeout(connect_timeout_);
    cli.set_read_timeout(read_timeout_);
    cli.set_follow_location(true);
    auto res = cli.Post(path_, body, "application/json");
    if (!res) throw TransportError("http request failed: " + httplib::to_string(res.error()));
    if (res->status == 429 || res->status >= 500)
        throw TransportError("http status " + std::to_string(res->status));
    if (res->status != 200) throw RpcError(res->status, "unexpected http status");
    return std::move(res->body);
}

json decode_rpc_response(std::string_view body) {
    json doc = json::parse(body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw ParseError("response", "not a JSON-RPC object");
    if (auto err = doc.find("error"); err != doc.end() && !err->is_null()) {
        int code = err->value("code", 0);
        std::string message = err->value("message", std::string("unknown error"));
        throw RpcError(code, message);
    }
    auto result = doc.find("result");
    if (result == doc.end()) throw ParseError("result", "missing required field");
    return std::move(*result);
}

std::string RpcClient::block_request_body(std::uint64_t number) {
    json req = {{"jsonrpc", "2.0"},
                {"id", number},
                {"method", "eth_getBlockByNumber"},
                {"params", json::array({hex::encode_quantity(number), true})}};
    return req.dump();
}

FetchedBlock RpcClient::get_block_by_number(std::uint64_t number) const {
    FetchedBlock out;
    out.raw_body = transport_->post(block_request_body(number));
    json result = decode_rpc_response(out.raw_body);
    if (result.is_null()) throw BlockNotFound(number);
    out.block = parse_block_json(result);
    if (out.block.number != number)
        throw ParseError("number", "node returned block " + std::to_string(out.block.number) +
                                       " for request " + std::to_string(number));
    return out;
}

std::uint64_t RpcClient::block_number() const {
    json req = {{"jsonrpc", "2.0"}, {"id", 0}, {"method", "eth_blockNumber"}, {"params", json::array()}};
    json result = decode_rpc_response(transport_->post(req.dump()));
    if (!result.is_string()) throw ParseError("result", "expected a hex quantity");
    return hex::parse_quantity(result.get_ref<const std::string&>(), "result");
}

}  // namespace chaingraph
