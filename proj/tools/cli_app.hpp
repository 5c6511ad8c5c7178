#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "chaingraph/rpc_client.hpp"

namespace chaingraph::cli {

using TransportFactory = std::function<std::unique_ptr<RpcTransport>(const std::string& url)>;

/// Runs one chaingraph command. `args` excludes the program name.
/// `factory` replaces the HTTP transport (tests inject a mock node).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const TransportFactory& factory = {});

}  // namespace chaingraph::cli
