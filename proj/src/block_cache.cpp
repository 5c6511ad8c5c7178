#include "chaingraph/block_cache.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "chaingraph/block_json.hpp"
#include "chaingraph/digest.hpp"
#include "chaingraph/errors.hpp"
#include "chaingraph/rpc_client.hpp"

namespace chaingraph {

namespace fs = std::filesystem;

namespace {
constexpr std::string_view kChecksumTag = "\n#sha256:";
}

BlockCache::BlockCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path BlockCache::path_for(std::uint64_t number) const {
    char name[32];
    std::snprintf(name, sizeof name, "%012llu.json", static_cast<unsigned long long>(number));
    return dir_ / name;
}

std::string BlockCache::encode_entry(std::string_view raw_body) {
    std::string out(raw_body);
    out += kChecksumTag;
    out += sha256_hex(raw_body);
    out += '\n';
    return out;
}

std::optional<std::string> BlockCache::decode_entry(std::string_view contents) {
    auto pos = contents.rfind(kChecksumTag);
    if (pos == std::string_view::npos) return std::nullopt;
    std::string_view body = contents.substr(0, pos);
    std::string_view digest = contents.substr(pos + kChecksumTag.size());
    if (digest.ends_with('\n')) digest.remove_suffix(1);
    if (digest != sha256_hex(body)) return std::nullopt;
    return std::string(body);
}

BlockCache::Lookup BlockCache::load(std::uint64_t number) const {
    std::ifstream in(path_for(number), std::ios::binary);
    if (!in) return {Status::miss, std::nullopt};
    std::ostringstream buf;
    buf << in.rdbuf();
    auto body = decode_entry(buf.str());
    if (!body) return {Status::corrupt, std::nullopt};
    try {
        auto result = decode_rpc_response(*body);
        if (result.is_null()) return {Status::corrupt, std::nullopt};
        BlockRecord block = parse_block_json(result);
        if (block.number != number) return {Status::corrupt, std::nullopt};
        return {Status::hit, std::move(block)};
    } catch (const ChainError&) {
        return {Status::corrupt, std::nullopt};
    }
}

void BlockCache::store(std::uint64_t number, std::string_view raw_body) const {
    fs::path final_path = path_for(number);
    fs::path tmp = final_path;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        std::string entry = encode_entry(raw_body);
        out.write(entry.data(), static_cast<std::streamsize>(entry.size()));
        if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, final_path);
}

}  // namespace chaingraph
