#include "chaingraph/pajek.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace chaingraph {

namespace {

struct Row {
    NodeId u;
    NodeId v;
    std::uint64_t weight;
};

// Edges and loops in the order both writers emit them.
std::vector<Row> ordered_rows(const TransactionGraph& g) {
    std::vector<Row> rows;
    rows.reserve(g.edge_count() + 16);
    for (const auto& e : g.edges()) rows.push_back({e.u, e.v, e.data.weight});
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.loop_count(v) > 0) rows.push_back({v, v, g.loop_count(v)});
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return rows;
}

void check(std::ostream& out) {
    if (!out) throw std::runtime_error("write to output sink failed");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lowered(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string_view next_token(std::string_view& rest) {
    rest = trim(rest);
    auto end = std::find_if(rest.begin(), rest.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    std::string_view tok = rest.substr(0, std::size_t(end - rest.begin()));
    rest.remove_prefix(tok.size());
    return tok;
}

template <class Int>
bool parse_int(std::string_view tok, Int& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return !tok.empty() && ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

void export_pajek(const TransactionGraph& g, std::ostream& out) {
    out << "*Vertices " << g.node_count() << '\n';
    for (NodeId v = 0; v < g.node_count(); ++v) out << (v + 1) << " \"" << g.label(v).str() << "\"\n";
    out << "*Edges\n";
    for (const auto& r : ordered_rows(g)) out << (r.u + 1) << ' ' << (r.v + 1) << ' ' << r.weight << '\n';
    check(out);
}

void export_edge_csv(const TransactionGraph& g, std::ostream& out) {
    out << "src,dst,weight\n";
    for (const auto& r : ordered_rows(g))
        out << g.label(r.u).str() << ',' << g.label(r.v).str() << ',' << r.weight << '\n';
    check(out);
}

TransactionGraph import_pajek(std::istream& in) {
    enum class Section { none, vertices, edges };
    Section section = Section::none;
    std::size_t n = 0;
    std::vector<std::string> labels;
    std::vector<Row> rows;
    bool vertices_seen = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view text = trim(line);
        if (text.empty() || text.front() == '%') continue;

        if (text.front() == '*') {
            std::string_view rest = text;
            std::string keyword = lowered(next_token(rest));
            if (keyword == "*vertices") {
                if (vertices_seen) throw PajekError(lineno, "duplicate *Vertices header");
                if (!parse_int(next_token(rest), n)) throw PajekError(lineno, "malformed *Vertices header");
                vertices_seen = true;
                labels.resize(n);
                for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
                section = Section::vertices;
            } else if (keyword == "*edges" || keyword == "*arcs") {
                if (!vertices_seen) throw PajekError(lineno, "edges before *Vertices header");
                section = Section::edges;
            } else {
                throw PajekError(lineno, "unsupported section " + std::string(text));
            }
            continue;
        }

        if (section == Section::none) throw PajekError(lineno, "missing *Vertices header");

        std::string_view rest = text;
        if (section == Section::vertices) {
            std::size_t idx = 0;
            if (!parse_int(next_token(rest), idx)) throw PajekError(lineno, "malformed vertex line");
            if (idx < 1 || idx > n) throw PajekError(lineno, "vertex index " + std::to_string(idx) + " out of range");
            rest = trim(rest);
            if (rest.empty()) continue;
            if (rest.front() == '"') {
                auto close = rest.find('"', 1);
                if (close == std::string_view::npos) throw PajekError(lineno, "unterminated vertex label");
                labels[idx - 1] = std::string(rest.substr(1, close - 1));
            } else {
                labels[idx - 1] = std::string(next_token(rest));
            }
            continue;
        }

        std::uint64_t u = 0, v = 0, w = 1;
        if (!parse_int(next_token(rest), u) || !parse_int(next_token(rest), v))
            throw PajekError(lineno, "malformed edge line");
        if (u < 1 || u > n || v < 1 || v > n) throw PajekError(lineno, "vertex index out of range");
        if (auto wt = next_token(rest); !wt.empty()) {
            std::int64_t signed_w = 0;
            if (!parse_int(wt, signed_w)) throw PajekError(lineno, "weight must be an integer transaction count");
            if (signed_w <= 0) throw PajekError(lineno, "non-positive weight");
            w = std::uint64_t(signed_w);
        }
        rows.push_back({NodeId(u - 1), NodeId(v - 1), w});
    }
    if (!vertices_seen) throw PajekError(lineno, "missing *Vertices header");

    TransactionGraph g;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
        if (!seen.insert(labels[i]).second) throw PajekError(0, "duplicate vertex label \"" + labels[i] + "\"");
        g.add_node(AccountId::from_label(labels[i]));
    }
    for (const auto& r : rows) g.add_transactions(g.label(r.u), g.label(r.v), r.weight);
    return g;
}

}  // namespace chaingraph
