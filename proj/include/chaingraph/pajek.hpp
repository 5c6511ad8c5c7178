#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "chaingraph/graph.hpp"

namespace chaingraph {

class PajekError : public std::runtime_error {
  public:
    PajekError(std::size_t line, const std::string& what)
        : std::runtime_error("pajek line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Writes `*Vertices n`, `<i> "<label>"` for i = 1..n in node order, then
/// `*Edges` and `<u> <v> <weight>` sorted by (u, v); a loop is `<u> <u> <count>`
/// and sorts before the node's other edges. LF line endings.
void export_pajek(const TransactionGraph& g, std::ostream& out);

/// Reads the dialect export_pajek writes. Also accepts `*Arcs` sections
/// (arcs add to the pair weight), omitted vertex lines (label = index),
/// bare labels, missing weights (= 1), and `%` comment lines.
/// Throws PajekError on a malformed header, an out-of-range vertex index,
/// or a non-positive / non-integer weight.
TransactionGraph import_pajek(std::istream& in);

/// `src,dst,weight` with account labels; loops as `a,a,count`.
void export_edge_csv(const TransactionGraph& g, std::ostream& out);

}  // namespace chaingraph
