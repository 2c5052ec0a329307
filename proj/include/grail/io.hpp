#ifndef GRAIL_IO_HPP
#define GRAIL_IO_HPP

#include <string>
#include <string_view>

#include "grail/graph.hpp"

namespace grail {

enum class GraphFormat {
    line, // "vertex <id>" / "edge <id> <source> <range>" declarations
    json, // {"vertices": [...], "edges": [{"id","source","range"}]}
    dot   // output only
};

/// Parses line or json format.  Errors carry line/position context.
GraphPtr parse_graph(std::string_view text, GraphFormat format);

std::string serialize_graph(const Graph& g, GraphFormat format);

/// JSON array of member ids in canonical order.
std::string set_to_json(const VertexSet& s);

/// Human-readable set: "∅" or "{a, b}".
std::string render_set(const VertexSet& s);

std::string cycle_to_json(const CycleWitness& c);

} // namespace grail

#endif
