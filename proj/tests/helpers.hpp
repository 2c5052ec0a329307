#ifndef GRAIL_TEST_HELPERS_HPP
#define GRAIL_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "grail/graph.hpp"
#include "grail/ideals.hpp"

namespace grail::testing {

// v -> w with a loop at w; the minimal non-regular example.
inline GraphPtr vloop() {
    return Graph::make({"v", "w"}, {{"e", "v", "w"}, {"f", "w", "w"}});
}

// v1 -> w <- v2.
inline GraphPtr fork_graph() {
    return Graph::make({"v1", "v2", "w"}, {{"a", "v1", "w"}, {"b", "v2", "w"}});
}

// Single vertex carrying one loop.
inline GraphPtr single_loop() {
    return Graph::make({"v"}, {{"f", "v", "v"}});
}

inline VertexSet set_of(const GraphPtr& g, std::vector<std::string> ids) {
    return VertexSet::of(g, ids);
}

inline SatHerSet sat_of(const GraphPtr& g, std::vector<std::string> ids) {
    return SatHerSet::validated(set_of(g, std::move(ids)));
}

} // namespace grail::testing

#endif
