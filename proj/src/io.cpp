#include "grail/io.hpp"

#include <map>

#include <json.hpp>
#include <sstream>

namespace grail {

namespace {

GraphPtr parse_line_format(std::string_view text) {
    std::vector<std::string> vertices;
    std::vector<EdgeDecl> edges;
    std::vector<size_t> edge_lines;
    std::map<std::string, size_t> vertex_line;
    std::map<std::string, size_t> edge_line_by_id;
    size_t lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::istringstream ss{std::string(line)};
        std::vector<std::string> tok;
        for (std::string t; ss >> t;)
            tok.push_back(std::move(t));
        if (tok.empty())
            continue;

        auto fail = [&](const std::string& what) {
            throw ParseError("line " + std::to_string(lineno) + ": " + what);
        };
        if (tok[0] == "vertex") {
            if (tok.size() != 2)
                fail("expected 'vertex <id>'");
            if (!vertex_line.emplace(tok[1], lineno).second)
                fail("duplicate vertex id '" + tok[1] + "'");
            vertices.push_back(tok[1]);
        } else if (tok[0] == "edge") {
            if (tok.size() != 4)
                fail("expected 'edge <id> <source> <range>'");
            if (!edge_line_by_id.emplace(tok[1], lineno).second)
                fail("duplicate edge id '" + tok[1] + "'");
            edges.push_back(EdgeDecl{tok[1], tok[2], tok[3]});
            edge_lines.push_back(lineno);
        } else {
            fail("unknown declaration '" + tok[0] + "'");
        }
    }
    // Endpoints may be declared anywhere in the file; check them last,
    // reporting the edge's own line.
    for (size_t i = 0; i < edges.size(); ++i) {
        for (const std::string* endpoint : {&edges[i].source, &edges[i].range}) {
            if (!vertex_line.count(*endpoint))
                throw ParseError("line " + std::to_string(edge_lines[i]) + ": unknown vertex " +
                                 *endpoint);
        }
    }
    return Graph::make(std::move(vertices), std::move(edges));
}

GraphPtr parse_json_format(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("expected object with 'vertices' and 'edges'");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string())
            throw ParseError("vertex ids must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<EdgeDecl> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_object() || !e.contains("id") || !e.contains("source") || !e.contains("range"))
            throw ParseError("edges must be objects with 'id', 'source', 'range'");
        edges.push_back(EdgeDecl{e.at("id").get<std::string>(), e.at("source").get<std::string>(),
                                 e.at("range").get<std::string>()});
    }
    return Graph::make(std::move(vertices), std::move(edges));
}

} // namespace

GraphPtr parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
    case GraphFormat::line:
        return parse_line_format(text);
    case GraphFormat::json:
        return parse_json_format(text);
    default:
        throw ParseError("dot format is output-only");
    }
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    switch (format) {
    case GraphFormat::line: {
        std::string out;
        for (const auto& v : g.vertex_ids())
            out += "vertex " + v + "\n";
        for (const auto& e : g.edges())
            out += "edge " + e.id + " " + g.vertex_id(e.source) + " " + g.vertex_id(e.range) + "\n";
        return out;
    }
    case GraphFormat::json: {
        nlohmann::json j;
        j["vertices"] = g.vertex_ids();
        j["edges"] = nlohmann::json::array();
        for (const auto& e : g.edges()) {
            j["edges"].push_back({{"id", e.id}, {"source", g.vertex_id(e.source)}, {"range", g.vertex_id(e.range)}});
        }
        return j.dump(2) + "\n";
    }
    case GraphFormat::dot: {
        std::string out = "digraph {\n";
        for (const auto& v : g.vertex_ids())
            out += "  \"" + v + "\";\n";
        for (const auto& e : g.edges())
            out += "  \"" + g.vertex_id(e.source) + "\" -> \"" + g.vertex_id(e.range) +
                   "\" [label=\"" + e.id + "\"];\n";
        out += "}\n";
        return out;
    }
    }
    throw ParseError("unknown format");
}

std::string set_to_json(const VertexSet& s) {
    return nlohmann::json(s.members()).dump();
}

std::string render_set(const VertexSet& s) {
    if (s.is_empty())
        return "∅";
    std::string out = "{";
    bool first = true;
    for (const auto& m : s.members()) {
        if (!first)
            out += ", ";
        out += m;
        first = false;
    }
    return out + "}";
}

std::string cycle_to_json(const CycleWitness& c) {
    return nlohmann::json{{"edges", c.edge_ids()}, {"vertices", c.vertices()}}.dump();
}

} // namespace grail
