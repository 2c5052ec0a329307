#include "grail/generators.hpp"

#include <string>

namespace grail {

namespace {

std::string vertex_name(const std::string& bits) {
    return bits.empty() ? "v" : "v_" + bits;
}

std::string loop_name(const std::string& bits) {
    return bits.empty() ? "f" : "f_" + bits;
}

void collect_strings(unsigned depth, std::vector<std::string>& out) {
    out.push_back("");
    for (unsigned len = 1; len <= depth; ++len) {
        size_t begin = out.size() - (1ull << (len - 1));
        size_t end = out.size();
        for (size_t i = begin; i < end; ++i) {
            out.push_back(out[i] + "0");
            out.push_back(out[i] + "1");
        }
    }
}

} // namespace

Figure1 gen_figure1(unsigned depth, unsigned max_vertices) {
    if (depth < 1)
        throw InvalidSetError("depth must be at least 1");
    if (depth >= 63 || (1ull << (depth + 1)) - 1 > max_vertices)
        throw CapacityError("depth " + std::to_string(depth) + " needs " +
                            std::to_string((1ull << (depth + 1)) - 1) + " vertices, cap is " +
                            std::to_string(max_vertices));

    std::vector<std::string> strings;
    collect_strings(depth, strings);

    std::vector<std::string> vertices;
    std::vector<EdgeDecl> edges;
    std::vector<std::string> h_members;
    for (const auto& w : strings) {
        vertices.push_back(vertex_name(w));
        edges.push_back(EdgeDecl{loop_name(w), vertex_name(w), vertex_name(w)});
        if (!w.empty())
            edges.push_back(EdgeDecl{"e_" + w, vertex_name(w), vertex_name(w.substr(0, w.size() - 1))});
        if (w.find('0') != std::string::npos)
            h_members.push_back(vertex_name(w));
    }
    GraphPtr g = Graph::make(std::move(vertices), std::move(edges));
    SatHerSet h = SatHerSet::validated(VertexSet::of(g, h_members));
    return Figure1{g, std::move(h)};
}

GraphPtr gen_chain_loops(unsigned n) {
    if (n < 1)
        throw InvalidSetError("chain length must be at least 1");
    std::vector<std::string> vertices;
    std::vector<EdgeDecl> edges;
    std::string bits;
    for (unsigned k = 0; k < n; ++k, bits += "1") {
        vertices.push_back(vertex_name(bits));
        edges.push_back(EdgeDecl{loop_name(bits), vertex_name(bits), vertex_name(bits)});
        if (k > 0)
            edges.push_back(EdgeDecl{"e_" + bits, vertex_name(bits),
                                     vertex_name(bits.substr(0, bits.size() - 1))});
    }
    return Graph::make(std::move(vertices), std::move(edges));
}

GraphPtr gen_random(unsigned vertices, unsigned edges, double loop_prob, uint64_t seed) {
    if (vertices == 0 && edges > 0)
        throw InvalidSetError("cannot place edges in a graph with no vertices");
    std::vector<std::string> vs;
    vs.reserve(vertices);
    for (unsigned i = 0; i < vertices; ++i)
        vs.push_back("u" + std::to_string(i));
    SplitMix64 rng(seed);
    std::vector<EdgeDecl> es;
    es.reserve(edges);
    for (unsigned j = 0; j < edges; ++j) {
        std::string id = "e" + std::to_string(j);
        if (rng.chance(loop_prob)) {
            const std::string& v = vs[rng.bounded(vertices)];
            es.push_back(EdgeDecl{std::move(id), v, v});
        } else {
            const std::string& s = vs[rng.bounded(vertices)];
            const std::string& r = vs[rng.bounded(vertices)];
            es.push_back(EdgeDecl{std::move(id), s, r});
        }
    }
    return Graph::make(std::move(vs), std::move(es));
}

std::vector<GraphPtr> gen_ensemble(unsigned count, unsigned max_vertices, unsigned max_edges,
                                   double loop_prob, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<GraphPtr> out;
    out.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        unsigned n = static_cast<unsigned>(rng.bounded(max_vertices + 1));
        unsigned m = n == 0 ? 0 : static_cast<unsigned>(rng.bounded(max_edges + 1));
        uint64_t sub_seed = rng.next();
        out.push_back(gen_random(n, m, loop_prob, sub_seed));
    }
    return out;
}

} // namespace grail
