#include "grail/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace grail {

GraphPtr Graph::make(std::vector<std::string> vertices, std::vector<EdgeDecl> edges) {
    auto g = std::shared_ptr<Graph>(new Graph());
    std::sort(vertices.begin(), vertices.end());
    for (size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i] == vertices[i - 1])
            throw ParseError("duplicate vertex id: " + vertices[i]);
    }
    g->vertices_ = std::move(vertices);

    std::sort(edges.begin(), edges.end(),
              [](const EdgeDecl& a, const EdgeDecl& b) { return a.id < b.id; });
    g->edges_.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i > 0 && edges[i].id == edges[i - 1].id)
            throw ParseError("duplicate edge id: " + edges[i].id);
        auto src = g->vertex_index(edges[i].source);
        if (!src)
            throw ParseError("edge " + edges[i].id + ": unknown vertex " + edges[i].source);
        auto rng = g->vertex_index(edges[i].range);
        if (!rng)
            throw ParseError("edge " + edges[i].id + ": unknown vertex " + edges[i].range);
        g->edges_.push_back(Edge{std::move(edges[i].id), *src, *rng});
    }
    g->build_adjacency();
    return g;
}

void Graph::build_adjacency() {
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        out_[static_cast<size_t>(edges_[static_cast<size_t>(e)].source)].push_back(e);
        in_[static_cast<size_t>(edges_[static_cast<size_t>(e)].range)].push_back(e);
    }
}

std::optional<int> Graph::vertex_index(std::string_view id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end() || *it != id)
        return std::nullopt;
    return static_cast<int>(it - vertices_.begin());
}

bool Graph::operator==(const Graph& other) const {
    if (vertices_ != other.vertices_ || edges_.size() != other.edges_.size())
        return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].id != other.edges_[i].id || edges_[i].source != other.edges_[i].source ||
            edges_[i].range != other.edges_[i].range)
            return false;
    }
    return true;
}

VertexSet::VertexSet(GraphPtr graph, Bits bits) : graph_(std::move(graph)), bits_(std::move(bits)) {
    if (bits_.size() != static_cast<size_t>(graph_->vertex_count()))
        throw OwnershipError("vertex set size does not match graph");
}

VertexSet VertexSet::empty(GraphPtr graph) {
    Bits b(static_cast<size_t>(graph->vertex_count()));
    return VertexSet(std::move(graph), std::move(b));
}

VertexSet VertexSet::full(GraphPtr graph) {
    Bits b(static_cast<size_t>(graph->vertex_count()));
    b.set();
    return VertexSet(std::move(graph), std::move(b));
}

VertexSet VertexSet::of(GraphPtr graph, std::span<const std::string> ids) {
    Bits b(static_cast<size_t>(graph->vertex_count()));
    for (const auto& id : ids) {
        auto v = graph->vertex_index(id);
        if (!v)
            throw InvalidSetError("unknown vertex: " + id);
        b.set(static_cast<size_t>(*v));
    }
    return VertexSet(std::move(graph), std::move(b));
}

std::vector<std::string> VertexSet::members() const {
    std::vector<std::string> out;
    out.reserve(bits_.count());
    for (size_t v = bits_.find_first(); v != Bits::npos; v = bits_.find_next(v))
        out.push_back(graph_->vertex_id(static_cast<int>(v)));
    return out;
}

bool VertexSet::operator==(const VertexSet& other) const {
    require_same_graph(*this, other);
    return bits_ == other.bits_;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    require_same_graph(*this, other);
    return bits_.is_subset_of(other.bits_);
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
    require_same_graph(*this, other);
    return VertexSet(graph_, bits_ & other.bits_);
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
    require_same_graph(*this, other);
    return VertexSet(graph_, bits_ | other.bits_);
}

VertexSet VertexSet::complement() const {
    return VertexSet(graph_, ~bits_);
}

bool same_graph(const GraphPtr& a, const GraphPtr& b) {
    return a == b || *a == *b;
}

void require_same_graph(const VertexSet& a, const VertexSet& b) {
    if (!same_graph(a.graph(), b.graph()))
        throw OwnershipError("vertex sets belong to different graphs");
}

void require_owner(const Graph& g, const VertexSet& s) {
    if (s.graph().get() != &g && !(*s.graph() == g))
        throw OwnershipError("vertex set belongs to a different graph");
}

CycleWitness CycleWitness::make(const Graph& g, std::span<const int> edge_indices) {
    if (edge_indices.empty())
        throw InvariantError("cycle witness must contain at least one edge");
    CycleWitness w;
    const size_t n = edge_indices.size();
    std::unordered_set<int> seen;
    for (size_t i = 0; i < n; ++i) {
        const auto& e = g.edge(edge_indices[i]);
        const auto& next = g.edge(edge_indices[(i + 1) % n]);
        if (e.source != next.range)
            throw InvariantError("cycle witness edges are not composable");
        if (!seen.insert(e.range).second)
            throw InvariantError("cycle witness revisits a vertex");
        w.edge_ids_.push_back(e.id);
        w.vertices_.push_back(g.vertex_id(e.range));
    }
    return w;
}

namespace {

Bits closure(const VertexSet& s, bool forward) {
    const Graph& g = *s.graph();
    Bits reached = s.bits();
    std::deque<int> work;
    for (size_t v = reached.find_first(); v != Bits::npos; v = reached.find_next(v))
        work.push_back(static_cast<int>(v));
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        auto step = forward ? g.out_edges(v) : g.in_edges(v);
        for (int e : step) {
            int w = forward ? g.edge(e).range : g.edge(e).source;
            if (!reached.test(static_cast<size_t>(w))) {
                reached.set(static_cast<size_t>(w));
                work.push_back(w);
            }
        }
    }
    return reached;
}

} // namespace

VertexSet forward_closure(const VertexSet& s) {
    return s.with_bits(closure(s, true));
}

VertexSet backward_closure(const VertexSet& s) {
    return s.with_bits(closure(s, false));
}

std::optional<CycleWitness> find_entryless_cycle(const Graph& g) {
    // A cycle has no entry iff every vertex on it has total in-degree 1.
    // Restricted to in-degree-1 vertices, following the unique incoming
    // edge is a partial function; entryless cycles are its cycles.
    const int n = g.vertex_count();
    std::vector<int> state(static_cast<size_t>(n), 0); // 0 new, 1 on path, 2 done
    for (int start = 0; start < n; ++start) {
        if (state[static_cast<size_t>(start)] != 0 || g.in_degree(start) != 1)
            continue;
        std::vector<int> path;
        int cur = start;
        while (cur >= 0 && state[static_cast<size_t>(cur)] == 0 && g.in_degree(cur) == 1) {
            state[static_cast<size_t>(cur)] = 1;
            path.push_back(cur);
            cur = g.edge(g.in_edges(cur)[0]).source;
        }
        if (cur >= 0 && state[static_cast<size_t>(cur)] == 1) {
            // Closed back onto the current path: collect the cycle.
            std::vector<int> cycle_edges;
            auto it = std::find(path.begin(), path.end(), cur);
            for (auto p = it; p != path.end(); ++p)
                cycle_edges.push_back(g.in_edges(*p)[0]);
            return CycleWitness::make(g, cycle_edges);
        }
        for (int v : path)
            state[static_cast<size_t>(v)] = 2;
    }
    return std::nullopt;
}

bool has_condition_l(const Graph& g) {
    return !find_entryless_cycle(g).has_value();
}

} // namespace grail
