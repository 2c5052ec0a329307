#ifndef GRAIL_GRAPH_HPP
#define GRAIL_GRAPH_HPP

#include <boost/dynamic_bitset.hpp>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grail/errors.hpp"

namespace grail {

using Bits = boost::dynamic_bitset<>;

class Graph;
using GraphPtr = std::shared_ptr<const Graph>;

/// One edge declaration as it appears in input: all endpoints by name.
struct EdgeDecl {
    std::string id;
    std::string source;
    std::string range;
};

/// Finite directed multigraph.  Vertices and edges carry opaque textual
/// ids; loops and parallel edges are allowed.  Vertex ids are ordered as
/// raw byte sequences and that order is the canonical order used by every
/// serialization.  Immutable after construction.
class Graph {
public:
    struct Edge {
        std::string id;
        int source; // vertex index
        int range;  // vertex index
    };

    /// Validating factory.  Throws ParseError on duplicate ids or on an
    /// edge endpoint that names no declared vertex.
    static GraphPtr make(std::vector<std::string> vertices,
                         std::vector<EdgeDecl> edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_id(int v) const { return vertices_[static_cast<size_t>(v)]; }
    const std::vector<std::string>& vertex_ids() const { return vertices_; }
    std::optional<int> vertex_index(std::string_view id) const;

    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Edge indices with source v, in edge-id order.
    std::span<const int> out_edges(int v) const { return out_[static_cast<size_t>(v)]; }
    /// Edge indices with range v, in edge-id order.
    std::span<const int> in_edges(int v) const { return in_[static_cast<size_t>(v)]; }
    int in_degree(int v) const { return static_cast<int>(in_[static_cast<size_t>(v)].size()); }

    /// Structural equality: same vertex ids and same (id, source, range)
    /// edge records.
    bool operator==(const Graph& other) const;

private:
    Graph() = default;
    void build_adjacency();

    std::vector<std::string> vertices_;     // byte-sorted
    std::vector<Edge> edges_;               // sorted by id
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// A subset of one graph's vertices.  The owning graph is part of the
/// value; combining sets from different graphs throws OwnershipError.
class VertexSet {
public:
    VertexSet(GraphPtr graph, Bits bits);

    static VertexSet empty(GraphPtr graph);
    static VertexSet full(GraphPtr graph);
    /// From vertex names; throws InvalidSetError on an unknown vertex.
    static VertexSet of(GraphPtr graph, std::span<const std::string> ids);

    const GraphPtr& graph() const { return graph_; }
    const Bits& bits() const { return bits_; }

    bool contains(int v) const { return bits_.test(static_cast<size_t>(v)); }
    size_t size() const { return bits_.count(); }
    bool is_empty() const { return bits_.none(); }

    /// Member ids in canonical (byte) order.
    std::vector<std::string> members() const;

    VertexSet with_bits(Bits b) const { return VertexSet(graph_, std::move(b)); }

    bool operator==(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;
    VertexSet operator&(const VertexSet& other) const;
    VertexSet operator|(const VertexSet& other) const;
    VertexSet complement() const;

private:
    GraphPtr graph_;
    Bits bits_;
};

/// Throws OwnershipError unless both sets belong to the same graph.
void require_same_graph(const VertexSet& a, const VertexSet& b);
/// Throws OwnershipError unless the set belongs to g.
void require_owner(const Graph& g, const VertexSet& s);
/// True when a and b denote the same graph (pointer or structural).
bool same_graph(const GraphPtr& a, const GraphPtr& b);

/// A simple directed cycle, as an edge sequence alpha_1..alpha_n with
/// s(alpha_i) = r(alpha_{i+1}) and r(alpha_1) = s(alpha_n).  vertices()
/// lists r(alpha_i), pairwise distinct.
class CycleWitness {
public:
    static CycleWitness make(const Graph& g, std::span<const int> edge_indices);

    const std::vector<std::string>& edge_ids() const { return edge_ids_; }
    const std::vector<std::string>& vertices() const { return vertices_; }

private:
    std::vector<std::string> edge_ids_;
    std::vector<std::string> vertices_; // vertices_[i] = r(edge i)
};

/// Vertices reachable from s by directed paths, s included.
VertexSet forward_closure(const VertexSet& s);
/// Vertices from which some directed path reaches s, s included.
VertexSet backward_closure(const VertexSet& s);

/// A simple cycle none of whose vertices receives an edge besides its own
/// cycle edge, or nullopt.  Equivalent characterization: every cycle
/// vertex has total in-degree exactly 1.
std::optional<CycleWitness> find_entryless_cycle(const Graph& g);

/// Condition (L): every cycle has an entry.
bool has_condition_l(const Graph& g);

} // namespace grail

#endif
