#ifndef GRAIL_IDEALS_HPP
#define GRAIL_IDEALS_HPP

#include <cstddef>
#include <vector>

#include "grail/graph.hpp"

namespace grail {

/// True iff every path into s starts in s; equivalently
/// backward_closure(s) == s.
bool is_hereditary(const VertexSet& s);

/// True iff every vertex that receives at least one edge, all of whose
/// in-edge sources lie in s, is itself in s.  Vertices receiving no edge
/// impose no constraint.
bool is_saturated(const VertexSet& s);

/// Smallest hereditary superset of s (equals backward_closure).
VertexSet hereditary_closure(const VertexSet& s);

/// A vertex set certified saturated and hereditary: the combinatorial
/// stand-in for a gauge-invariant ideal.
class SatHerSet {
public:
    /// Exact constructor: throws InvalidSetError unless s is already
    /// saturated and hereditary.
    static SatHerSet validated(VertexSet s);

    const VertexSet& set() const { return set_; }
    const GraphPtr& graph() const { return set_.graph(); }
    const Bits& bits() const { return set_.bits(); }
    std::vector<std::string> members() const { return set_.members(); }
    size_t size() const { return set_.size(); }

    bool operator==(const SatHerSet& other) const { return set_ == other.set_; }

private:
    friend SatHerSet saturate(const VertexSet&);
    friend SatHerSet perp(const SatHerSet&);
    friend class IdealLattice;
    explicit SatHerSet(VertexSet s) : set_(std::move(s)) {}
    VertexSet set_;
};

/// Smallest saturated hereditary set containing s, by alternating the
/// hereditary closure and the saturation step to a joint fixpoint.
SatHerSet saturate(const VertexSet& s);

/// Annihilator at the vertex level: complement of the forward closure.
/// The result is itself saturated hereditary; violation of that is a
/// defect and raises InvariantError.
SatHerSet perp(const SatHerSet& h);

/// {w : backward_closure({w}) subset of forward_closure(h)}.  Checked
/// against perp(perp(h)) when GRAIL_CHECK_INTERNAL is defined.
SatHerSet perp_perp(const SatHerSet& h);

/// h == perp_perp(h).
bool is_regular(const SatHerSet& h);

SatHerSet meet(const SatHerSet& a, const SatHerSet& b);
SatHerSet join(const SatHerSet& a, const SatHerSet& b);

/// Subgraph on the vertices outside h with every edge whose source
/// survives.  Heredity guarantees no dangling edge; ids are preserved.
GraphPtr quotient_graph(const SatHerSet& h);

/// Quotient by a merely-hereditary set.  Well-formed either way; the
/// flag records whether the input was also saturated.
struct QuotientResult {
    GraphPtr graph;
    bool input_saturated;
};
QuotientResult quotient_graph_permissive(const VertexSet& hereditary_set);

struct LatticeOptions {
    size_t max_entries = 100000;
};

/// The complete family of saturated hereditary sets of one graph,
/// inclusion-ordered, with cached regularity flags and perp partners.
/// Entries are sorted by (cardinality, lexicographic member list).
class IdealLattice {
public:
    static IdealLattice enumerate(GraphPtr g, LatticeOptions opts = {});

    const GraphPtr& graph() const { return graph_; }
    size_t size() const { return entries_.size(); }
    const SatHerSet& entry(size_t i) const { return entries_[i]; }
    const std::vector<SatHerSet>& entries() const { return entries_; }
    bool regular(size_t i) const { return regular_[i]; }
    size_t perp_index(size_t i) const { return perp_index_[i]; }
    std::optional<size_t> index_of(const Bits& bits) const;

    std::vector<SatHerSet> regular_ideals() const;

    std::string to_json() const;
    std::string to_table() const;

private:
    GraphPtr graph_;
    std::vector<SatHerSet> entries_;
    std::vector<bool> regular_;
    std::vector<size_t> perp_index_;
};

} // namespace grail

#endif
