#include "grail/ideals.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <map>

#include "grail/io.hpp"

namespace grail {

bool is_hereditary(const VertexSet& s) {
    return backward_closure(s).bits() == s.bits();
}

namespace {

// Sources of all in-edges of v lie in bits (v must receive an edge).
bool in_sources_inside(const Graph& g, const Bits& bits, int v) {
    for (int e : g.in_edges(v)) {
        if (!bits.test(static_cast<size_t>(g.edge(e).source)))
            return false;
    }
    return true;
}

// One pass of the saturation step; returns true if anything was added.
bool saturation_pass(const Graph& g, Bits& bits) {
    bool changed = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (bits.test(static_cast<size_t>(v)) || g.in_degree(v) == 0)
            continue;
        if (in_sources_inside(g, bits, v)) {
            bits.set(static_cast<size_t>(v));
            changed = true;
        }
    }
    return changed;
}

Bits saturate_bits(const GraphPtr& gp, Bits bits) {
    VertexSet cur(gp, std::move(bits));
    Bits b = backward_closure(cur).bits();
    // Alternate the two closures to a joint fixpoint.
    for (;;) {
        if (!saturation_pass(*gp, b))
            break;
        Bits closed = backward_closure(VertexSet(gp, b)).bits();
        if (closed == b)
            continue;
        b = std::move(closed);
    }
    return b;
}

} // namespace

bool is_saturated(const VertexSet& s) {
    const Graph& g = *s.graph();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s.contains(v) || g.in_degree(v) == 0)
            continue;
        if (in_sources_inside(g, s.bits(), v))
            return false;
    }
    return true;
}

VertexSet hereditary_closure(const VertexSet& s) {
    return backward_closure(s);
}

SatHerSet SatHerSet::validated(VertexSet s) {
    if (!is_hereditary(s))
        throw InvalidSetError("set is not hereditary: " + render_set(s));
    if (!is_saturated(s))
        throw InvalidSetError("set is not saturated: " + render_set(s));
    return SatHerSet(std::move(s));
}

SatHerSet saturate(const VertexSet& s) {
    return SatHerSet(s.with_bits(saturate_bits(s.graph(), s.bits())));
}

SatHerSet perp(const SatHerSet& h) {
    VertexSet comp = forward_closure(h.set()).complement();
    if (!is_hereditary(comp) || !is_saturated(comp))
        throw InvariantError("perp produced a non-sat-her set: " + render_set(comp));
    return SatHerSet(std::move(comp));
}

SatHerSet perp_perp(const SatHerSet& h) {
    const GraphPtr& gp = h.graph();
    const Graph& g = *gp;
    Bits fc = forward_closure(h.set()).bits();
    Bits out(static_cast<size_t>(g.vertex_count()));
    for (int w = 0; w < g.vertex_count(); ++w) {
        Bits single(static_cast<size_t>(g.vertex_count()));
        single.set(static_cast<size_t>(w));
        if (backward_closure(VertexSet(gp, single)).bits().is_subset_of(fc))
            out.set(static_cast<size_t>(w));
    }
    SatHerSet result = SatHerSet::validated(VertexSet(gp, out));
#ifdef GRAIL_CHECK_INTERNAL
    if (!(perp(perp(h)).bits() == result.bits()))
        throw InvariantError("perp_perp formula disagrees with perp of perp");
#endif
    return result;
}

bool is_regular(const SatHerSet& h) {
    return perp_perp(h).bits() == h.bits();
}

SatHerSet meet(const SatHerSet& a, const SatHerSet& b) {
    return SatHerSet::validated(a.set() & b.set());
}

SatHerSet join(const SatHerSet& a, const SatHerSet& b) {
    return saturate(a.set() | b.set());
}

namespace {

GraphPtr quotient_impl(const VertexSet& h) {
    const Graph& g = *h.graph();
    std::vector<std::string> vertices;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!h.contains(v))
            vertices.push_back(g.vertex_id(v));
    }
    std::vector<EdgeDecl> edges;
    for (const auto& e : g.edges()) {
        if (!h.contains(e.source))
            edges.push_back(EdgeDecl{e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
    }
    return Graph::make(std::move(vertices), std::move(edges));
}

} // namespace

GraphPtr quotient_graph(const SatHerSet& h) {
    return quotient_impl(h.set());
}

QuotientResult quotient_graph_permissive(const VertexSet& hereditary_set) {
    if (!is_hereditary(hereditary_set))
        throw InvalidSetError("quotient requires a hereditary set: " + render_set(hereditary_set));
    return QuotientResult{quotient_impl(hereditary_set), is_saturated(hereditary_set)};
}

namespace {

// (cardinality, lexicographic member index list) order.
bool lattice_less(const Bits& a, const Bits& b) {
    size_t ca = a.count(), cb = b.count();
    if (ca != cb)
        return ca < cb;
    size_t i = a.find_first(), j = b.find_first();
    while (i != Bits::npos && j != Bits::npos) {
        if (i != j)
            return i < j;
        i = a.find_next(i);
        j = b.find_next(j);
    }
    return false;
}

} // namespace

IdealLattice IdealLattice::enumerate(GraphPtr g, LatticeOptions opts) {
    const int n = g->vertex_count();
    // Point closures generate every sat-her set under join; breadth-first
    // closure under joining one generator at a time.
    std::vector<Bits> generators;
    for (int v = 0; v < n; ++v) {
        Bits b(static_cast<size_t>(n));
        b.set(static_cast<size_t>(v));
        generators.push_back(saturate_bits(g, std::move(b)));
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    std::map<Bits, size_t> seen;
    std::deque<Bits> work;
    Bits empty(static_cast<size_t>(n));
    seen.emplace(empty, 0);
    work.push_back(empty);
    while (!work.empty()) {
        Bits cur = std::move(work.front());
        work.pop_front();
        for (const Bits& gen : generators) {
            if (gen.is_subset_of(cur))
                continue;
            Bits joined = saturate_bits(g, cur | gen);
            if (seen.emplace(joined, 0).second) {
                if (seen.size() > opts.max_entries)
                    throw CapacityError("ideal lattice exceeds cap of " +
                                        std::to_string(opts.max_entries) + " entries");
                work.push_back(joined);
            }
        }
    }

    std::vector<Bits> sorted;
    sorted.reserve(seen.size());
    for (const auto& [bits, _] : seen)
        sorted.push_back(bits);
    std::sort(sorted.begin(), sorted.end(), lattice_less);

    IdealLattice lat;
    lat.graph_ = g;
    std::map<Bits, size_t> index;
    for (size_t i = 0; i < sorted.size(); ++i) {
        lat.entries_.push_back(SatHerSet(VertexSet(g, sorted[i])));
        index.emplace(sorted[i], i);
    }
    lat.regular_.resize(sorted.size());
    lat.perp_index_.resize(sorted.size());
    for (size_t i = 0; i < sorted.size(); ++i) {
        SatHerSet p = perp(lat.entries_[i]);
        auto it = index.find(p.bits());
        if (it == index.end())
            throw InvariantError("perp of a lattice element is missing from the lattice");
        lat.perp_index_[i] = it->second;
        lat.regular_[i] = is_regular(lat.entries_[i]);
    }
    return lat;
}

std::optional<size_t> IdealLattice::index_of(const Bits& bits) const {
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].bits() == bits)
            return i;
    }
    return std::nullopt;
}

std::vector<SatHerSet> IdealLattice::regular_ideals() const {
    std::vector<SatHerSet> out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (regular_[i])
            out.push_back(entries_[i]);
    }
    return out;
}

std::string IdealLattice::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < entries_.size(); ++i) {
        arr.push_back({{"set", entries_[i].members()},
                       {"hereditary", true},
                       {"saturated", true},
                       {"regular", static_cast<bool>(regular_[i])},
                       {"perp", entries_[perp_index_[i]].members()}});
    }
    return arr.dump(2) + "\n";
}

std::string IdealLattice::to_table() const {
    std::vector<std::array<std::string, 3>> rows;
    rows.push_back({"SET", "REGULAR", "PERP"});
    for (size_t i = 0; i < entries_.size(); ++i) {
        rows.push_back({render_set(entries_[i].set()), regular_[i] ? "yes" : "no",
                        render_set(entries_[perp_index_[i]].set())});
    }
    std::array<size_t, 3> width{0, 0, 0};
    for (const auto& r : rows) {
        for (size_t c = 0; c < 3; ++c)
            width[c] = std::max(width[c], r[c].size());
    }
    std::string out;
    for (const auto& r : rows) {
        for (size_t c = 0; c < 3; ++c) {
            out += r[c];
            if (c + 1 < 3)
                out += std::string(width[c] - r[c].size() + 2, ' ');
        }
        out += "\n";
    }
    return out;
}

} // namespace grail
