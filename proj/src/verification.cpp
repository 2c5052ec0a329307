#include "grail/verification.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>

#include "grail/generators.hpp"
#include "grail/io.hpp"

namespace grail {

std::vector<VertexSet> oracle_enumerate_sat_her(const GraphPtr& g) {
    const int n = g->vertex_count();
    if (n > 20)
        throw CapacityError("exhaustive subset oracle is limited to 20 vertices, got " +
                            std::to_string(n));
    std::vector<VertexSet> out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto in = [&](int v) { return (mask >> v) & 1u; };
        // Hereditary, edge by edge: range in H forces source in H.
        bool hereditary = true;
        for (const auto& e : g->edges()) {
            if (in(e.range) && !in(e.source)) {
                hereditary = false;
                break;
            }
        }
        if (!hereditary)
            continue;
        // Saturated: a receiving vertex whose in-edge sources all lie in
        // H must itself lie in H.
        bool saturated = true;
        for (int v = 0; v < n && saturated; ++v) {
            if (in(v) || g->in_degree(v) == 0)
                continue;
            bool all_inside = true;
            for (int e : g->in_edges(v)) {
                if (!in(g->edge(e).source)) {
                    all_inside = false;
                    break;
                }
            }
            if (all_inside)
                saturated = false;
        }
        if (!saturated)
            continue;
        Bits bits(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            if (in(v))
                bits.set(static_cast<size_t>(v));
        }
        out.emplace_back(g, std::move(bits));
    }
    return out;
}

VertexSet oracle_perp(const SatHerSet& h) {
    auto all = oracle_enumerate_sat_her(h.graph());
    std::vector<const VertexSet*> disjoint;
    for (const auto& s : all) {
        if ((s.bits() & h.bits()).none())
            disjoint.push_back(&s);
    }
    // disjoint is nonempty: the empty set is always sat-her.
    const VertexSet* best = disjoint.front();
    for (const auto* s : disjoint) {
        if (s->bits().count() > best->bits().count())
            best = s;
    }
    for (const auto* s : disjoint) {
        if (!s->bits().is_subset_of(best->bits()))
            throw NonUniqueMaximumError("two incomparable maximal sat-her sets disjoint from " +
                                        render_set(h.set()) + ": " + render_set(*best) + " and " +
                                        render_set(*s));
    }
    return *best;
}

std::vector<std::vector<int>> enumerate_simple_cycles(const Graph& g) {
    // Each simple cycle is found once, rooted at its least vertex.
    std::vector<std::vector<int>> cycles;
    const int n = g.vertex_count();
    std::vector<bool> on_path(static_cast<size_t>(n), false);
    std::vector<int> path_edges;

    std::function<void(int, int)> dfs = [&](int start, int cur) {
        for (int e : g.out_edges(cur)) {
            int w = g.edge(e).range;
            if (w == start) {
                path_edges.push_back(e);
                cycles.push_back(path_edges);
                path_edges.pop_back();
            } else if (w > start && !on_path[static_cast<size_t>(w)]) {
                on_path[static_cast<size_t>(w)] = true;
                path_edges.push_back(e);
                dfs(start, w);
                path_edges.pop_back();
                on_path[static_cast<size_t>(w)] = false;
            }
        }
    };
    for (int start = 0; start < n; ++start) {
        on_path[static_cast<size_t>(start)] = true;
        dfs(start, start);
        on_path[static_cast<size_t>(start)] = false;
    }
    return cycles;
}

bool oracle_condition_l(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw CapacityError("cycle enumeration oracle is limited to " +
                            std::to_string(max_vertices) + " vertices, got " +
                            std::to_string(g.vertex_count()));
    for (const auto& cycle : enumerate_simple_cycles(g)) {
        bool has_entry = false;
        for (int ce : cycle) {
            int v = g.edge(ce).range;
            for (int f : g.in_edges(v)) {
                if (f != ce) {
                    has_entry = true;
                    break;
                }
            }
            if (has_entry)
                break;
        }
        if (!has_entry)
            return false;
    }
    return true;
}

bool VerificationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRecord& c) { return c.pass || c.skipped; });
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["graph"] = {{"vertices", vertex_count}, {"edges", edge_count}};
    if (ensemble)
        j["ensemble"] = {{"seed", ensemble->seed}, {"count", ensemble->count}};
    j["ok"] = ok();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc{{"name", c.name}, {"pass", c.pass}, {"skipped", c.skipped}};
        if (!c.detail.empty())
            jc["detail"] = c.detail;
        if (c.witness) {
            jc["witness"] = {{"graph", c.witness->graph_text},
                             {"set", c.witness->set},
                             {"cycle", c.witness->cycle_edges}};
        }
        j["checks"].push_back(jc);
    }
    return j.dump(2) + "\n";
}

std::string VerificationReport::to_table() const {
    std::string out;
    out += "graph: " + std::to_string(vertex_count) + " vertices, " + std::to_string(edge_count) +
           " edges\n";
    if (ensemble)
        out += "ensemble: count=" + std::to_string(ensemble->count) +
               " seed=" + std::to_string(ensemble->seed) + "\n";
    for (const auto& c : checks) {
        out += (c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL"));
        out += "  " + c.name;
        if (!c.detail.empty())
            out += "  (" + c.detail + ")";
        out += "\n";
    }
    out += ok() ? "result: OK\n" : "result: FAILED\n";
    return out;
}

namespace {

Witness make_witness(const Graph& g, const std::vector<std::string>& set,
                     const std::vector<std::string>& cycle = {}) {
    return Witness{serialize_graph(g, GraphFormat::line), set, cycle};
}

} // namespace

VerificationReport verify_graph(const GraphPtr& g, const Oracles& oracles) {
    VerificationReport report;
    report.vertex_count = static_cast<size_t>(g->vertex_count());
    report.edge_count = static_cast<size_t>(g->edge_count());

    auto add = [&](CheckRecord rec) { report.checks.push_back(std::move(rec)); };
    auto skip = [&](const std::string& name, const std::string& why) {
        add({name, true, true, why, std::nullopt});
    };

    IdealLattice lattice = IdealLattice::enumerate(g);

    // Lattice agreement with the exhaustive subset filter.
    if (g->vertex_count() <= 20) {
        CheckRecord rec{"lattice_oracle_agreement"};
        auto oracle_sets = oracle_enumerate_sat_her(g);
        bool equal = oracle_sets.size() == lattice.size();
        if (equal) {
            for (const auto& s : oracle_sets) {
                if (!lattice.index_of(s.bits())) {
                    equal = false;
                    rec.witness = make_witness(*g, s.members());
                    break;
                }
            }
        }
        rec.pass = equal;
        rec.detail = std::to_string(lattice.size()) + " lattice elements";
        add(std::move(rec));
    } else {
        skip("lattice_oracle_agreement", "graph exceeds the subset-oracle capacity");
    }

    // (a) perp vs brute-force annihilator oracle.
    {
        CheckRecord rec{"perp_oracle_agreement"};
        if (g->vertex_count() > 20) {
            rec.skipped = true;
            rec.detail = "graph exceeds the subset-oracle capacity";
        } else {
            for (const auto& h : lattice.entries()) {
                try {
                    VertexSet expected = oracles.perp(h);
                    if (!(perp(h).bits() == expected.bits())) {
                        rec.pass = false;
                        rec.detail = "perp(" + render_set(h.set()) + ") != oracle";
                        rec.witness = make_witness(*g, h.members());
                        break;
                    }
                } catch (const NonUniqueMaximumError& e) {
                    rec.pass = false;
                    rec.detail = e.what();
                    rec.witness = make_witness(*g, h.members());
                    break;
                }
            }
        }
        add(std::move(rec));
    }

    // (b) perp lands in the lattice, (c) triple perp, (d) double-perp formula.
    {
        CheckRecord b{"perp_is_sat_her"};
        CheckRecord c{"triple_perp_identity"};
        CheckRecord d{"perp_perp_formula"};
        for (const auto& h : lattice.entries()) {
            try {
                SatHerSet p = perp(h); // validates sat-her internally
                if (!(perp(perp(p)).bits() == p.bits())) {
                    c.pass = false;
                    c.witness = make_witness(*g, h.members());
                }
                if (!(perp_perp(h).bits() == perp(p).bits())) {
                    d.pass = false;
                    d.witness = make_witness(*g, h.members());
                }
            } catch (const InvariantError& e) {
                b.pass = false;
                b.detail = e.what();
                b.witness = make_witness(*g, h.members());
            }
        }
        add(std::move(b));
        add(std::move(c));
        add(std::move(d));
    }

    // (f) Condition (L) checker vs the literal cycle-enumeration oracle.
    bool g_has_l = has_condition_l(*g);
    if (g->vertex_count() <= 12) {
        CheckRecord rec{"condition_l_oracle_agreement"};
        rec.pass = (g_has_l == oracles.condition_l(*g));
        if (!rec.pass)
            rec.witness = make_witness(*g, {});
        rec.detail = g_has_l ? "graph satisfies (L)" : "graph fails (L)";
        add(std::move(rec));
    } else {
        skip("condition_l_oracle_agreement", "graph exceeds the cycle-oracle capacity");
    }

    // (e) regular quotients preserve Condition (L).
    {
        CheckRecord rec{"regular_quotient_preserves_l"};
        if (!g_has_l) {
            rec.detail = "vacuous: graph fails (L)";
        } else {
            for (size_t i = 0; i < lattice.size(); ++i) {
                if (!lattice.regular(i))
                    continue;
                GraphPtr q = quotient_graph(lattice.entry(i));
                if (!has_condition_l(*q)) {
                    rec.pass = false;
                    auto cyc = find_entryless_cycle(*q);
                    rec.witness = make_witness(*g, lattice.entry(i).members(),
                                               cyc ? cyc->edge_ids() : std::vector<std::string>{});
                    break;
                }
            }
        }
        add(std::move(rec));
    }

    // Informational: non-regular H on an (L) graph whose quotient loses (L).
    if (g_has_l) {
        CheckRecord rec{"non_regular_quotient_l_witness"};
        auto cx = find_l_preservation_counterexample(g);
        if (cx) {
            rec.detail = "H=" + render_set(cx->first.set()) + " is not regular; quotient has entryless cycle through " +
                         cx->second.vertices().front();
            rec.witness = make_witness(*g, cx->first.members(), cx->second.edge_ids());
        } else {
            rec.detail = "none: every non-regular quotient keeps (L)";
        }
        add(std::move(rec));
    }

    return report;
}

VerificationReport verify_ensemble(const EnsembleParams& params, const Oracles& oracles) {
    VerificationReport agg;
    agg.ensemble = EnsembleMeta{params.seed, params.count};

    // Aggregate per check name, keeping the first failing witness.
    std::vector<std::string> order;
    std::map<std::string, CheckRecord> merged;
    std::map<std::string, unsigned> failures;

    auto graphs = gen_ensemble(params.count, params.max_vertices, params.max_edges,
                               params.loop_prob, params.seed);
    for (const auto& g : graphs) {
        agg.vertex_count += static_cast<size_t>(g->vertex_count());
        agg.edge_count += static_cast<size_t>(g->edge_count());
        VerificationReport r = verify_graph(g, oracles);
        for (auto& c : r.checks) {
            auto [it, inserted] = merged.emplace(c.name, c);
            if (inserted) {
                order.push_back(c.name);
                it->second.detail.clear();
            }
            if (!c.pass && !c.skipped) {
                if (failures[c.name]++ == 0) {
                    it->second.pass = false;
                    it->second.witness = c.witness;
                    it->second.detail = c.detail;
                }
            }
        }
    }
    for (const auto& name : order) {
        CheckRecord rec = merged.at(name);
        unsigned nfail = failures.count(name) ? failures.at(name) : 0;
        rec.skipped = false;
        if (rec.detail.empty())
            rec.detail = std::to_string(nfail) + " failures over " + std::to_string(graphs.size()) +
                         " graphs";
        agg.checks.push_back(std::move(rec));
    }
    return agg;
}

std::optional<std::pair<SatHerSet, CycleWitness>>
find_l_preservation_counterexample(const GraphPtr& g, LatticeOptions opts) {
    if (!has_condition_l(*g))
        throw InvalidSetError("counterexample search requires a graph satisfying Condition (L)");
    IdealLattice lattice = IdealLattice::enumerate(g, opts);
    for (size_t i = 0; i < lattice.size(); ++i) {
        if (lattice.regular(i))
            continue;
        GraphPtr q = quotient_graph(lattice.entry(i));
        if (auto cyc = find_entryless_cycle(*q))
            return std::make_pair(lattice.entry(i), *cyc);
    }
    return std::nullopt;
}

} // namespace grail
