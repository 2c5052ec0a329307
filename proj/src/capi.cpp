#include "grail.h"

#include <cstring>
#include <json.hpp>
#include <string>

#include "grail/generators.hpp"
#include "grail/graph.hpp"
#include "grail/ideals.hpp"
#include "grail/io.hpp"
#include "grail/verification.hpp"

struct grail_graph {
    grail::GraphPtr g;
};

struct grail_lattice {
    grail::IdealLattice lattice;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
grail_status guarded(F&& f) {
    try {
        return f();
    } catch (const grail::ParseError& e) {
        g_last_error = e.what();
        return GRAIL_PARSE_ERROR;
    } catch (const grail::OwnershipError& e) {
        g_last_error = e.what();
        return GRAIL_INVALID_SET;
    } catch (const grail::InvalidSetError& e) {
        g_last_error = e.what();
        return GRAIL_INVALID_SET;
    } catch (const grail::CapacityError& e) {
        g_last_error = e.what();
        return GRAIL_CAPACITY_EXCEEDED;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GRAIL_INTERNAL_ERROR;
    }
}

std::vector<std::string> split_csv(const char* csv) {
    std::vector<std::string> out;
    if (!csv)
        return out;
    std::string s(csv);
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!item.empty())
            out.push_back(std::move(item));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

/// Resolve a csv set argument into a certified sat-her set, either by
/// exact validation or by saturating.
grail::SatHerSet resolve_set(const grail::GraphPtr& g, const char* csv, int exact) {
    grail::VertexSet raw = grail::VertexSet::of(g, split_csv(csv));
    if (exact)
        return grail::SatHerSet::validated(std::move(raw));
    return grail::saturate(raw);
}

grail::GraphFormat to_format(int format) {
    switch (format) {
    case GRAIL_FORMAT_LINE:
        return grail::GraphFormat::line;
    case GRAIL_FORMAT_JSON:
        return grail::GraphFormat::json;
    case GRAIL_FORMAT_DOT:
        return grail::GraphFormat::dot;
    default:
        throw grail::ParseError("unknown format code " + std::to_string(format));
    }
}

grail::Oracles broken_oracles() {
    grail::Oracles o;
    // Deliberately wrong: report the empty set as every annihilator.
    o.perp = [](const grail::SatHerSet& h) { return grail::VertexSet::empty(h.graph()); };
    return o;
}

grail_status finish_verify(const grail::VerificationReport& report, char** report_json,
                           char** report_table) {
    if (report_json)
        *report_json = dup_string(report.to_json());
    if (report_table)
        *report_table = dup_string(report.to_table());
    if (!report.ok()) {
        g_last_error = "verification failed";
        return GRAIL_VERIFY_FAILED;
    }
    return GRAIL_OK;
}

} // namespace

extern "C" {

const char* grail_last_error(void) {
    return g_last_error.c_str();
}

void grail_string_free(char* s) {
    std::free(s);
}

void grail_graph_free(grail_graph* g) {
    delete g;
}

void grail_lattice_free(grail_lattice* l) {
    delete l;
}

grail_status grail_graph_parse(const char* text, int format, grail_graph** out) {
    return guarded([&] {
        *out = new grail_graph{grail::parse_graph(text ? text : "", to_format(format))};
        return GRAIL_OK;
    });
}

grail_status grail_graph_serialize(const grail_graph* g, int format, char** out) {
    return guarded([&] {
        *out = dup_string(grail::serialize_graph(*g->g, to_format(format)));
        return GRAIL_OK;
    });
}

size_t grail_graph_vertex_count(const grail_graph* g) {
    return static_cast<size_t>(g->g->vertex_count());
}

size_t grail_graph_edge_count(const grail_graph* g) {
    return static_cast<size_t>(g->g->edge_count());
}

int grail_graph_equal(const grail_graph* a, const grail_graph* b) {
    return *a->g == *b->g ? 1 : 0;
}

grail_status grail_condition_l(const grail_graph* g, int* holds) {
    return guarded([&] {
        *holds = grail::has_condition_l(*g->g) ? 1 : 0;
        return GRAIL_OK;
    });
}

grail_status grail_entryless_cycle(const grail_graph* g, char** cycle_json) {
    return guarded([&] {
        auto cyc = grail::find_entryless_cycle(*g->g);
        *cycle_json = cyc ? dup_string(grail::cycle_to_json(*cyc)) : nullptr;
        return GRAIL_OK;
    });
}

grail_status grail_saturate(const grail_graph* g, const char* set_csv, char** out_json) {
    return guarded([&] {
        auto sat = grail::saturate(grail::VertexSet::of(g->g, split_csv(set_csv)));
        *out_json = dup_string(grail::set_to_json(sat.set()));
        return GRAIL_OK;
    });
}

grail_status grail_set_flags(const grail_graph* g, const char* set_csv, int* hereditary,
                             int* saturated) {
    return guarded([&] {
        auto s = grail::VertexSet::of(g->g, split_csv(set_csv));
        *hereditary = grail::is_hereditary(s) ? 1 : 0;
        *saturated = grail::is_saturated(s) ? 1 : 0;
        return GRAIL_OK;
    });
}

grail_status grail_perp(const grail_graph* g, const char* set_csv, int exact, char** out_json) {
    return guarded([&] {
        auto p = grail::perp(resolve_set(g->g, set_csv, exact));
        *out_json = dup_string(grail::set_to_json(p.set()));
        return GRAIL_OK;
    });
}

grail_status grail_perp_perp(const grail_graph* g, const char* set_csv, int exact,
                             char** out_json) {
    return guarded([&] {
        auto p = grail::perp_perp(resolve_set(g->g, set_csv, exact));
        *out_json = dup_string(grail::set_to_json(p.set()));
        return GRAIL_OK;
    });
}

grail_status grail_is_regular(const grail_graph* g, const char* set_csv, int exact, int* regular) {
    return guarded([&] {
        *regular = grail::is_regular(resolve_set(g->g, set_csv, exact)) ? 1 : 0;
        return GRAIL_OK;
    });
}

grail_status grail_quotient(const grail_graph* g, const char* set_csv, int exact,
                            grail_graph** out) {
    return guarded([&] {
        *out = new grail_graph{grail::quotient_graph(resolve_set(g->g, set_csv, exact))};
        return GRAIL_OK;
    });
}

grail_status grail_lattice_compute(const grail_graph* g, size_t max_entries, grail_lattice** out) {
    return guarded([&] {
        grail::LatticeOptions opts;
        if (max_entries > 0)
            opts.max_entries = max_entries;
        *out = new grail_lattice{grail::IdealLattice::enumerate(g->g, opts)};
        return GRAIL_OK;
    });
}

size_t grail_lattice_size(const grail_lattice* l) {
    return l->lattice.size();
}

grail_status grail_lattice_to_json(const grail_lattice* l, char** out) {
    return guarded([&] {
        *out = dup_string(l->lattice.to_json());
        return GRAIL_OK;
    });
}

grail_status grail_lattice_to_table(const grail_lattice* l, char** out) {
    return guarded([&] {
        *out = dup_string(l->lattice.to_table());
        return GRAIL_OK;
    });
}

grail_status grail_gen_figure1(unsigned depth, grail_graph** out, char** h_json) {
    return guarded([&] {
        auto fig = grail::gen_figure1(depth);
        *out = new grail_graph{fig.graph};
        if (h_json)
            *h_json = dup_string(grail::set_to_json(fig.h.set()));
        return GRAIL_OK;
    });
}

grail_status grail_gen_chain_loops(unsigned n, grail_graph** out) {
    return guarded([&] {
        *out = new grail_graph{grail::gen_chain_loops(n)};
        return GRAIL_OK;
    });
}

grail_status grail_gen_random(unsigned vertices, unsigned edges, double loop_prob, uint64_t seed,
                              grail_graph** out) {
    return guarded([&] {
        *out = new grail_graph{grail::gen_random(vertices, edges, loop_prob, seed)};
        return GRAIL_OK;
    });
}

grail_status grail_verify_graph(const grail_graph* g, int inject_failure, char** report_json,
                                char** report_table) {
    return guarded([&] {
        auto report = grail::verify_graph(g->g, inject_failure ? broken_oracles() : grail::Oracles{});
        return finish_verify(report, report_json, report_table);
    });
}

grail_status grail_verify_ensemble(unsigned count, unsigned max_vertices, unsigned max_edges,
                                   double loop_prob, uint64_t seed, int inject_failure,
                                   char** report_json, char** report_table) {
    return guarded([&] {
        grail::EnsembleParams params;
        params.count = count;
        params.max_vertices = max_vertices;
        params.max_edges = max_edges;
        params.loop_prob = loop_prob;
        params.seed = seed;
        auto report =
            grail::verify_ensemble(params, inject_failure ? broken_oracles() : grail::Oracles{});
        return finish_verify(report, report_json, report_table);
    });
}

grail_status grail_find_l_counterexample(const grail_graph* g, char** witness_json) {
    return guarded([&] {
        auto cx = grail::find_l_preservation_counterexample(g->g);
        if (!cx) {
            *witness_json = nullptr;
            return GRAIL_OK;
        }
        nlohmann::json j{{"set", cx->first.members()},
                         {"cycle", nlohmann::json::parse(grail::cycle_to_json(cx->second))}};
        *witness_json = dup_string(j.dump());
        return GRAIL_OK;
    });
}

} // extern "C"
