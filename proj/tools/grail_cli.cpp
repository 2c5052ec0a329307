// grail command-line front end.  Talks to the shared library strictly
// through the C API in grail.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <string>

#include "grail.h"

namespace {

struct StringHolder {
    char* s = nullptr;
    ~StringHolder() { grail_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

struct GraphHolder {
    grail_graph* g = nullptr;
    ~GraphHolder() { grail_graph_free(g); }
};

struct LatticeHolder {
    grail_lattice* l = nullptr;
    ~LatticeHolder() { grail_lattice_free(l); }
};

int fail(grail_status st) {
    std::fprintf(stderr, "error: %s\n", grail_last_error());
    return static_cast<int>(st);
}

int usage_error(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    return 2;
}

/// Loads a graph file; the extension selects the format
/// (".graph" = line-based, ".json" = structured).
int load_graph(const std::string& path, GraphHolder& out) {
    int format;
    if (path.size() >= 6 && path.ends_with(".graph"))
        format = GRAIL_FORMAT_LINE;
    else if (path.size() >= 5 && path.ends_with(".json"))
        format = GRAIL_FORMAT_JSON;
    else
        return usage_error("cannot infer format of '" + path + "' (expected .graph or .json)");
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return usage_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (grail_status st = grail_graph_parse(text.c_str(), format, &out.g); st != GRAIL_OK)
        return fail(st);
    return 0;
}

std::string csv_of(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) {
        if (!out.empty())
            out += ",";
        out += id;
    }
    return out;
}

/// Without --exact the set is saturated up front, with a notice on
/// stderr when the closure actually added vertices.  Returns the csv to
/// hand to the library (always exact from here on), or nonzero status.
int resolve_set(const grail_graph* g, const std::string& set_csv, bool exact, std::string& out_csv) {
    if (exact) {
        int hereditary = 0, saturated = 0;
        if (grail_status st = grail_set_flags(g, set_csv.c_str(), &hereditary, &saturated);
            st != GRAIL_OK)
            return fail(st);
        if (!hereditary || !saturated) {
            std::fprintf(stderr, "error: set {%s} is not saturated hereditary (--exact)\n",
                         set_csv.c_str());
            return 3;
        }
        out_csv = set_csv;
        return 0;
    }
    StringHolder sat;
    if (grail_status st = grail_saturate(g, set_csv.c_str(), &sat.s); st != GRAIL_OK)
        return fail(st);
    auto members = nlohmann::json::parse(sat.str()).get<std::vector<std::string>>();
    std::set<std::string> given;
    {
        std::istringstream ss(set_csv);
        for (std::string item; std::getline(ss, item, ',');) {
            if (!item.empty())
                given.insert(item);
        }
    }
    if (given != std::set<std::string>(members.begin(), members.end()))
        std::fprintf(stderr, "notice: input set saturated to {%s}\n", csv_of(members).c_str());
    out_csv = csv_of(members);
    return 0;
}

std::string render_members(const std::string& json_array) {
    auto members = nlohmann::json::parse(json_array).get<std::vector<std::string>>();
    if (members.empty())
        return "∅";
    std::string out = "{";
    for (size_t i = 0; i < members.size(); ++i)
        out += (i ? ", " : "") + members[i];
    return out + "}";
}

enum class Mode { table, structured, dot };

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gauge-invariant ideal lattices of finite directed graphs"};
    app.require_subcommand(1);

    std::string input;
    std::string set_csv;
    bool exact = false;
    bool flag_structured = false, flag_dot = false;

    auto add_common = [&](CLI::App* cmd, bool needs_set, bool allows_dot) {
        cmd->add_option("input", input, "graph file (.graph or .json)")->required();
        if (needs_set)
            cmd->add_option("--set", set_csv, "comma-separated vertex ids")->required();
        if (needs_set)
            cmd->add_flag("--exact", exact, "reject sets that are not saturated hereditary");
        cmd->add_flag("--structured", flag_structured, "JSON output");
        if (allows_dot)
            cmd->add_flag("--dot", flag_dot, "DOT output");
    };

    auto* cmd_lattice = app.add_subcommand("lattice", "all saturated hereditary sets");
    add_common(cmd_lattice, false, false);
    auto* cmd_perp = app.add_subcommand("perp", "annihilator of a set");
    add_common(cmd_perp, true, false);
    auto* cmd_regular = app.add_subcommand("regular", "test regularity of a set");
    add_common(cmd_regular, true, false);
    auto* cmd_quotient = app.add_subcommand("quotient", "quotient graph by a set");
    add_common(cmd_quotient, true, true);
    auto* cmd_checkl = app.add_subcommand("check-l", "Condition (L) test");
    add_common(cmd_checkl, false, false);

    auto* cmd_verify = app.add_subcommand("verify", "run theorem checks with brute-force oracles");
    std::string verify_input;
    unsigned ens_count = 0, ens_max_v = 7, ens_max_e = 14;
    double ens_loop_prob = 0.3;
    uint64_t ens_seed = 0;
    bool inject_failure = false;
    cmd_verify->add_option("input", verify_input, "graph file (.graph or .json)");
    cmd_verify->add_option("--ensemble", ens_count, "verify a seeded random ensemble of N graphs");
    cmd_verify->add_option("--max-vertices", ens_max_v, "ensemble vertex cap")->capture_default_str();
    cmd_verify->add_option("--max-edges", ens_max_e, "ensemble edge cap")->capture_default_str();
    cmd_verify->add_option("--loop-prob", ens_loop_prob, "ensemble loop probability")->capture_default_str();
    cmd_verify->add_option("--seed", ens_seed, "ensemble seed")->capture_default_str();
    cmd_verify->add_flag("--structured", flag_structured, "JSON output");
    cmd_verify->add_flag("--inject-failure", inject_failure,
                         "testing aid: run against a deliberately broken oracle");

    auto* cmd_gen = app.add_subcommand("gen", "emit an example graph");
    std::string family;
    unsigned gen_depth = 1, gen_length = 1, gen_vertices = 0, gen_edges = 0;
    double gen_loop_prob = 0.3;
    uint64_t gen_seed = 0;
    bool gen_json = false, gen_dot = false;
    cmd_gen->add_option("--family", family, "figure1 | chain | random")->required();
    cmd_gen->add_option("--depth", gen_depth, "truncation depth (figure1)");
    cmd_gen->add_option("--length", gen_length, "chain length (chain)");
    cmd_gen->add_option("--vertices", gen_vertices, "vertex count (random)");
    cmd_gen->add_option("--edges", gen_edges, "edge count (random)");
    cmd_gen->add_option("--loop-prob", gen_loop_prob, "loop probability (random)")->capture_default_str();
    cmd_gen->add_option("--seed", gen_seed, "seed (random)")->capture_default_str();
    cmd_gen->add_flag("--json", gen_json, "structured output");
    cmd_gen->add_flag("--dot", gen_dot, "DOT output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    if (flag_structured && flag_dot)
        return usage_error("--structured and --dot are mutually exclusive");
    Mode mode = flag_structured ? Mode::structured : (flag_dot ? Mode::dot : Mode::table);

    auto print_graph = [&](const grail_graph* g, Mode m) -> int {
        int fmt = m == Mode::dot ? GRAIL_FORMAT_DOT
                                 : (m == Mode::structured ? GRAIL_FORMAT_JSON : GRAIL_FORMAT_LINE);
        StringHolder text;
        if (grail_status st = grail_graph_serialize(g, fmt, &text.s); st != GRAIL_OK)
            return fail(st);
        std::fputs(text.s, stdout);
        return 0;
    };

    if (cmd_lattice->parsed()) {
        GraphHolder g;
        if (int rc = load_graph(input, g); rc != 0)
            return rc;
        LatticeHolder lat;
        if (grail_status st = grail_lattice_compute(g.g, 0, &lat.l); st != GRAIL_OK)
            return fail(st);
        StringHolder text;
        grail_status st = mode == Mode::structured ? grail_lattice_to_json(lat.l, &text.s)
                                                   : grail_lattice_to_table(lat.l, &text.s);
        if (st != GRAIL_OK)
            return fail(st);
        std::fputs(text.s, stdout);
        return 0;
    }

    if (cmd_perp->parsed() || cmd_regular->parsed()) {
        GraphHolder g;
        if (int rc = load_graph(input, g); rc != 0)
            return rc;
        std::string csv;
        if (int rc = resolve_set(g.g, set_csv, exact, csv); rc != 0)
            return rc;
        if (cmd_perp->parsed()) {
            StringHolder out;
            if (grail_status st = grail_perp(g.g, csv.c_str(), 1, &out.s); st != GRAIL_OK)
                return fail(st);
            std::string text = mode == Mode::structured ? out.str() + "\n" : render_members(out.str()) + "\n";
            std::fputs(text.c_str(), stdout);
        } else {
            int regular = 0;
            if (grail_status st = grail_is_regular(g.g, csv.c_str(), 1, &regular); st != GRAIL_OK)
                return fail(st);
            std::string text = mode == Mode::structured
                                   ? nlohmann::json{{"regular", regular != 0}}.dump() + "\n"
                                   : std::string(regular ? "true" : "false") + "\n";
            std::fputs(text.c_str(), stdout);
        }
        return 0;
    }

    if (cmd_quotient->parsed()) {
        GraphHolder g;
        if (int rc = load_graph(input, g); rc != 0)
            return rc;
        std::string csv;
        if (int rc = resolve_set(g.g, set_csv, exact, csv); rc != 0)
            return rc;
        GraphHolder q;
        if (grail_status st = grail_quotient(g.g, csv.c_str(), 1, &q.g); st != GRAIL_OK)
            return fail(st);
        return print_graph(q.g, mode);
    }

    if (cmd_checkl->parsed()) {
        GraphHolder g;
        if (int rc = load_graph(input, g); rc != 0)
            return rc;
        int holds = 0;
        if (grail_status st = grail_condition_l(g.g, &holds); st != GRAIL_OK)
            return fail(st);
        StringHolder cycle;
        if (grail_status st = grail_entryless_cycle(g.g, &cycle.s); st != GRAIL_OK)
            return fail(st);
        if (mode == Mode::structured) {
            nlohmann::json j{{"condition_l", holds != 0}};
            if (cycle.s)
                j["entryless_cycle"] = nlohmann::json::parse(cycle.str());
            std::fputs((j.dump() + "\n").c_str(), stdout);
        } else {
            std::fputs(holds ? "true\n" : "false\n", stdout);
            if (cycle.s)
                std::fprintf(stdout, "entryless cycle: %s\n", cycle.s);
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        StringHolder json, table;
        grail_status st;
        if (ens_count > 0) {
            st = grail_verify_ensemble(ens_count, ens_max_v, ens_max_e, ens_loop_prob, ens_seed,
                                       inject_failure ? 1 : 0, &json.s, &table.s);
        } else {
            if (verify_input.empty())
                return usage_error("verify needs a graph file or --ensemble N");
            GraphHolder g;
            if (int rc = load_graph(verify_input, g); rc != 0)
                return rc;
            st = grail_verify_graph(g.g, inject_failure ? 1 : 0, &json.s, &table.s);
        }
        if (st != GRAIL_OK && st != GRAIL_VERIFY_FAILED)
            return fail(st);
        std::fputs(mode == Mode::structured ? json.s : table.s, stdout);
        if (st == GRAIL_VERIFY_FAILED) {
            // Witnesses travel on stderr so scripts can capture them.
            std::fprintf(stderr, "error: verification failed\n%s", json.s);
            return 5;
        }
        return 0;
    }

    if (cmd_gen->parsed()) {
        Mode gmode = gen_json ? Mode::structured : (gen_dot ? Mode::dot : Mode::table);
        if (gen_json && gen_dot)
            return usage_error("--json and --dot are mutually exclusive");
        GraphHolder g;
        StringHolder h_json;
        grail_status st;
        if (family == "figure1") {
            st = grail_gen_figure1(gen_depth, &g.g, &h_json.s);
        } else if (family == "chain") {
            st = grail_gen_chain_loops(gen_length, &g.g);
        } else if (family == "random") {
            st = grail_gen_random(gen_vertices, gen_edges, gen_loop_prob, gen_seed, &g.g);
        } else {
            return usage_error("unknown family '" + family + "'");
        }
        if (st != GRAIL_OK)
            return fail(st);
        if (int rc = print_graph(g.g, gmode); rc != 0)
            return rc;
        if (h_json.s && gmode == Mode::table) {
            // Comment line, ignored by the line-format parser.
            auto members = nlohmann::json::parse(h_json.str()).get<std::vector<std::string>>();
            std::fprintf(stdout, "# H = %s\n", csv_of(members).c_str());
        }
        return 0;
    }

    return usage_error("no subcommand");
}
