#include "cli.hpp"

#include <dpcolor/discharging.hpp>
#include <dpcolor/harness.hpp>
#include <dpcolor/instance_io.hpp>
#include <dpcolor/potential.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dpc::cli {

namespace {

using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Settings {
    bool json = false;
    bool timing = false;
    unsigned threads = 0;
    int max_edges = 24;
};

class Report {
public:
    Report(std::string command, const Settings &settings)
        : settings_(settings), start_(std::chrono::steady_clock::now()) {
        doc_["command"] = std::move(command);
        doc_["instance_digest"] = nullptr;
        doc_["params"] = nullptr;
        doc_["verdict"] = nullptr;
        doc_["counters"] = {{"signings", 0}, {"classes", 0}, {"nodes_expanded", 0}};
        doc_["wall_time_ms"] = nullptr;
    }

    json &operator[](const char *key) { return doc_[key]; }

    void instance(const WeightedInstance &inst, const std::optional<CoverSigning> &signing) {
        doc_["instance_digest"] = instance_digest(inst, signing);
        doc_["params"] = {{"i", inst.params().i}, {"j", inst.params().j}};
    }

    void counters(std::uint64_t signings, std::uint64_t classes, std::uint64_t nodes) {
        doc_["counters"] = {{"signings", signings}, {"classes", classes}, {"nodes_expanded", nodes}};
    }

    void emit(std::ostream &out) {
        if (!settings_.json)
            return;
        if (settings_.timing) {
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
            doc_["wall_time_ms"] = ms;
        }
        out << doc_.dump(2) << "\n";
    }

private:
    const Settings &settings_;
    std::chrono::steady_clock::time_point start_;
    json doc_;
};

json edge_json(const Edge &e) { return json::array({e.u, e.v}); }

json vertices_json(VertexMask mask) { return mask_vertices(mask); }

std::string vertices_text(VertexMask mask) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : mask_vertices(mask)) {
        out += (first ? "" : ",") + std::to_string(v);
        first = false;
    }
    return out + "}";
}

json cover_result_json(const AllCoversResult &r) {
    json j = {{"colorable_for_all", r.colorable()},
              {"certifying", r.certifying},
              {"signings", r.signings_examined},
              {"classes", r.classes_examined},
              {"nodes_expanded", r.nodes_expanded}};
    if (r.witness) {
        j["witness"] = r.witness->to_string();
        j["witness_index"] = *r.witness_index;
    }
    return j;
}

std::string verdict_text(const AllCoversResult &r) {
    if (r.colorable())
        return r.certifying ? "colorable for every cover" : "no bad cover among samples";
    return "bad cover found";
}

// ---------------------------------------------------------------------------

int cmd_solve(const Settings &s, const std::string &path, bool brute, std::ostream &out) {
    auto parsed = read_instance_file(path);
    const auto &inst = parsed.instance;
    Report report("solve", s);
    report.instance(inst, parsed.signing);
    int code;
    if (parsed.signing) {
        SearchStats stats;
        auto map = brute ? brute_force_oracle(inst, *parsed.signing) : find_coloring(inst, *parsed.signing, &stats);
        report.counters(1, 1, stats.nodes_expanded);
        report["verdict"] = map ? "colorable" : "not-colorable";
        if (map)
            report["map"] = map->to_string();
        if (!s.json) {
            out << (map ? "colorable" : "not colorable") << "\n";
            if (map)
                out << "map " << map->to_string() << "\n";
        }
        code = map ? kYes : kNo;
    } else {
        CoverSearchOptions opts{s.threads, s.max_edges};
        auto r = colorable_all_covers(inst, opts);
        report.counters(r.signings_examined, r.classes_examined, r.nodes_expanded);
        report["verdict"] = r.colorable() ? "colorable-for-all" : "witness-found";
        if (r.witness)
            report["witness"] = r.witness->to_string();
        if (!s.json) {
            out << verdict_text(r) << " (" << r.signings_examined << " signings)\n";
            if (r.witness)
                out << "witness " << r.witness->to_string() << "\n";
        }
        code = r.colorable() ? kYes : kNo;
    }
    report.emit(out);
    return code;
}

int cmd_check(const Settings &s, const std::string &path, const std::string &map_text, std::ostream &out,
              std::ostream &err) {
    auto parsed = read_instance_file(path);
    if (!parsed.signing) {
        err << "check: the instance file carries no cover signs\n";
        return kError;
    }
    auto map = ColoringMap::parse(map_text);
    auto violation = check_coloring(parsed.instance, *parsed.signing, map);
    Report report("check", s);
    report.instance(parsed.instance, parsed.signing);
    report["verdict"] = violation ? "violation" : "valid";
    report["map"] = map.to_string();
    if (violation) {
        report["violation"] = {{"vertex", violation->vertex},
                               {"node", std::string(1, to_char(violation->node))},
                               {"defect", violation->defect},
                               {"capacity", violation->capacity}};
    }
    if (!s.json) {
        if (violation)
            out << "violation: vertex " << violation->vertex << " node " << to_char(violation->node)
                << " defect " << violation->defect << " capacity " << violation->capacity << "\n";
        else
            out << "valid\n";
    }
    report.emit(out);
    return violation ? kNo : kYes;
}

int cmd_potential(const Settings &s, const std::string &path, const std::vector<int> &subset, bool proper,
                  std::ostream &out) {
    auto parsed = read_instance_file(path);
    const auto &inst = parsed.instance;
    Report report("potential", s);
    report.instance(inst, parsed.signing);
    int total = total_potential(inst);
    const auto &p = inst.params();
    report["potential"] = total;
    report["ceiling"] = p.i - p.j - 1;
    report["verdict"] = total <= p.i - p.j - 1 ? "at-or-below-ceiling" : "above-ceiling";
    if (!s.json)
        out << "rho(G,c) = " << total << " (ceiling for critical pairs: " << p.i - p.j - 1 << ")\n";
    if (!subset.empty()) {
        int value = subset_potential(inst, subset);
        report["subset"] = {{"vertices", subset}, {"potential", value}};
        if (!s.json)
            out << "rho(S) = " << value << "\n";
    }
    if (inst.graph().vertex_count() > (proper ? 1 : 0)) {
        auto r = min_potential_subset(inst, proper ? SubsetMode::NonemptyProper : SubsetMode::Nonempty,
                                      kDefaultSubsetCeiling, s.threads);
        report["minimum"] = {{"mode", proper ? "nonempty-proper" : "nonempty"},
                             {"vertices", vertices_json(r.subset)},
                             {"potential", r.value}};
        if (!s.json)
            out << "min rho over " << (proper ? "nonempty proper" : "nonempty") << " subsets = " << r.value
                << " at " << vertices_text(r.subset) << "\n";
    }
    report.emit(out);
    return kYes;
}

int cmd_charges(const Settings &s, const std::string &path, std::ostream &out) {
    auto parsed = read_instance_file(path);
    const auto &inst = parsed.instance;
    auto ledger = charges(inst);
    auto identity = verify_total_charge(inst);
    Report report("charges", s);
    report.instance(inst, parsed.signing);
    json vertices = json::array();
    for (Vertex v = 0; v < inst.graph().vertex_count(); ++v) {
        auto k = static_cast<std::size_t>(v);
        vertices.push_back({{"vertex", v},
                            {"class", ledger.classes[k] == VertexClass::Surplus ? "surplus" : "ordinary"},
                            {"d1", ledger.ordinary_neighbors[k]},
                            {"d2", ledger.surplus_neighbors[k]},
                            {"doubled_charge", ledger.doubled_charge[k]}});
    }
    report["vertices"] = vertices;
    report["doubled_total"] = ledger.doubled_total;
    report["doubled_potential"] = 2 * total_potential(inst);
    report["doubled_residual"] = identity.doubled_residual;
    json adj = json::array();
    for (const auto &e : identity.surplus_adjacencies)
        adj.push_back(edge_json(e));
    report["surplus_adjacencies"] = adj;
    report["verdict"] = identity.holds() ? "identity-holds" : "identity-fails";
    if (!s.json) {
        for (Vertex v = 0; v < inst.graph().vertex_count(); ++v) {
            auto k = static_cast<std::size_t>(v);
            out << "v" << v << (ledger.classes[k] == VertexClass::Surplus ? " surplus " : " ordinary ")
                << "2ch=" << ledger.doubled_charge[k] << "\n";
        }
        out << "2*sum ch = " << ledger.doubled_total << ", 2*rho = " << 2 * total_potential(inst)
            << ", residual " << identity.doubled_residual << "\n";
        if (!identity.surplus_adjacencies.empty())
            out << identity.surplus_adjacencies.size() << " edge(s) join two surplus vertices\n";
    }
    report.emit(out);
    return identity.holds() ? kYes : kNo;
}

int cmd_sparsity(const Settings &s, const std::string &path, std::ostream &out) {
    auto parsed = read_instance_file(path);
    const auto &inst = parsed.instance;
    auto r = sparsity_test(inst.graph(), inst.params(), kDefaultSubsetCeiling, s.threads);
    Report report("sparsity", s);
    report.instance(inst, parsed.signing);
    report["verdict"] = r.sparse ? "sparse" : "dense";
    if (!r.sparse)
        report["witness"] = {{"vertices", vertices_json(r.witness)}, {"excess", r.excess}};
    if (!s.json) {
        if (r.sparse)
            out << "sparse\n";
        else
            out << "dense: excess " << r.excess << " at " << vertices_text(r.witness) << "\n";
    }
    report.emit(out);
    return r.sparse ? kYes : kNo;
}

int cmd_construct(const Settings &s, DefectParams p, int m, bool cover, const std::string &output,
                  std::ostream &out) {
    auto [g, spec] = make_gm(p, m);
    auto inst = gm_instance(g, spec);
    std::optional<CoverSigning> signing;
    if (cover)
        signing = make_hm(g, spec);
    auto text = serialize_instance(inst, signing);
    if (output.empty() || output == "-") {
        out << text;
        return kYes;
    }
    write_instance_file(output, inst, signing);
    Report report("construct", s);
    report.instance(inst, signing);
    report["verdict"] = "written";
    report["vertices"] = g.vertex_count();
    report["edges"] = g.edge_count();
    if (!s.json)
        out << "wrote " << output << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    report.emit(out);
    return kYes;
}

json criticality_json(const CriticalityVerdict &v) {
    json j = {{"verdict", to_string(v.verdict)}, {"certifying", v.certifying}, {"potential", v.potential}};
    json deletions = json::array();
    for (const auto &d : v.deletions)
        deletions.push_back({{"representative", d.representative},
                             {"orbit", d.orbit},
                             {"result", cover_result_json(d.result)}});
    j["deletions"] = deletions;
    j["isolated_checked"] = v.isolated_checked;
    if (v.failure) {
        json f = {{"witness", v.failure->witness.to_string()}};
        if (v.failure->removed_edge)
            f["removed_edge"] = edge_json(*v.failure->removed_edge);
        if (v.failure->removed_vertex)
            f["removed_vertex"] = *v.failure->removed_vertex;
        j["failure"] = f;
    }
    return j;
}

int cmd_critical(const Settings &s, const std::string &path, std::optional<DefectParams> gm_params, int m,
                 const std::string &strategy_name, std::uint64_t count, std::uint64_t seed, std::ostream &out,
                 std::ostream &err) {
    std::optional<WeightedInstance> inst;
    std::optional<ConstructionSpec> spec;
    if (!path.empty()) {
        inst = read_instance_file(path).instance;
    } else if (gm_params) {
        auto [g, sp] = make_gm(*gm_params, m);
        inst = gm_instance(g, sp);
        spec = sp;
    } else {
        err << "critical: give an instance file or --i/--j/--m for a construction\n";
        return kError;
    }

    Strategy strategy;
    if (strategy_name == "exhaustive") {
        strategy = Strategy::exhaustive();
    } else if (strategy_name == "reduced") {
        if (!spec) {
            err << "critical: the reduced strategy needs a generated construction (--i/--j/--m)\n";
            return kError;
        }
        strategy = Strategy::reduced(*spec);
    } else {
        strategy = Strategy::sampled(count, seed);
    }

    CoverSearchOptions opts{s.threads, s.max_edges};
    auto verdict = is_critical(*inst, strategy, opts);
    Report report("critical", s);
    report.instance(*inst, std::nullopt);
    report["verdict"] = to_string(verdict.verdict);
    report["strategy"] = to_string(strategy.kind);
    if (strategy.kind == StrategyKind::Sampled)
        report["sampling"] = {{"count", count}, {"seed", seed}};
    if (verdict.witness)
        report["witness"] = verdict.witness->to_string();
    report["details"] = criticality_json(verdict);
    report.counters(verdict.counters.signings, verdict.counters.classes, verdict.counters.nodes_expanded);
    if (!s.json) {
        out << to_string(verdict.verdict) << (verdict.certifying ? "" : " (sampled, not a certificate)") << "\n";
        out << "rho(G,c) = " << verdict.potential << "\n";
        if (verdict.witness)
            out << "witness " << verdict.witness->to_string() << "\n";
        for (const auto &d : verdict.deletions)
            out << "  G - e" << d.representative << " (orbit of " << d.orbit.size() << "): " << verdict_text(d.result)
                << "\n";
        if (verdict.failure)
            out << "failing subgraph witness " << verdict.failure->witness.to_string() << "\n";
    }
    report.emit(out);
    return verdict.verdict == Criticality::Critical ? kYes : kNo;
}

int cmd_enumerate(const Settings &s, DefectParams p, int n, bool weighted, std::ostream &out) {
    EnumerationOptions opts;
    opts.weighted = weighted;
    opts.workers = s.threads;
    auto r = enumerate_critical(p, n, opts);
    Report report("enumerate", s);
    report["params"] = {{"i", p.i}, {"j", p.j}};
    report["verdict"] = r.consistent() ? "consistent" : "inconsistent";
    json critical = json::array();
    for (const auto &c : r.critical) {
        json caps = json::array();
        for (const auto &cap : c.instance.capacities())
            caps.push_back(json::array({cap.poor, cap.rich}));
        json edges = json::array();
        for (const auto &e : c.instance.graph().edges())
            edges.push_back(edge_json(e));
        critical.push_back({{"edges", edges}, {"capacities", caps}, {"potential", c.potential},
                            {"witness", c.witness.to_string()}});
    }
    report["details"] = {{"n", n},
                         {"weighted", weighted},
                         {"graphs_examined", r.graphs_examined},
                         {"pairs_examined", r.pairs_examined},
                         {"critical_count", r.critical.size()},
                         {"critical", critical},
                         {"min_edges", r.min_edges ? json(*r.min_edges) : json(nullptr)},
                         {"edge_bound", r.edge_bound},
                         {"bound_applicable", r.bound_applicable},
                         {"bound_violations", r.bound_violations},
                         {"potential_violations", r.potential_violations}};
    report.counters(0, r.pairs_examined, 0);
    if (!s.json) {
        out << r.graphs_examined << " graphs, " << r.pairs_examined << " weighted pairs, " << r.critical.size()
            << " critical\n";
        out << "min edges (c = (i,j)): " << (r.min_edges ? std::to_string(*r.min_edges) : "none")
            << ", bound " << r.edge_bound << (r.bound_applicable ? "" : " (not applicable)") << "\n";
        out << "bound violations " << r.bound_violations << ", potential violations " << r.potential_violations
            << "\n";
    }
    report.emit(out);
    return r.consistent() ? kYes : kNo;
}

std::vector<int> parse_int_list(const std::string &text, char sep) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int value = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(value);
    }
    return out;
}

std::vector<DefectParams> parse_pairs(const std::string &text) {
    std::vector<DefectParams> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty())
            continue;
        auto values = parse_int_list(item, ',');
        if (values.size() != 2)
            throw std::invalid_argument("pairs are written i,j and separated by ';'");
        out.push_back({values[0], values[1]});
    }
    return out;
}

int cmd_verify(const Settings &s, const std::string &pairs_text, const std::string &ms_text, bool criticality,
               std::ostream &out) {
    auto pairs = parse_pairs(pairs_text);
    auto ms = parse_int_list(ms_text, ',');
    SuiteOptions opts;
    opts.criticality = criticality;
    opts.search = CoverSearchOptions{s.threads, s.max_edges};
    auto r = verify_sharpness_suite(pairs, ms, opts);

    Report report("verify", s);
    report["verdict"] = r.passed() ? "pass" : "fail";
    json entries = json::array();
    WorkCounters total;
    for (const auto &e : r.entries) {
        json entry = {{"i", e.params.i},
                      {"j", e.params.j},
                      {"m", e.m},
                      {"vertices", e.counts.vertices},
                      {"edges", e.counts.edges},
                      {"counts_ok", e.counts.ok()},
                      {"hm_colorable", e.hm_colorable},
                      {"hm_nodes", e.hm_nodes},
                      {"passed", e.passed()}};
        total.nodes_expanded += e.hm_nodes;
        if (e.criticality) {
            entry["criticality"] = criticality_json(*e.criticality);
            total.signings += e.criticality->counters.signings;
            total.classes += e.criticality->counters.classes;
            total.nodes_expanded += e.criticality->counters.nodes_expanded;
        }
        entries.push_back(entry);
        if (!s.json)
            out << "(" << e.params.i << "," << e.params.j << ") m=" << e.m << ": |V|=" << e.counts.vertices
                << " |E|=" << e.counts.edges << (e.counts.ok() ? " counts ok" : " COUNTS FAIL")
                << (e.hm_colorable ? ", H_m COLORABLE" : ", H_m not colorable")
                << (e.criticality ? ", " + to_string(e.criticality->verdict) : "") << "\n";
    }
    report["details"] = {{"entries", entries}};
    report.counters(total.signings, total.classes, total.nodes_expanded);
    report.emit(out);
    return r.passed() ? kYes : kNo;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"dpcolor: defective DP-coloring verification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    app.add_flag("--json", settings.json, "Emit a JSON report");
    app.add_flag("--timing", settings.timing, "Fill wall_time_ms in JSON reports");
    app.add_option("--threads", settings.threads, "Worker threads (0 = all cores)");
    app.add_option("--max-edges", settings.max_edges, "Ceiling for exhaustive cover enumeration");

    std::string path;
    bool brute = false;
    auto *solve = app.add_subcommand("solve", "Find a coloring for the file's cover, or test every cover");
    solve->add_option("file", path, "Instance file")->required();
    solve->add_flag("--brute-force", brute, "Use the exhaustive 2^n oracle");

    std::string map_text;
    auto *check = app.add_subcommand("check", "Validate a coloring map against the file's cover");
    check->add_option("file", path, "Instance file")->required();
    check->add_option("--map", map_text, "One letter per vertex, P or R")->required();

    std::string subset_text;
    bool proper = false;
    auto *potential = app.add_subcommand("potential", "Potential of the pair and its minimum over subsets");
    potential->add_option("file", path, "Instance file")->required();
    potential->add_option("--subset", subset_text, "Comma-separated vertices to evaluate");
    potential->add_flag("--proper", proper, "Minimise over nonempty proper subsets");

    auto *charges_cmd = app.add_subcommand("charges", "Final discharging charges and the total-charge identity");
    charges_cmd->add_option("file", path, "Instance file")->required();

    auto *sparsity = app.add_subcommand("sparsity", "Subgraph edge-density test");
    sparsity->add_option("file", path, "Instance file")->required();

    DefectParams p{1, 2};
    int m = 1;
    bool cover = false;
    std::string output;
    auto *construct = app.add_subcommand("construct", "Generate the flag construction G_m");
    construct->add_option("--i", p.i, "Poor defect")->required();
    construct->add_option("--j", p.j, "Rich defect")->required();
    construct->add_option("--m", m, "Path length")->required();
    construct->add_flag("--cover", cover, "Include the bad cover H_m");
    construct->add_option("-o,--output", output, "Output file (default stdout)");

    std::string strategy = "exhaustive";
    std::uint64_t count = 100000;
    std::uint64_t seed = 1;
    auto *critical = app.add_subcommand("critical", "Certify criticality of a file or a generated G_m");
    critical->add_option("file", path, "Instance file");
    auto *ci = critical->add_option("--i", p.i, "Poor defect (construction)");
    critical->add_option("--j", p.j, "Rich defect (construction)");
    critical->add_option("--m", m, "Path length (construction)");
    critical->add_option("--strategy", strategy, "exhaustive, reduced or sampled")
        ->check(CLI::IsMember({"exhaustive", "reduced", "sampled"}));
    critical->add_option("--count", count, "Signings per check for the sampled strategy")
        ->check(CLI::PositiveNumber);
    critical->add_option("--seed", seed, "Seed for the sampled strategy");

    int n = 4;
    bool weighted = false;
    auto *enumerate = app.add_subcommand("enumerate", "Find all critical pairs on n vertices");
    enumerate->add_option("--i", p.i, "Poor defect")->required();
    enumerate->add_option("--j", p.j, "Rich defect")->required();
    enumerate->add_option("--n", n, "Vertex count")->required();
    enumerate->add_flag("--weighted", weighted, "Every capacity function, not only c = (i, j)");

    std::string pairs_text = "1,2;1,3;2,4";
    std::string ms_text = "1,2";
    bool with_criticality = false;
    auto *verify = app.add_subcommand("verify", "Counts and bad covers for a grid of constructions");
    verify->add_option("--pairs", pairs_text, "Pairs i,j separated by ';'");
    verify->add_option("--ms", ms_text, "Comma-separated path lengths");
    verify->add_flag("--criticality", with_criticality, "Also certify criticality (reduced strategy)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kYes;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return kError;
    }

    try {
        if (*solve)
            return cmd_solve(settings, path, brute, out);
        if (*check)
            return cmd_check(settings, path, map_text, out, err);
        if (*potential)
            return cmd_potential(settings, path, subset_text.empty() ? std::vector<int>{} : parse_int_list(subset_text, ','),
                                 proper, out);
        if (*charges_cmd)
            return cmd_charges(settings, path, out);
        if (*sparsity)
            return cmd_sparsity(settings, path, out);
        if (*construct)
            return cmd_construct(settings, p, m, cover, output, out);
        if (*critical)
            return cmd_critical(settings, path, ci->count() ? std::optional(p) : std::nullopt, m, strategy, count,
                                seed, out, err);
        if (*enumerate)
            return cmd_enumerate(settings, p, n, weighted, out);
        if (*verify)
            return cmd_verify(settings, pairs_text, ms_text, with_criticality, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

} // namespace dpc::cli
