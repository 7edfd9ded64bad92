#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chromata/discharge.hpp"
#include "chromata/embedding.hpp"
#include "chromata/errors.hpp"
#include "chromata/exact.hpp"
#include "chromata/graph_io.hpp"
#include "chromata/lemma.hpp"
#include "chromata/random_planar.hpp"
#include "chromata/small_graphs.hpp"
#include "chromata/solver.hpp"
#include "chromata/verify.hpp"
#include "chromata/vertex_cases.hpp"

namespace {

using chromata::Graph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomainNegative = 1;
constexpr int kExitUsage = 2;

std::string read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw chromata::ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_all(path);
    chromata::GraphFormat fmt =
        format == "auto" ? chromata::sniff_format(text) : chromata::format_from_name(format);
    return chromata::parse_graph({fmt, text});
}

void render_table(const json& doc, std::ostream& out, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (doc.is_object()) {
        for (const auto& [key, value] : doc.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value[0].is_object() || value[0].is_array()))) {
                out << pad << key << ":\n";
                render_table(value, out, indent + 2);
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (doc.is_array()) {
        for (const auto& item : doc) {
            if (item.is_object() || item.is_array()) {
                out << pad << "-\n";
                render_table(item, out, indent + 2);
            } else {
                out << pad << "- " << item.dump() << "\n";
            }
        }
    } else {
        out << pad << doc.dump() << "\n";
    }
}

struct OutputSink {
    std::string path;
    bool table = false;
    void emit(const json& doc) const {
        std::ostringstream buf;
        if (table)
            render_table(doc, buf);
        else
            buf << doc.dump(2) << "\n";
        if (path.empty() || path == "-") {
            std::cout << buf.str();
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw chromata::ParseError("cannot open output file '" + path + "'");
            out << buf.str();
        }
    }
};

json coloring_json(const chromata::EdgeColoring& c) {
    json colors = json::array();
    for (int e = 0; e < c.graph().edge_count(); ++e)
        if (c.colored(e)) colors.push_back({e, c.color(e)});
    return json{{"kappa", c.kappa()}, {"colors", colors}};
}

json report_json(const chromata::VerifyReport& r) {
    json viols = json::array();
    for (const auto& v : r.violations) {
        viols.push_back({{"kind", v.kind == chromata::Violation::Kind::clash
                                      ? "clash"
                                      : "bichromatic_cycle"},
                         {"vertices", v.vertices},
                         {"edges", v.edges}});
    }
    return json{{"proper", r.proper},
                {"acyclic", r.acyclic},
                {"colors_used", r.colors_used},
                {"violations", viols}};
}

std::uint64_t resolve_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("CHROMATA_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw chromata::InvalidParam("CHROMATA_SEED is not an integer");
        }
    }
    return flag_seed;
}

int kappa_rule_value(const std::string& rule, const Graph& g) {
    if (rule == "delta") return g.max_degree();
    if (rule.rfind("delta+", 0) == 0) return g.max_degree() + std::stoi(rule.substr(6));
    return std::stoi(rule);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acyclic edge coloring toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "auto";
    OutputSink sink;
    int threads = 1;
    app.add_option("--input,-i", input, "input path or - for stdin")->capture_default_str();
    app.add_option("--format,-f", format, "graph6|edgelist|json|auto")->capture_default_str();
    app.add_option("--output,-o", sink.path, "output path or - for stdout");
    app.add_flag("--table", sink.table, "render the JSON document as a table");
    app.add_option("--threads", threads, "worker cap; never changes results")
        ->capture_default_str();

    // color
    auto* cmd_color = app.add_subcommand("color", "acyclic edge coloring via the move engine");
    int color_kappa = -1;
    std::uint64_t color_seed = 1;
    int color_restarts = 32, color_moves = 64;
    std::string color_order = "smallest_last";
    std::string color_json_out;
    bool color_minimize = false;
    cmd_color->add_option("--kappa,-k", color_kappa, "palette size (default Delta+6)");
    cmd_color->add_option("--seed", color_seed, "random seed")->capture_default_str();
    cmd_color->add_option("--restarts", color_restarts, "maximum restarts")->capture_default_str();
    cmd_color->add_option("--moves", color_moves, "dead-end moves per edge")->capture_default_str();
    cmd_color->add_option("--order", color_order, "smallest_last|input|random")
        ->capture_default_str();
    cmd_color->add_option("--json-out", color_json_out, "also write the coloring to this path");
    cmd_color->add_flag("--minimize", color_minimize, "descend kappa while the solver succeeds");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "check a coloring for properness + acyclicity");
    std::string verify_coloring;
    bool verify_partial = false;
    cmd_verify->add_option("--coloring,-c", verify_coloring, "coloring JSON path")->required();
    cmd_verify->add_flag("--allow-partial", verify_partial, "verify only the colored subgraph");

    // exact
    auto* cmd_exact = app.add_subcommand("exact", "exhaustive acyclic chromatic index");
    long long exact_budget = 0;
    int exact_decision = -1;
    cmd_exact->add_option("--budget", exact_budget, "search node budget (0 = unlimited)")
        ->capture_default_str();
    cmd_exact->add_option("--decision", exact_decision,
                          "decide colorability at this kappa instead of computing chi_a");

    // audit
    auto* cmd_audit = app.add_subcommand("audit", "discharging audit");
    std::string audit_rules = "builtin";
    bool audit_cases = false;
    bool audit_no_graph = false;
    cmd_audit->add_option("--rules", audit_rules, "builtin or a rule DSL file")
        ->capture_default_str();
    cmd_audit->add_flag("--cases", audit_cases, "run the vertex-case enumeration");
    cmd_audit->add_flag("--no-graph", audit_no_graph,
                        "skip the graph audit (identities/cases only)");

    // lemma
    auto* cmd_lemma = app.add_subcommand("lemma", "hunt deletion-minimal graphs, test lemmas");
    std::string lemma_catalog;
    int lemma_gen = 0;
    std::string lemma_kappa = "delta+2";
    std::string lemma_id = "all";
    long long lemma_budget = 2000000;
    cmd_lemma->add_option("--catalog", lemma_catalog, "graph6 lines file (one graph per line)");
    cmd_lemma->add_option("--gen", lemma_gen, "scan all graphs with up to this many vertices");
    cmd_lemma->add_option("--kappa", lemma_kappa, "delta|delta+K|integer")->capture_default_str();
    cmd_lemma->add_option("--lemma", lemma_id, "all or one lemma id")->capture_default_str();
    cmd_lemma->add_option("--budget", lemma_budget, "per-graph search node budget")
        ->capture_default_str();

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "random planar graph");
    int gen_n = 20;
    std::string gen_prob = "1";
    std::uint64_t gen_seed = 1;
    std::string gen_format = "json";
    cmd_gen->add_option("--n", gen_n, "vertex count of the grown triangulation")
        ->capture_default_str();
    cmd_gen->add_option("--keep-prob", gen_prob, "edge keep probability (rational or decimal)")
        ->capture_default_str();
    cmd_gen->add_option("--seed", gen_seed, "random seed")->capture_default_str();
    cmd_gen->add_option("--graph-format", gen_format, "graph6|edgelist|json")
        ->capture_default_str();

    // stats
    auto* cmd_stats = app.add_subcommand("stats", "basic graph facts");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return kExitOk;  // --help
        std::cerr << e.what() << "\n";
        json err{{"error", "usage"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) {
            Graph g = chromata::random_planar(gen_n, chromata::Rational::parse(gen_prob),
                                              resolve_seed(gen_seed));
            if (gen_format == "json") {
                sink.emit(json::parse(chromata::to_graph_json(g)));
            } else {
                json doc{{"format", gen_format},
                         {"payload", chromata::serialize_graph(
                                         g, chromata::format_from_name(gen_format))}};
                sink.emit(doc);
            }
            return kExitOk;
        }

        if (cmd_stats->parsed()) {
            Graph g = load_graph(input, format);
            json doc{{"n", g.vertex_count()},
                     {"m", g.edge_count()},
                     {"max_degree", g.max_degree()},
                     {"min_degree", g.min_degree()},
                     {"components", g.components().size()},
                     {"chi_a_lower_bound", chromata::chi_a_lower_bound(g)}};
            auto planarity = chromata::embed_planar(g);
            if (auto* emb = std::get_if<chromata::PlaneEmbedding>(&planarity)) {
                doc["planar"] = true;
                doc["faces"] = emb->face_count();
            } else {
                doc["planar"] = false;
                doc["kuratowski_edges"] =
                    std::get<chromata::NonPlanarWitness>(planarity).edges;
            }
            sink.emit(doc);
            return kExitOk;
        }

        if (cmd_color->parsed()) {
            Graph g = load_graph(input, format);
            chromata::SolveConfig cfg;
            cfg.kappa = color_kappa;
            cfg.seed = resolve_seed(color_seed);
            cfg.max_restarts = color_restarts;
            cfg.max_moves_per_edge = color_moves;
            cfg.threads = threads;
            if (color_order == "smallest_last")
                cfg.order = chromata::EdgeOrderPolicy::smallest_last;
            else if (color_order == "input")
                cfg.order = chromata::EdgeOrderPolicy::input;
            else if (color_order == "random")
                cfg.order = chromata::EdgeOrderPolicy::random;
            else
                throw chromata::InvalidParam("unknown edge order '" + color_order + "'");

            json doc;
            bool solved = false;
            if (color_minimize) {
                auto [best_kappa, outcome] = chromata::solve_minimize(g, cfg);
                solved = outcome.solved();
                doc["status"] = solved ? "solved" : "exhausted";
                doc["kappa"] = best_kappa;
                if (solved) doc["coloring"] = coloring_json(*outcome.coloring);
                doc["stats"] = {{"assignments", outcome.stats.assignments},
                                {"swaps", outcome.stats.swaps},
                                {"uncolor_moves", outcome.stats.uncolor_moves},
                                {"restarts", outcome.stats.restarts}};
                std::cerr << "wall_time_s " << outcome.stats.wall_time_s << "\n";
                if (solved && !color_json_out.empty()) {
                    std::ofstream out(color_json_out);
                    out << chromata::coloring_to_json(*outcome.coloring) << "\n";
                }
            } else {
                chromata::SolveOutcome outcome = chromata::solve(g, cfg);
                solved = outcome.solved();
                doc["status"] = solved ? "solved" : "exhausted";
                doc["kappa"] = cfg.kappa < 0 ? g.max_degree() + 6 : cfg.kappa;
                if (solved) {
                    doc["coloring"] = coloring_json(*outcome.coloring);
                    doc["colors_used"] = chromata::verify(g, *outcome.coloring).colors_used;
                }
                doc["stats"] = {{"assignments", outcome.stats.assignments},
                                {"swaps", outcome.stats.swaps},
                                {"uncolor_moves", outcome.stats.uncolor_moves},
                                {"restarts", outcome.stats.restarts}};
                std::cerr << "wall_time_s " << outcome.stats.wall_time_s << "\n";
                if (solved && !color_json_out.empty()) {
                    std::ofstream out(color_json_out);
                    out << chromata::coloring_to_json(*outcome.coloring) << "\n";
                }
            }
            sink.emit(doc);
            return solved ? kExitOk : kExitDomainNegative;
        }

        if (cmd_verify->parsed()) {
            Graph g = load_graph(input, format);
            chromata::EdgeColoring c =
                chromata::coloring_from_json(g, read_all(verify_coloring));
            chromata::VerifyReport r =
                chromata::verify(g, c, chromata::VerifyOptions{verify_partial});
            sink.emit(report_json(r));
            return r.ok() ? kExitOk : kExitDomainNegative;
        }

        if (cmd_exact->parsed()) {
            Graph g = load_graph(input, format);
            if (exact_decision >= 0) {
                chromata::DecisionResult d =
                    chromata::acyclic_colorable(g, exact_decision, exact_budget);
                json doc{{"kappa", exact_decision},
                         {"nodes_expanded", d.nodes_expanded}};
                doc["answer"] = d.status == chromata::Decision::yes        ? "yes"
                                : d.status == chromata::Decision::no       ? "no"
                                                                           : "budget_exceeded";
                if (d.certificate) doc["coloring"] = coloring_json(*d.certificate);
                sink.emit(doc);
                return d.status == chromata::Decision::yes ? kExitOk : kExitDomainNegative;
            }
            chromata::ExactResult r = chromata::chi_a_exact(g, exact_budget);
            json doc{{"chi_a", r.chi_a},
                     {"lower_bound", r.bound_used},
                     {"nodes_expanded", r.nodes_expanded}};
            if (r.certificate) doc["coloring"] = coloring_json(*r.certificate);
            sink.emit(doc);
            return kExitOk;
        }

        if (cmd_audit->parsed()) {
            chromata::DischargeRuleSet rules =
                audit_rules == "builtin"
                    ? chromata::DischargeRuleSet::builtin()
                    : chromata::DischargeRuleSet::from_dsl(read_all(audit_rules));
            json doc;
            doc["rules"] = audit_rules;
            bool all_pass = true;

            json identities = json::array();
            for (const auto& c : chromata::verify_identities()) {
                identities.push_back({{"id", c.id},
                                      {"lhs", c.lhs.str()},
                                      {"rhs", c.rhs.str()},
                                      {"relation", c.relation},
                                      {"pass", c.pass}});
                all_pass = all_pass && c.pass;
            }
            doc["identity_checks"] = identities;

            if (audit_cases) {
                json cases = json::array();
                for (const auto& rep : chromata::enumerate_vertex_cases()) {
                    json item{{"degree", rep.degree},
                              {"min_final_charge", rep.min_final_charge.str()}};
                    json details = json::array();
                    for (const auto& c : rep.cases)
                        details.push_back({{"case", c.case_name},
                                           {"feasible", c.feasible},
                                           {"min_final_charge", c.min_final_charge.str()}});
                    item["cases"] = details;
                    cases.push_back(item);
                    all_pass = all_pass && !rep.min_final_charge.negative();
                }
                doc["vertex_cases"] = cases;
                doc["closed_form_15plus"] = chromata::closed_form_min_final(15).str();
            }

            if (!audit_no_graph) {
                Graph g = load_graph(input, format);
                auto planarity = chromata::embed_planar(g);
                auto* emb = std::get_if<chromata::PlaneEmbedding>(&planarity);
                if (!emb) throw chromata::InvalidParam("audit: input graph is not planar");
                chromata::AuditReport rep = chromata::audit_embedding(*emb, rules, false);
                doc["total_initial"] = rep.total_initial.str();
                doc["total_final"] = rep.total_final.str();
                doc["components"] = rep.components;
                json negs = json::array();
                for (const auto& n : rep.negatives) {
                    json item{{"kind", n.is_vertex ? "vertex" : "face"},
                              {"element", n.element},
                              {"final_charge", n.final_charge.str()}};
                    json fired = json::array();
                    for (const auto& fr : n.fired)
                        fired.push_back({{"rule", rules.rules[fr.rule_index].id},
                                         {"amount", fr.amount.str()}});
                    item["fired"] = fired;
                    negs.push_back(item);
                }
                doc["negatives"] = negs;
            }
            sink.emit(doc);
            return all_pass ? kExitOk : kExitDomainNegative;
        }

        if (cmd_lemma->parsed()) {
            std::vector<Graph> catalog;
            if (lemma_gen > 0) {
                catalog = chromata::all_graphs_up_to(lemma_gen);
            } else if (!lemma_catalog.empty()) {
                std::istringstream in(read_all(lemma_catalog));
                std::string line;
                while (std::getline(in, line)) {
                    if (line.empty()) continue;
                    catalog.push_back(chromata::parse_graph6(line));
                }
            } else {
                throw chromata::InvalidParam("lemma: need --catalog or --gen");
            }
            chromata::FindMinimalOptions opts;
            opts.budget_per_graph = lemma_budget;
            auto rule = [&](const Graph& g) { return kappa_rule_value(lemma_kappa, g); };
            chromata::FindMinimalResult found =
                chromata::find_deletion_minimal(catalog, rule, opts);

            json doc;
            doc["graphs_scanned"] = found.graphs_scanned;
            doc["skipped"] = found.skipped;
            json certs = json::array();
            bool lemma_failure = false;
            for (const auto& cert : found.certificates) {
                json item{{"graph6", chromata::to_graph6(cert.graph)},
                          {"n", cert.graph.vertex_count()},
                          {"m", cert.graph.edge_count()},
                          {"kappa", cert.kappa}};
                json verdicts = json::array();
                for (const auto& id : chromata::lemma_ids()) {
                    if (lemma_id != "all" && lemma_id != id) continue;
                    chromata::LemmaVerdict v = chromata::check_lemma(id, cert.graph, cert.kappa);
                    verdicts.push_back({{"lemma", v.lemma_id},
                                        {"applicable", v.applicable},
                                        {"holds", v.holds},
                                        {"vacuous", v.vacuous},
                                        {"minor_minimal_caveat", v.minor_minimal_caveat},
                                        {"witness", v.witness}});
                    if (v.applicable && !v.holds) lemma_failure = true;
                }
                item["verdicts"] = verdicts;
                certs.push_back(item);
            }
            doc["certificates"] = certs;
            doc["certificate_count"] = found.certificates.size();
            if (found.certificates.empty())
                doc["note"] = "no deletion-minimal graphs at this scale (reported, not silent)";
            sink.emit(doc);
            return lemma_failure ? kExitDomainNegative : kExitOk;
        }
    } catch (const chromata::InfeasiblePalette& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << json{{"error", "infeasible_palette"}, {"message", e.what()}}.dump(2) << "\n";
        return kExitDomainNegative;
    } catch (const chromata::InvalidParam& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << json{{"error", "usage"}, {"message", e.what()}}.dump(2) << "\n";
        return kExitUsage;
    } catch (const chromata::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << json{{"error", "parse"}, {"message", e.what()}}.dump(2) << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << json{{"error", "internal"}, {"message", e.what()}}.dump(2) << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
