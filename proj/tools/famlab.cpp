// famlab: intersecting uniform set families, exact transversal numbers,
// isomorphism, isomorph-free enumeration, and the claim-verification suite.
//
// Exit codes: 0 success / claims hold, 1 semantic negative (not
// isomorphic, claim fails), 2 input error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "famlab/canonical.hpp"
#include "famlab/claims.hpp"
#include "famlab/constructors.hpp"
#include "famlab/enumerate.hpp"
#include "famlab/io.hpp"
#include "famlab/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct ConstructArgs {
    int k = 0;
    int m = 0;
    std::string format = "fam";
    std::string out;
};

famlab::FamilyFormat parse_format(const std::string& name) {
    return name == "json" ? famlab::FamilyFormat::Json : famlab::FamilyFormat::Fam;
}

void print_summary(const famlab::SetFamily& f) {
    std::cout << "k=" << f.k << " blocks=" << f.length() << " vertices=" << f.vertex_count()
              << "\n";
    std::map<int, int> histogram;
    for (const auto& [v, d] : f.degrees()) ++histogram[d];
    std::cout << "degrees:";
    for (const auto& [d, count] : histogram) std::cout << ' ' << d << 'x' << count;
    std::cout << "\n";
}

int emit_family(const famlab::SetFamily& f, const ConstructArgs& args,
                const std::string& default_name) {
    famlab::FamilyFormat fmt = parse_format(args.format);
    std::string extension = fmt == famlab::FamilyFormat::Json ? ".json" : ".fam";
    std::string path = args.out.empty() ? default_name + extension : args.out;
    if (path == "-") {
        std::cout << famlab::serialize_family(f, fmt);
    } else {
        famlab::save_family_file(path, f, fmt);
        std::cout << "wrote " << path << "\n";
    }
    print_summary(f);
    return kExitOk;
}

void print_vertex_list(const char* label, const std::vector<int>& vs) {
    std::cout << label;
    for (std::size_t i = 0; i < vs.size(); ++i) std::cout << (i ? " " : "") << vs[i];
    std::cout << "\n";
}

nlohmann::ordered_json opt_json(const std::optional<int>& value) {
    return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json search_report_json(const famlab::SearchReport& report) {
    nlohmann::ordered_json doc;
    const auto& c = report.constraints;
    doc["constraints"] = {{"k", c.k},
                          {"max_blocks", c.max_blocks},
                          {"max_vertices", c.resolved_max_vertices()},
                          {"intersecting", c.intersecting},
                          {"exact_blocks", opt_json(c.exact_blocks)},
                          {"min_degree", opt_json(c.min_degree)},
                          {"max_degree", opt_json(c.max_degree)},
                          {"exact_pairwise_intersection", opt_json(c.exact_pairwise_intersection)},
                          {"min_tau", opt_json(c.min_tau)},
                          {"max_tau", opt_json(c.max_tau)}};
    doc["class_count"] = report.classes.size();
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (const auto& cls : report.classes) {
        classes.push_back({{"length", cls.representative.length()},
                           {"vertices", cls.representative.vertex_count()},
                           {"tau", cls.tau},
                           {"blocks", cls.representative.blocks}});
    }
    doc["classes"] = classes;
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (const auto& lvl : report.levels)
        levels.push_back(
            {{"blocks", lvl.blocks}, {"candidates", lvl.candidates}, {"classes", lvl.classes}});
    doc["stats"] = {{"candidates_examined", report.candidates_examined}, {"levels", levels}};
    doc["budget_exceeded"] = report.budget_exceeded;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"famlab: uniform intersecting set families and exact transversal numbers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "famlab 0.1.0");

    // construct
    auto* construct = app.add_subcommand("construct", "Build one of the library families");
    construct->require_subcommand(1);
    ConstructArgs cargs;
    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", cargs.format, "Output format: fam or json")
            ->check(CLI::IsMember({"fam", "json"}));
        cmd->add_option("--out", cargs.out, "Output path ('-' for stdout)");
    };
    auto* c_mk = construct->add_subcommand("mk", "The two-regular family mk(k)");
    c_mk->add_option("--k", cargs.k, "Uniformity, k >= 2")->required();
    add_output_flags(c_mk);
    auto* c_fact = construct->add_subcommand("factorization",
                                             "The k disjoint transversals of mk(k), as a family");
    c_fact->add_option("--k", cargs.k, "Odd k >= 3")->required();
    add_output_flags(c_fact);
    auto* c_deg3 = construct->add_subcommand("degree3", "The 3-regular family for k = 2^m - 1");
    c_deg3->add_option("--m", cargs.m, "Exponent m >= 2")->required();
    add_output_flags(c_deg3);
    auto* c_example =
        construct->add_subcommand("example", "The 9-block 4-family of transversal size 4");
    add_output_flags(c_example);

    // tau
    auto* tau_cmd = app.add_subcommand("tau", "Exact minimum transversal of a family file");
    std::string tau_path, transversals_out;
    bool tau_enumerate = false;
    std::uint64_t node_budget_value = 0;
    tau_cmd->add_option("file", tau_path, "Family file (.fam or .json)")->required();
    tau_cmd->add_flag("--enumerate", tau_enumerate, "Also list every minimum transversal");
    tau_cmd->add_option("--transversals-out", transversals_out,
                        "Write the family of minimum transversals to this file");
    auto* budget_opt =
        tau_cmd->add_option("--node-budget", node_budget_value, "Abort after this many nodes");

    // iso
    auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism of two family files");
    std::string iso_a, iso_b;
    iso_cmd->add_option("a", iso_a, "First family file")->required();
    iso_cmd->add_option("b", iso_b, "Second family file")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the claim-verification suite");
    std::vector<std::string> suites;
    std::string report_path, q3_witness_path;
    std::uint64_t verify_budget_value = 0;
    verify_cmd->add_option("--suite", suites, "Claim ids to run, or 'all'")->delimiter(',');
    verify_cmd->add_option("--report", report_path, "Write the JSON report here");
    verify_cmd->add_option("--q3-witness", q3_witness_path,
                           "Length-6 tau-3 family file for claim C6-lower");
    auto* verify_budget_opt = verify_cmd->add_option(
        "--budget", verify_budget_value, "Enumeration candidate budget per claim");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "Isomorph-free enumeration of small families");
    famlab::EnumerationConstraints constraints;
    int exact_blocks = 0, min_degree = 0, max_degree = 0, pairwise = -1;
    int min_tau = -1, max_tau = -1, tau_exact = -1;
    std::string enum_report_path;
    enum_cmd->add_option("--k", constraints.k, "Uniformity")->required();
    auto* opt_max_blocks =
        enum_cmd->add_option("--max-blocks", constraints.max_blocks, "Largest length to reach");
    auto* opt_blocks =
        enum_cmd->add_option("--blocks", exact_blocks, "Exact length (implies --max-blocks)");
    enum_cmd->add_option("--max-vertices", constraints.max_vertices,
                         "Vertex budget (default k * max-blocks)");
    enum_cmd->add_flag("--intersecting", constraints.intersecting,
                       "Keep only pairwise-intersecting families");
    enum_cmd->add_option("--min-degree", min_degree, "Final filter: every degree >= this");
    enum_cmd->add_option("--max-degree", max_degree, "Every degree <= this (pruned early)");
    enum_cmd->add_option("--pairwise", pairwise,
                         "Every pairwise block intersection has exactly this size");
    enum_cmd->add_option("--min-tau", min_tau, "Final filter: tau >= this");
    enum_cmd->add_option("--max-tau", max_tau, "Final filter: tau <= this");
    enum_cmd->add_option("--tau", tau_exact, "Final filter: tau == this");
    enum_cmd->add_option("--budget", constraints.candidate_budget,
                         "Candidate budget (error when exceeded)");
    enum_cmd->add_option("--report", enum_report_path, "Write the SearchReport JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (construct->parsed()) {
            if (c_mk->parsed()) {
                std::ostringstream name;
                name << "mk-" << cargs.k;
                return emit_family(famlab::build_mk(cargs.k), cargs, name.str());
            }
            if (c_fact->parsed()) {
                famlab::OneFactorization fact = famlab::build_one_factorization(cargs.k);
                famlab::SetFamily fam;
                fam.k = (cargs.k + 1) / 2;
                fam.blocks = fact.transversals;
                std::ostringstream comment;
                comment << "disjoint transversals of mk(" << cargs.k << ")";
                fam.comment = comment.str();
                std::ostringstream name;
                name << "factorization-" << cargs.k;
                return emit_family(fam, cargs, name.str());
            }
            if (c_deg3->parsed()) {
                std::ostringstream name;
                name << "degree3-" << cargs.m;
                return emit_family(famlab::build_degree3_family(cargs.m), cargs, name.str());
            }
            return emit_family(famlab::q4_witness_family(), cargs, "example");
        }

        if (tau_cmd->parsed()) {
            std::optional<std::uint64_t> node_budget;
            if (budget_opt->count() > 0) node_budget = node_budget_value;
            famlab::SetFamily f = famlab::load_family_file(tau_path);
            famlab::require_valid(f);
            famlab::TransversalResult r = famlab::exact_tau(f, node_budget);
            std::cout << "tau=" << r.tau << "\n";
            print_vertex_list("witness=", r.witness);
            std::cout << "degree_lower_bound=" << r.degree_lower_bound << "\n";
            std::cout << "nodes=" << r.search_nodes << "\n";
            if (tau_enumerate)
                for (const auto& cover : famlab::enumerate_covers_of_size(f, r.tau))
                    print_vertex_list("cover=", cover);
            if (!transversals_out.empty()) {
                bool json = transversals_out.size() >= 5 &&
                            transversals_out.compare(transversals_out.size() - 5, 5, ".json") == 0;
                famlab::save_family_file(
                    transversals_out, famlab::transversal_family(f),
                    json ? famlab::FamilyFormat::Json : famlab::FamilyFormat::Fam);
            }
            return kExitOk;
        }

        if (iso_cmd->parsed()) {
            famlab::SetFamily a = famlab::load_family_file(iso_a);
            famlab::SetFamily b = famlab::load_family_file(iso_b);
            auto map = famlab::isomorphism_map(a, b);
            if (!map) {
                std::cout << "not isomorphic\n";
                return kExitNegative;
            }
            std::cout << "isomorphic\n";
            for (const auto& [u, v] : *map) std::cout << u << " -> " << v << "\n";
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            if (suites.empty()) suites.push_back("all");
            std::vector<std::string> selection;
            for (const auto& s : suites) {
                if (s == "all") {
                    for (const auto& id : famlab::claim_ids()) selection.push_back(id);
                } else if (famlab::is_claim_id(s)) {
                    selection.push_back(s);
                } else {
                    std::cerr << "unknown claim id: " << s << "\n";
                    return kExitInput;
                }
            }
            famlab::ClaimOptions opts;
            if (!q3_witness_path.empty())
                opts.q3_witness = famlab::load_family_file(q3_witness_path);
            if (verify_budget_opt->count() > 0) opts.candidate_budget = verify_budget_value;

            auto records = famlab::run_suite(selection, opts);
            bool any_fail = false, any_error = false;
            for (const auto& rec : records) {
                std::cout << rec.verdict << " " << rec.id << " (" << rec.elapsed_ms << " ms)\n";
                any_fail = any_fail || rec.verdict == "FAIL";
                any_error = any_error || rec.verdict == "ERROR";
            }
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                if (!out) throw std::runtime_error("cannot write " + report_path);
                out << famlab::suite_report(records).dump(2) << "\n";
            }
            if (any_error) return kExitBudget;
            return any_fail ? kExitNegative : kExitOk;
        }

        if (enum_cmd->parsed()) {
            if (opt_blocks->count() > 0) {
                constraints.exact_blocks = exact_blocks;
                if (opt_max_blocks->count() == 0) constraints.max_blocks = exact_blocks;
            }
            if (min_degree > 0) constraints.min_degree = min_degree;
            if (max_degree > 0) constraints.max_degree = max_degree;
            if (pairwise >= 0) constraints.exact_pairwise_intersection = pairwise;
            if (tau_exact >= 0) {
                constraints.min_tau = tau_exact;
                constraints.max_tau = tau_exact;
            }
            if (min_tau >= 0) constraints.min_tau = min_tau;
            if (max_tau >= 0) constraints.max_tau = max_tau;

            famlab::SearchReport report = famlab::enumerate_families(constraints);
            std::cout << "classes=" << report.classes.size() << "\n";
            if (!enum_report_path.empty()) {
                std::ofstream out(enum_report_path);
                if (!out) throw std::runtime_error("cannot write " + enum_report_path);
                out << search_report_json(report).dump(2) << "\n";
            }
            return kExitOk;
        }
    } catch (const famlab::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const famlab::NodeBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (" << e.nodes << " nodes)\n";
        return kExitBudget;
    } catch (const famlab::EnumerationBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (" << e.partial.candidates_examined
                  << " candidates)\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
