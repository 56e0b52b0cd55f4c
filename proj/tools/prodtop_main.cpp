#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "prodtop/acceptance.hpp"
#include "prodtop/collapse.hpp"
#include "prodtop/constructions.hpp"
#include "prodtop/homology.hpp"
#include "prodtop/json_io.hpp"
#include "prodtop/projection.hpp"
#include "prodtop/verifier.hpp"

namespace {

using prodtop::Json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

void emit(const Json& doc, const std::string& out_path, bool json_output) {
    std::string text;
    if (json_output || !out_path.empty()) {
        text = doc.dump(2) + "\n";
    } else {
        // compact human-readable summary
        std::ostringstream os;
        if (doc.contains("command")) {
            os << doc["command"].get<std::string>() << ": "
               << (doc.value("pass", true) ? "pass" : "FAIL") << "\n";
            for (const auto& [key, value] : doc.at("results").items())
                os << "  " << key << " = " << value.dump() << "\n";
        } else {
            os << doc.value("name", doc.value("kind", std::string("document")));
            if (doc.contains("cells")) os << "  cells=" << doc["cells"].size();
            if (doc.contains("faces")) os << "  faces=" << doc["faces"].size();
            if (doc.contains("expected")) os << "  expected=" << doc["expected"].dump();
            os << "\n";
        }
        text = os.str();
    }
    if (out_path.empty())
        std::cout << text;
    else
        prodtop::write_file(out_path, text);
}

struct LoadedComplex {
    prodtop::AnyComplex complex;
    std::string digest;
    std::string kind;
};

LoadedComplex load_complex(const std::string& path) {
    std::string bytes = prodtop::read_file(path);
    Json doc = Json::parse(bytes);
    LoadedComplex out{prodtop::complex_from_json(doc), prodtop::fnv1a_digest(bytes),
                      doc.at("kind").get<std::string>()};
    return out;
}

int cmd_construct(const std::string& name, long long param, const std::string& out_path,
                  bool json_output) {
    prodtop::NamedConstruction built = prodtop::build_construction(name, param);
    emit(prodtop::construction_to_json(built), out_path, json_output);
    return kExitPass;
}

int cmd_verify(const std::string& path, std::vector<std::string> checks, int dim,
               const std::string& out_path, bool json_output) {
    LoadedComplex in = load_complex(path);
    if (checks.empty()) checks = {"pseudo", "ramified", "surface", "free-edges", "proper-cells"};

    Json results = Json::object();
    bool pass = true;

    auto as_regular2 = [&]() -> std::optional<prodtop::Regular2Complex> {
        if (const auto* k = std::get_if<prodtop::Regular2Complex>(&in.complex)) return *k;
        if (const auto* sub = std::get_if<prodtop::ProductSubcomplex>(&in.complex))
            if (sub->parent().factor_count() == 2) return prodtop::to_regular2(*sub);
        return std::nullopt;
    };

    for (const auto& check : checks) {
        if (check == "pseudo" || check == "ramified") {
            prodtop::VerifierReport report;
            if (const auto* sub = std::get_if<prodtop::ProductSubcomplex>(&in.complex)) {
                std::size_t n = dim >= 0 ? dim : std::max(sub->dimension(), 0);
                report = check == "pseudo" ? prodtop::pseudo_manifold_check(*sub, n, true)
                                           : prodtop::ramified_manifold_check(*sub, n, true);
            } else if (const auto* k = std::get_if<prodtop::Regular2Complex>(&in.complex)) {
                std::size_t n = dim >= 0 ? dim : 2;
                report = check == "pseudo" ? prodtop::pseudo_manifold_check(*k, n, true)
                                           : prodtop::ramified_manifold_check(*k, n, true);
            } else {
                std::cerr << "verify: " << check << " needs a product-subcomplex or regular2 input\n";
                return kExitInputError;
            }
            results[check] = prodtop::to_json(report);
            pass = pass && report.verdict;
        } else if (check == "surface" || check == "free-edges" || check == "proper-cells") {
            auto k = as_regular2();
            if (!k) {
                std::cerr << "verify: " << check << " needs a 2-dimensional complex\n";
                return kExitInputError;
            }
            if (check == "surface") {
                prodtop::VerifierReport report = prodtop::closed_surface_check(*k);
                results[check] = prodtop::to_json(report);
                pass = pass && report.verdict;
            } else if (check == "free-edges") {
                auto edges = prodtop::free_edges(*k);
                results[check] = Json{{"free_edges", edges}};
            } else {
                prodtop::ProperCellsResult r = prodtop::proper_cells_check(*k);
                results[check] = Json{{"proper", r.proper},
                                      {"cell", r.cell},
                                      {"containing", r.containing},
                                      {"reason", r.reason}};
                pass = pass && r.proper;
            }
        } else {
            std::cerr << "verify: unknown check '" << check << "'\n";
            return kExitInputError;
        }
    }
    emit(prodtop::report_document("verify " + path, in.digest, results, pass), out_path,
         json_output);
    return pass ? kExitPass : kExitCheckFailure;
}

int cmd_homology(const std::string& path, const std::string& out_path, bool json_output) {
    LoadedComplex in = load_complex(path);
    prodtop::HomologySummary h = std::visit(
        [](const auto& complex) -> prodtop::HomologySummary {
            using T = std::decay_t<decltype(complex)>;
            if constexpr (std::is_same_v<T, prodtop::TorusSubsetComplex>)
                return complex.homology();
            else
                return prodtop::homology_of(complex);
        },
        in.complex);

    Json results = Json{{"homology", prodtop::to_json(h)}};
    if (const auto* sub = std::get_if<prodtop::ProductSubcomplex>(&in.complex)) {
        if (sub->parent().factor_count() == 2 &&
            prodtop::closed_surface_check(prodtop::to_regular2(*sub)).verdict)
            results["surface"] = prodtop::to_json(prodtop::surface_report(*sub));
    } else if (const auto* k = std::get_if<prodtop::Regular2Complex>(&in.complex)) {
        if (prodtop::closed_surface_check(*k).verdict)
            results["surface"] = prodtop::to_json(prodtop::surface_report(*k));
    }
    emit(prodtop::report_document("homology " + path, in.digest, results, true), out_path,
         json_output);
    return kExitPass;
}

int cmd_decompose(const std::string& path, const std::string& out_path, bool json_output) {
    LoadedComplex in = load_complex(path);
    const auto* sub = std::get_if<prodtop::ProductSubcomplex>(&in.complex);
    if (!sub) {
        std::cerr << "decompose: input must be a product-subcomplex document\n";
        return kExitInputError;
    }
    prodtop::DecompositionResult d = prodtop::product_decomposition(*sub);
    prodtop::RankBoundReport rb = prodtop::rank_bound_assert(*sub);
    Json results = Json{{"decomposition", prodtop::to_json(d)},
                        {"rank_h1", rb.rank_h1},
                        {"factors", rb.factors},
                        {"rank_bound_ok", rb.ok},
                        {"detail", rb.detail}};
    bool pass = rb.ok && d.exact;
    emit(prodtop::report_document("decompose " + path, in.digest, results, pass), out_path,
         json_output);
    return pass ? kExitPass : kExitCheckFailure;
}

int cmd_collapse(const std::string& path, bool with_tree_embed, std::size_t budget,
                 const std::string& out_path, bool json_output) {
    LoadedComplex in = load_complex(path);
    std::optional<prodtop::Regular2Complex> k;
    if (const auto* r = std::get_if<prodtop::Regular2Complex>(&in.complex))
        k = *r;
    else if (const auto* sub = std::get_if<prodtop::ProductSubcomplex>(&in.complex))
        if (sub->parent().factor_count() == 2) k = prodtop::to_regular2(*sub);
    if (!k) {
        std::cerr << "collapse: input must be a 2-dimensional complex\n";
        return kExitInputError;
    }

    prodtop::CollapsePlan plan = prodtop::greedy_collapse(*k);
    prodtop::CoreClass cls = prodtop::classify_core(plan.core);
    Json results = Json{{"plan", prodtop::to_json(plan)},
                        {"core_class", prodtop::to_string(cls)},
                        {"steps", plan.steps.size()}};

    bool pass = true;
    int exit_code = kExitPass;
    if (with_tree_embed) {
        prodtop::CollapsePlan full = plan;
        bool have_point_plan = cls == prodtop::CoreClass::Point;
        if (!have_point_plan) {
            prodtop::CollapseSearchResult search = prodtop::exhaustive_collapsibility(*k, budget);
            results["search_nodes"] = search.nodes_expanded;
            if (search.status == prodtop::CollapseStatus::Collapsible) {
                full = search.plan;
                have_point_plan = true;
                results["collapsible"] = true;
            } else if (search.status == prodtop::CollapseStatus::NotWithinBudget) {
                results["collapsible"] = "budget-exhausted";
                exit_code = kExitBudget;
            } else {
                results["collapsible"] = false;
                pass = false;
            }
        } else {
            results["collapsible"] = true;
        }
        if (have_point_plan) {
            prodtop::TreeEmbedding emb = prodtop::tree_embed(*k, full);
            prodtop::VerifierReport check = prodtop::verify_tree_embedding(emb, *k);
            results["tree_embedding"] = prodtop::to_json(emb);
            results["embedding_verified"] = prodtop::to_json(check);
            pass = pass && check.verdict;
        }
    }
    emit(prodtop::report_document("collapse " + path, in.digest, results, pass), out_path,
         json_output);
    if (exit_code != kExitPass) return exit_code;
    return pass ? kExitPass : kExitCheckFailure;
}

int cmd_accept(const std::string& filter) {
    auto results = prodtop::run_acceptance(filter);
    bool all = !results.empty();
    for (const auto& r : results) {
        std::cout << prodtop::format_criterion_line(r) << "\n";
        for (const auto& line : r.lines) std::cout << line << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: failures present")
              << "\n";
    return all ? kExitPass : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational topology toolkit for complexes in products of graphs"};
    app.require_subcommand(1);

    std::string out_path;
    bool json_output = true;

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named complex as JSON");
    std::string cname;
    long long n_param = -1, m_param = -1, k_param = -1;
    construct->add_option("name", cname, "construction name")->required();
    construct->add_option("--n", n_param, "size parameter n");
    construct->add_option("--m", m_param, "size parameter m");
    construct->add_option("--k", k_param, "size parameter k");
    construct->add_option("-o,--out", out_path, "output file");
    construct->add_flag("--json,!--no-json", json_output, "machine output (default on)");

    // verify
    auto* verify = app.add_subcommand("verify", "run combinatorial checks");
    std::string vpath, checks_list;
    int vdim = -1;
    bool f_pseudo = false, f_ramified = false, f_surface = false, f_free = false,
         f_proper = false;
    verify->add_option("input", vpath, "complex JSON file")->required();
    verify->add_option("--checks", checks_list, "comma-separated checks");
    verify->add_flag("--pseudo", f_pseudo, "pseudo manifold check");
    verify->add_flag("--ramified", f_ramified, "ramified manifold check");
    verify->add_flag("--surface", f_surface, "closed surface check");
    verify->add_flag("--free-edges", f_free, "list free edges");
    verify->add_flag("--proper-cells", f_proper, "proper cells check");
    verify->add_option("--dim", vdim, "manifold dimension (default: top dimension)");
    verify->add_option("-o,--out", out_path, "output file");
    verify->add_flag("--json,!--no-json", json_output, "machine output (default on)");

    // homology
    auto* homology = app.add_subcommand("homology", "integer cellular homology");
    std::string hpath;
    homology->add_option("input", hpath, "complex JSON file")->required();
    homology->add_option("-o,--out", out_path, "output file");
    homology->add_flag("--json,!--no-json", json_output, "machine output (default on)");

    // decompose
    auto* decompose = app.add_subcommand("decompose", "circle projections and product splitting");
    std::string dpath;
    decompose->add_option("input", dpath, "product-subcomplex JSON file")->required();
    decompose->add_option("-o,--out", out_path, "output file");
    decompose->add_flag("--json,!--no-json", json_output, "machine output (default on)");

    // collapse
    auto* collapse = app.add_subcommand("collapse", "greedy collapse, optional tree embedding");
    std::string cpath;
    bool tree_embed_flag = false;
    std::size_t budget = 1000000;
    collapse->add_option("input", cpath, "complex JSON file")->required();
    collapse->add_flag("--tree-embed", tree_embed_flag, "embed into a product of two trees");
    collapse->add_option("--budget", budget, "collapse search node budget");
    collapse->add_option("-o,--out", out_path, "output file");
    collapse->add_flag("--json,!--no-json", json_output, "machine output (default on)");

    // accept
    auto* accept = app.add_subcommand("accept", "run the acceptance suite");
    std::string filter;
    accept->add_option("--filter", filter, "run only criteria whose id/name contains TAG");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            long long param = -1;
            for (long long p : {n_param, m_param, k_param})
                if (p >= 0) param = p;
            if (param < 0) {
                for (const auto& spec : prodtop::construction_registry())
                    if (spec.cli_name == cname) param = spec.default_param;
            }
            return cmd_construct(cname, param, out_path, json_output);
        }
        if (verify->parsed()) {
            std::vector<std::string> checks;
            if (!checks_list.empty()) {
                std::stringstream ss(checks_list);
                std::string item;
                while (std::getline(ss, item, ',')) checks.push_back(item);
            }
            if (f_pseudo) checks.push_back("pseudo");
            if (f_ramified) checks.push_back("ramified");
            if (f_surface) checks.push_back("surface");
            if (f_free) checks.push_back("free-edges");
            if (f_proper) checks.push_back("proper-cells");
            return cmd_verify(vpath, checks, vdim, out_path, json_output);
        }
        if (homology->parsed()) return cmd_homology(hpath, out_path, json_output);
        if (decompose->parsed()) return cmd_decompose(dpath, out_path, json_output);
        if (collapse->parsed())
            return cmd_collapse(cpath, tree_embed_flag, budget, out_path, json_output);
        if (accept->parsed()) return cmd_accept(filter);
    } catch (const Json::exception& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const std::runtime_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
