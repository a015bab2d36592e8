// Command-line front end: compute generalized inverses of exact rational
// matrices, verify defining equations, run the seeded theorem suites,
// reproduce the worked examples, and search for converse counterexamples.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "wcore/examples.hpp"
#include "wcore/matrix_io.hpp"
#include "wcore/report_json.hpp"
#include "wcore/search.hpp"
#include "wcore/theorems.hpp"

namespace {

using namespace wcore;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAbsent = 2;
constexpr int kExitSuiteFail = 3;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << text;
}

std::string render_result(const InverseResult& r, const std::string& format,
                          std::optional<int> drazin_index = std::nullopt) {
    if (format == "json") {
        nlohmann::json j = inverse_result_to_json(r);
        if (drazin_index) j["index"] = *drazin_index;
        return j.dump(2) + "\n";
    }
    std::string out;
    if (r.present())
        out += to_text(r.get());
    else
        out += "ABSENT\n";
    out += "certificate:";
    for (const auto& [tag, ok] : r.certificate)
        out += " " + std::string(tag_name(tag)) + "=" + (ok ? "true" : "false");
    out += "\nmethod: ";
    out += r.method == Method::ClosedForm ? "closed_form" : "oracle";
    out += "\n";
    if (drazin_index) out += "index: " + std::to_string(*drazin_index) + "\n";
    return out;
}

int run_compute(const std::string& kind, const std::string& matrix_file,
                const std::string& weight_file, const std::string& format,
                const std::string& out_file) {
    Matrix a = load_matrix_file(matrix_file);
    if (kind != "one" && !a.is_square()) {
        std::cerr << "error: --kind " << kind << " needs a square matrix\n";
        return kExitUsage;
    }
    const bool needs_weight =
        kind == "g13m" || kind == "g14n" || kind == "wcore" || kind == "wdualcore";
    if (needs_weight && weight_file.empty()) {
        std::cerr << "error: --kind " << kind << " requires --weight\n";
        return kExitUsage;
    }
    if (!needs_weight && !weight_file.empty()) {
        std::cerr << "error: --kind " << kind << " takes no --weight\n";
        return kExitUsage;
    }
    std::optional<Weight> w;
    if (needs_weight) w = Weight(load_matrix_file(weight_file));

    InverseResult res;
    std::optional<int> drazin_index;
    if (kind == "one") {
        res.value = one_inverse(a);
        RingContext ctx{a.rows(), std::nullopt, std::nullopt};
        std::array<EquationTag, 1> tags = {EquationTag::E1};
        res.certificate = verify_equations(a, *res.value, tags, ctx);
        res.method = Method::Oracle;
    } else if (kind == "g13m") {
        res = inverse_13m(a, *w);
    } else if (kind == "g14n") {
        res = inverse_14n(a, *w);
    } else if (kind == "group") {
        res = group_inverse(a);
    } else if (kind == "drazin") {
        auto d = drazin_inverse(a);
        res = std::move(d.inv);
        drazin_index = d.index;
    } else if (kind == "core") {
        res = weighted_core(a, Weight::identity(a.rows()));
    } else if (kind == "wcore") {
        res = weighted_core(a, *w);
    } else if (kind == "wdualcore") {
        res = weighted_dual_core(a, *w);
    } else {
        std::cerr << "error: unknown kind " << kind << "\n";
        return kExitUsage;
    }
    write_output(out_file, render_result(res, format, drazin_index));
    return res.present() ? kExitOk : kExitAbsent;
}

int run_verify(const std::string& matrix_file, const std::string& candidate_file,
               const std::string& equations, const std::string& weight_m_file,
               const std::string& weight_n_file, std::optional<int> index_k) {
    Matrix a = load_matrix_file(matrix_file);
    Matrix x = load_matrix_file(candidate_file);
    RingContext ctx{a.rows(), std::nullopt, std::nullopt};
    if (!weight_m_file.empty()) ctx.m = Weight(load_matrix_file(weight_m_file));
    if (!weight_n_file.empty()) ctx.n = Weight(load_matrix_file(weight_n_file));

    std::vector<EquationTag> tags;
    std::stringstream ss(equations);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto tag = tag_from_name(tok);
        if (!tag) {
            std::cerr << "error: unknown equation tag '" << tok << "'\n";
            return kExitUsage;
        }
        tags.push_back(*tag);
    }
    if (tags.empty()) {
        std::cerr << "error: no equations given\n";
        return kExitUsage;
    }
    auto cert = verify_equations(a, x, tags, ctx, index_k);
    for (const auto& [tag, ok] : cert)
        std::cout << "(" << tag_name(tag) << ") " << (ok ? "holds" : "FAILS") << "\n";
    return certificate_ok(cert) ? kExitOk : kExitAbsent;
}

int suite_threads() {
    // WCORE_THREADS caps parallel instance evaluation; reports are merged by
    // instance index, so the output is identical for every setting.
    const char* env = std::getenv("WCORE_THREADS");
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (!env) return hw;
    try {
        return std::max(1, std::min(hw, std::stoi(env)));
    } catch (const std::exception&) {
        return 1;
    }
}

int run_suite_cmd(const std::string& theorem, int count, int dim, std::uint64_t seed,
                  int entry_bound, const std::string& out_file) {
    GenConfig cfg;
    cfg.dim = dim;
    cfg.seed = seed;
    cfg.entry_bound = entry_bound;
    const int threads = suite_threads();

    std::vector<TheoremId> ids;
    if (theorem == "all") {
        ids.assign(kAllTheorems.begin(), kAllTheorems.end());
    } else {
        auto id = theorem_from_name(theorem);
        if (!id) {
            std::cerr << "error: unknown theorem '" << theorem << "'\n";
            return kExitUsage;
        }
        ids.push_back(*id);
    }

    nlohmann::json out = nlohmann::json::array();
    int total_fail = 0;
    for (TheoremId id : ids) {
        SuiteSummary s = run_suite(id, count, cfg, threads);
        total_fail += s.fail;
        std::cerr << theorem_name(id) << ": pass=" << s.pass << " fail=" << s.fail
                  << " hypothesis_not_met=" << s.hypothesis_not_met << "\n";
        out.push_back(suite_to_json(s));
    }
    write_output(out_file, out.dump(2) + "\n");
    return total_fail == 0 ? kExitOk : kExitSuiteFail;
}

int run_examples() {
    auto results = run_worked_examples();
    int passed = 0;
    for (const auto& r : results) {
        std::cout << (r.ok ? "PASS " : "FAIL ") << r.name;
        if (!r.ok && !r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        passed += r.ok ? 1 : 0;
    }
    std::cout << passed << "/" << results.size() << " examples match\n";
    return passed == static_cast<int>(results.size()) ? kExitOk : kExitAbsent;
}

int run_search_cmd(const std::string& property, std::uint64_t budget, int dim,
                   std::uint64_t seed, const std::string& out_file) {
    auto prop = search_property_from_name(property);
    if (!prop) {
        std::cerr << "error: unknown property " << property << "\n";
        return kExitUsage;
    }
    SearchResult res = search_witnesses(*prop, budget, dim, seed);
    nlohmann::json j{{"property", property},
                     {"seed", res.seed},
                     {"dim", res.dim},
                     {"budget", res.budget},
                     {"examined", res.examined},
                     {"witnesses_found", res.witnesses.size()}};
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : res.witnesses) {
        nlohmann::json wj = instance_to_json(w.instance);
        wj["iteration"] = w.iteration;
        wj["report"] = report_to_json(w.report, true);
        j["witnesses"].push_back(std::move(wj));
    }
    write_output(out_file, j.dump(2) + "\n");
    std::cerr << property << ": " << res.witnesses.size() << " witness(es) in " << res.examined
              << " instances\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized-inverse engine for rational matrices"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "Compute a generalized inverse from files");
    std::string kind, matrix_file, weight_file, format = "text", out_file;
    compute->add_option("--kind", kind, "one|g13m|g14n|group|drazin|core|wcore|wdualcore")
        ->required();
    compute->add_option("--matrix", matrix_file, "matrix file (text or JSON)")->required();
    compute->add_option("--weight", weight_file, "weight file (required for weighted kinds)");
    compute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--out", out_file, "write result here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Verify defining equations for a candidate");
    std::string candidate_file, equations, weight_m_file, weight_n_file;
    int index_k = -1;
    verify->add_option("--matrix", matrix_file)->required();
    verify->add_option("--candidate", candidate_file)->required();
    verify->add_option("--equations", equations, "comma list from 1,2,3m,4n,5,6,7,8,9,6k")
        ->required();
    verify->add_option("--weight-m", weight_m_file);
    verify->add_option("--weight-n", weight_n_file);
    verify->add_option("--index", index_k, "the k for equation 6k");

    auto* suite = app.add_subcommand("suite", "Run seeded theorem suites");
    std::string theorem;
    int count = 100, dim = 3, entry_bound = 5;
    std::uint64_t seed = 0;
    suite->add_option("--theorem", theorem, "theorem id or 'all'")->required();
    suite->add_option("--count", count);
    suite->add_option("--dim", dim);
    suite->add_option("--seed", seed);
    suite->add_option("--entry-bound", entry_bound);
    suite->add_option("--out", out_file, "write the JSON report here");

    app.add_subcommand("examples", "Recompute the worked examples and compare exactly");

    auto* search = app.add_subcommand("search", "Search for converse-refutation witnesses");
    std::string property;
    std::uint64_t budget = 10000;
    search->add_option("--property", property)
        ->check(CLI::IsMember({"rol_converse", "dual_rol_converse", "rol_iff_direction"}))
        ->required();
    search->add_option("--budget", budget);
    search->add_option("--dim", dim);
    search->add_option("--seed", seed);
    search->add_option("--out", out_file);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(kind, matrix_file, weight_file, format, out_file);
        if (verify->parsed())
            return run_verify(matrix_file, candidate_file, equations, weight_m_file, weight_n_file,
                              index_k >= 0 ? std::optional<int>(index_k) : std::nullopt);
        if (suite->parsed()) return run_suite_cmd(theorem, count, dim, seed, entry_bound, out_file);
        if (app.got_subcommand("examples")) return run_examples();
        if (search->parsed()) return run_search_cmd(property, budget, dim, seed, out_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
