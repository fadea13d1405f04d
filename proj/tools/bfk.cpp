// Command-line surface: build the braid bimodules on either side, run the
// relation checkers, compare associated graded structures, and print
// invariant tables.  Exit code 0 = all requested checks pass, 1 = a
// mathematical mismatch, 2 = usage error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bfk/complexes.hpp"
#include "bfk/drivers.hpp"
#include "bfk/hfside.hpp"
#include "bfk/khside.hpp"
#include "bfk/specseq.hpp"
#include "bfk/toy.hpp"
#include "bfk/transfer.hpp"

using namespace bfk;

namespace {

constexpr int kDefaultMCeiling = 5;

void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << j.dump(2) << "\n";
}

void guard_m(int m, bool force) {
    if (m < 0) throw CLI::ValidationError("--m must be >= 0");
    if (m > kDefaultMCeiling && !force)
        throw CLI::ValidationError("--m above " + std::to_string(kDefaultMCeiling) +
                                   " grows quickly; pass --force to proceed");
}

std::string pair_str(const std::pair<int, int>& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

nlohmann::json dims_json(const std::map<std::pair<int, int>, int>& dims) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [p, d] : dims)
        out.push_back({{"left", p.first}, {"right", p.second}, {"dim", d}});
    return out;
}

int cmd_algebra(const std::string& side, int m, const std::string& json_path) {
    nlohmann::json j;
    if (side == "kh") {
        auto A = bkh(m);
        std::cout << "quiver-side algebra, m=" << m << ": dim " << A->space.dim() << "\n";
        if (!json_path.empty()) write_json(json_path, nlohmann::json::parse(to_json(*A)));
        else std::cout << to_json(*A) << "\n";
    } else if (side == "hf") {
        auto A = bhf(m);
        std::cout << "strands-side algebra (adapted basis), m=" << m << ": dim "
                  << A->space.dim() << "\n";
        if (!json_path.empty()) write_json(json_path, nlohmann::json::parse(to_json(*A)));
        else std::cout << to_json(*A) << "\n";
    } else if (side == "homB") {
        AInfAlgebra B = build_B(m);
        CheckReport rep = check_algebra(B, CheckOptions{4, true, true, 4});
        std::cout << "Hom dg algebra, m=" << m << ": dim " << B.space.dim()
                  << ", relations " << (rep.ok ? "pass" : "FAIL") << "\n";
        if (!json_path.empty()) write_json(json_path, nlohmann::json::parse(to_json(B)));
        if (!rep.ok) return 1;
    } else {
        throw CLI::ValidationError("--side must be kh, hf or homB");
    }
    return 0;
}

int cmd_bimodule(const std::string& side, int m, const std::string& word, bool check,
                 int cap, const std::string& json_path) {
    BraidWord w = parse_braid(word, m);
    AInfBimodule M = (side == "kh") ? braid_bimodule_kh(m, w, bkh(m))
                                    : braid_bimodule_hf(m, w, bhf(m));
    std::cout << "word \"" << print_braid(w) << "\" over m=" << m << " (" << side
              << "): dim " << M.space.dim() << "\n";
    auto dims = homology_dims_by_idem(M);
    std::cout << "homology by idempotent pair:\n";
    for (const auto& [p, d] : dims)
        if (d) std::cout << "  " << pair_str(p) << " : " << d << "\n";
    bool ok = true;
    if (check) {
        CheckOptions opt;
        opt.cap = cap;
        CheckReport rel = check_bimodule(M, opt);
        CheckReport uni = check_unital_actions(M);
        CheckReport filt = M.space.filtered ? check_filtered_bimodule(M) : CheckReport{};
        ok = rel.ok && uni.ok && filt.ok;
        std::cout << "relation check (cap " << cap << "): " << (rel.ok ? "pass" : "FAIL")
                  << " over " << rel.instances << " instances\n";
        if (!rel.ok)
            std::cout << "  first failure: " << rel.failures.front().relation << "\n";
        std::cout << "unital actions: " << (uni.ok ? "pass" : "FAIL") << "\n";
        if (M.space.filtered)
            std::cout << "filtration: " << (filt.ok ? "pass" : "FAIL") << "\n";
    }
    if (!json_path.empty()) {
        nlohmann::json j = nlohmann::json::parse(to_json(M));
        j["homology"] = dims_json(dims);
        write_json(json_path, j);
    }
    return ok ? 0 : 1;
}

int cmd_gr_compare(int m, const std::string& word, const std::string& json_path) {
    BraidWord w = parse_braid(word, m);
    GrCompareResult res = gr_compare(m, w);
    std::cout << "gr comparison for \"" << print_braid(w) << "\" over m=" << m << ": "
              << (res.pass ? "pass" : "FAIL") << "\n";
    if (!res.algebra_detail.empty()) std::cout << "  algebra: " << res.algebra_detail << "\n";
    if (!res.module_detail.empty()) std::cout << "  module: " << res.module_detail << "\n";
    if (!res.bijection_detail.empty())
        std::cout << "  tensor exchange: " << res.bijection_detail << "\n";
    if (!json_path.empty())
        write_json(json_path, {{"pass", res.pass},
                               {"algebra", res.algebra_detail},
                               {"module", res.module_detail},
                               {"bijection", res.bijection_detail}});
    return res.pass ? 0 : 1;
}

int cmd_invariants(int m, const std::string& word, const std::string& json_path) {
    BraidWord w = parse_braid(word, m);
    InvariantsTable tab = invariants(m, w);
    std::cout << "invariants for \"" << print_braid(w) << "\" over m=" << m << "\n";
    std::cout << "pair      H(total)  H(gr)   H(gr) by level\n";
    std::map<std::pair<int, int>, int> keys = tab.total;
    for (const auto& [p, d] : tab.graded) keys.emplace(p, 0);
    for (const auto& [p, _] : keys) {
        int t = tab.total.count(p) ? tab.total.at(p) : 0;
        int g = tab.graded.count(p) ? tab.graded.at(p) : 0;
        if (t == 0 && g == 0) continue;
        std::cout << pair_str(p) << "       " << t << "        " << g << "     ";
        if (tab.graded_by_level.count(p))
            for (const auto& [lev, d2] : tab.graded_by_level.at(p))
                std::cout << " [" << lev << "]:" << d2;
        std::cout << "\n";
    }
    if (!json_path.empty())
        write_json(json_path, {{"total", dims_json(tab.total)},
                               {"graded", dims_json(tab.graded)}});
    return 0;
}

int cmd_ss(int m, const std::string& word, const std::string& json_path) {
    BraidWord w = parse_braid(word, m);
    SSReport rep = ss_report(m, w);
    std::cout << "spectral sequence for \"" << print_braid(w) << "\" over m=" << m << "\n";
    for (const auto& [p, ss] : rep.pages) {
        if (ss.einf().total_dim == 0 && ss.pages[0].total_dim == 0) continue;
        std::cout << pair_str(p) << ": pages";
        for (const auto& page : ss.pages) std::cout << " E^" << page.r << "=" << page.total_dim;
        std::cout << " (collapses at E^" << ss.collapse_page << ")\n";
    }
    std::cout << "E^1 = gr homology and E^inf = total homology: "
              << (rep.consistent ? "pass" : "FAIL") << "\n";
    if (!json_path.empty()) {
        nlohmann::json j;
        j["consistent"] = rep.consistent;
        j["e1"] = dims_json(rep.e1);
        j["einf"] = dims_json(rep.einf);
        write_json(json_path, j);
    }
    return rep.consistent ? 0 : 1;
}

int cmd_transfer(int m, int cap, const std::string& json_path) {
    TransferDiff res = transfer_diff(m, cap);
    for (const auto& [what, detail] : res.lines)
        std::cout << what << ": " << detail << "\n";
    std::cout << "derived == hardcoded: " << (res.pass ? "true" : "false") << "\n";
    if (!json_path.empty()) {
        nlohmann::json j;
        j["pass"] = res.pass;
        j["lines"] = nlohmann::json::array();
        for (const auto& [what, detail] : res.lines)
            j["lines"].push_back({{"what", what}, {"detail", detail}});
        write_json(json_path, j);
    }
    return res.pass ? 0 : 1;
}

int cmd_toy(const std::string& json_path) {
    ToyReport rep = toy_verify();
    for (const auto& l : rep.lines) std::cout << l << "\n";
    std::cout << (rep.ok ? "OK" : "FAIL") << "\n";
    if (!json_path.empty()) {
        nlohmann::json j;
        j["ok"] = rep.ok;
        j["lines"] = rep.lines;
        write_json(json_path, j);
    }
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for the braid bimodules on the quiver and strands sides"};
    app.require_subcommand(1);

    std::string side = "kh", word, json_path;
    int m = 1, cap = 4;
    bool check = false, force = false;

    auto* alg = app.add_subcommand("algebra", "print one of the three algebras");
    alg->add_option("--side", side, "kh | hf | homB")->required();
    alg->add_option("--m", m, "strand parameter")->required();
    alg->add_option("--json", json_path, "write machine output here");
    alg->add_flag("--force", force, "allow m above the default ceiling");

    auto* bim = app.add_subcommand("bimodule", "build a braid word bimodule");
    bim->add_option("--m", m)->required();
    bim->add_option("--word", word, "whitespace-separated signed generator indices");
    bim->add_option("--side", side, "kh | hf");
    bim->add_flag("--check", check, "run the relation checkers");
    bim->add_option("--cap", cap, "arity cap for the checkers");
    bim->add_option("--json", json_path);
    bim->add_flag("--force", force);

    auto* grc = app.add_subcommand("gr-compare",
                                   "compare gr of the strands bimodule with the quiver one");
    grc->add_option("--m", m)->required();
    grc->add_option("--word", word);
    grc->add_option("--json", json_path);
    grc->add_flag("--force", force);

    auto* inv = app.add_subcommand("invariants", "per-idempotent homology dimension tables");
    inv->add_option("--m", m)->required();
    inv->add_option("--word", word);
    inv->add_option("--json", json_path);
    inv->add_flag("--force", force);

    auto* ssc = app.add_subcommand("ss", "filtration spectral sequence pages");
    ssc->add_option("--m", m)->required();
    ssc->add_option("--word", word);
    ssc->add_option("--json", json_path);
    ssc->add_flag("--force", force);

    auto* tr = app.add_subcommand("transfer", "re-derive the quiver-side tables and diff");
    tr->add_option("--m", m)->required();
    tr->add_option("--cap", cap);
    tr->add_option("--json", json_path);
    tr->add_flag("--force", force);

    auto* toy = app.add_subcommand("toy", "verify the equivariant circle model");
    toy->add_option("--json", json_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (alg->parsed()) { guard_m(m, force); return cmd_algebra(side, m, json_path); }
        if (bim->parsed()) {
            guard_m(m, force);
            if (side != "kh" && side != "hf")
                throw CLI::ValidationError("--side must be kh or hf");
            return cmd_bimodule(side, m, word, check, cap, json_path);
        }
        if (grc->parsed()) { guard_m(m, force); return cmd_gr_compare(m, word, json_path); }
        if (inv->parsed()) { guard_m(m, force); return cmd_invariants(m, word, json_path); }
        if (ssc->parsed()) { guard_m(m, force); return cmd_ss(m, word, json_path); }
        if (tr->parsed()) { guard_m(m, force); return cmd_transfer(m, cap, json_path); }
        if (toy->parsed()) return cmd_toy(json_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
