// End-to-end acceptance gate: eight criteria, one pass/fail line each.
// Usage: acceptance <worked-example.hsys> <cli-binary>

#include <sys/wait.h>

#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "homsys/gen.hpp"
#include "homsys/oracle.hpp"

using namespace homsys;
using nlohmann::json;

namespace {

std::string g_example_path;
std::string g_cli_path;

struct CliOut {
    int code = -1;
    std::string out;
};

CliOut run_cli(const std::string& args) {
    std::string cmd = "'" + g_cli_path + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw error("popen failed for: " + cmd);
    CliOut r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int rc = pclose(p);
    if (WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
    return r;
}

std::string on_example(const std::string& command, const std::string& format,
                       const std::string& seed = "0") {
    return command + " --input '" + g_example_path + "' --format " + format + " --seed " + seed;
}

// ---------------------------------------------------------------------------

bool criterion_brute_force(std::string& note) {
    std::vector<BoundQuiverAlgebra> algebras;
    algebras.push_back(make_algebra(Quiver{{"1", "2"}, {{"a", 0, 1}}}, PrimeField(2), {}));
    algebras.push_back(make_algebra(Quiver{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}},
                                    PrimeField(2), {Relation{{PathTerm{1, {0, 1}}}}}));
    std::size_t pairs = 0;
    for (const BoundQuiverAlgebra& alg : algebras) {
        std::vector<Representation> all = oracle::all_reps_up_to(alg, 4);
        for (const Representation& x : all)
            for (const Representation& y : all) {
                std::uint32_t hom = hom_space(alg, x, y).dim();
                std::uint32_t hom_ref = oracle::hom_dim_brute(alg, x, y);
                if (hom != hom_ref) {
                    note = "hom mismatch " + std::to_string(hom) + " vs " +
                           std::to_string(hom_ref);
                    return false;
                }
                std::uint32_t ext = ext_space(alg, x, y).dim();
                std::uint32_t ext_ref = oracle::ext_dim_brute(alg, x, y);
                if (ext != ext_ref) {
                    note = "ext mismatch " + std::to_string(ext) + " vs " +
                           std::to_string(ext_ref);
                    return false;
                }
                ++pairs;
            }
    }
    note = std::to_string(pairs) + " pairs over 2 algebras";
    return true;
}

bool criterion_random_systems(std::string& note) {
    SearchOptions opts;
    Rng rng = make_rng(88001);
    for (int i = 0; i < 200; ++i) {
        std::uint32_t p = (i % 5 == 0) ? 5u : (i % 3 == 0 ? 3u : 2u);
        HomologicalSystem sys = gen::random_system(rng, opts, p);
        SystemCheck sc = check_system(sys, opts, rng);
        if (sc.verdict != SystemCheck::Verdict::ok) {
            note = "trial " + std::to_string(i) + ": axiom check not ok";
            return false;
        }
        if (!remark4_consequences(sys).empty()) {
            note = "trial " + std::to_string(i) + ": height consequence violated";
            return false;
        }
    }
    note = "200 systems, GF(2)/GF(3)/GF(5)";
    return true;
}

bool criterion_normalize(std::string& note) {
    SearchOptions opts;
    Rng rng = make_rng(88002);
    int reordered = 0;
    for (int i = 0; i < 200; ++i) {
        HomologicalSystem sys = gen::random_system(rng, opts, i % 2 ? 3 : 2);
        Filtration f = gen::random_filtration(sys, rng, opts, 1 + rng() % 3);
        Filtration n = normalize(sys, f, opts, rng);
        if (n.labels != f.labels) ++reordered;
        if (!verify_filtration(sys, n).ok() || !(n.module == f.module)) {
            note = "trial " + std::to_string(i) + ": normalized filtration invalid";
            return false;
        }
        if (multiplicities(n) != multiplicities(f)) {
            note = "trial " + std::to_string(i) + ": label multiset changed";
            return false;
        }
        for (std::size_t s = 1; s < n.length(); ++s)
            if (sys.height_of(n.labels[s - 1]) < sys.height_of(n.labels[s])) {
                note = "trial " + std::to_string(i) + ": heights still rise";
                return false;
            }
    }
    if (reordered < 5) {
        note = "only " + std::to_string(reordered) + " trials exercised a real reorder";
        return false;
    }
    note = "200 filtrations, " + std::to_string(reordered) + " actually reordered";
    return true;
}

bool criterion_layer_agreement(std::string& note) {
    SearchOptions opts;
    Rng rng = make_rng(88003);
    int independent = 0;
    for (int i = 0; i < 100; ++i) {
        HomologicalSystem sys = gen::random_system(rng, opts, i % 2 ? 3 : 2);
        Filtration f1 = gen::random_filtration(sys, rng, opts, 2 + rng() % 2);
        Filtration f2 = gen::random_resplit(sys, f1, rng, opts, 8);
        if (!(f2.chain == f1.chain) || f2.labels != f1.labels) ++independent;
        auto h1 = h_filtration_from(sys, f1, opts, rng);
        auto h2 = h_filtration_from(sys, f2, opts, rng);
        auto hc = h_filtration_canonical(sys, f1.module, opts, rng);
        if (!h1.found() || !h2.found() || !hc.found()) {
            note = "trial " + std::to_string(i) + ": a layering was not found";
            return false;
        }
        if (!(h1.value->layers == h2.value->layers) || !(h1.value->layers == hc.value->layers)) {
            note = "trial " + std::to_string(i) + ": layer subspaces disagree";
            return false;
        }
        if (h1.value->mult != h2.value->mult || h1.value->mult != hc.value->mult) {
            note = "trial " + std::to_string(i) + ": multiplicities disagree";
            return false;
        }
    }
    if (independent < 25) {
        note = "only " + std::to_string(independent) + " genuinely distinct refiltrations";
        return false;
    }
    note = "100 trials, " + std::to_string(independent) + " with a distinct second filtration";
    return true;
}

bool criterion_additivity(std::string& note) {
    SearchOptions opts;
    Rng rng = make_rng(88004);
    for (int i = 0; i < 100; ++i) {
        HomologicalSystem sys = gen::random_system(rng, opts, i % 2 ? 3 : 2);
        Filtration f_quot = gen::random_filtration(sys, rng, opts, 1 + rng() % 2, 8);
        std::size_t w = rng() % sys.size();
        ExtSpace es = ext_space(sys.algebra, f_quot.module, sys.delta[w]);
        std::vector<std::uint32_t> coeffs(es.cocycles.dim(), 0);
        for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng() % sys.algebra.field.p);
        ShortExactSequence seq =
            build_extension(sys.algebra, f_quot.module, sys.delta[w], es.cocycle(coeffs));
        Filtration f_sub = gen::member_filtration(sys, w, opts, rng);
        AdditivityReport rep = additivity_check(sys, seq, f_sub, f_quot, opts, rng);
        if (!rep.counts_ok) {
            note = "trial " + std::to_string(i) + ": counts not additive (" + rep.detail + ")";
            return false;
        }
        if (rep.spliced.length() != f_sub.length() + f_quot.length()) {
            note = "trial " + std::to_string(i) + ": length not additive";
            return false;
        }
        // well-definedness: any refiltration of the middle reports the same counts
        Filtration alt = gen::random_resplit(sys, rep.spliced, rng, opts, 6);
        if (!check_uniqueness(sys, rep.spliced, alt, opts, rng).ok()) {
            note = "trial " + std::to_string(i) + ": counts depend on the filtration";
            return false;
        }
    }
    note = "100 spliced extensions";
    return true;
}

bool criterion_summands(std::string& note) {
    SearchOptions opts;
    Rng rng = make_rng(88005);
    for (int i = 0; i < 200; ++i) {
        HomologicalSystem sys = gen::random_system(rng, opts, i % 3 ? 2 : 3);
        Filtration f1 = gen::random_filtration(sys, rng, opts, 1 + rng() % 2, 8);
        Filtration f2 = gen::random_filtration(sys, rng, opts, 1 + rng() % 2, 8);
        DirectSum ds = direct_sum(sys.algebra, f1.module, f2.module);
        auto r = decompose_summands(sys, ds.rep, f1.module, ds.inj1, f2.module, ds.inj2,
                                    opts, rng);
        if (!r.found()) {
            note = "trial " + std::to_string(i) + ": decomposition not found";
            return false;
        }
        if (!verify_filtration(sys, r.value->first).ok() ||
            !verify_filtration(sys, r.value->second).ok()) {
            note = "trial " + std::to_string(i) + ": a summand filtration failed to verify";
            return false;
        }
        std::map<std::size_t, std::uint32_t> total = multiplicities(r.value->first).first;
        for (const auto& [lbl, cnt] : multiplicities(r.value->second).first) total[lbl] += cnt;
        if (total != r.value->whole_counts) {
            note = "trial " + std::to_string(i) + ": counts not additive";
            return false;
        }
        if (i % 4 == 0) {  // independent recount of the whole module
            auto whole = h_filtration_canonical(sys, ds.rep, opts, rng);
            if (!whole.found()) {
                note = "trial " + std::to_string(i) + ": whole module not layered";
                return false;
            }
            std::map<std::size_t, std::uint32_t> agg;
            for (const auto& [key, cnt] : whole.value->mult) agg[key.second] += cnt;
            if (agg != r.value->whole_counts) {
                note = "trial " + std::to_string(i) + ": whole-module counts disagree";
                return false;
            }
        }
    }
    note = "200 biproducts";
    return true;
}

bool criterion_worked_example(std::string& note) {
    struct Probe {
        std::string args;
        std::function<bool(const json&)> good;
        const char* what;
    };
    auto dim_is = [](int d) {
        return [d](const json& j) { return j["details"]["dim"] == d; };
    };
    std::vector<Probe> probes = {
        {"check", [](const json& j) { return j["verdict"] == "ok"; }, "check verdict"},
        {"height",
         [](const json& j) {
             return j["details"]["heights"]["1"] == 2 && j["details"]["heights"]["2"] == 1;
         },
         "heights"},
        {"hom S2 P1", dim_is(1), "dim Hom(S2, P1)"},
        {"hom P1 S2", dim_is(0), "dim Hom(P1, S2)"},
        {"ext S1 S2", dim_is(1), "dim Ext(S1, S2)"},
        {"ext S2 S1", dim_is(0), "dim Ext(S2, S1)"},
        {"decompose M P1 S2",
         [](const json& j) {
             const json& d = j["details"];
             return d["first"]["chain"] == json::array({{0, 0}, {1, 1}}) &&
                    d["first"]["labels"] == json::array({"1"}) &&
                    d["second"]["chain"] == json::array({{0, 0}, {0, 1}}) &&
                    d["second"]["labels"] == json::array({"2"});
         },
         "decompose chains"},
    };
    for (const Probe& p : probes) {
        CliOut r = run_cli(on_example(p.args, "structured"));
        if (r.code != 0) {
            note = std::string(p.what) + ": exit " + std::to_string(r.code);
            return false;
        }
        json j = json::parse(r.out, nullptr, false);
        if (j.is_discarded() || !p.good(j)) {
            note = std::string(p.what) + ": unexpected report";
            return false;
        }
    }
    note = std::to_string(probes.size()) + " queries through the CLI";
    return true;
}

bool criterion_determinism(std::string& note) {
    int compared = 0;
    for (const std::string& cmd :
         {std::string("check"), std::string("hfilt M"), std::string("decompose M P1 S2"),
          std::string("normalize F")}) {
        for (const std::string& fmt : {std::string("structured"), std::string("human")}) {
            CliOut a = run_cli(on_example(cmd, fmt, "123"));
            CliOut b = run_cli(on_example(cmd, fmt, "123"));
            if (a.code != b.code || a.out != b.out) {
                note = "'" + cmd + "' (" + fmt + ") differs between runs";
                return false;
            }
            if (a.out.empty()) {
                note = "'" + cmd + "' produced no output";
                return false;
            }
            ++compared;
        }
    }
    note = std::to_string(compared) + " command/format pairs run twice";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_example_path = argv[1];
    if (argc > 2) g_cli_path = argv[2];

    struct Criterion {
        const char* desc;
        bool (*fn)(std::string&);
        bool needs_cli;
    };
    const Criterion criteria[] = {
        {"hom/ext dimensions match exhaustive brute force on all module pairs of total "
         "dimension <= 4 over GF(2)",
         criterion_brute_force, false},
        {"200 random systems pass the axiom check with no height consequences violated",
         criterion_random_systems, false},
        {"normalize keeps label multisets and sorts heights on 200 random filtrations",
         criterion_normalize, false},
        {"height layerings agree subspace-for-subspace across independent filtrations "
         "and the canonical construction",
         criterion_layer_agreement, false},
        {"length and label counts are well defined and additive over spliced extensions",
         criterion_additivity, false},
        {"200 random biproducts decompose into verified filtrations with additive counts",
         criterion_summands, false},
        {"the worked two-vertex example answers every query correctly through the CLI",
         criterion_worked_example, true},
        {"reports are byte-identical for a fixed input and seed", criterion_determinism, true},
    };

    int failures = 0;
    int num = 0;
    for (const Criterion& c : criteria) {
        ++num;
        bool ok = false;
        std::string note;
        if (c.needs_cli && (g_example_path.empty() || g_cli_path.empty())) {
            note = "needs <example.hsys> and <cli> arguments";
        } else {
            try {
                ok = c.fn(note);
            } catch (const std::exception& e) {
                ok = false;
                note = std::string("exception: ") + e.what();
            }
        }
        std::cout << "criterion " << num << ": " << c.desc << " ... "
                  << (ok ? "[PASS]" : "[FAIL]") << (note.empty() ? "" : " (" + note + ")")
                  << std::endl;
        if (!ok) ++failures;
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 8 criteria passed" << std::endl;
    return 0;
}
