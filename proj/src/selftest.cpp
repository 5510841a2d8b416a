#include "homsys/selftest.hpp"

#include <ostream>

#include "homsys/gen.hpp"
#include "homsys/oracle.hpp"

namespace homsys {

namespace {

void check(bool cond, const std::string& msg) {
    if (!cond) throw error(msg);
}

std::uint64_t hom_params(const Representation& x, const Representation& y) {
    std::uint64_t n = 0;
    for (std::size_t v = 0; v < x.dims.size(); ++v)
        n += static_cast<std::uint64_t>(y.dims[v]) * x.dims[v];
    return n;
}

void worked_example(std::ostream& out) {
    HomologicalSystem sys = gen::a2_system();
    const BoundQuiverAlgebra& alg = sys.algebra;
    const Representation& p1 = sys.delta[0];
    const Representation& s2 = sys.delta[1];
    Representation s1 = simple_rep(alg, 0);

    check(hom_space(alg, s2, p1).dim() == 1, "dim Hom(S2, P1) != 1");
    check(hom_space(alg, p1, s2).dim() == 0, "dim Hom(P1, S2) != 0");
    check(ext_space(alg, s1, s2).dim() == 1, "dim Ext(S1, S2) != 1");
    check(ext_space(alg, s2, s1).dim() == 0, "dim Ext(S2, S1) != 0");
    check(sys.height_of(0) == 2 && sys.height_of(1) == 1, "height map is off");

    check(oracle::hom_dim_brute(alg, s2, p1) == 1, "oracle disagrees on Hom(S2, P1)");
    check(oracle::ext_dim_brute(alg, s1, s2) == 1, "oracle disagrees on Ext(S1, S2)");
    check(oracle::ext_dim_brute(alg, s2, s1) == 0, "oracle disagrees on Ext(S2, S1)");
    check(oracle::height_brute(sys.omega) == sys.height_map().h, "oracle disagrees on heights");

    SearchOptions opts;
    Rng rng = make_rng(7, 0);
    check(check_system(sys, opts, rng).verdict == SystemCheck::Verdict::ok,
          "the worked example fails its own axioms");
    check(remark4_consequences(sys).empty(), "height consequences fail on the worked example");
    out << "selftest: worked example ok\n";
}

void random_dims(std::ostream& out) {
    SearchOptions opts;
    Rng rng = make_rng(11, 1);
    int pairs = 0;
    for (int s = 0; s < 4; ++s) {
        HomologicalSystem sys = gen::random_system(rng, opts, 2);
        for (std::size_t i = 0; i < sys.size(); ++i)
            for (std::size_t j = 0; j < sys.size(); ++j) {
                if (hom_params(sys.delta[i], sys.delta[j]) > 18) continue;
                check(hom_space(sys.algebra, sys.delta[i], sys.delta[j]).dim() ==
                          oracle::hom_dim_brute(sys.algebra, sys.delta[i], sys.delta[j]),
                      "hom dimension mismatch against the oracle");
                check(ext_space(sys.algebra, sys.delta[i], sys.delta[j]).dim() ==
                          oracle::ext_dim_brute(sys.algebra, sys.delta[i], sys.delta[j]),
                      "ext dimension mismatch against the oracle");
                ++pairs;
            }
        check(remark4_consequences(sys).empty(), "height consequences failed");
    }
    out << "selftest: " << pairs << " random hom/ext pairs match the oracle\n";
}

void filtration_roundtrip(std::ostream& out) {
    HomologicalSystem sys = gen::a2_system();
    SearchOptions opts;
    Rng rng = make_rng(23, 2);
    for (int s = 0; s < 3; ++s) {
        Filtration f = gen::random_filtration(sys, rng, opts, 3);
        check(verify_filtration(sys, f).ok(), "a generated filtration failed verification");
        Filtration nf = normalize(sys, f, opts, rng);
        check(verify_filtration(sys, nf).ok(), "a normalized filtration failed verification");
        check(multiplicities(nf) == multiplicities(f), "normalization changed the label counts");
        for (std::size_t i = 1; i < nf.length(); ++i)
            check(sys.height_of(nf.labels[i - 1]) >= sys.height_of(nf.labels[i]),
                  "normalization left a height rise");
        SearchResult<HFiltration> from = h_filtration_from(sys, f, opts, rng);
        SearchResult<HFiltration> canon = h_filtration_canonical(sys, f.module, opts, rng);
        check(from.found() && canon.found(), "layering failed on a generated filtration");
        check(from.value->layers == canon.value->layers,
              "induced and intrinsic layers disagree");
    }
    out << "selftest: filtration normalize/layer roundtrips ok\n";
}

void summand_split(std::ostream& out) {
    HomologicalSystem sys = gen::a2_system();
    SearchOptions opts;
    Rng rng = make_rng(31, 3);
    DirectSum ds = direct_sum(sys.algebra, sys.delta[0], sys.delta[1]);
    SearchResult<SummandDecomposition> dec = decompose_summands(
        sys, ds.rep, sys.delta[0], ds.inj1, sys.delta[1], ds.inj2, opts, rng);
    check(dec.found(), "summand decomposition did not succeed");
    check(dec.value->first.length() == 1 && dec.value->second.length() == 1,
          "summand filtrations have the wrong length");
    out << "selftest: summand decomposition ok\n";
}

}  // namespace

int run_selftest(std::ostream& out) {
    try {
        worked_example(out);
        random_dims(out);
        filtration_roundtrip(out);
        summand_split(out);
    } catch (const std::exception& e) {
        out << "selftest: FAILED: " << e.what() << "\n";
        return 1;
    }
    out << "selftest: all checks passed\n";
    return 0;
}

}  // namespace homsys
