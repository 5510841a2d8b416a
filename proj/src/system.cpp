#include "homsys/system.hpp"

#include <sstream>

namespace homsys {

const HeightMap& HomologicalSystem::height_map() const {
    if (!heights) throw error("height map unavailable: the index pre-order is malformed");
    return *heights;
}

std::vector<std::size_t> HomologicalSystem::indices_of_height(std::uint32_t h) const {
    const HeightMap& hm = height_map();
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < delta.size(); ++w)
        if (hm.h[w] == h) out.push_back(w);
    return out;
}

std::vector<Representation> HomologicalSystem::deltas_of_height(std::uint32_t h) const {
    std::vector<Representation> out;
    for (std::size_t w : indices_of_height(h)) out.push_back(delta[w]);
    return out;
}

HomologicalSystem make_system(BoundQuiverAlgebra alg, Preorder omega,
                              std::vector<Representation> delta) {
    if (omega.elements.size() != delta.size())
        throw error("index set and module family sizes differ");
    for (std::size_t w = 0; w < delta.size(); ++w) {
        auto bad = validate_representation(alg, delta[w]);
        if (!bad.empty()) {
            std::ostringstream os;
            os << "member '" << omega.elements[w] << "' violates relation "
               << bad.front().relation;
            throw error(os.str());
        }
    }
    HomologicalSystem sys{std::move(alg), std::move(omega), std::move(delta), std::nullopt};
    if (transitive_closure_check(sys.omega).empty()) sys.heights = height(sys.omega);
    return sys;
}

namespace {

std::string pair_names(const HomologicalSystem& sys, std::size_t i, std::size_t j) {
    return "(" + sys.omega.elements[i] + ", " + sys.omega.elements[j] + ")";
}

}  // namespace

SystemCheck check_system(const HomologicalSystem& sys, const SearchOptions& opts, Rng& rng) {
    SystemCheck out;
    out.verdict = SystemCheck::Verdict::ok;

    // HS1: the index relation is a genuine pre-order.
    for (const PreorderViolation& v : transitive_closure_check(sys.omega))
        out.violations.push_back({"HS1", v.i, v.j, v.describe(sys.omega)});

    const std::size_t n = sys.size();

    // HS2: every member indecomposable, members pairwise non-isomorphic.
    for (std::size_t w = 0; w < n; ++w) {
        if (sys.delta[w].total_dim() == 0) {
            out.violations.push_back({"HS2", w, w,
                                      "member '" + sys.omega.elements[w] + "' is the zero module"});
            continue;
        }
        IndecompResult r = indecomposable_test(sys.algebra, sys.delta[w], opts, rng);
        if (r.verdict == IndecompResult::Verdict::decomposable)
            out.violations.push_back({"HS2", w, w,
                                      "member '" + sys.omega.elements[w] + "' decomposes"});
        else if (r.verdict == IndecompResult::Verdict::unverified)
            out.unverified.push_back("indecomposability of '" + sys.omega.elements[w] +
                                     "': search budget exhausted");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            SearchResult<HomTuple> r = iso_test(sys.algebra, sys.delta[i], sys.delta[j], opts, rng);
            if (r.found())
                out.violations.push_back({"HS2", i, j,
                                          "members " + pair_names(sys, i, j) + " are isomorphic"});
            else if (r.exhausted())
                out.unverified.push_back("isomorphism test for " + pair_names(sys, i, j) +
                                         ": search budget exhausted");
        }

    // HS3 / HS4: Hom and Ext directions against the order. Dimension
    // computations are exact, so these arms never go unverified.
    out.hom_dims.assign(n, std::vector<std::uint32_t>(n, 0));
    out.ext_dims.assign(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t dh =
                static_cast<std::uint32_t>(hom_space(sys.algebra, sys.delta[i], sys.delta[j]).dim());
            std::uint32_t de =
                static_cast<std::uint32_t>(ext_space(sys.algebra, sys.delta[i], sys.delta[j]).dim());
            out.hom_dims[i][j] = dh;
            out.ext_dims[i][j] = de;
            if (dh > 0 && !sys.omega.le(i, j))
                out.violations.push_back({"HS3", i, j,
                                          "Hom" + pair_names(sys, i, j) + " has dimension " +
                                              std::to_string(dh) + " but " + sys.omega.elements[i] +
                                              " <= " + sys.omega.elements[j] + " fails"});
            if (de > 0 && !sys.omega.strictly_less(i, j))
                out.violations.push_back({"HS4", i, j,
                                          "Ext" + pair_names(sys, i, j) + " has dimension " +
                                              std::to_string(de) + " but " + sys.omega.elements[i] +
                                              " < " + sys.omega.elements[j] + " fails"});
        }

    if (!out.violations.empty())
        out.verdict = SystemCheck::Verdict::violated;
    else if (!out.unverified.empty())
        out.verdict = SystemCheck::Verdict::unverified;
    return out;
}

std::vector<AxiomViolation> remark4_consequences(const HomologicalSystem& sys) {
    const HeightMap& hm = sys.height_map();
    std::vector<AxiomViolation> out;
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = 0; j < sys.size(); ++j) {
            std::uint32_t dh =
                static_cast<std::uint32_t>(hom_space(sys.algebra, sys.delta[i], sys.delta[j]).dim());
            std::uint32_t de =
                static_cast<std::uint32_t>(ext_space(sys.algebra, sys.delta[i], sys.delta[j]).dim());
            if (hm.h[i] > hm.h[j] && dh > 0)
                out.push_back({"remark4-hom", i, j,
                               "height drops " + std::to_string(hm.h[i]) + " -> " +
                                   std::to_string(hm.h[j]) + " yet Hom" + pair_names(sys, i, j) +
                                   " is nonzero"});
            if (hm.h[i] >= hm.h[j] && de > 0)
                out.push_back({"remark4-ext", i, j,
                               "heights " + std::to_string(hm.h[i]) + " >= " +
                                   std::to_string(hm.h[j]) + " yet Ext" + pair_names(sys, i, j) +
                                   " is nonzero"});
        }
    return out;
}

}  // namespace homsys
