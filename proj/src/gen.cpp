#include "homsys/gen.hpp"

#include <algorithm>

namespace homsys::gen {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return rng() % n; }

}  // namespace

HomologicalSystem a2_system() {
    Quiver q{{"1", "2"}, {{"a", 0, 1}}};
    BoundQuiverAlgebra alg = make_algebra(std::move(q), PrimeField(2), {});
    Representation p1{{1, 1}, {Mat::from_rows(alg.field, {{1}})}};
    Representation s2 = simple_rep(alg, 1);
    Preorder om{{"1", "2"}, {{1, 0}, {1, 1}}};  // 2 <= 1
    return make_system(std::move(alg), std::move(om), {std::move(p1), std::move(s2)});
}

BoundQuiverAlgebra random_algebra(Rng& rng, std::uint32_t p, std::size_t max_vertices,
                                  std::size_t max_arrows, bool allow_relations) {
    const std::size_t nv = 2 + pick(rng, max_vertices - 1);
    Quiver q;
    for (std::size_t v = 0; v < nv; ++v) q.vertices.push_back("v" + std::to_string(v + 1));
    const std::size_t na = 1 + pick(rng, max_arrows);
    for (std::size_t a = 0; a < na; ++a) {
        std::size_t i = pick(rng, nv - 1);
        std::size_t j = i + 1 + pick(rng, nv - i - 1);  // i < j keeps the quiver acyclic
        q.arrows.push_back({"a" + std::to_string(a + 1), i, j});
    }

    std::vector<Relation> rels;
    if (allow_relations && pick(rng, 2) == 0) {
        std::vector<std::pair<std::size_t, std::size_t>> composable;
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < na; ++b)
                if (q.arrows[a].tgt == q.arrows[b].src) composable.emplace_back(a, b);
        std::size_t want = composable.empty() ? 0 : 1 + pick(rng, 2);
        for (std::size_t k = 0; k < want; ++k) {
            auto [a, b] = composable[pick(rng, composable.size())];
            Relation r{{PathTerm{1, {a, b}}}};
            if (std::find(rels.begin(), rels.end(), r) == rels.end()) rels.push_back(r);
        }
    }
    return make_algebra(std::move(q), PrimeField(p), std::move(rels));
}

HomologicalSystem simples_system(const BoundQuiverAlgebra& alg) {
    const std::size_t n = alg.num_vertices();
    Preorder om;
    om.elements = alg.quiver.vertices;
    om.leq.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) om.leq[i][i] = 1;
    for (const Arrow& a : alg.quiver.arrows) om.leq[a.src][a.tgt] = 1;
    for (std::size_t k = 0; k < n; ++k)  // transitive closure
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (om.leq[i][k] && om.leq[k][j]) om.leq[i][j] = 1;

    std::vector<Representation> delta;
    for (std::size_t v = 0; v < n; ++v) delta.push_back(simple_rep(alg, v));
    return make_system(alg, std::move(om), std::move(delta));
}

namespace {

// Tries to extend the simples by one extension-built indecomposable and
// rebuild the induced order; nullopt when the attempt does not pan out.
std::optional<HomologicalSystem> enrich_once(const HomologicalSystem& base, Rng& rng,
                                             const SearchOptions& opts) {
    const BoundQuiverAlgebra& alg = base.algebra;
    std::vector<Representation> members = base.delta;
    std::vector<std::string> names = base.omega.elements;

    std::size_t i = pick(rng, members.size());
    std::size_t j = pick(rng, members.size());
    ExtSpace es = ext_space(alg, members[i], members[j]);
    if (es.dim() == 0) return std::nullopt;
    std::vector<std::uint32_t> coeffs(es.cocycles.dim(), 0);
    for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng() % alg.field.p);
    Cochain dl = es.cocycle(coeffs);
    if (es.is_coboundary(dl)) return std::nullopt;  // split: nothing new
    ShortExactSequence seq = build_extension(alg, members[i], members[j], dl);
    if (seq.middle.total_dim() > 8) return std::nullopt;

    IndecompResult ind = indecomposable_test(alg, seq.middle, opts, rng);
    if (ind.verdict != IndecompResult::Verdict::indecomposable) return std::nullopt;
    for (const Representation& m : members) {
        SearchResult<HomTuple> iso = iso_test(alg, m, seq.middle, opts, rng);
        if (!iso.absent()) return std::nullopt;
    }
    members.push_back(seq.middle);
    names.push_back("e" + std::to_string(members.size()));

    const std::size_t n = members.size();
    Preorder om;
    om.elements = names;
    om.leq.assign(n, std::vector<char>(n, 0));
    std::vector<std::vector<char>> has_ext(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) {
                om.leq[a][b] = 1;
                continue;
            }
            bool hom = hom_space(alg, members[a], members[b]).dim() > 0;
            bool ext = ext_space(alg, members[a], members[b]).dim() > 0;
            has_ext[a][b] = ext ? 1 : 0;
            if (hom || ext) om.leq[a][b] = 1;
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (om.leq[a][k] && om.leq[k][b]) om.leq[a][b] = 1;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (has_ext[a][b] && om.leq[b][a]) return std::nullopt;  // strictness lost

    HomologicalSystem sys = make_system(alg, std::move(om), std::move(members));
    Rng check_rng = make_rng(rng(), 17);
    if (check_system(sys, opts, check_rng).verdict != SystemCheck::Verdict::ok)
        return std::nullopt;
    return sys;
}

}  // namespace

HomologicalSystem random_system(Rng& rng, const SearchOptions& opts, std::uint32_t p,
                                bool enrich) {
    BoundQuiverAlgebra alg = random_algebra(rng, p);
    HomologicalSystem sys = simples_system(alg);
    if (enrich && pick(rng, 2) == 0)
        for (int tries = 0; tries < 3; ++tries)
            if (auto richer = enrich_once(sys, rng, opts)) {
                sys = std::move(*richer);
                break;
            }
    return sys;
}

Filtration member_filtration(const HomologicalSystem& sys, std::size_t w,
                             const SearchOptions& opts, Rng& rng) {
    const Representation& d = sys.delta[w];
    FiltrationBuild b = make_filtration(
        sys, d, {zero_submodule(sys.algebra, d), full_submodule(sys.algebra, d)}, {w}, opts, rng);
    if (!b.verdict.ok()) throw error("member_filtration failed: " + b.verdict.reason);
    return std::move(*b.filtration);
}

Filtration random_filtration(const HomologicalSystem& sys, Rng& rng, const SearchOptions& opts,
                             std::size_t steps, std::uint32_t max_total_dim) {
    Filtration f = member_filtration(sys, pick(rng, sys.size()), opts, rng);
    for (std::size_t s = 1; s < steps; ++s) {
        std::size_t w = pick(rng, sys.size());
        const Representation& bottom = sys.delta[w];
        if (f.module.total_dim() + bottom.total_dim() > max_total_dim) break;
        ExtSpace es = ext_space(sys.algebra, f.module, bottom);
        std::vector<std::uint32_t> coeffs(es.cocycles.dim(), 0);
        for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng() % sys.algebra.field.p);
        ShortExactSequence seq =
            build_extension(sys.algebra, f.module, bottom, es.cocycle(coeffs));
        f = splice(sys, seq, member_filtration(sys, w, opts, rng), f, opts, rng);
    }
    return f;
}

Filtration random_resplit(const HomologicalSystem& sys, const Filtration& f, Rng& rng,
                          const SearchOptions& opts, std::size_t attempts) {
    Filtration cur = f;
    if (cur.length() < 2) return cur;
    for (std::size_t k = 0; k < attempts; ++k) {
        std::size_t i = 1 + pick(rng, cur.length() - 1);
        if (std::optional<Filtration> s = swap_adjacent(sys, cur, i, opts, rng))
            cur = std::move(*s);
    }
    return cur;
}

}  // namespace homsys::gen
