#include "homsys/filtration.hpp"

#include <algorithm>
#include <sstream>

#include "homsys/decomp.hpp"

namespace homsys {

Submodule restrict_to(const BoundQuiverAlgebra& alg, const SubmoduleRep& outer,
                      const Submodule& sub) {
    Submodule out;
    out.spaces.reserve(alg.num_vertices());
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        const Mat& inc = outer.inclusion[v];  // ambient x k
        std::optional<Mat> coords = solve(inc, sub.spaces[v].basis.transpose());
        if (!coords) throw error("restrict_to: the submodule is not contained in the carrier");
        out.spaces.push_back(Subspace::span(coords->transpose()));
    }
    return out;
}

Submodule expand_from(const Submodule& outer_in_ambient, const Submodule& sub_in_outer) {
    Submodule out;
    out.spaces.reserve(outer_in_ambient.spaces.size());
    for (std::size_t v = 0; v < outer_in_ambient.spaces.size(); ++v)
        out.spaces.push_back(
            Subspace::span(sub_in_outer.spaces[v].basis * outer_in_ambient.spaces[v].basis));
    return out;
}

Submodule push_submodule(const HomTuple& f, const Representation& codomain, const Submodule& sub) {
    Submodule out;
    out.spaces.reserve(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (f[v].rows != codomain.dims[v]) throw error("push_submodule: codomain shape mismatch");
        out.spaces.push_back(image(f[v], sub.spaces[v]));
    }
    return out;
}

Factor factor_of(const BoundQuiverAlgebra& alg, const Representation& m,
                 const Submodule& inner, const Submodule& outer) {
    if (!submodule_contains(outer, inner)) throw error("factor_of requires nested submodules");
    Factor fac{submodule_rep(alg, m, outer), {}, {}};
    fac.inner_in_outer = restrict_to(alg, fac.outer, inner);
    fac.quot = quotient_module(alg, fac.outer.rep, fac.inner_in_outer);
    return fac;
}

namespace {

FiltrationVerdict ok_verdict() { return {FiltrationVerdict::Status::ok, std::nullopt, ""}; }

FiltrationVerdict failed_verdict(std::optional<std::size_t> step, std::string reason) {
    return {FiltrationVerdict::Status::failed, step, std::move(reason)};
}

// Shared structural checks for a candidate chain; empty reason on success.
FiltrationVerdict chain_structure(const HomologicalSystem& sys, const Representation& module,
                                  const std::vector<Submodule>& chain,
                                  const std::vector<std::size_t>& labels) {
    const BoundQuiverAlgebra& alg = sys.algebra;
    auto bad = validate_representation(alg, module);
    if (!bad.empty())
        return failed_verdict(std::nullopt, "the module violates algebra relation " +
                                                std::to_string(bad.front().relation));
    if (chain.size() != labels.size() + 1)
        return failed_verdict(std::nullopt, "chain has " + std::to_string(chain.size()) +
                                                " members but " + std::to_string(labels.size()) +
                                                " labels");
    for (std::size_t j = 0; j < chain.size(); ++j) {
        if (chain[j].spaces.size() != alg.num_vertices())
            return failed_verdict(std::nullopt,
                                  "chain member " + std::to_string(j) + " has the wrong vertex count");
        for (std::size_t v = 0; v < alg.num_vertices(); ++v)
            if (chain[j].spaces[v].ambient != module.dims[v])
                return failed_verdict(std::nullopt, "chain member " + std::to_string(j) +
                                                        " lives in the wrong ambient space");
        if (!submodule_valid(alg, module, chain[j]))
            return failed_verdict(std::nullopt, "chain member " + std::to_string(j) +
                                                    " is not arrow-closed");
    }
    if (chain.front().total_dim() != 0)
        return failed_verdict(std::nullopt, "the chain does not start at the zero submodule");
    if (!(chain.back() == full_submodule(alg, module)))
        return failed_verdict(std::nullopt, "the chain does not end at the whole module");
    for (std::size_t j = 1; j < chain.size(); ++j) {
        if (!submodule_contains(chain[j], chain[j - 1]))
            return failed_verdict(j, "chain member " + std::to_string(j) +
                                         " does not contain its predecessor");
        if (chain[j].total_dim() <= chain[j - 1].total_dim())
            return failed_verdict(j, "the inclusion at step " + std::to_string(j) +
                                         " is not strict");
    }
    for (std::size_t s = 0; s < labels.size(); ++s)
        if (labels[s] >= sys.size())
            return failed_verdict(s + 1, "label index out of range at step " + std::to_string(s + 1));
    return ok_verdict();
}

}  // namespace

FiltrationBuild make_filtration(const HomologicalSystem& sys, Representation module,
                                std::vector<Submodule> chain, std::vector<std::size_t> labels,
                                const SearchOptions& opts, Rng& rng) {
    FiltrationVerdict s = chain_structure(sys, module, chain, labels);
    if (!s.ok()) return {s, std::nullopt};

    Filtration f{std::move(module), std::move(chain), std::move(labels), {}};
    f.witnesses.reserve(f.length());
    for (std::size_t i = 1; i <= f.length(); ++i) {
        Factor fac = factor_of(sys.algebra, f.module, f.chain[i - 1], f.chain[i]);
        std::size_t w = f.labels[i - 1];
        SearchResult<HomTuple> iso = iso_test(sys.algebra, fac.rep(), sys.delta[w], opts, rng);
        if (iso.absent())
            return {failed_verdict(i, "the factor at step " + std::to_string(i) +
                                          " is not isomorphic to '" + sys.omega.elements[w] + "'"),
                    std::nullopt};
        if (iso.exhausted())
            return {{FiltrationVerdict::Status::unverified, i,
                     "isomorphism search exhausted at step " + std::to_string(i)},
                    std::nullopt};
        f.witnesses.push_back(*iso.value);
    }
    return {ok_verdict(), std::move(f)};
}

FiltrationVerdict verify_filtration(const HomologicalSystem& sys, const Filtration& f) {
    FiltrationVerdict s = chain_structure(sys, f.module, f.chain, f.labels);
    if (!s.ok()) return s;
    if (f.witnesses.size() != f.labels.size())
        return failed_verdict(std::nullopt, "witness count does not match the number of steps");
    for (std::size_t i = 1; i <= f.length(); ++i) {
        Factor fac = factor_of(sys.algebra, f.module, f.chain[i - 1], f.chain[i]);
        const Representation& target = sys.delta[f.labels[i - 1]];
        const HomTuple& w = f.witnesses[i - 1];
        if (w.size() != sys.algebra.num_vertices())
            return failed_verdict(i, "malformed witness at step " + std::to_string(i));
        for (std::size_t v = 0; v < w.size(); ++v)
            if (w[v].rows != target.dims[v] || w[v].cols != fac.rep().dims[v])
                return failed_verdict(i, "witness shape mismatch at step " + std::to_string(i));
        if (!is_module_hom(sys.algebra, fac.rep(), target, w) || !hom_is_iso(w))
            return failed_verdict(i, "the stored witness at step " + std::to_string(i) +
                                         " is not an isomorphism onto '" +
                                         sys.omega.elements[f.labels[i - 1]] + "'");
    }
    return ok_verdict();
}

std::pair<std::map<std::size_t, std::uint32_t>, std::size_t>
multiplicities(const Filtration& f) {
    std::map<std::size_t, std::uint32_t> counts;
    for (std::size_t w : f.labels) ++counts[w];
    return {counts, f.length()};
}

std::optional<Filtration> swap_adjacent(const HomologicalSystem& sys, const Filtration& f,
                                        std::size_t i, const SearchOptions& opts, Rng& rng) {
    if (i < 1 || i + 1 > f.length()) throw error("swap_adjacent: step index out of range");
    const BoundQuiverAlgebra& alg = sys.algebra;
    const Submodule& inner = f.chain[i - 1];
    const Submodule& mid = f.chain[i];
    const Submodule& outer = f.chain[i + 1];

    SubmoduleRep osr = submodule_rep(alg, f.module, outer);
    Submodule a = restrict_to(alg, osr, inner);
    Submodule b = restrict_to(alg, osr, mid);
    QuotientRep v = quotient_module(alg, osr.rep, a);  // outer / inner
    Submodule b_bar;                                   // mid / inner inside v
    for (std::size_t vert = 0; vert < alg.num_vertices(); ++vert)
        b_bar.spaces.push_back(image(v.projection[vert], b.spaces[vert]));
    SubmoduleRep ssr = submodule_rep(alg, v.rep, b_bar);
    QuotientRep qq = quotient_module(alg, v.rep, b_bar);
    ShortExactSequence seq{ssr.rep, v.rep, qq.rep, ssr.inclusion, qq.projection};
    std::optional<HomTuple> sec = find_section(alg, seq);
    if (!sec) return std::nullopt;

    Submodule n_bar = complement_of_sub(alg, seq, *sec);
    Submodule n_in_o = preimage(alg, v.projection, osr.rep, n_bar);
    Submodule n = expand_from(outer, n_in_o);

    Filtration out = f;
    out.chain[i] = n;
    std::swap(out.labels[i - 1], out.labels[i]);
    for (std::size_t step : {i, i + 1}) {
        Factor fac = factor_of(alg, out.module, out.chain[step - 1], out.chain[step]);
        std::size_t w = out.labels[step - 1];
        SearchResult<HomTuple> iso = iso_test(alg, fac.rep(), sys.delta[w], opts, rng);
        if (iso.absent())
            throw error("internal contradiction: a swapped factor lost its isomorphism type");
        if (iso.exhausted())
            throw error("search budget exhausted while re-witnessing a swapped step");
        out.witnesses[step - 1] = *iso.value;
    }
    return out;
}

Filtration normalize(const HomologicalSystem& sys, const Filtration& f,
                     const SearchOptions& opts, Rng& rng) {
    Filtration cur = f;
    const std::size_t t = cur.length();
    std::size_t guard = 0;
    for (;;) {
        std::size_t pos = 0;  // 1-based; 0 = none
        for (std::size_t i = 1; i + 1 <= t; ++i)
            if (sys.height_of(cur.labels[i - 1]) < sys.height_of(cur.labels[i])) {
                pos = i;
                break;
            }
        if (pos == 0) break;
        std::optional<Filtration> swapped = swap_adjacent(sys, cur, pos, opts, rng);
        if (!swapped)
            throw error("internal contradiction: a height-violating step refused to split");
        cur = std::move(*swapped);
        if (++guard > t * t + 1)
            throw error("internal contradiction: normalization failed to terminate");
    }
    return cur;
}

namespace {

// Peels outer/inner into height-i members one summand at a time, recording
// each peeled label and its shrinking inner boundary (ambient coordinates).
// found = layer exhausted down to inner; absent = a nonzero residue resists.
SearchStatus peel_layer(const HomologicalSystem& sys, const Representation& m,
                        const Submodule& inner, const Submodule& outer, std::uint32_t hgt,
                        const SearchOptions& opts, Rng& rng,
                        std::vector<std::pair<std::size_t, Submodule>>& steps,
                        std::map<std::pair<std::uint32_t, std::size_t>, std::uint32_t>& mult) {
    const BoundQuiverAlgebra& alg = sys.algebra;
    const std::vector<std::size_t> idxs = sys.indices_of_height(hgt);
    const std::vector<Representation> cands = sys.deltas_of_height(hgt);
    Submodule d = outer;
    while (!(d == inner)) {
        Factor fac = factor_of(alg, m, inner, d);
        SearchResult<PeelResult> peel =
            peel_summand(alg, fac.rep(), cands, opts, rng, /*candidates_indecomposable=*/true);
        if (peel.exhausted()) return SearchStatus::exhausted;
        if (peel.absent()) return SearchStatus::absent;
        Submodule k_in_o = preimage(alg, fac.quot.projection, fac.outer.rep,
                                    peel.value->complement);
        Submodule k = expand_from(d, k_in_o);
        std::size_t w = idxs[peel.value->candidate];
        steps.emplace_back(w, k);
        ++mult[{hgt, w}];
        d = std::move(k);
    }
    return SearchStatus::found;
}

}  // namespace

SearchResult<HFiltration> h_filtration_from(const HomologicalSystem& sys, const Filtration& f,
                                            const SearchOptions& opts, Rng& rng) {
    Filtration nf = normalize(sys, f, opts, rng);
    const std::uint32_t a = sys.max_height();
    HFiltration hf;
    hf.module = nf.module;
    hf.layers.resize(a + 1);
    hf.peel_steps.resize(a);
    for (std::uint32_t i = 1; i <= a + 1; ++i) {
        std::size_t k = 0;
        while (k < nf.length() && sys.height_of(nf.labels[k]) >= i) ++k;
        hf.layers[i - 1] = nf.chain[k];
    }
    for (std::uint32_t i = a; i >= 1; --i) {
        SearchStatus st = peel_layer(sys, hf.module, hf.w(i + 1), hf.w(i), i, opts, rng,
                                     hf.peel_steps[i - 1], hf.mult);
        if (st == SearchStatus::exhausted) return SearchResult<HFiltration>::make_exhausted();
        if (st == SearchStatus::absent)
            throw error("internal contradiction: a layer of a verified filtration failed to peel");
    }
    return SearchResult<HFiltration>::make_found(std::move(hf));
}

SearchResult<HFiltration> h_filtration_canonical(const HomologicalSystem& sys,
                                                 const Representation& m,
                                                 const SearchOptions& opts, Rng& rng) {
    const BoundQuiverAlgebra& alg = sys.algebra;
    auto bad = validate_representation(alg, m);
    if (!bad.empty()) throw error("h_filtration_canonical: the module violates the relations");

    const std::uint32_t a = sys.max_height();
    HFiltration hf;
    hf.module = m;
    hf.layers.resize(a + 1);
    hf.peel_steps.resize(a);
    hf.layers[a] = zero_submodule(alg, m);

    Submodule below = hf.layers[a];
    HomTuple proj = identity_hom(alg, m);
    Representation q = m;
    for (std::uint32_t i = a; i >= 1; --i) {
        Submodule tr = trace(alg, sys.deltas_of_height(i), q);
        Submodule w_i = preimage(alg, proj, m, tr);
        SearchStatus st =
            peel_layer(sys, m, below, w_i, i, opts, rng, hf.peel_steps[i - 1], hf.mult);
        if (st == SearchStatus::exhausted) return SearchResult<HFiltration>::make_exhausted();
        if (st == SearchStatus::absent) return SearchResult<HFiltration>::make_absent();
        hf.layers[i - 1] = w_i;
        below = w_i;
        if (i > 1) {
            QuotientRep qr = quotient_module(alg, m, w_i);
            q = std::move(qr.rep);
            proj = std::move(qr.projection);
        }
    }
    if (!(hf.layers[0] == full_submodule(alg, m)))
        return SearchResult<HFiltration>::make_absent();  // residue above every layer
    return SearchResult<HFiltration>::make_found(std::move(hf));
}

Filtration flatten(const HomologicalSystem& sys, const HFiltration& hf,
                   const SearchOptions& opts, Rng& rng) {
    std::vector<Submodule> chain{zero_submodule(sys.algebra, hf.module)};
    std::vector<std::size_t> labels;
    for (std::uint32_t i = hf.top_height(); i >= 1; --i) {
        const auto& steps = hf.peel_steps[i - 1];
        for (std::size_t j = steps.size(); j >= 2; --j) {
            chain.push_back(steps[j - 2].second);
            labels.push_back(steps[j - 1].first);
        }
        if (!steps.empty()) {
            chain.push_back(hf.w(i));
            labels.push_back(steps.front().first);
        }
    }
    FiltrationBuild b = make_filtration(sys, hf.module, std::move(chain), std::move(labels),
                                        opts, rng);
    if (b.verdict.status == FiltrationVerdict::Status::unverified)
        throw error("search budget exhausted while flattening a layered filtration");
    if (!b.verdict.ok())
        throw error("internal contradiction: flattening produced an invalid filtration (" +
                    b.verdict.reason + ")");
    return std::move(*b.filtration);
}

UniquenessVerdict check_uniqueness(const HomologicalSystem& sys, const Filtration& f1,
                                   const Filtration& f2, const SearchOptions& opts, Rng& rng) {
    if (!(f1.module == f2.module))
        throw error("check_uniqueness: the filtrations live on different modules");
    for (const Filtration* f : {&f1, &f2}) {
        FiltrationVerdict v = verify_filtration(sys, *f);
        if (!v.ok()) throw error("check_uniqueness requires verified filtrations: " + v.reason);
    }
    auto [c1, len1] = multiplicities(f1);
    auto [c2, len2] = multiplicities(f2);
    if (len1 != len2)
        return {UniquenessVerdict::Status::differs,
                "lengths differ: " + std::to_string(len1) + " vs " + std::to_string(len2)};
    if (c1 != c2) {
        for (const auto& [w, n] : c1) {
            std::uint32_t other = c2.count(w) ? c2.at(w) : 0;
            if (n != other)
                return {UniquenessVerdict::Status::differs,
                        "member '" + sys.omega.elements[w] + "' occurs " + std::to_string(n) +
                            " vs " + std::to_string(other) + " times"};
        }
        for (const auto& [w, n] : c2)
            if (!c1.count(w))
                return {UniquenessVerdict::Status::differs,
                        "member '" + sys.omega.elements[w] + "' occurs 0 vs " +
                            std::to_string(n) + " times"};
    }
    SearchResult<HFiltration> h1 = h_filtration_from(sys, f1, opts, rng);
    SearchResult<HFiltration> h2 = h_filtration_from(sys, f2, opts, rng);
    if (h1.exhausted() || h2.exhausted())
        return {UniquenessVerdict::Status::unverified, "layer peeling ran out of search budget"};
    if (h1.value->mult != h2.value->mult)
        return {UniquenessVerdict::Status::differs, "per-height layer multiplicities differ"};
    return {UniquenessVerdict::Status::ok, ""};
}

Filtration splice(const HomologicalSystem& sys, const ShortExactSequence& seq,
                  const Filtration& f_sub, const Filtration& f_quot,
                  const SearchOptions& opts, Rng& rng) {
    const BoundQuiverAlgebra& alg = sys.algebra;
    if (!ses_valid(alg, seq)) throw error("splice requires a valid short exact sequence");
    if (!(f_sub.module == seq.sub) || !(f_quot.module == seq.quot))
        throw error("splice: filtration modules do not match the sequence ends");

    std::vector<Submodule> chain;
    for (const Submodule& c : f_sub.chain)
        chain.push_back(push_submodule(seq.inclusion, seq.middle, c));
    for (std::size_t j = 1; j < f_quot.chain.size(); ++j)
        chain.push_back(preimage(alg, seq.projection, seq.middle, f_quot.chain[j]));
    std::vector<std::size_t> labels = f_sub.labels;
    labels.insert(labels.end(), f_quot.labels.begin(), f_quot.labels.end());

    FiltrationBuild b =
        make_filtration(sys, seq.middle, std::move(chain), std::move(labels), opts, rng);
    if (b.verdict.status == FiltrationVerdict::Status::unverified)
        throw error("search budget exhausted while splicing");
    if (!b.verdict.ok())
        throw error("internal contradiction: splicing produced an invalid filtration (" +
                    b.verdict.reason + ")");
    return std::move(*b.filtration);
}

AdditivityReport additivity_check(const HomologicalSystem& sys, const ShortExactSequence& seq,
                                  const Filtration& f_sub, const Filtration& f_quot,
                                  const SearchOptions& opts, Rng& rng) {
    AdditivityReport rep{splice(sys, seq, f_sub, f_quot, opts, rng), false, ""};
    FiltrationVerdict v = verify_filtration(sys, rep.spliced);
    if (!v.ok()) {
        rep.detail = "the spliced filtration failed verification: " + v.reason;
        return rep;
    }
    auto [cs, ls] = multiplicities(f_sub);
    auto [cq, lq] = multiplicities(f_quot);
    auto [cm, lm] = multiplicities(rep.spliced);
    std::map<std::size_t, std::uint32_t> expect = cs;
    for (const auto& [w, n] : cq) expect[w] += n;
    if (lm != ls + lq) {
        rep.detail = "lengths do not add: " + std::to_string(ls) + " + " + std::to_string(lq) +
                     " != " + std::to_string(lm);
        return rep;
    }
    if (expect != cm) {
        rep.detail = "label multiplicities do not add";
        return rep;
    }
    rep.counts_ok = true;
    return rep;
}

SearchResult<SummandDecomposition> decompose_summands(const HomologicalSystem& sys,
                                                      const Representation& m,
                                                      const Representation& m1, const HomTuple& inj1,
                                                      const Representation& m2, const HomTuple& inj2,
                                                      const SearchOptions& opts, Rng& rng) {
    const BoundQuiverAlgebra& alg = sys.algebra;
    for (const Representation* r : {&m, &m1, &m2})
        if (!validate_representation(alg, *r).empty())
            throw error("decompose_summands: a module violates the relations");
    auto check_inj = [&](const Representation& src, const HomTuple& f, const char* which) {
        if (!is_module_hom(alg, src, m, f))
            throw error(std::string("decompose_summands: ") + which + " is not a module map");
        for (std::size_t v = 0; v < f.size(); ++v)
            if (rank(f[v]) != src.dims[v])
                throw error(std::string("decompose_summands: ") + which + " is not injective");
    };
    check_inj(m1, inj1, "the first injection");
    check_inj(m2, inj2, "the second injection");
    Submodule s1 = push_submodule(inj1, m, full_submodule(alg, m1));
    Submodule s2 = push_submodule(inj2, m, full_submodule(alg, m2));
    if (submodule_intersect(s1, s2).total_dim() != 0)
        throw error("decompose_summands: the images overlap");
    if (!(submodule_sum(s1, s2) == full_submodule(alg, m)))
        throw error("decompose_summands: the images do not span the module");

    SearchResult<HFiltration> hw = h_filtration_canonical(sys, m, opts, rng);
    if (hw.exhausted()) return SearchResult<SummandDecomposition>::make_exhausted();
    if (hw.absent()) return SearchResult<SummandDecomposition>::make_absent();
    SearchResult<HFiltration> h1 = h_filtration_canonical(sys, m1, opts, rng);
    SearchResult<HFiltration> h2 = h_filtration_canonical(sys, m2, opts, rng);
    if (h1.exhausted() || h2.exhausted()) return SearchResult<SummandDecomposition>::make_exhausted();
    if (h1.absent() || h2.absent())
        throw error("internal contradiction: a summand of a layered module failed to layer");

    // The canonical layers are trace layers, so they must decompose along the
    // biproduct exactly; anything else contradicts additivity of the trace.
    for (std::uint32_t i = 1; i <= sys.max_height() + 1; ++i) {
        Submodule l1 = push_submodule(inj1, m, h1.value->w(i));
        Submodule l2 = push_submodule(inj2, m, h2.value->w(i));
        if (submodule_intersect(l1, l2).total_dim() != 0 ||
            !(submodule_sum(l1, l2) == hw.value->w(i)))
            throw error("internal contradiction: canonical layers fail biproduct additivity");
    }

    SummandDecomposition out{flatten(sys, *h1.value, opts, rng),
                             flatten(sys, *h2.value, opts, rng), {}};
    for (const auto& [key, n] : hw.value->mult) out.whole_counts[key.second] += n;
    for (const Filtration* f : {&out.first, &out.second}) {
        FiltrationVerdict v = verify_filtration(sys, *f);
        if (!v.ok())
            throw error("internal contradiction: a summand filtration failed verification (" +
                        v.reason + ")");
    }
    std::map<std::size_t, std::uint32_t> got = multiplicities(out.first).first;
    for (const auto& [w, n] : multiplicities(out.second).first) got[w] += n;
    if (got != out.whole_counts)
        throw error("internal contradiction: summand label counts do not add up");
    return SearchResult<SummandDecomposition>::make_found(std::move(out));
}

}  // namespace homsys
