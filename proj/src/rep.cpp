#include "homsys/rep.hpp"

#include <numeric>

namespace homsys {

namespace {

void require_shapes(const BoundQuiverAlgebra& alg, const Representation& rep) {
    if (rep.dims.size() != alg.num_vertices() || rep.maps.size() != alg.num_arrows())
        throw error("representation does not match the quiver");
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        if (rep.maps[a].rows != rep.dims[ar.tgt] || rep.maps[a].cols != rep.dims[ar.src])
            throw error("arrow '" + ar.name + "' matrix has the wrong shape");
        if (rep.maps[a].fld.p != alg.field.p) throw error("arrow matrix over the wrong field");
    }
}

void require_submodule_shape(const Representation& rep, const Submodule& sub) {
    if (sub.spaces.size() != rep.dims.size()) throw error("submodule does not match the quiver");
    for (std::size_t v = 0; v < sub.spaces.size(); ++v)
        if (sub.spaces[v].ambient != rep.dims[v]) throw error("submodule ambient dimension mismatch");
}

}  // namespace

std::uint32_t Representation::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0u);
}

Representation zero_rep(const BoundQuiverAlgebra& alg) {
    Representation r;
    r.dims.assign(alg.num_vertices(), 0);
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) r.maps.emplace_back(0, 0, alg.field);
    return r;
}

Representation simple_rep(const BoundQuiverAlgebra& alg, std::size_t vertex) {
    Representation r = zero_rep(alg);
    r.dims[vertex] = 1;
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        r.maps[a] = Mat(r.dims[ar.tgt], r.dims[ar.src], alg.field);
    }
    return r;
}

Mat eval_path(const BoundQuiverAlgebra& alg, const Representation& rep,
              const std::vector<std::size_t>& arrows) {
    if (arrows.empty()) throw error("eval_path: empty path");
    Mat m = rep.maps[arrows[0]];
    for (std::size_t k = 1; k < arrows.size(); ++k) m = rep.maps[arrows[k]] * m;
    (void)alg;
    return m;
}

std::vector<RelationViolation> validate_representation(const BoundQuiverAlgebra& alg,
                                                       const Representation& rep) {
    require_shapes(alg, rep);
    std::vector<RelationViolation> out;
    for (std::size_t r = 0; r < alg.relations.size(); ++r) {
        const Relation& rel = alg.relations[r];
        std::size_t src = alg.path_source(rel.terms[0]);
        std::size_t tgt = alg.path_target(rel.terms[0]);
        Mat acc(rep.dims[tgt], rep.dims[src], alg.field);
        for (const PathTerm& t : rel.terms)
            acc = acc + eval_path(alg, rep, t.arrows).scaled(t.coeff % alg.field.p);
        if (!acc.is_zero()) out.push_back({r, acc});
    }
    return out;
}

HomTuple zero_hom(const BoundQuiverAlgebra& alg, const Representation& X, const Representation& Y) {
    HomTuple f;
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) f.emplace_back(Y.dims[v], X.dims[v], alg.field);
    return f;
}

HomTuple identity_hom(const BoundQuiverAlgebra& alg, const Representation& X) {
    HomTuple f;
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) f.push_back(Mat::identity(X.dims[v], alg.field));
    return f;
}

bool is_module_hom(const BoundQuiverAlgebra& alg, const Representation& X, const Representation& Y,
                   const HomTuple& f) {
    if (f.size() != alg.num_vertices()) return false;
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v].rows != Y.dims[v] || f[v].cols != X.dims[v]) return false;
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        if (f[ar.tgt] * X.maps[a] != Y.maps[a] * f[ar.src]) return false;
    }
    return true;
}

HomTuple hom_compose(const HomTuple& g, const HomTuple& f) {
    if (g.size() != f.size()) throw error("hom_compose: vertex count mismatch");
    HomTuple out;
    for (std::size_t v = 0; v < g.size(); ++v) out.push_back(g[v] * f[v]);
    return out;
}

HomTuple hom_add(const HomTuple& f, const HomTuple& g) {
    if (g.size() != f.size()) throw error("hom_add: vertex count mismatch");
    HomTuple out;
    for (std::size_t v = 0; v < f.size(); ++v) out.push_back(f[v] + g[v]);
    return out;
}

HomTuple hom_scale(std::uint32_t c, const HomTuple& f) {
    HomTuple out;
    for (const Mat& m : f) out.push_back(m.scaled(c));
    return out;
}

bool hom_is_iso(const HomTuple& f) {
    for (const Mat& m : f) {
        if (m.rows != m.cols) return false;
        if (rank(m) != m.rows) return false;
    }
    return true;
}

HomTuple hom_inverse(const HomTuple& f) {
    HomTuple out;
    for (const Mat& m : f) out.push_back(inverse(m));
    return out;
}

HomSpace hom_space(const BoundQuiverAlgebra& alg, const Representation& X, const Representation& Y) {
    require_shapes(alg, X);
    require_shapes(alg, Y);
    const std::size_t nv = alg.num_vertices();
    std::vector<std::uint32_t> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + Y.dims[v] * X.dims[v];
    const std::uint32_t unknowns = offset[nv];

    std::uint32_t n_rows = 0;
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        n_rows += Y.dims[ar.tgt] * X.dims[ar.src];
    }
    Mat sys(n_rows, unknowns, alg.field);
    std::uint32_t row = 0;
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        const Mat& Xa = X.maps[a];
        const Mat& Ya = Y.maps[a];
        // (f_t X_a - Y_a f_s)[u, w] = 0
        for (std::uint32_t u = 0; u < Y.dims[ar.tgt]; ++u)
            for (std::uint32_t w = 0; w < X.dims[ar.src]; ++w) {
                for (std::uint32_t j = 0; j < X.dims[ar.tgt]; ++j) {
                    std::uint32_t col = offset[ar.tgt] + u * X.dims[ar.tgt] + j;
                    sys.at(row, col) = alg.field.add(sys.at(row, col), Xa.at(j, w));
                }
                for (std::uint32_t i = 0; i < Y.dims[ar.src]; ++i) {
                    std::uint32_t col = offset[ar.src] + i * X.dims[ar.src] + w;
                    sys.at(row, col) = alg.field.sub(sys.at(row, col), Ya.at(u, i));
                }
                ++row;
            }
    }
    Subspace sol = kernel(sys);
    HomSpace hs;
    for (std::uint32_t k = 0; k < sol.dim(); ++k) {
        HomTuple f = zero_hom(alg, X, Y);
        for (std::size_t v = 0; v < nv; ++v)
            for (std::uint32_t u = 0; u < Y.dims[v]; ++u)
                for (std::uint32_t w = 0; w < X.dims[v]; ++w)
                    f[v].at(u, w) = sol.basis.at(k, offset[v] + u * X.dims[v] + w);
        hs.basis.push_back(std::move(f));
    }
    return hs;
}

HomTuple hom_combination(const HomSpace& hs, const std::vector<std::uint32_t>& coeffs,
                         const BoundQuiverAlgebra& alg, const Representation& X,
                         const Representation& Y) {
    if (coeffs.size() != hs.basis.size()) throw error("hom_combination: coefficient count mismatch");
    HomTuple out = zero_hom(alg, X, Y);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] % alg.field.p != 0) out = hom_add(out, hom_scale(coeffs[i], hs.basis[i]));
    return out;
}

DirectSum direct_sum(const BoundQuiverAlgebra& alg, const Representation& X, const Representation& Y) {
    DirectSum ds;
    ds.rep.dims.resize(alg.num_vertices());
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) ds.rep.dims[v] = X.dims[v] + Y.dims[v];
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        Mat top = hstack(X.maps[a], Mat(X.dims[ar.tgt], Y.dims[ar.src], alg.field));
        Mat bot = hstack(Mat(Y.dims[ar.tgt], X.dims[ar.src], alg.field), Y.maps[a]);
        ds.rep.maps.push_back(vstack(top, bot));
    }
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        std::uint32_t dx = X.dims[v], dy = Y.dims[v];
        Mat i1 = vstack(Mat::identity(dx, alg.field), Mat(dy, dx, alg.field));
        Mat i2 = vstack(Mat(dx, dy, alg.field), Mat::identity(dy, alg.field));
        ds.inj1.push_back(i1);
        ds.inj2.push_back(i2);
        ds.proj1.push_back(i1.transpose());
        ds.proj2.push_back(i2.transpose());
    }
    return ds;
}

std::vector<std::uint32_t> Submodule::dims() const {
    std::vector<std::uint32_t> d;
    for (const Subspace& s : spaces) d.push_back(s.dim());
    return d;
}

std::uint32_t Submodule::total_dim() const {
    std::uint32_t t = 0;
    for (const Subspace& s : spaces) t += s.dim();
    return t;
}

Submodule zero_submodule(const BoundQuiverAlgebra& alg, const Representation& rep) {
    Submodule s;
    for (std::size_t v = 0; v < alg.num_vertices(); ++v)
        s.spaces.push_back(Subspace::zero(rep.dims[v], alg.field));
    return s;
}

Submodule full_submodule(const BoundQuiverAlgebra& alg, const Representation& rep) {
    Submodule s;
    for (std::size_t v = 0; v < alg.num_vertices(); ++v)
        s.spaces.push_back(Subspace::full(rep.dims[v], alg.field));
    return s;
}

bool submodule_valid(const BoundQuiverAlgebra& alg, const Representation& rep, const Submodule& sub) {
    require_submodule_shape(rep, sub);
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        if (!sub.spaces[ar.tgt].contains(image(rep.maps[a], sub.spaces[ar.src]))) return false;
    }
    return true;
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
    if (a.spaces.size() != b.spaces.size()) throw error("submodule sum: vertex count mismatch");
    Submodule out;
    for (std::size_t v = 0; v < a.spaces.size(); ++v) out.spaces.push_back(sum(a.spaces[v], b.spaces[v]));
    return out;
}

Submodule submodule_intersect(const Submodule& a, const Submodule& b) {
    if (a.spaces.size() != b.spaces.size()) throw error("submodule intersection: vertex count mismatch");
    Submodule out;
    for (std::size_t v = 0; v < a.spaces.size(); ++v)
        out.spaces.push_back(intersect(a.spaces[v], b.spaces[v]));
    return out;
}

bool submodule_contains(const Submodule& outer, const Submodule& inner) {
    if (outer.spaces.size() != inner.spaces.size()) return false;
    for (std::size_t v = 0; v < outer.spaces.size(); ++v)
        if (!outer.spaces[v].contains(inner.spaces[v])) return false;
    return true;
}

Submodule submodule_generated(const BoundQuiverAlgebra& alg, const Representation& rep,
                              const std::vector<VertexVectors>& gens) {
    require_shapes(alg, rep);
    Submodule s = zero_submodule(alg, rep);
    for (const VertexVectors& g : gens) {
        if (g.vertex >= alg.num_vertices()) throw error("generator at unknown vertex");
        if (g.rows.cols != rep.dims[g.vertex]) throw error("generator vector has wrong length");
        s.spaces[g.vertex] = sum(s.spaces[g.vertex], Subspace::span(g.rows));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
            const Arrow& ar = alg.quiver.arrows[a];
            Subspace img = image(rep.maps[a], s.spaces[ar.src]);
            if (!s.spaces[ar.tgt].contains(img)) {
                s.spaces[ar.tgt] = sum(s.spaces[ar.tgt], img);
                changed = true;
            }
        }
    }
    return s;
}

SubmoduleRep submodule_rep(const BoundQuiverAlgebra& alg, const Representation& parent,
                           const Submodule& sub) {
    require_shapes(alg, parent);
    if (!submodule_valid(alg, parent, sub)) throw error("submodule_rep: not arrow-closed");
    SubmoduleRep out;
    out.rep.dims.resize(alg.num_vertices());
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        out.rep.dims[v] = sub.spaces[v].dim();
        out.inclusion.push_back(sub.spaces[v].basis.transpose());
    }
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        // X_a . B_s^T = B_t^T . Y_a with a unique solution (B_t has full row rank)
        auto y = solve(out.inclusion[ar.tgt], parent.maps[a] * out.inclusion[ar.src]);
        if (!y) throw error("submodule_rep: closure solve failed");
        out.rep.maps.push_back(std::move(*y));
    }
    return out;
}

QuotientRep quotient_module(const BoundQuiverAlgebra& alg, const Representation& parent,
                            const Submodule& sub) {
    require_shapes(alg, parent);
    if (!submodule_valid(alg, parent, sub)) throw error("quotient_module: not arrow-closed");
    std::vector<QuotientMap> qm;
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) qm.push_back(quotient_map(sub.spaces[v]));
    QuotientRep out;
    out.rep.dims.resize(alg.num_vertices());
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        out.rep.dims[v] = parent.dims[v] - sub.spaces[v].dim();
        out.projection.push_back(qm[v].proj);
    }
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        out.rep.maps.push_back(qm[ar.tgt].proj * parent.maps[a] * qm[ar.src].section);
    }
    return out;
}

Submodule preimage(const BoundQuiverAlgebra& alg, const HomTuple& f, const Representation& domain,
                   const Submodule& sub_of_codomain) {
    if (f.size() != alg.num_vertices()) throw error("preimage: vertex count mismatch");
    Submodule out;
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        const Subspace& t = sub_of_codomain.spaces[v];
        if (f[v].rows != t.ambient || f[v].cols != domain.dims[v])
            throw error("preimage: shape mismatch");
        // x maps into t iff x is killed by (codomain -> codomain/t) after f
        Mat killer = quotient_map(t).proj * f[v];
        out.spaces.push_back(kernel(killer));
    }
    return out;
}

Submodule hom_image(const HomTuple& f) {
    Submodule out;
    for (const Mat& m : f) {
        Subspace s = Subspace::span(m.transpose());
        s.ambient = m.rows;
        out.spaces.push_back(std::move(s));
    }
    return out;
}

Submodule hom_kernel(const HomTuple& f) {
    Submodule out;
    for (const Mat& m : f) out.spaces.push_back(kernel(m));
    return out;
}

Submodule trace(const BoundQuiverAlgebra& alg, const std::vector<Representation>& generators,
                const Representation& target) {
    Submodule out = zero_submodule(alg, target);
    for (const Representation& gen : generators) {
        HomSpace hs = hom_space(alg, gen, target);
        for (const HomTuple& f : hs.basis) out = submodule_sum(out, hom_image(f));
    }
    return out;
}

}  // namespace homsys
