#include "homsys/ext.hpp"

namespace homsys {

Cochain ExtSpace::unpack(const Mat& flat_row) const {
    if (flat_row.rows != 1 || flat_row.cols != cochain_len) throw error("cochain unpack: bad shape");
    Cochain c;
    for (std::size_t a = 0; a < shapes.size(); ++a) {
        Mat m(shapes[a].first, shapes[a].second, fld);
        for (std::uint32_t i = 0; i < m.rows; ++i)
            for (std::uint32_t j = 0; j < m.cols; ++j)
                m.at(i, j) = flat_row.at(0, offsets[a] + i * m.cols + j);
        c.per_arrow.push_back(std::move(m));
    }
    return c;
}

Mat ExtSpace::pack(const Cochain& c) const {
    Mat flat(1, cochain_len, fld);
    for (std::size_t a = 0; a < shapes.size(); ++a) {
        const Mat& m = c.per_arrow[a];
        if (m.rows != shapes[a].first || m.cols != shapes[a].second)
            throw error("cochain pack: bad shape");
        for (std::uint32_t i = 0; i < m.rows; ++i)
            for (std::uint32_t j = 0; j < m.cols; ++j)
                flat.at(0, offsets[a] + i * m.cols + j) = m.at(i, j);
    }
    return flat;
}

Cochain ExtSpace::cocycle(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != cocycles.dim()) throw error("cocycle: coefficient count mismatch");
    Mat flat(1, cochain_len, fld);
    for (std::uint32_t k = 0; k < cocycles.dim(); ++k)
        for (std::uint32_t j = 0; j < cochain_len; ++j)
            flat.at(0, j) = fld.add(flat.at(0, j), fld.mul(coeffs[k], cocycles.basis.at(k, j)));
    return unpack(flat);
}

Cochain ExtSpace::zero() const {
    Cochain c;
    for (auto [r, cl] : shapes) c.per_arrow.emplace_back(r, cl, fld);
    return c;
}

bool ExtSpace::is_coboundary(const Cochain& c) const {
    return coboundaries.contains_vector(pack(c));
}

ExtSpace ext_space(const BoundQuiverAlgebra& alg, const Representation& X, const Representation& Y) {
    ExtSpace es;
    es.fld = alg.field;
    const std::size_t na = alg.num_arrows();
    std::uint32_t off = 0;
    for (std::size_t a = 0; a < na; ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        es.offsets.push_back(off);
        es.shapes.emplace_back(Y.dims[ar.tgt], X.dims[ar.src]);
        off += Y.dims[ar.tgt] * X.dims[ar.src];
    }
    es.cochain_len = off;

    // Z^1: for each relation sum_m chi_m a_1..a_L, the block (sub, quot)
    // entry of its evaluation on the extension is the sum over single-arrow
    // substitutions  chi_m * (Y-suffix) delta_{a_i} (X-prefix); a cocycle
    // must kill all of them.
    std::uint32_t n_rows = 0;
    for (const Relation& rel : alg.relations)
        n_rows += Y.dims[alg.path_target(rel.terms[0])] * X.dims[alg.path_source(rel.terms[0])];
    Mat sys(n_rows, es.cochain_len, alg.field);
    std::uint32_t row_base = 0;
    for (const Relation& rel : alg.relations) {
        std::uint32_t out_rows = Y.dims[alg.path_target(rel.terms[0])];
        std::uint32_t out_cols = X.dims[alg.path_source(rel.terms[0])];
        for (const PathTerm& term : rel.terms) {
            const std::size_t len = term.arrows.size();
            for (std::size_t i = 0; i < len; ++i) {
                std::size_t ai = term.arrows[i];
                const Arrow& mid = alg.quiver.arrows[ai];
                Mat left = Mat::identity(Y.dims[alg.path_target(term)], alg.field);
                for (std::size_t k = len; k-- > i + 1;) left = left * Y.maps[term.arrows[k]];
                Mat right = Mat::identity(X.dims[mid.src], alg.field);
                for (std::size_t k = i; k-- > 0;) right = right * X.maps[term.arrows[k]];
                // coefficient of delta_{ai}[r, c] at output (u, w):
                // chi * left[u, r] * right[c, w]
                for (std::uint32_t u = 0; u < out_rows; ++u)
                    for (std::uint32_t w = 0; w < out_cols; ++w) {
                        std::uint32_t out_row = row_base + u * out_cols + w;
                        for (std::uint32_t r = 0; r < Y.dims[mid.tgt]; ++r) {
                            std::uint32_t lu = left.at(u, r);
                            if (lu == 0) continue;
                            for (std::uint32_t cc = 0; cc < X.dims[mid.src]; ++cc) {
                                std::uint32_t coe = alg.field.mul(
                                    term.coeff % alg.field.p, alg.field.mul(lu, right.at(cc, w)));
                                if (coe == 0) continue;
                                std::uint32_t col = es.offsets[ai] + r * X.dims[mid.src] + cc;
                                sys.at(out_row, col) = alg.field.add(sys.at(out_row, col), coe);
                            }
                        }
                    }
            }
        }
        row_base += out_rows * out_cols;
    }
    es.cocycles = kernel(sys);

    // B^1 = image of c -> (Y_a c_{s(a)} - c_{t(a)} X_a)
    const std::size_t nv = alg.num_vertices();
    std::vector<std::uint32_t> voff(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) voff[v + 1] = voff[v] + Y.dims[v] * X.dims[v];
    Mat d0(es.cochain_len, voff[nv], alg.field);
    for (std::size_t a = 0; a < na; ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        std::uint32_t rows_a = Y.dims[ar.tgt], cols_a = X.dims[ar.src];
        for (std::uint32_t u = 0; u < rows_a; ++u)
            for (std::uint32_t w = 0; w < cols_a; ++w) {
                std::uint32_t out = es.offsets[a] + u * cols_a + w;
                for (std::uint32_t i = 0; i < Y.dims[ar.src]; ++i) {
                    std::uint32_t col = voff[ar.src] + i * X.dims[ar.src] + w;
                    d0.at(out, col) = alg.field.add(d0.at(out, col), Y.maps[a].at(u, i));
                }
                for (std::uint32_t j = 0; j < X.dims[ar.tgt]; ++j) {
                    std::uint32_t col = voff[ar.tgt] + u * X.dims[ar.tgt] + j;
                    d0.at(out, col) = alg.field.sub(d0.at(out, col), X.maps[a].at(j, w));
                }
            }
    }
    Subspace b = Subspace::span(d0.transpose());
    b.ambient = es.cochain_len;
    es.coboundaries = b;
    if (!es.cocycles.contains(es.coboundaries))
        throw error("ext_space: coboundaries escape the cocycles");
    return es;
}

bool ses_valid(const BoundQuiverAlgebra& alg, const ShortExactSequence& seq) {
    if (!validate_representation(alg, seq.sub).empty()) return false;
    if (!validate_representation(alg, seq.middle).empty()) return false;
    if (!validate_representation(alg, seq.quot).empty()) return false;
    if (!is_module_hom(alg, seq.sub, seq.middle, seq.inclusion)) return false;
    if (!is_module_hom(alg, seq.middle, seq.quot, seq.projection)) return false;
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        if (rank(seq.inclusion[v]) != seq.sub.dims[v]) return false;       // injective
        if (rank(seq.projection[v]) != seq.quot.dims[v]) return false;     // surjective
        if (seq.middle.dims[v] != seq.sub.dims[v] + seq.quot.dims[v]) return false;
    }
    Submodule img = hom_image(seq.inclusion);
    Submodule ker = hom_kernel(seq.projection);
    return img == ker;
}

ShortExactSequence build_extension(const BoundQuiverAlgebra& alg, const Representation& X,
                                   const Representation& Y, const Cochain& delta) {
    ShortExactSequence seq;
    seq.sub = Y;
    seq.quot = X;
    seq.middle.dims.resize(alg.num_vertices());
    for (std::size_t v = 0; v < alg.num_vertices(); ++v)
        seq.middle.dims[v] = Y.dims[v] + X.dims[v];
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        const Mat& d = delta.per_arrow[a];
        if (d.rows != Y.dims[ar.tgt] || d.cols != X.dims[ar.src])
            throw error("build_extension: cochain shape mismatch");
        Mat top = hstack(Y.maps[a], d);
        Mat bot = hstack(Mat(X.dims[ar.tgt], Y.dims[ar.src], alg.field), X.maps[a]);
        seq.middle.maps.push_back(vstack(top, bot));
    }
    if (!validate_representation(alg, seq.middle).empty())
        throw error("build_extension: cochain violates a relation (not a cocycle)");
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        std::uint32_t dy = Y.dims[v], dx = X.dims[v];
        seq.inclusion.push_back(vstack(Mat::identity(dy, alg.field), Mat(dx, dy, alg.field)));
        seq.projection.push_back(hstack(Mat(dx, dy, alg.field), Mat::identity(dx, alg.field)));
    }
    return seq;
}

std::optional<HomTuple> find_section(const BoundQuiverAlgebra& alg, const ShortExactSequence& seq) {
    const std::size_t nv = alg.num_vertices();
    const Representation& E = seq.middle;
    const Representation& X = seq.quot;
    std::vector<std::uint32_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + E.dims[v] * X.dims[v];
    const std::uint32_t unknowns = off[nv];

    std::uint32_t n_rows = 0;
    for (std::size_t v = 0; v < nv; ++v) n_rows += X.dims[v] * X.dims[v];
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        n_rows += E.dims[ar.tgt] * X.dims[ar.src];
    }
    Mat sys(n_rows, unknowns, alg.field);
    Mat rhs(n_rows, 1, alg.field);
    std::uint32_t row = 0;
    // projection o s = id
    for (std::size_t v = 0; v < nv; ++v) {
        const Mat& p = seq.projection[v];
        for (std::uint32_t u = 0; u < X.dims[v]; ++u)
            for (std::uint32_t w = 0; w < X.dims[v]; ++w) {
                for (std::uint32_t i = 0; i < E.dims[v]; ++i)
                    sys.at(row, off[v] + i * X.dims[v] + w) = p.at(u, i);
                rhs.at(row, 0) = (u == w) ? 1 : 0;
                ++row;
            }
    }
    // E_a s_{s(a)} = s_{t(a)} X_a
    for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
        const Arrow& ar = alg.quiver.arrows[a];
        const Mat& Ea = E.maps[a];
        const Mat& Xa = X.maps[a];
        for (std::uint32_t u = 0; u < E.dims[ar.tgt]; ++u)
            for (std::uint32_t w = 0; w < X.dims[ar.src]; ++w) {
                for (std::uint32_t i = 0; i < E.dims[ar.src]; ++i) {
                    std::uint32_t col = off[ar.src] + i * X.dims[ar.src] + w;
                    sys.at(row, col) = alg.field.add(sys.at(row, col), Ea.at(u, i));
                }
                for (std::uint32_t j = 0; j < X.dims[ar.tgt]; ++j) {
                    std::uint32_t col = off[ar.tgt] + u * X.dims[ar.tgt] + j;
                    sys.at(row, col) = alg.field.sub(sys.at(row, col), Xa.at(j, w));
                }
                ++row;
            }
    }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    HomTuple s;
    for (std::size_t v = 0; v < nv; ++v) {
        Mat m(E.dims[v], X.dims[v], alg.field);
        for (std::uint32_t i = 0; i < m.rows; ++i)
            for (std::uint32_t j = 0; j < m.cols; ++j) m.at(i, j) = sol->at(off[v] + i * m.cols + j, 0);
        s.push_back(std::move(m));
    }
    return s;
}

Submodule complement_of_sub(const BoundQuiverAlgebra& alg, const ShortExactSequence& seq,
                            const HomTuple& section) {
    if (!is_module_hom(alg, seq.quot, seq.middle, section))
        throw error("complement_of_sub: not a module map");
    HomTuple check = hom_compose(seq.projection, section);
    if (check != identity_hom(alg, seq.quot)) throw error("complement_of_sub: not a section");
    return hom_image(section);
}

}  // namespace homsys
