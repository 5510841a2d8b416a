#include "homsys/linalg.hpp"

namespace homsys {

RrefResult rref(const Mat& m) {
    RrefResult res{m, 0, {}};
    Mat& r = res.mat;
    std::uint32_t lead = 0;
    for (std::uint32_t col = 0; col < r.cols && lead < r.rows; ++col) {
        std::uint32_t piv = lead;
        while (piv < r.rows && r.at(piv, col) == 0) ++piv;
        if (piv == r.rows) continue;
        if (piv != lead)
            for (std::uint32_t j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
        std::uint32_t s = r.fld.inv(r.at(lead, col));
        for (std::uint32_t j = 0; j < r.cols; ++j) r.at(lead, j) = r.fld.mul(r.at(lead, j), s);
        for (std::uint32_t i = 0; i < r.rows; ++i) {
            if (i == lead) continue;
            std::uint32_t f = r.at(i, col);
            if (f == 0) continue;
            for (std::uint32_t j = 0; j < r.cols; ++j)
                r.at(i, j) = r.fld.sub(r.at(i, j), r.fld.mul(f, r.at(lead, j)));
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = lead;
    return res;
}

std::uint32_t rank(const Mat& m) { return rref(m).rank; }

Subspace Subspace::zero(std::uint32_t ambient, PrimeField f) {
    return Subspace{ambient, Mat(0, ambient, f)};
}

Subspace Subspace::full(std::uint32_t ambient, PrimeField f) {
    return Subspace{ambient, Mat::identity(ambient, f)};
}

Subspace Subspace::span(const Mat& vectors_as_rows) {
    RrefResult r = rref(vectors_as_rows);
    return Subspace{vectors_as_rows.cols, submat(r.mat, 0, 0, r.rank, vectors_as_rows.cols)};
}

bool Subspace::contains_vector(const Mat& row) const {
    if (row.rows != 1 || row.cols != ambient) throw error("contains_vector: shape mismatch");
    Mat v = row;
    for (std::uint32_t i = 0; i < basis.rows; ++i) {
        // RREF: basis row i has its pivot as the leading 1
        std::uint32_t piv = 0;
        while (piv < ambient && basis.at(i, piv) == 0) ++piv;
        std::uint32_t c = v.at(0, piv);
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < ambient; ++j)
            v.at(0, j) = v.fld.sub(v.at(0, j), v.fld.mul(c, basis.at(i, j)));
    }
    return v.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient != other.ambient) throw error("subspace ambient mismatch");
    for (std::uint32_t i = 0; i < other.basis.rows; ++i)
        if (!contains_vector(submat(other.basis, i, 0, 1, ambient))) return false;
    return true;
}

Subspace kernel(const Mat& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::uint32_t c : r.pivots) is_pivot[c] = true;
    Mat rows(m.cols - r.rank, m.cols, m.fld);
    std::uint32_t k = 0;
    for (std::uint32_t j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        rows.at(k, j) = 1;
        for (std::uint32_t i = 0; i < r.rank; ++i)
            rows.at(k, r.pivots[i]) = m.fld.neg(r.mat.at(i, j));
        ++k;
    }
    return Subspace::span(rows);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows != b.rows) throw error("solve: row mismatch");
    if (a.fld.p != b.fld.p) throw error("solve: field mismatch");
    RrefResult r = rref(hstack(a, b));
    for (std::uint32_t c : r.pivots)
        if (c >= a.cols) return std::nullopt;
    Mat x(a.cols, b.cols, a.fld);
    for (std::uint32_t i = 0; i < r.rank; ++i)
        for (std::uint32_t j = 0; j < b.cols; ++j) x.at(r.pivots[i], j) = r.mat.at(i, a.cols + j);
    return x;
}

Mat inverse(const Mat& m) {
    if (!m.is_square()) throw error("inverse: not square");
    RrefResult r = rref(hstack(m, Mat::identity(m.rows, m.fld)));
    // the identity block keeps the augmented rank full; singularity shows up
    // as a pivot escaping into the right block
    if (r.rank != m.rows || (m.rows > 0 && r.pivots.back() >= m.cols))
        throw error("inverse: singular matrix");
    return submat(r.mat, 0, m.cols, m.rows, m.cols);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient != v.ambient) throw error("subspace sum: ambient mismatch");
    return Subspace::span(vstack(u.basis, v.basis));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient != v.ambient) throw error("subspace intersection: ambient mismatch");
    // c in ker([U; V]^T) encodes a dependency sum_i c_i u_i = -sum_j c_j v_j,
    // whose U-part runs through exactly U cap V.
    Mat stacked = vstack(u.basis, v.basis);
    Subspace deps = kernel(stacked.transpose());
    Mat rows(deps.dim(), u.ambient, u.basis.fld);
    for (std::uint32_t k = 0; k < deps.dim(); ++k)
        for (std::uint32_t i = 0; i < u.dim(); ++i) {
            std::uint32_t c = deps.basis.at(k, i);
            if (c == 0) continue;
            for (std::uint32_t j = 0; j < u.ambient; ++j)
                rows.at(k, j) = rows.fld.add(rows.at(k, j), rows.fld.mul(c, u.basis.at(i, j)));
        }
    return Subspace::span(rows);
}

Subspace image(const Mat& m, const Subspace& u) {
    if (m.cols != u.ambient) throw error("image: shape mismatch");
    Subspace out = Subspace::span(u.basis * m.transpose());
    out.ambient = m.rows;
    return out;
}

QuotientMap quotient_map(const Subspace& u) {
    const std::uint32_t n = u.ambient;
    const std::uint32_t d = u.dim();
    PrimeField f = u.field();
    std::vector<std::uint32_t> piv(u.basis.rows);
    std::vector<bool> is_pivot(n, false);
    for (std::uint32_t i = 0; i < d; ++i) {
        std::uint32_t c = 0;
        while (c < n && u.basis.at(i, c) == 0) ++c;
        piv[i] = c;
        is_pivot[c] = true;
    }
    // reduce v by the basis at its pivot coordinates, then read the non-pivot ones
    Mat red = Mat::identity(n, f);
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t rj = 0; rj < n; ++rj)
            red.at(rj, piv[i]) = f.sub(red.at(rj, piv[i]), u.basis.at(i, rj));
    QuotientMap q;
    q.proj = Mat(n - d, n, f);
    q.section = Mat(n, n - d, f);
    std::uint32_t k = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        for (std::uint32_t c = 0; c < n; ++c) q.proj.at(k, c) = red.at(j, c);
        q.section.at(j, k) = 1;
        ++k;
    }
    return q;
}

}  // namespace homsys
