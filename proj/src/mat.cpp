#include "homsys/mat.hpp"

#include <algorithm>
#include <sstream>

namespace homsys {

namespace {
void require_same_field(const Mat& x, const Mat& y) {
    if (x.fld.p != y.fld.p) throw error("matrix field mismatch");
}
}  // namespace

Mat Mat::identity(std::uint32_t n, PrimeField f) {
    Mat m(n, n, f);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(PrimeField f, std::initializer_list<std::initializer_list<long long>> rows) {
    std::uint32_t r = static_cast<std::uint32_t>(rows.size());
    std::uint32_t c = r == 0 ? 0 : static_cast<std::uint32_t>(rows.begin()->size());
    Mat m(r, c, f);
    std::uint32_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw error("ragged matrix literal");
        std::uint32_t j = 0;
        for (long long v : row) m.at(i, j++) = f.reduce(v);
        ++i;
    }
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t v) { return v == 0; });
}

Mat Mat::operator*(const Mat& o) const {
    require_same_field(*this, o);
    if (cols != o.rows) throw error("matrix product shape mismatch");
    Mat out(rows, o.cols, fld);
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t k = 0; k < cols; ++k) {
            std::uint32_t v = at(i, k);
            if (v == 0) continue;
            for (std::uint32_t j = 0; j < o.cols; ++j)
                out.at(i, j) = fld.add(out.at(i, j), fld.mul(v, o.at(k, j)));
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    require_same_field(*this, o);
    if (rows != o.rows || cols != o.cols) throw error("matrix sum shape mismatch");
    Mat out(rows, cols, fld);
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = fld.add(a[i], o.a[i]);
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    require_same_field(*this, o);
    if (rows != o.rows || cols != o.cols) throw error("matrix difference shape mismatch");
    Mat out(rows, cols, fld);
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = fld.sub(a[i], o.a[i]);
    return out;
}

Mat Mat::scaled(std::uint32_t c) const {
    Mat out(rows, cols, fld);
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = fld.mul(a[i], c);
    return out;
}

Mat Mat::transpose() const {
    Mat out(cols, rows, fld);
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::uint32_t i = 0; i < rows; ++i) {
        if (i) os << "; ";
        for (std::uint32_t j = 0; j < cols; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

Mat hstack(const Mat& l, const Mat& r) {
    require_same_field(l, r);
    if (l.rows != r.rows) throw error("hstack row mismatch");
    Mat out(l.rows, l.cols + r.cols, l.fld);
    for (std::uint32_t i = 0; i < l.rows; ++i) {
        for (std::uint32_t j = 0; j < l.cols; ++j) out.at(i, j) = l.at(i, j);
        for (std::uint32_t j = 0; j < r.cols; ++j) out.at(i, l.cols + j) = r.at(i, j);
    }
    return out;
}

Mat vstack(const Mat& top, const Mat& bot) {
    require_same_field(top, bot);
    if (top.cols != bot.cols) throw error("vstack column mismatch");
    Mat out(top.rows + bot.rows, top.cols, top.fld);
    for (std::uint32_t i = 0; i < top.rows; ++i)
        for (std::uint32_t j = 0; j < top.cols; ++j) out.at(i, j) = top.at(i, j);
    for (std::uint32_t i = 0; i < bot.rows; ++i)
        for (std::uint32_t j = 0; j < bot.cols; ++j) out.at(top.rows + i, j) = bot.at(i, j);
    return out;
}

Mat submat(const Mat& m, std::uint32_t r0, std::uint32_t c0, std::uint32_t r, std::uint32_t c) {
    if (r0 + r > m.rows || c0 + c > m.cols) throw error("submatrix out of range");
    Mat out(r, c, m.fld);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = 0; j < c; ++j) out.at(i, j) = m.at(r0 + i, c0 + j);
    return out;
}

}  // namespace homsys
