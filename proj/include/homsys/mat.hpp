#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "homsys/gf.hpp"

namespace homsys {

// Dense matrix over GF(p), row-major. Zero-row and zero-column shapes are
// legal everywhere; products with an empty inner dimension are zero matrices.
struct Mat {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    PrimeField fld;
    std::vector<std::uint32_t> a;

    Mat() = default;
    Mat(std::uint32_t r, std::uint32_t c, PrimeField f)
        : rows(r), cols(c), fld(f), a(static_cast<std::size_t>(r) * c, 0) {}

    static Mat identity(std::uint32_t n, PrimeField f);
    static Mat from_rows(PrimeField f, std::initializer_list<std::initializer_list<long long>> rows);

    std::uint32_t& at(std::uint32_t r, std::uint32_t c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    bool is_zero() const;
    bool is_square() const { return rows == cols; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(std::uint32_t c) const;
    Mat transpose() const;

    bool operator==(const Mat&) const = default;

    std::string to_string() const;
};

Mat hstack(const Mat& l, const Mat& r);
Mat vstack(const Mat& top, const Mat& bot);
// Copies the r x c block with top-left corner (r0, c0).
Mat submat(const Mat& m, std::uint32_t r0, std::uint32_t c0, std::uint32_t r, std::uint32_t c);

}  // namespace homsys
