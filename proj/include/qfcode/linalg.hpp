#pragma once

#include <optional>
#include <vector>

#include "qfcode/field.hpp"

namespace qfcode {

/// Dense row-major matrix over one field level.
struct Mat {
    const Field* F = nullptr;
    int rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(const Field& f, int r, int c) : F(&f), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    Elem at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat transpose(const Mat& x);
Mat identity(const Field& f, int n);

/// In-place reduced row echelon form; returns pivot columns. Zero rows sink
/// to the bottom. The RREF of a row space is canonical, so equal row spaces
/// produce equal matrices.
std::vector<int> rref(Mat& m);

int rank(Mat m);

/// Solves A x^T = b. Empty optional when inconsistent.
std::optional<std::vector<Elem>> solve(const Mat& A, const std::vector<Elem>& b);

/// Basis of {x : A x^T = 0}, one row per basis vector, in RREF.
Mat nullspace(const Mat& A);

/// row_vec * M
std::vector<Elem> row_times_mat(const std::vector<Elem>& v, const Mat& M);

/// v A w^T
Elem bilinear(const Mat& A, const std::vector<Elem>& v, const std::vector<Elem>& w);

}  // namespace qfcode
