#include "qfcode/linalg.hpp"

#include <stdexcept>

namespace qfcode {

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    const Field& F = *x.F;
    Mat r(F, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Elem v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y.at(k, j)) r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
        }
    return r;
}

Mat transpose(const Mat& x) {
    Mat r(*x.F, x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

Mat identity(const Field& f, int n) {
    Mat r(f, n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = f.one();
    return r;
}

std::vector<int> rref(Mat& m) {
    const Field& F = *m.F;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
        const Elem s = F.inv(m.at(row, col));
        if (s != F.one())
            for (int c = 0; c < m.cols; ++c) m.at(row, c) = F.mul(s, m.at(row, c));
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            const Elem f = m.at(r, col);
            if (!f) continue;
            for (int c = 0; c < m.cols; ++c) m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::optional<std::vector<Elem>> solve(const Mat& A, const std::vector<Elem>& b) {
    if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve: shape mismatch");
    const Field& F = *A.F;
    Mat aug(F, A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[static_cast<std::size_t>(i)];
    }
    const std::vector<int> piv = rref(aug);
    for (int c : piv)
        if (c == A.cols) return std::nullopt;  // inconsistent
    std::vector<Elem> x(static_cast<std::size_t>(A.cols), 0);
    for (std::size_t i = 0; i < piv.size(); ++i) x[static_cast<std::size_t>(piv[i])] = aug.at(static_cast<int>(i), A.cols);
    return x;
}

Mat nullspace(const Mat& A) {
    const Field& F = *A.F;
    Mat m = A;
    const std::vector<int> piv = rref(m);
    std::vector<bool> is_piv(static_cast<std::size_t>(A.cols), false);
    for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
    const int nfree = A.cols - static_cast<int>(piv.size());
    Mat basis(F, nfree, A.cols);
    int bi = 0;
    for (int fc = 0; fc < A.cols; ++fc) {
        if (is_piv[static_cast<std::size_t>(fc)]) continue;
        basis.at(bi, fc) = F.one();
        for (std::size_t i = 0; i < piv.size(); ++i) basis.at(bi, piv[i]) = F.neg(m.at(static_cast<int>(i), fc));
        ++bi;
    }
    rref(basis);  // canonical form
    return basis;
}

std::vector<Elem> row_times_mat(const std::vector<Elem>& v, const Mat& M) {
    if (static_cast<int>(v.size()) != M.rows) throw std::invalid_argument("row_times_mat: shape mismatch");
    const Field& F = *M.F;
    std::vector<Elem> r(static_cast<std::size_t>(M.cols), 0);
    for (int i = 0; i < M.rows; ++i) {
        const Elem c = v[static_cast<std::size_t>(i)];
        if (!c) continue;
        for (int j = 0; j < M.cols; ++j)
            if (M.at(i, j)) r[static_cast<std::size_t>(j)] = F.add(r[static_cast<std::size_t>(j)], F.mul(c, M.at(i, j)));
    }
    return r;
}

Elem bilinear(const Mat& A, const std::vector<Elem>& v, const std::vector<Elem>& w) {
    const Field& F = *A.F;
    Elem acc = 0;
    for (int i = 0; i < A.rows; ++i) {
        if (!v[static_cast<std::size_t>(i)]) continue;
        Elem rowdot = 0;
        for (int j = 0; j < A.cols; ++j)
            if (w[static_cast<std::size_t>(j)] && A.at(i, j))
                rowdot = F.add(rowdot, F.mul(A.at(i, j), w[static_cast<std::size_t>(j)]));
        acc = F.add(acc, F.mul(v[static_cast<std::size_t>(i)], rowdot));
    }
    return acc;
}

}  // namespace qfcode
