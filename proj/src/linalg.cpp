#include "orbitdesigns/linalg.hpp"

#include <algorithm>

namespace orbitdesigns {

namespace {

bool pivot_usable(const Scalar& v) { return !v.is_zero(); }

// Prefer simple exact pivots (small rationals) and large bigfloat pivots.
bool pivot_better(const Scalar& cand, const Scalar& best) {
    if (cand.kind() == Scalar::Kind::bigfloat ||
        best.kind() == Scalar::Kind::bigfloat) {
        return abs(cand).to_bigfloat() > abs(best).to_bigfloat();
    }
    auto cost = [](const Scalar& s) {
        if (s.kind() == Scalar::Kind::rational) {
            const Rational& q = s.rational();
            return boost::multiprecision::numerator(q).str().size() +
                   boost::multiprecision::denominator(q).str().size();
        }
        return size_t{1000};
    };
    return cost(cand) < cost(best);
}

}  // namespace

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t best = rows;
        for (size_t i = r; i < rows; ++i) {
            if (!pivot_usable(m[i][c])) continue;
            if (best == rows || pivot_better(m[i][c], m[best][c])) best = i;
        }
        if (best == rows) continue;
        std::swap(m[r], m[best]);
        Scalar inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        m[r][c] = Scalar(1);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Scalar f = m[i][c];
            if (f.is_zero()) continue;
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            m[i][c] = Scalar(0);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::vector<Vec> nullspace(Mat m, int ncols) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(ncols, Scalar(0));
        v[c] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_linear(Mat a, Vec b) {
    if (a.size() != b.size()) throw scalar_error("solve_linear: size mismatch");
    if (a.empty()) return Vec{};
    size_t cols = a[0].size();
    for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    // Inconsistent iff some pivot lands in the augmented column.
    for (int c : pivots)
        if (c == static_cast<int>(cols)) return std::nullopt;
    Vec x(cols, Scalar(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

}  // namespace orbitdesigns
