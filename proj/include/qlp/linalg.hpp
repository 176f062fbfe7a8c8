#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace qlp {

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Row-reduced echelon form over an exact field F.  Pivot in each column is the
// cheapest nonzero candidate (by F::complexity), ties resolved by row order.
template <class F>
struct Echelon {
    Matrix<F> rows;                 // reduced rows, one per pivot
    std::vector<std::size_t> pivots; // pivot column of each row
    std::size_t cols = 0;
};

template <class F>
Echelon<F> row_reduce(Matrix<F> a, std::size_t cols) {
    Echelon<F> out;
    out.cols = cols;
    std::vector<bool> used(a.size(), false);
    std::vector<std::size_t> prow;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t best = a.size(), best_cost = 0;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (used[r] || a[r][c].is_zero()) continue;
            std::size_t cost = a[r][c].complexity();
            if (best == a.size() || cost < best_cost) {
                best = r;
                best_cost = cost;
            }
        }
        if (best == a.size()) continue;
        used[best] = true;
        F inv = a[best][c].inverse();
        for (std::size_t k = c; k < cols; ++k)
            if (!a[best][k].is_zero()) a[best][k] = a[best][k] * inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == best || a[r][c].is_zero()) continue;
            F f = a[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!a[best][k].is_zero()) a[r][k] -= f * a[best][k];
        }
        prow.push_back(best);
        out.pivots.push_back(c);
    }
    for (std::size_t r : prow) out.rows.push_back(std::move(a[r]));
    return out;
}

template <class F>
std::size_t rank(const Matrix<F> &a, std::size_t cols) {
    return row_reduce(a, cols).pivots.size();
}

// Basis of {x : a x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F> &a, std::size_t cols) {
    Echelon<F> e = row_reduce(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> x(cols);
        x[f] = F(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (!e.rows[i][f].is_zero()) x[e.pivots[i]] = -e.rows[i][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

// Unique solution of a x = b, or nullopt if inconsistent or underdetermined.
template <class F>
std::optional<std::vector<F>> solve_unique(const Matrix<F> &a, const std::vector<F> &b, std::size_t cols) {
    Matrix<F> aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    Echelon<F> e = row_reduce(aug, cols + 1);
    if (e.pivots.size() != cols) return std::nullopt;
    std::vector<F> x(cols);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == cols) return std::nullopt;
        x[e.pivots[i]] = e.rows[i][cols];
    }
    return x;
}

} // namespace qlp
