#include "rslab/gf_matrix.hpp"

namespace rslab {
namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(const PrimeField& F, GfMatrix& A, std::vector<Residue>* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < A.cols && row < A.rows; ++col) {
        std::size_t sel = row;
        while (sel < A.rows && A.at(sel, col) == 0) ++sel;
        if (sel == A.rows) continue;
        if (sel != row) {
            for (std::size_t c = 0; c < A.cols; ++c) std::swap(A.at(sel, c), A.at(row, c));
            if (rhs) std::swap((*rhs)[sel], (*rhs)[row]);
        }
        const Residue inv = F.inv(A.at(row, col));
        for (std::size_t c = col; c < A.cols; ++c) A.at(row, c) = F.mul(A.at(row, c), inv);
        if (rhs) (*rhs)[row] = F.mul((*rhs)[row], inv);
        for (std::size_t r = 0; r < A.rows; ++r) {
            if (r == row) continue;
            const Residue f = A.at(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < A.cols; ++c) A.at(r, c) = F.sub(A.at(r, c), F.mul(f, A.at(row, c)));
            if (rhs) (*rhs)[r] = F.sub((*rhs)[r], F.mul(f, (*rhs)[row]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<std::vector<Residue>> solve(const PrimeField& F, GfMatrix A, std::vector<Residue> b) {
    auto pivots = rref(F, A, &b);
    for (std::size_t r = pivots.size(); r < A.rows; ++r)
        if (b[r] != 0) return std::nullopt;
    std::vector<Residue> x(A.cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
    return x;
}

std::optional<std::vector<Residue>> kernel_vector(const PrimeField& F, GfMatrix A) {
    auto pivots = rref(F, A, nullptr);
    if (pivots.size() == A.cols) return std::nullopt;
    std::vector<bool> is_pivot(A.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Residue> x(A.cols, 0);
    x[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = F.neg(A.at(r, free_col));
    return x;
}

}  // namespace rslab
