#include "svlab/matrix.hpp"

#include <stdexcept>

namespace svlab {

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<GaussRat>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RrefResult rref(const ExactMatrix& m) {
    RrefResult res{m, {}, 0};
    ExactMatrix& a = res.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(pivot, j), a.at(row, j));
        GaussRat inv = a.at(row, col).inv();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            GaussRat f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(row, j);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

std::size_t rank_of(const ExactMatrix& m) { return rref(m).rank; }

std::vector<std::vector<GaussRat>> nullspace(const ExactMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<GaussRat>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussRat> v(m.cols());
        v[free] = GaussRat(1);
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            v[r.pivot_cols[p]] = -r.reduced.at(p, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace svlab
