#ifndef SVLAB_MATRIX_HPP
#define SVLAB_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "svlab/gaussian.hpp"

namespace svlab {

/// Dense matrix over the Gaussian rationals, row-major.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix from_rows(const std::vector<std::vector<GaussRat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussRat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const GaussRat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ExactMatrix transposed() const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<GaussRat> a_;
};

struct RrefResult {
    ExactMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank;
};

/**
 * Reduced row echelon form with a deterministic pivot rule: columns are
 * scanned left to right and the first row with a nonzero entry becomes the
 * pivot row.  Pivots are scaled to 1 and eliminated above and below.
 */
RrefResult rref(const ExactMatrix& m);

std::size_t rank_of(const ExactMatrix& m);

/**
 * Basis of the right nullspace {v : M v = 0}, one vector per non-pivot
 * column, in column order, with the free coordinate set to 1.
 */
std::vector<std::vector<GaussRat>> nullspace(const ExactMatrix& m);

} // namespace svlab

#endif
