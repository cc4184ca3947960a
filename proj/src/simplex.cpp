#include "svlab/simplex.hpp"

#include <stdexcept>

namespace svlab {

namespace {

/**
 * Phase-1 simplex on  A y (<=|==) b, y >= 0,  minimizing the artificial
 * sum.  Dense exact tableau; Bland's rule (smallest eligible index enters,
 * smallest basic index leaves on ties) guarantees termination.
 */
class Phase1 {
public:
    Phase1(std::size_t ny, const std::vector<LinearConstraint>& rows) : ny_(ny) {
        std::size_t m = rows.size();
        nslack_ = 0;
        for (const auto& r : rows)
            if (!r.equality) ++nslack_;
        // worst case every row also needs an artificial
        nart_ = m;
        width_ = ny_ + nslack_ + nart_ + 1;
        tab_.assign(m, std::vector<Rat>(width_));
        basis_.assign(m, 0);

        std::size_t slack_at = ny_;
        std::size_t art_at = ny_ + nslack_;
        for (std::size_t i = 0; i < m; ++i) {
            const LinearConstraint& r = rows[i];
            bool flip = r.b < 0;
            for (std::size_t j = 0; j < ny_; ++j)
                tab_[i][j] = flip ? Rat(-r.a[j]) : r.a[j];
            rhs(i) = flip ? Rat(-r.b) : r.b;
            bool basic_found = false;
            if (!r.equality) {
                // slack coefficient is -1 after a flip, +1 otherwise
                tab_[i][slack_at] = flip ? Rat(-1) : Rat(1);
                if (!flip) {
                    basis_[i] = slack_at;
                    basic_found = true;
                }
                ++slack_at;
            }
            if (!basic_found) {
                tab_[i][art_at] = 1;
                basis_[i] = art_at;
                ++art_at;
            }
        }
        art_begin_ = ny_ + nslack_;
        art_end_ = art_at;
    }

    bool solve(std::vector<Rat>& y_out) {
        std::size_t m = tab_.size();
        // objective row: minimize sum of artificials, in canonical form
        std::vector<Rat> obj(width_);
        Rat objval(0);
        for (std::size_t j = art_begin_; j < art_end_; ++j) obj[j] = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (basis_[i] >= art_begin_ && basis_[i] < art_end_) {
                for (std::size_t j = 0; j < width_ - 1; ++j) obj[j] -= tab_[i][j];
                objval -= rhs(i);
            }
        }

        while (true) {
            // artificials never re-enter; structural and slack columns only
            std::size_t enter = width_;
            for (std::size_t j = 0; j < art_begin_; ++j)
                if (obj[j] < 0) { enter = j; break; }
            if (enter == width_) break;
            std::size_t leave = m;
            Rat best;
            for (std::size_t i = 0; i < m; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rat ratio = rhs(i) / tab_[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m)
                throw std::logic_error("phase-1 objective unbounded (cannot happen)");
            pivot(leave, enter, obj, objval);
        }

        if (objval != 0) return false;
        y_out.assign(ny_, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis_[i] < ny_) y_out[basis_[i]] = rhs(i);
        return true;
    }

private:
    Rat& rhs(std::size_t i) { return tab_[i][width_ - 1]; }

    void pivot(std::size_t row, std::size_t col, std::vector<Rat>& obj, Rat& objval) {
        Rat inv = 1 / tab_[row][col];
        for (auto& v : tab_[row]) v *= inv;
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            Rat f = tab_[i][col];
            for (std::size_t j = 0; j < width_; ++j) tab_[i][j] -= f * tab_[row][j];
        }
        if (obj[col] != 0) {
            Rat f = obj[col];
            for (std::size_t j = 0; j < width_ - 1; ++j) obj[j] -= f * tab_[row][j];
            objval -= f * rhs(row);
        }
        basis_[row] = col;
    }

    std::size_t ny_, nslack_, nart_, width_, art_begin_, art_end_;
    std::vector<std::vector<Rat>> tab_;
    std::vector<std::size_t> basis_;
};

} // namespace

LPResult lp_feasible(std::size_t nvars, const std::vector<LinearConstraint>& cons,
                     const std::vector<Rat>& lo, const std::vector<Rat>& hi) {
    if (lo.size() != nvars || hi.size() != nvars)
        throw std::invalid_argument("lp_feasible: bounds must cover all variables");
    for (std::size_t j = 0; j < nvars; ++j)
        if (lo[j] > hi[j]) return {false, {}};

    // substitute x = lo + y with y >= 0
    std::vector<LinearConstraint> rows;
    rows.reserve(cons.size() + nvars);
    for (const auto& c : cons) {
        if (c.a.size() != nvars)
            throw std::invalid_argument("lp_feasible: constraint arity mismatch");
        LinearConstraint r = c;
        for (std::size_t j = 0; j < nvars; ++j) r.b -= c.a[j] * lo[j];
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < nvars; ++j) {
        LinearConstraint r;
        r.a.assign(nvars, Rat(0));
        r.a[j] = 1;
        r.b = hi[j] - lo[j];
        r.equality = false;
        rows.push_back(std::move(r));
    }

    Phase1 solver(nvars, rows);
    std::vector<Rat> y;
    if (!solver.solve(y)) return {false, {}};
    std::vector<Rat> x(nvars);
    for (std::size_t j = 0; j < nvars; ++j) x[j] = lo[j] + y[j];
    return {true, std::move(x)};
}

} // namespace svlab
