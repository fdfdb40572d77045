#include "mvpav/linprog.hpp"

#include "mvpav/errors.hpp"

namespace mvpav {

AffineExpr AffineExpr::from_constant(Rat c) {
    AffineExpr e;
    e.constant = std::move(c);
    return e;
}

AffineExpr AffineExpr::variable(int index) {
    AffineExpr e;
    e.coeffs[index] = 1;
    return e;
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
    constant += o.constant;
    for (const auto& [i, c] : o.coeffs) {
        Rat& slot = coeffs[i];
        slot += c;
        if (slot == 0) coeffs.erase(i);
    }
    return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& o) {
    constant -= o.constant;
    for (const auto& [i, c] : o.coeffs) {
        Rat& slot = coeffs[i];
        slot -= c;
        if (slot == 0) coeffs.erase(i);
    }
    return *this;
}

AffineExpr& AffineExpr::operator*=(const Rat& k) {
    if (k == 0) {
        constant = 0;
        coeffs.clear();
        return *this;
    }
    constant *= k;
    for (auto& [i, c] : coeffs) c *= k;
    return *this;
}

Rat AffineExpr::eval(const std::vector<Rat>& point) const {
    Rat v = constant;
    for (const auto& [i, c] : coeffs) {
        if (i < 0 || i >= static_cast<int>(point.size()))
            throw Error("affine eval: variable index out of range");
        v += c * point[static_cast<std::size_t>(i)];
    }
    return v;
}

bool LinConstraint::satisfied(const std::vector<Rat>& point) const {
    Rat v = expr.eval(point);
    return kind == Kind::Eq0 ? v == 0 : v <= 0;
}

namespace lp {

namespace {

// Dense simplex tableau in standard form:
//   minimize c^T y   s.t.  T y = rhs,  y >= 0
// Structural variables first, then upper-bound slacks, then constraint
// slacks, then (phase 1) artificials.
class Simplex {
  public:
    Simplex(const Problem& p) : n_(p.nvars) {
        // rows: one per unit upper bound, one per constraint
        std::vector<std::vector<Rat>> rows;
        std::vector<Rat> rhs;
        for (int i = 0; i < n_; ++i) {
            std::vector<Rat> row(static_cast<std::size_t>(n_), Rat(0));
            row[static_cast<std::size_t>(i)] = 1;
            rows.push_back(std::move(row));
            rhs.push_back(1);  // x_i + s_i = 1
            slack_kind_.push_back(true);
        }
        for (const LinConstraint& c : p.constraints) {
            std::vector<Rat> row(static_cast<std::size_t>(n_), Rat(0));
            for (const auto& [i, coeff] : c.expr.coeffs) {
                if (i < 0 || i >= n_)
                    throw Error("constraint references unknown variable");
                row[static_cast<std::size_t>(i)] = coeff;
            }
            rows.push_back(std::move(row));
            rhs.push_back(-c.expr.constant);  // linear part = -const
            slack_kind_.push_back(c.kind == LinConstraint::Kind::Le0);
        }
        m_ = static_cast<int>(rows.size());

        int nslack = 0;
        for (bool s : slack_kind_)
            if (s) ++nslack;
        total_ = n_ + nslack + m_;  // + artificials
        first_artificial_ = n_ + nslack;

        tableau_.assign(static_cast<std::size_t>(m_),
                        std::vector<Rat>(static_cast<std::size_t>(total_ + 1),
                                         Rat(0)));
        basis_.assign(static_cast<std::size_t>(m_), 0);
        int slack_col = n_;
        for (int r = 0; r < m_; ++r) {
            auto& row = tableau_[static_cast<std::size_t>(r)];
            for (int j = 0; j < n_; ++j)
                row[static_cast<std::size_t>(j)] =
                    rows[static_cast<std::size_t>(r)]
                        [static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(total_)] =
                rhs[static_cast<std::size_t>(r)];
            if (slack_kind_[static_cast<std::size_t>(r)]) {
                row[static_cast<std::size_t>(slack_col)] = 1;
                ++slack_col;
            }
            // normalize to nonnegative rhs before adding the artificial
            if (row[static_cast<std::size_t>(total_)] < 0)
                for (auto& v : row) v = -v;
            int art = first_artificial_ + r;
            row[static_cast<std::size_t>(art)] = 1;
            basis_[static_cast<std::size_t>(r)] = art;
        }
    }

    // Phase 1; returns false when infeasible.
    bool make_feasible() {
        std::vector<Rat> cost(static_cast<std::size_t>(total_), Rat(0));
        for (int j = first_artificial_; j < total_; ++j)
            cost[static_cast<std::size_t>(j)] = 1;
        Rat opt = run(cost, total_);
        if (opt != 0) return false;
        // pivot remaining artificials out of the basis where possible
        for (int r = 0; r < m_; ++r) {
            if (basis_[static_cast<std::size_t>(r)] < first_artificial_)
                continue;
            int enter = -1;
            for (int j = 0; j < first_artificial_; ++j)
                if (tableau_[static_cast<std::size_t>(r)]
                            [static_cast<std::size_t>(j)] != 0) {
                    enter = j;
                    break;
                }
            if (enter >= 0) pivot(r, enter);
            // else: redundant row; the artificial stays basic at value 0
        }
        return true;
    }

    // Phase 2 over the structural objective; artificials barred.
    Rat optimize(const AffineExpr& objective) {
        std::vector<Rat> cost(static_cast<std::size_t>(total_), Rat(0));
        for (const auto& [i, c] : objective.coeffs) {
            if (i < 0 || i >= n_)
                throw Error("objective references unknown variable");
            cost[static_cast<std::size_t>(i)] = c;
        }
        Rat opt = run(cost, first_artificial_);
        return opt + objective.constant;
    }

    std::vector<Rat> point() const {
        std::vector<Rat> x(static_cast<std::size_t>(n_), Rat(0));
        for (int r = 0; r < m_; ++r) {
            int b = basis_[static_cast<std::size_t>(r)];
            if (b < n_)
                x[static_cast<std::size_t>(b)] =
                    tableau_[static_cast<std::size_t>(r)]
                            [static_cast<std::size_t>(total_)];
        }
        return x;
    }

  private:
    // Minimizes cost over columns [0, ncols); returns the optimum.
    Rat run(const std::vector<Rat>& cost, int ncols) {
        // reduced costs: z_j = c_j - c_B^T B^{-1} A_j, maintained implicitly
        while (true) {
            // reduced cost of column j
            int enter = -1;
            for (int j = 0; j < ncols; ++j) {
                if (is_basic(j)) continue;
                Rat red = cost[static_cast<std::size_t>(j)];
                for (int r = 0; r < m_; ++r) {
                    const Rat& a =
                        tableau_[static_cast<std::size_t>(r)]
                                [static_cast<std::size_t>(j)];
                    if (a != 0)
                        red -= cost[static_cast<std::size_t>(
                                   basis_[static_cast<std::size_t>(r)])] *
                               a;
                }
                if (red < 0) {
                    enter = j;  // Bland: first negative
                    break;
                }
            }
            if (enter < 0) break;
            int leave = -1;
            Rat best_ratio = 0;
            for (int r = 0; r < m_; ++r) {
                const Rat& a = tableau_[static_cast<std::size_t>(r)]
                                       [static_cast<std::size_t>(enter)];
                if (a <= 0) continue;
                Rat ratio = tableau_[static_cast<std::size_t>(r)]
                                    [static_cast<std::size_t>(total_)] /
                            a;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio &&
                     basis_[static_cast<std::size_t>(r)] <
                         basis_[static_cast<std::size_t>(leave)])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave < 0)
                throw Error("simplex: unbounded (cube bounds missing?)");
            pivot(leave, enter);
        }
        Rat value = 0;
        for (int r = 0; r < m_; ++r)
            value += cost[static_cast<std::size_t>(
                         basis_[static_cast<std::size_t>(r)])] *
                     tableau_[static_cast<std::size_t>(r)]
                             [static_cast<std::size_t>(total_)];
        return value;
    }

    bool is_basic(int j) const {
        for (int b : basis_)
            if (b == j) return true;
        return false;
    }

    void pivot(int row, int col) {
        auto& prow = tableau_[static_cast<std::size_t>(row)];
        Rat inv = prow[static_cast<std::size_t>(col)];
        if (inv == 0) throw Error("simplex: zero pivot");
        for (auto& v : prow) v /= inv;
        for (int r = 0; r < m_; ++r) {
            if (r == row) continue;
            auto& orow = tableau_[static_cast<std::size_t>(r)];
            Rat factor = orow[static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int j = 0; j <= total_; ++j)
                orow[static_cast<std::size_t>(j)] -=
                    factor * prow[static_cast<std::size_t>(j)];
        }
        basis_[static_cast<std::size_t>(row)] = col;
    }

    int n_ = 0;
    int m_ = 0;
    int total_ = 0;
    int first_artificial_ = 0;
    std::vector<bool> slack_kind_;  // row has a slack (<= row or unit bound)
    std::vector<std::vector<Rat>> tableau_;
    std::vector<int> basis_;
};

}  // namespace

Result minimize(const Problem& p) {
    Result res;
    if (p.nvars == 0) {
        // no structural variables: constraints are constants
        for (const LinConstraint& c : p.constraints) {
            bool ok = c.kind == LinConstraint::Kind::Eq0
                          ? c.expr.constant == 0
                          : c.expr.constant <= 0;
            if (!ok) return res;
        }
        res.status = Status::Optimal;
        res.value = p.objective.constant;
        return res;
    }
    Simplex s(p);
    if (!s.make_feasible()) return res;
    res.status = Status::Optimal;
    res.value = s.optimize(p.objective);
    res.point = s.point();
    return res;
}

bool feasible(const Problem& p) {
    Problem q = p;
    q.objective = AffineExpr{};
    return minimize(q).status == Status::Optimal;
}

}  // namespace lp

}  // namespace mvpav
