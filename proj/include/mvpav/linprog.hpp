#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mvpav/rational.hpp"

namespace mvpav {

/// Affine expression c0 + sum coeff_i * x_i over variable indices.
struct AffineExpr {
    Rat constant = 0;
    std::map<int, Rat> coeffs;

    static AffineExpr from_constant(Rat c);
    static AffineExpr variable(int index);

    AffineExpr& operator+=(const AffineExpr& o);
    AffineExpr& operator-=(const AffineExpr& o);
    AffineExpr& operator*=(const Rat& k);
    friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) {
        a += b;
        return a;
    }
    friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) {
        a -= b;
        return a;
    }
    friend AffineExpr operator*(AffineExpr a, const Rat& k) {
        a *= k;
        return a;
    }

    Rat eval(const std::vector<Rat>& point) const;
    bool is_constant() const { return coeffs.empty(); }
    friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
};

/// expr <= 0 or expr == 0.
struct LinConstraint {
    enum class Kind { Le0, Eq0 };
    AffineExpr expr;
    Kind kind = Kind::Le0;

    static LinConstraint le0(AffineExpr e) { return {std::move(e), Kind::Le0}; }
    static LinConstraint eq0(AffineExpr e) { return {std::move(e), Kind::Eq0}; }
    bool satisfied(const std::vector<Rat>& point) const;
};

namespace lp {

/// minimize objective over { x in [0,1]^nvars : constraints }.
/// Unit-cube bounds on every structural variable are implicit.
struct Problem {
    int nvars = 0;
    std::vector<LinConstraint> constraints;
    AffineExpr objective;
};

enum class Status { Optimal, Infeasible };

struct Result {
    Status status = Status::Infeasible;
    Rat value = 0;
    std::vector<Rat> point;  // size nvars when Optimal
};

/// Exact two-phase simplex with Bland's rule (no cycling, no tolerances).
/// The feasible set is bounded by the cube, so no unbounded case exists.
Result minimize(const Problem& p);

bool feasible(const Problem& p);

}  // namespace lp

}  // namespace mvpav
