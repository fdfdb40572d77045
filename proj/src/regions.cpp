#include "mvpav/regions.hpp"

#include <algorithm>
#include <functional>

#include "mvpav/errors.hpp"

namespace mvpav {

int RegionSystem::var_index(const std::string& name) const {
    auto it = std::lower_bound(vars.begin(), vars.end(), name);
    if (it == vars.end() || *it != name)
        throw Error("region system has no variable: " + name);
    return static_cast<int>(it - vars.begin());
}

bool pl_fragment(const Formula& f) {
    if (f.kind() == Kind::Bullet) return false;
    for (int i = 0; i < f.arity(); ++i)
        if (!pl_fragment(i == 0 ? f.lhs() : f.rhs())) return false;
    return true;
}

namespace {

int count_truncations(const Formula& f) {
    int n = 0;
    switch (f.kind()) {
        case Kind::Impl:
        case Kind::Odot:
        case Kind::Oplus:
        case Kind::Meet:
        case Kind::Join:
            n = 1;
            break;
        default:
            break;
    }
    for (int i = 0; i < f.arity(); ++i)
        n += count_truncations(i == 0 ? f.lhs() : f.rhs());
    return n;
}

class Compiler {
  public:
    Compiler(const RegionSystem& sys, int nvars)
        : sys_(sys), nvars_(nvars) {}

    std::vector<Region> run(const Formula& f) {
        walk(f, [&](const AffineExpr& value) {
            Region r;
            r.branches = branches_;
            r.constraints = constraints_;
            r.objective = value;
            out_.push_back(std::move(r));
        });
        return std::move(out_);
    }

  private:
    using Cont = std::function<void(const AffineExpr&)>;

    bool feasible_with(const LinConstraint& extra) {
        lp::Problem p;
        p.nvars = nvars_;
        p.constraints = constraints_;
        p.constraints.push_back(extra);
        return lp::feasible(p);
    }

    void branch(BranchKind kind, LinConstraint c, const AffineExpr& value,
                const Cont& k) {
        if (!feasible_with(c)) return;
        branches_.push_back(kind);
        constraints_.push_back(std::move(c));
        k(value);
        constraints_.pop_back();
        branches_.pop_back();
    }

    void walk(const Formula& f, const Cont& k) {
        switch (f.kind()) {
            case Kind::Var:
                k(AffineExpr::variable(sys_.var_index(f.name())));
                return;
            case Kind::Zero:
                k(AffineExpr::from_constant(0));
                return;
            case Kind::One:
                k(AffineExpr::from_constant(1));
                return;
            case Kind::FixK:
                k(AffineExpr::from_constant(Rat(1, 2)));
                return;
            case Kind::TruthConst:
                k(AffineExpr::from_constant(f.constant().value()));
                return;
            case Kind::Neg:
                walk(f.lhs(), [&](const AffineExpr& a) {
                    k(AffineExpr::from_constant(1) - a);
                });
                return;
            case Kind::Div:
                walk(f.lhs(), [&](const AffineExpr& a) {
                    k(a * Rat(1, f.div_index()));
                });
                return;
            case Kind::Impl:
                walk(f.lhs(), [&](const AffineExpr& a) {
                    walk(f.rhs(), [&](const AffineExpr& b) {
                        // min(1, 1 - a + b)
                        AffineExpr lin =
                            AffineExpr::from_constant(1) - a + b;
                        branch(BranchKind::SatHigh,
                               LinConstraint::le0(a - b),  // a <= b? no: 1-a+b >= 1
                               AffineExpr::from_constant(1), k);
                        branch(BranchKind::Linear, LinConstraint::le0(b - a),
                               lin, k);
                    });
                });
                return;
            case Kind::Odot:
                walk(f.lhs(), [&](const AffineExpr& a) {
                    walk(f.rhs(), [&](const AffineExpr& b) {
                        // max(0, a + b - 1)
                        AffineExpr lin = a + b - AffineExpr::from_constant(1);
                        branch(BranchKind::SatLow, LinConstraint::le0(lin),
                               AffineExpr::from_constant(0), k);
                        AffineExpr neg = AffineExpr::from_constant(0) - lin;
                        branch(BranchKind::Linear, LinConstraint::le0(neg),
                               lin, k);
                    });
                });
                return;
            case Kind::Oplus:
                walk(f.lhs(), [&](const AffineExpr& a) {
                    walk(f.rhs(), [&](const AffineExpr& b) {
                        // min(1, a + b)
                        AffineExpr sum = a + b;
                        AffineExpr high =
                            AffineExpr::from_constant(1) - sum;  // <= 0
                        branch(BranchKind::SatHigh, LinConstraint::le0(high),
                               AffineExpr::from_constant(1), k);
                        AffineExpr low = sum - AffineExpr::from_constant(1);
                        branch(BranchKind::Linear, LinConstraint::le0(low),
                               sum, k);
                    });
                });
                return;
            case Kind::Meet:
                walk(f.lhs(), [&](const AffineExpr& a) {
                    walk(f.rhs(), [&](const AffineExpr& b) {
                        branch(BranchKind::LinearLeft,
                               LinConstraint::le0(a - b), a, k);
                        branch(BranchKind::LinearRight,
                               LinConstraint::le0(b - a), b, k);
                    });
                });
                return;
            case Kind::Join:
                walk(f.lhs(), [&](const AffineExpr& a) {
                    walk(f.rhs(), [&](const AffineExpr& b) {
                        branch(BranchKind::LinearLeft,
                               LinConstraint::le0(b - a), a, k);
                        branch(BranchKind::LinearRight,
                               LinConstraint::le0(a - b), b, k);
                    });
                });
                return;
            case Kind::Bullet:
                throw PreconditionError(
                    "product nodes are outside the piecewise-linear fragment");
            case Kind::MetaVar:
                throw PreconditionError("cannot compile a pattern");
        }
        throw Error("compile: unknown node");
    }

    const RegionSystem& sys_;
    int nvars_;
    std::vector<BranchKind> branches_;
    std::vector<LinConstraint> constraints_;
    std::vector<Region> out_;
};

/// max of e over the region; assumes the region is feasible.
Rat region_max(const Region& r, int nvars, const AffineExpr& e) {
    lp::Problem p;
    p.nvars = nvars;
    p.constraints = r.constraints;
    p.objective = AffineExpr::from_constant(0) - e;
    lp::Result res = lp::minimize(p);
    if (res.status != lp::Status::Optimal)
        throw Error("region_max: infeasible region");
    return -res.value;
}

Rat region_min(const Region& r, int nvars, const AffineExpr& e) {
    lp::Problem p;
    p.nvars = nvars;
    p.constraints = r.constraints;
    p.objective = e;
    lp::Result res = lp::minimize(p);
    if (res.status != lp::Status::Optimal)
        throw Error("region_min: infeasible region");
    return res.value;
}

/// r contained in s, with equal objectives on r.
bool subsumed_by(const Region& r, const Region& s, int nvars) {
    for (const LinConstraint& c : s.constraints) {
        if (region_max(r, nvars, c.expr) > 0) return false;
        if (c.kind == LinConstraint::Kind::Eq0 &&
            region_min(r, nvars, c.expr) < 0)
            return false;
    }
    AffineExpr diff = r.objective - s.objective;
    return region_max(r, nvars, diff) == 0 && region_min(r, nvars, diff) == 0;
}

}  // namespace

RegionSystem compile_pl(const Formula& f, const CompileOptions& opts) {
    if (!pl_fragment(f))
        throw PreconditionError(
            "product nodes are outside the piecewise-linear fragment");
    RegionSystem sys;
    if (opts.var_universe.empty()) {
        for (const auto& v : variables(f)) sys.vars.push_back(v);
    } else {
        sys.vars = opts.var_universe;
        std::sort(sys.vars.begin(), sys.vars.end());
        sys.vars.erase(std::unique(sys.vars.begin(), sys.vars.end()),
                       sys.vars.end());
        for (const auto& v : variables(f))
            if (!std::binary_search(sys.vars.begin(), sys.vars.end(), v))
                throw Error("variable universe does not cover: " + v);
    }
    sys.truncation_nodes = count_truncations(f);
    if (sys.truncation_nodes > opts.truncation_cap)
        throw SizeBoundError(
            "formula has " + std::to_string(sys.truncation_nodes) +
            " truncation nodes; cap is " + std::to_string(opts.truncation_cap));

    Compiler compiler(sys, static_cast<int>(sys.vars.size()));
    sys.regions = compiler.run(f);

    if (opts.subsume &&
        sys.regions.size() <= static_cast<std::size_t>(opts.subsume_limit)) {
        int nvars = static_cast<int>(sys.vars.size());
        std::vector<bool> dropped(sys.regions.size(), false);
        for (std::size_t i = 0; i < sys.regions.size(); ++i) {
            if (dropped[i]) continue;
            for (std::size_t j = 0; j < sys.regions.size(); ++j) {
                if (i == j || dropped[j]) continue;
                if (subsumed_by(sys.regions[i], sys.regions[j], nvars)) {
                    dropped[i] = true;
                    break;
                }
            }
        }
        std::vector<Region> kept;
        for (std::size_t i = 0; i < sys.regions.size(); ++i)
            if (!dropped[i]) kept.push_back(std::move(sys.regions[i]));
        sys.regions = std::move(kept);
    }
    return sys;
}

}  // namespace mvpav
