#include "mvpav/degrees.hpp"

#include <algorithm>
#include <functional>

#include "mvpav/errors.hpp"

namespace mvpav {

namespace {

std::vector<std::string> combined_vars(const Formula& phi,
                                       const Theory& theory) {
    std::set<std::string> names = variables(phi);
    for (const Formula& g : theory.generators)
        for (const auto& n : variables(g)) names.insert(n);
    return {names.begin(), names.end()};
}

}  // namespace

DegreeBounds truth_degree_exact(const Formula& phi, const Theory& theory,
                                const DegreeOptions& opts) {
    require_profile(theory.profile, phi);
    std::vector<std::string> vars = combined_vars(phi, theory);
    int nvars = static_cast<int>(vars.size());

    CompileOptions copts = opts.compile;
    copts.var_universe = vars;
    copts.subsume = false;  // min over extra covered regions is unchanged
    RegionSystem sys_phi = compile_pl(phi, copts);
    std::vector<RegionSystem> sys_theory;
    for (const Formula& g : theory.generators)
        sys_theory.push_back(compile_pl(g, copts));

    std::optional<Rat> best;
    std::vector<Rat> best_point;

    std::vector<LinConstraint> stack;
    // DFS over the product of region choices, pruning infeasible prefixes.
    std::function<void(std::size_t, const AffineExpr&)> descend =
        [&](std::size_t ti, const AffineExpr& objective) {
            {
                lp::Problem p;
                p.nvars = nvars;
                p.constraints = stack;
                if (!lp::feasible(p)) return;
            }
            if (ti == sys_theory.size()) {
                lp::Problem p;
                p.nvars = nvars;
                p.constraints = stack;
                p.objective = objective;
                lp::Result res = lp::minimize(p);
                if (res.status != lp::Status::Optimal) return;
                if (!best || res.value < *best) {
                    best = res.value;
                    best_point = res.point;
                }
                return;
            }
            for (const Region& r : sys_theory[ti].regions) {
                std::size_t mark = stack.size();
                stack.insert(stack.end(), r.constraints.begin(),
                             r.constraints.end());
                // force v(tau) = 1 on this region
                stack.push_back(LinConstraint::eq0(
                    r.objective - AffineExpr::from_constant(1)));
                descend(ti + 1, objective);
                stack.resize(mark);
            }
        };

    for (const Region& r : sys_phi.regions) {
        stack.assign(r.constraints.begin(), r.constraints.end());
        descend(0, r.objective);
    }

    DegreeBounds out;
    if (!best) {
        out.lo = out.hi = Rational01::one();
        out.exact = true;
        out.vacuous = true;
        return out;
    }
    Rational01 value{*best};
    out.lo = out.hi = value;
    out.exact = true;
    Valuation w;
    for (int i = 0; i < nvars; ++i)
        w.set(vars[static_cast<std::size_t>(i)],
              Rational01(best_point[static_cast<std::size_t>(i)]));
    out.witness = std::move(w);
    return out;
}

std::map<std::string, Rat> lipschitz_bound(const Formula& f) {
    std::map<std::string, Rat> out;
    switch (f.kind()) {
        case Kind::Var:
            out[f.name()] = 1;
            return out;
        case Kind::Zero:
        case Kind::One:
        case Kind::FixK:
        case Kind::TruthConst:
            return out;
        case Kind::Neg:
            return lipschitz_bound(f.lhs());
        case Kind::Div: {
            out = lipschitz_bound(f.lhs());
            for (auto& [name, c] : out) c /= f.div_index();
            return out;
        }
        case Kind::MetaVar:
            throw PreconditionError("cannot bound a pattern");
        default: {
            out = lipschitz_bound(f.lhs());
            for (const auto& [name, c] : lipschitz_bound(f.rhs()))
                out[name] += c;
            return out;
        }
    }
}

namespace {

Rat lipschitz_sum(const Formula& f) {
    Rat sum = 0;
    for (const auto& [name, c] : lipschitz_bound(f)) sum += c;
    return sum;
}

template <class Fn>
void for_each_grid_point(const std::vector<std::string>& vars, int denom,
                         const Fn& fn) {
    Valuation v;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == vars.size()) {
            fn(v);
            return;
        }
        for (int a = 0; a <= denom; ++a) {
            v.set(vars[i], Rational01(a, denom));
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace

DegreeBounds truth_degree_grid(const Formula& phi, const Theory& theory,
                               const Rat& eps, const Rat& delta,
                               const DegreeOptions&) {
    require_profile(theory.profile, phi);
    if (eps <= 0 || delta <= 0)
        throw PreconditionError("grid solver needs eps > 0 and delta > 0");
    std::vector<std::string> vars = combined_vars(phi, theory);

    // pitch h with L_phi*h/2 <= eps and L_tau*h/2 <= delta for every tau
    Rat h_bound = 1;
    Rat lphi = lipschitz_sum(phi);
    if (lphi > 0) {
        Rat cand = 2 * eps / lphi;
        if (cand < h_bound) h_bound = cand;
    }
    for (const Formula& g : theory.generators) {
        Rat lg = lipschitz_sum(g);
        if (lg > 0) {
            Rat cand = 2 * delta / lg;
            if (cand < h_bound) h_bound = cand;
        }
    }
    // denominator m = ceil(1/h)
    Rat inv = 1 / h_bound;
    mpz_class m_z = inv.get_num() / inv.get_den();
    if (m_z * inv.get_den() != inv.get_num()) m_z += 1;
    if (m_z < 1) m_z = 1;
    if (m_z > 100000)
        throw SizeBoundError("grid pitch too fine; raise eps/delta");
    int m = static_cast<int>(m_z.get_si());
    Rat h(1, m);
    Rat slack = lphi * h / 2;

    std::optional<Rat> relaxed_min;
    std::optional<Rat> exact_min;
    std::optional<Valuation> exact_witness;
    Rat threshold = 1 - delta;

    for_each_grid_point(vars, m, [&](const Valuation& v) {
        bool relaxed_ok = true;
        bool exact_ok = true;
        for (const Formula& g : theory.generators) {
            Rational01 gv = eval(g, v, theory.profile);
            if (gv.value() < threshold) {
                relaxed_ok = false;
                exact_ok = false;
                break;
            }
            if (!gv.is_one()) exact_ok = false;
        }
        if (!relaxed_ok) return;
        Rat value = eval(phi, v, theory.profile).value();
        if (!relaxed_min || value < *relaxed_min) relaxed_min = value;
        if (exact_ok && (!exact_min || value < *exact_min)) {
            exact_min = value;
            exact_witness = v;
        }
    });

    DegreeBounds out;
    out.exact = false;
    out.relaxed_lo = true;
    if (!relaxed_min) {
        // No delta-relaxed grid point: by the Lipschitz bound no exactly
        // feasible valuation exists at all.
        out.lo = out.hi = Rational01::one();
        out.vacuous = true;
        return out;
    }
    Rat lo = *relaxed_min - slack;
    if (lo < 0) lo = 0;
    if (lo > 1) lo = 1;
    out.lo = Rational01(lo);
    out.hi = exact_min ? Rational01(*exact_min) : Rational01::one();
    if (out.lo > out.hi) out.lo = out.hi;  // certificates never cross
    out.witness = exact_witness;
    return out;
}

std::optional<Rational01> truth_degree_chain_brute(const Formula& phi,
                                                   const Theory& theory,
                                                   int denominator) {
    std::vector<std::string> vars = combined_vars(phi, theory);
    std::optional<Rational01> best;
    for_each_grid_point(vars, denominator, [&](const Valuation& v) {
        for (const Formula& g : theory.generators)
            if (!eval(g, v, theory.profile).is_one()) return;
        Rational01 value = eval(phi, v, theory.profile);
        if (!best || value < *best) best = value;
    });
    return best;
}

}  // namespace mvpav
