#include "mvpav/pavelka.hpp"

#include <algorithm>

#include "mvpav/errors.hpp"
#include "mvpav/lemma.hpp"

namespace mvpav {

const Proof& ProofDegreeResult::best_proof() const {
    if (certificates.empty()) throw Error("no proof certificates");
    return certificates.back().second;
}

namespace {

/// [0] -> phi: BK1 bridges the constant to the connective 0, ex falso
/// (admitted lemma) lifts 0 to phi, one L2 composes them.
Proof zero_certificate(const Formula& phi, const Theory& theory) {
    Proof p;
    p.theory.profile = theory.profile;
    const LemmaRegistry& reg = LemmaRegistry::builtin();
    const Lemma* efq = reg.find("mv_efq");
    SchemeMatch em;
    em.vars["a"] = phi;
    Formula zero_to_phi = reg.instantiate(*efq, em);
    p.steps.push_back({Formula::impl(Formula::truth(Rational01::zero()),
                                     Formula::zero()),
                       Justification::axiom("BK1_fw", {})});
    p.steps.push_back({zero_to_phi, Justification::lemma("mv_efq", em)});
    SchemeMatch l2;
    l2.vars["a"] = Formula::truth(Rational01::zero());
    l2.vars["b"] = Formula::zero();
    l2.vars["c"] = phi;
    p.steps.push_back({find_scheme("L2")->instantiate(l2),
                       Justification::axiom("L2", l2)});
    p.steps.push_back({Formula::impl(zero_to_phi, Formula::impl(
                           Formula::truth(Rational01::zero()), phi)),
                       Justification::mp(1, 3)});
    p.steps.push_back({Formula::impl(Formula::truth(Rational01::zero()), phi),
                       Justification::mp(2, 4)});
    return p;
}

/// Extends a proof of phi into a proof of [1] -> phi via L1 and mp.
Proof lift_to_one(Proof p, const Formula& phi) {
    Formula one_bar = Formula::truth(Rational01::one());
    SchemeMatch m;
    m.vars["a"] = phi;
    m.vars["b"] = one_bar;
    int phi_idx = static_cast<int>(p.steps.size());
    p.steps.push_back({find_scheme("L1")->instantiate(m),
                       Justification::axiom("L1", m)});
    int l1_idx = static_cast<int>(p.steps.size());
    p.steps.push_back({Formula::impl(one_bar, phi),
                       Justification::mp(phi_idx, l1_idx)});
    return p;
}

}  // namespace

ProofDegreeResult proof_degree_lower(const Formula& phi, const Theory& theory,
                                     const SearchBudget& budget) {
    if (!theory.profile.constants)
        throw PreconditionError(
            "proof degrees need the constants profile");
    require_profile(theory.profile, phi);

    ProofDegreeResult out;
    // r = 0 always holds
    out.certificates.emplace_back(Rational01::zero(),
                                  zero_certificate(phi, theory));

    // generators of the shape [r] -> phi give one-step certificates
    Formula core_phi = to_core(phi);
    for (std::size_t g = 0; g < theory.generators.size(); ++g) {
        Formula cg = to_core(theory.generators[g]);
        if (cg.kind() == Kind::Impl && cg.lhs().kind() == Kind::TruthConst &&
            cg.rhs() == core_phi) {
            Proof p;
            p.theory = theory;
            p.steps.push_back(
                {theory.generators[g],
                 Justification::hypothesis(static_cast<int>(g) + 1)});
            out.certificates.emplace_back(cg.lhs().constant(), std::move(p));
        }
    }

    // ground formulas: synthesized proof at the exact value
    if (variables(phi).empty()) {
        Rational01 value = eval(phi, Valuation{}, theory.profile);
        if (!value.is_zero())
            out.certificates.emplace_back(
                value, synthesize_ground_proof(phi, value, theory.profile));
    }

    // a full proof of phi lifts to [1] -> phi
    SearchResult found = search_proof(phi, theory, budget);
    if (found.found())
        out.certificates.emplace_back(Rational01::one(),
                                      lift_to_one(std::move(*found.proof), phi));

    std::stable_sort(out.certificates.begin(), out.certificates.end(),
                     [](const auto& a, const auto& b) {
                         return a.first < b.first;
                     });
    out.bounds.lo = out.certificates.back().first;
    out.bounds.hi = Rational01::one();
    out.bounds.exact = false;
    return out;
}

GapReport pavelka_gap(const Formula& phi, const Theory& theory,
                      const GapOptions& opts) {
    GapReport report;
    report.proof_lower = proof_degree_lower(phi, theory, opts.budget);
    bool pl = pl_fragment(to_core(phi));
    for (const Formula& g : theory.generators)
        if (!pl_fragment(to_core(g))) pl = false;
    if (pl) {
        report.truth = truth_degree_exact(phi, theory);
        report.used_exact_engine = true;
    } else {
        report.truth =
            truth_degree_grid(phi, theory, opts.grid_eps, opts.grid_delta);
        report.used_exact_engine = false;
    }
    report.sound = report.proof_lower.bounds.lo <= report.truth.hi;
    report.equal = report.truth.exact &&
                   report.proof_lower.bounds.lo == report.truth.lo;
    return report;
}

CompactnessResult compactness_probe(const Formula& phi, const Theory& theory,
                                    const Rational01& r, int max_generators) {
    int n = static_cast<int>(theory.generators.size());
    if (n > max_generators)
        throw PreconditionError("theory too large for subset enumeration");
    DegreeBounds full = truth_degree_exact(phi, theory);
    if (r > full.hi)
        throw PreconditionError("r exceeds the truth degree over the theory");

    // subsets ordered by size, then lexicographically: the first success is
    // cardinality-minimal, hence inclusion-minimal
    std::vector<int> subset;
    std::function<bool(int, int, CompactnessResult&)> choose =
        [&](int start, int remaining, CompactnessResult& out) -> bool {
        if (remaining == 0) {
            Theory sub;
            sub.profile = theory.profile;
            for (int i : subset)
                sub.generators.push_back(
                    theory.generators[static_cast<std::size_t>(i)]);
            DegreeBounds d = truth_degree_exact(phi, sub);
            if (r <= d.lo) {
                out.subset = subset;
                out.subset_degree = d;
                return true;
            }
            return false;
        }
        for (int i = start; i <= n - remaining; ++i) {
            subset.push_back(i);
            if (choose(i + 1, remaining - 1, out)) return true;
            subset.pop_back();
        }
        return false;
    };

    CompactnessResult out;
    for (int size = 0; size <= n; ++size) {
        subset.clear();
        if (choose(0, size, out)) return out;
    }
    throw Error("compactness probe found no subset (r exceeds the degree?)");
}

}  // namespace mvpav
