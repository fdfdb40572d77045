#include "mvpav/replay.hpp"

#include "mvpav/errors.hpp"
#include "mvpav/lemma.hpp"

namespace mvpav {

namespace {

/// Append-only proof under construction; returns 1-based step indices.
class Builder {
  public:
    explicit Builder(Theory theory) { proof_.theory = std::move(theory); }

    int add(Formula f, Justification j) {
        proof_.steps.push_back({std::move(f), std::move(j)});
        return static_cast<int>(proof_.steps.size());
    }

    int axiom(const std::string& scheme, SchemeMatch m) {
        const AxiomScheme* s = find_scheme(scheme);
        if (!s) throw Error("unknown scheme: " + scheme);
        Formula f = s->instantiate(m);
        return add(std::move(f), Justification::axiom(scheme, std::move(m)));
    }

    int lemma(const std::string& name, const LemmaRegistry& reg,
              SchemeMatch m) {
        const Lemma* l = reg.find(name);
        if (!l) throw Error("unknown lemma: " + name);
        Formula f = reg.instantiate(*l, m);
        return add(std::move(f), Justification::lemma(name, std::move(m)));
    }

    int mp(int minor, int major) {
        const Formula& mj = proof_.steps[static_cast<std::size_t>(major - 1)].formula;
        Formula cmj = to_core(mj);
        if (cmj.kind() != Kind::Impl) throw Error("mp major is not ->");
        // write the conclusion in the major's (raw) consequent form if
        // available, else the core form
        Formula conclusion =
            mj.kind() == Kind::Impl ? mj.rhs() : cmj.rhs();
        return add(std::move(conclusion), Justification::mp(minor, major));
    }

    /// From steps proving U->V and V->W, derives U->W (L2 + two mp).
    int compose(int uv, int vw) {
        const Formula& fuv =
            proof_.steps[static_cast<std::size_t>(uv - 1)].formula;
        const Formula& fvw =
            proof_.steps[static_cast<std::size_t>(vw - 1)].formula;
        if (fuv.kind() != Kind::Impl || fvw.kind() != Kind::Impl)
            throw Error("compose needs implications");
        SchemeMatch m;
        m.vars["a"] = fuv.lhs();
        m.vars["b"] = fuv.rhs();
        m.vars["c"] = fvw.rhs();
        int l2 = axiom("L2", std::move(m));
        int step = mp(uv, l2);
        return mp(vw, step);
    }

    Proof take() { return std::move(proof_); }

  private:
    Proof proof_;
};

SchemeMatch bind(std::initializer_list<std::pair<const char*, Formula>> vs) {
    SchemeMatch m;
    for (const auto& [name, f] : vs) m.vars[name] = f;
    return m;
}

}  // namespace

Proof replay_prop33(const Formula& alpha, const Formula& beta,
                    const Formula& gamma) {
    LogicProfile profile;
    profile.product = true;
    // permit whatever the instantiating formulas carry
    for (const Formula* f : {&alpha, &beta, &gamma}) {
        std::string offender;
        if (!profile_permits(profile, *f, &offender)) {
            LogicProfile all = LogicProfile::all();
            require_profile(all, *f);
            profile = all;
            break;
        }
    }
    Builder b(Theory{profile, {}});
    const LemmaRegistry& reg = LemmaRegistry::builtin();

    Formula Y = Formula::odot(alpha, Formula::neg(beta));     // a & !b
    Formula M = Formula::bullet(gamma, Y);                    // c * (a & !b)
    Formula G1 = Formula::bullet(gamma, alpha);               // c * a
    Formula G2 = Formula::bullet(gamma, beta);                // c * b
    Formula X = Formula::odot(G1, Formula::neg(G2));          // (c*a) & !(c*b)
    Formula AB = Formula::impl(alpha, beta);

    // (1) (c * (a & !b)) -> (a & !b)                         PL3
    int s1 = b.axiom("PL3", bind({{"a", gamma}, {"b", Y}}));
    // (2) ((c*a) & !(c*b)) -> (c * (a & !b))                 PL5 (backward)
    int s2 = b.axiom("PL5_bw", bind({{"a", gamma}, {"b", alpha}, {"c", beta}}));
    // (3) ((c*a) & !(c*b)) -> (a & !b)                       from (1),(2), L2
    int s3 = b.compose(s2, s1);
    // (4/5) contraposition: !(a & !b) -> !((c*a) & !(c*b))   L2 with c := 0
    int s4 = b.axiom("L2", bind({{"a", X}, {"b", Y}, {"c", Formula::zero()}}));
    int s5 = b.add(Formula::impl(Formula::neg(Y), Formula::neg(X)),
                   Justification::mp(s3, s4));
    // (6) (a -> b) -> !(a & !b)                              external lemma
    int s6 = b.lemma("cdm_311a", reg, bind({{"a", alpha}, {"b", beta}}));
    // (7) (a -> b) -> !((c*a) & !(c*b))                      from (6),(5), L2
    int s7 = b.compose(s6, s5);
    // (8) !((c*a) & !(c*b)) -> ((c*a) -> (c*b))              external lemma
    int s8 = b.lemma("cdm_311b", reg, bind({{"a", G1}, {"b", G2}}));
    // (9) (a -> b) -> ((c*a) -> (c*b))                       from (7),(8), L2
    b.compose(s7, s8);

    return b.take();
}

}  // namespace mvpav
