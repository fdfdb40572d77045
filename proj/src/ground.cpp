#include "mvpav/ground.hpp"

#include <map>

#include "mvpav/errors.hpp"
#include "mvpav/eval.hpp"
#include "mvpav/lemma.hpp"

namespace mvpav {

namespace {

class GroundBuilder {
  public:
    GroundBuilder(LogicProfile profile)
        : reg_(LemmaRegistry::builtin()) {
        proof_.theory.profile = profile;
        profile_ = profile;
    }

    struct UpDown {
        int up;    // step index proving  psi -> [val(psi)]
        int down;  // step index proving  [val(psi)] -> psi
    };

    int add(Formula f, Justification j) {
        proof_.steps.push_back({std::move(f), std::move(j)});
        return static_cast<int>(proof_.steps.size());
    }

    int axiom(const std::string& scheme, SchemeMatch m) {
        const AxiomScheme* s = find_scheme(scheme);
        if (!s) throw Error("unknown scheme: " + scheme);
        Formula f = s->instantiate(m);
        return memo_step(std::move(f),
                         Justification::axiom(scheme, std::move(m)));
    }

    int lemma(const std::string& name, SchemeMatch m) {
        const Lemma* l = reg_.find(name);
        if (!l) throw Error("unknown lemma: " + name);
        Formula f = reg_.instantiate(*l, m);
        return memo_step(std::move(f),
                         Justification::lemma(name, std::move(m)));
    }

    int mp(int minor, int major) {
        const Formula& mj =
            proof_.steps[static_cast<std::size_t>(major - 1)].formula;
        if (mj.kind() != Kind::Impl) throw Error("mp major is not ->");
        return add(mj.rhs(), Justification::mp(minor, major));
    }

    int compose(int uv, int vw) {
        const Formula& fuv =
            proof_.steps[static_cast<std::size_t>(uv - 1)].formula;
        const Formula& fvw =
            proof_.steps[static_cast<std::size_t>(vw - 1)].formula;
        SchemeMatch m;
        m.vars["a"] = fuv.lhs();
        m.vars["b"] = fuv.rhs();
        m.vars["c"] = fvw.rhs();
        int l2 = axiom("L2", std::move(m));
        return mp(vw, mp(uv, l2));
    }

    /// Both directions between psi (core-normalized ground formula) and the
    /// truth constant of its value.
    UpDown fold(const Formula& psi) {
        auto hit = memo_.find(psi);
        if (hit != memo_.end()) return hit->second;
        UpDown result{};
        Rational01 value = eval(psi, Valuation{}, LogicProfile::all());
        Formula vbar = Formula::truth(value);
        switch (psi.kind()) {
            case Kind::Zero:
                result.up = axiom("BK1_bw", {});
                result.down = axiom("BK1_fw", {});
                break;
            case Kind::TruthConst: {
                SchemeMatch m;
                m.vars["a"] = psi;
                int id = lemma("mv_id", std::move(m));
                result.up = result.down = id;
                break;
            }
            case Kind::FixK:
                result.up = axiom("BK3_FIX_fw", {});
                result.down = axiom("BK3_FIX_bw", {});
                break;
            case Kind::Impl: {
                UpDown a = fold(psi.lhs());
                UpDown bgot = fold(psi.rhs());
                Rational01 av =
                    eval(psi.lhs(), Valuation{}, LogicProfile::all());
                Rational01 bv =
                    eval(psi.rhs(), Valuation{}, LogicProfile::all());
                Formula abar = Formula::truth(av);
                Formula bbar = Formula::truth(bv);
                // up: (A -> B) -> [a->b]
                {
                    // ([a] -> A) gives (A -> B) -> ([a] -> B) by suffixing
                    SchemeMatch m;
                    m.vars["a"] = abar;
                    m.vars["b"] = psi.lhs();
                    m.vars["c"] = psi.rhs();
                    int l2 = axiom("L2", std::move(m));
                    int e1 = mp(a.down, l2);
                    // (B -> [b]) gives ([a] -> B) -> ([a] -> [b]) by prefixing
                    SchemeMatch p;
                    p.vars["a"] = abar;
                    p.vars["b"] = psi.rhs();
                    p.vars["c"] = bbar;
                    int pre = lemma("mv_prefix", std::move(p));
                    int e2 = mp(bgot.up, pre);
                    int whole = compose(e1, e2);  // (A->B) -> ([a]->[b])
                    SchemeMatch bk;
                    bk.rats["r"] = av;
                    bk.rats["s"] = bv;
                    int bk2 = axiom("BK2_fw", std::move(bk));
                    result.up = compose(whole, bk2);
                }
                // down: [a->b] -> (A -> B)
                {
                    SchemeMatch m;
                    m.vars["a"] = psi.lhs();
                    m.vars["b"] = abar;
                    m.vars["c"] = bbar;
                    int l2 = axiom("L2", std::move(m));
                    int e1 = mp(a.up, l2);  // ([a]->[b]) -> (A->[b])
                    SchemeMatch p;
                    p.vars["a"] = psi.lhs();
                    p.vars["b"] = bbar;
                    p.vars["c"] = psi.rhs();
                    int pre = lemma("mv_prefix", std::move(p));
                    int e2 = mp(bgot.down, pre);  // (A->[b]) -> (A->B)
                    int whole = compose(e1, e2);  // ([a]->[b]) -> (A->B)
                    SchemeMatch bk;
                    bk.rats["r"] = av;
                    bk.rats["s"] = bv;
                    int bk2 = axiom("BK2_bw", std::move(bk));
                    result.down = compose(bk2, whole);
                }
                break;
            }
            case Kind::Div: {
                UpDown a = fold(psi.lhs());
                Rational01 av =
                    eval(psi.lhs(), Valuation{}, LogicProfile::all());
                Formula abar = Formula::truth(av);
                int n = psi.div_index();
                // up: dn(A) -> [a/n]
                {
                    SchemeMatch m;
                    m.k = n;
                    m.vars["a"] = psi.lhs();
                    m.vars["b"] = abar;
                    int mono = lemma("dmono", std::move(m));
                    int e1 = mp(a.up, mono);  // dn(A) -> dn([a])
                    SchemeMatch bk;
                    bk.k = n;
                    bk.rats["r"] = av;
                    int bk3 = axiom("BK3_DIV_fw", std::move(bk));
                    result.up = compose(e1, bk3);
                }
                // down: [a/n] -> dn(A)
                {
                    SchemeMatch m;
                    m.k = n;
                    m.vars["a"] = abar;
                    m.vars["b"] = psi.lhs();
                    int mono = lemma("dmono", std::move(m));
                    int e1 = mp(a.down, mono);  // dn([a]) -> dn(A)
                    SchemeMatch bk;
                    bk.k = n;
                    bk.rats["r"] = av;
                    int bk3 = axiom("BK3_DIV_bw", std::move(bk));
                    result.down = compose(bk3, e1);
                }
                break;
            }
            case Kind::Bullet: {
                UpDown a = fold(psi.lhs());
                UpDown bgot = fold(psi.rhs());
                Rational01 av =
                    eval(psi.lhs(), Valuation{}, LogicProfile::all());
                Rational01 bv =
                    eval(psi.rhs(), Valuation{}, LogicProfile::all());
                Formula abar = Formula::truth(av);
                Formula bbar = Formula::truth(bv);
                const Formula& A = psi.lhs();
                const Formula& B = psi.rhs();
                // up: (A*B) -> (B*A) -> (B*[a]) -> ([a]*B) -> ([a]*[b]) -> [ab]
                {
                    SchemeMatch c1;
                    c1.vars["a"] = A;
                    c1.vars["b"] = B;
                    int comm1 = axiom("PL1", std::move(c1));  // (A*B)->(B*A)
                    SchemeMatch m1;
                    m1.vars["a"] = A;
                    m1.vars["b"] = abar;
                    m1.vars["c"] = B;
                    int mono1 = lemma("pmono", std::move(m1));
                    int e1 = mp(a.up, mono1);  // (B*A)->(B*[a])
                    int ch = compose(comm1, e1);
                    SchemeMatch c2;
                    c2.vars["a"] = B;
                    c2.vars["b"] = abar;
                    int comm2 = axiom("PL1", std::move(c2));  // (B*[a])->([a]*B)
                    ch = compose(ch, comm2);
                    SchemeMatch m2;
                    m2.vars["a"] = B;
                    m2.vars["b"] = bbar;
                    m2.vars["c"] = abar;
                    int mono2 = lemma("pmono", std::move(m2));
                    int e2 = mp(bgot.up, mono2);  // ([a]*B)->([a]*[b])
                    ch = compose(ch, e2);
                    SchemeMatch bk;
                    bk.rats["r"] = av;
                    bk.rats["s"] = bv;
                    int bk3 = axiom("BK3_PROD_fw", std::move(bk));
                    result.up = compose(ch, bk3);
                }
                // down: [ab] -> ([a]*[b]) -> ([a]*B) -> (B*[a]) -> (B*A) -> (A*B)
                {
                    SchemeMatch bk;
                    bk.rats["r"] = av;
                    bk.rats["s"] = bv;
                    int bk3 = axiom("BK3_PROD_bw", std::move(bk));
                    SchemeMatch m1;
                    m1.vars["a"] = bbar;
                    m1.vars["b"] = B;
                    m1.vars["c"] = abar;
                    int mono1 = lemma("pmono", std::move(m1));
                    int e1 = mp(bgot.down, mono1);  // ([a]*[b])->([a]*B)
                    int ch = compose(bk3, e1);
                    SchemeMatch c1;
                    c1.vars["a"] = abar;
                    c1.vars["b"] = B;
                    int comm1 = axiom("PL1", std::move(c1));  // ([a]*B)->(B*[a])
                    ch = compose(ch, comm1);
                    SchemeMatch m2;
                    m2.vars["a"] = abar;
                    m2.vars["b"] = A;
                    m2.vars["c"] = B;
                    int mono2 = lemma("pmono", std::move(m2));
                    int e2 = mp(a.down, mono2);  // (B*[a])->(B*A)
                    ch = compose(ch, e2);
                    SchemeMatch c2;
                    c2.vars["a"] = B;
                    c2.vars["b"] = A;
                    int comm2 = axiom("PL1", std::move(c2));  // (B*A)->(A*B)
                    result.down = compose(ch, comm2);
                }
                break;
            }
            default:
                throw Error("fold: formula is not in core ground form");
        }
        memo_.emplace(psi, result);
        return result;
    }

    Proof take() { return std::move(proof_); }

  private:
    int memo_step(Formula f, Justification j) {
        auto it = step_memo_.find(f);
        if (it != step_memo_.end()) return it->second;
        int idx = add(f, std::move(j));
        step_memo_.emplace(std::move(f), idx);
        return idx;
    }

    Proof proof_;
    LogicProfile profile_;
    const LemmaRegistry& reg_;
    std::map<Formula, UpDown> memo_;
    std::map<Formula, int> step_memo_;
};

}  // namespace

Proof synthesize_ground_proof(const Formula& phi, const Rational01& r,
                              const LogicProfile& profile) {
    if (!profile.constants)
        throw PreconditionError(
            "ground synthesis needs the constants profile");
    require_profile(profile, phi);
    if (!variables(phi).empty())
        throw PreconditionError("formula is not variable-free");
    Rational01 value = eval(phi, Valuation{}, profile);
    if (value != r)
        throw PreconditionError("r must equal eval(phi) = " + value.str());

    GroundBuilder b(profile);
    Formula core = to_core(phi);
    GroundBuilder::UpDown ud = b.fold(core);
    Proof proof = b.take();
    // restate the final step over the original formula (core-equal)
    ProofStep& last = proof.steps[static_cast<std::size_t>(ud.down - 1)];
    if (ud.down == static_cast<int>(proof.steps.size()) &&
        last.formula.kind() == Kind::Impl)
        last.formula = Formula::impl(Formula::truth(r), phi);
    return proof;
}

}  // namespace mvpav
