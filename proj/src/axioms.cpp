#include "mvpav/axioms.hpp"

#include <sstream>

#include "mvpav/errors.hpp"
#include "mvpav/parse.hpp"

namespace mvpav {

namespace {
std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}
}  // namespace

std::string SchemeMatch::str() const {
    std::string out = "{";
    bool first = true;
    auto sep = [&] {
        if (!first) out += "; ";
        first = false;
    };
    for (const auto& [name, f] : vars) {
        sep();
        out += name + "=" + print(f);
    }
    for (const auto& [name, r] : rats) {
        sep();
        out += name + "=" + r.str();
    }
    if (k != 0) {
        sep();
        out += "k=" + std::to_string(k);
    }
    out += "}";
    return out;
}

SchemeMatch SchemeMatch::parse(const std::string& text,
                               const LogicProfile& profile) {
    std::string s = trim(text);
    if (s.empty() || s.front() != '{' || s.back() != '}')
        throw Error("bindings must be wrapped in {...}: " + text);
    s = s.substr(1, s.size() - 2);
    SchemeMatch m;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        item = trim(item);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error("binding must be name=value: " + item);
        std::string name = trim(item.substr(0, eq));
        std::string value = trim(item.substr(eq + 1));
        if (name == "k")
            m.k = std::stoi(value);
        else if (name == "r" || name == "s")
            m.rats[name] = Rational01::parse(value);
        else
            m.vars[name] = mvpav::parse(value, profile);
    }
    return m;
}

bool unify(const Formula& pat, const Formula& f,
           std::map<std::string, Formula>& bindings) {
    if (pat.kind() == Kind::MetaVar) {
        auto [it, fresh] = bindings.emplace(pat.name(), f);
        return fresh ? true : it->second == f;
    }
    if (pat.kind() != f.kind()) return false;
    switch (pat.kind()) {
        case Kind::Var:
            return pat.name() == f.name();
        case Kind::TruthConst:
            return pat.constant() == f.constant();
        case Kind::Div:
            if (pat.div_index() != f.div_index()) return false;
            return unify(pat.lhs(), f.lhs(), bindings);
        case Kind::Zero:
        case Kind::One:
        case Kind::FixK:
            return true;
        default:
            break;
    }
    for (int i = 0; i < pat.arity(); ++i) {
        const Formula& pc = i == 0 ? pat.lhs() : pat.rhs();
        const Formula& fc = i == 0 ? f.lhs() : f.rhs();
        if (!unify(pc, fc, bindings)) return false;
    }
    return true;
}

namespace {

const Formula A = Formula::metavar("a");
const Formula B = Formula::metavar("b");
const Formula C = Formula::metavar("c");

/// Scheme given by a fixed pattern over metavariables.
class PatternScheme : public AxiomScheme {
  public:
    PatternScheme(std::string name, Formula pattern, LogicProfile req = {})
        : AxiomScheme(std::move(name), req),
          pattern_(std::move(pattern)),
          core_pattern_(to_core(pattern_)) {}

    std::optional<SchemeMatch> match(const Formula& f) const override {
        SchemeMatch m;
        if (!unify(core_pattern_, to_core(f), m.vars)) return std::nullopt;
        for (const auto& name : metavariables(pattern_))
            if (!m.vars.count(name)) return std::nullopt;
        return m;
    }

    Formula instantiate(const SchemeMatch& m) const override {
        for (const auto& name : metavariables(pattern_))
            if (!m.vars.count(name))
                throw Error("missing binding for metavariable " + name +
                            " in scheme " + this->name());
        return substitute_meta(pattern_, m.vars);
    }

    const Formula& pattern() const { return pattern_; }

  private:
    Formula pattern_;
    Formula core_pattern_;
};

/// DL1 (both directions) and DL2: patterns indexed by the multiple k >= 1.
class KIndexedScheme : public AxiomScheme {
  public:
    enum class Which { Dl1Fw, Dl1Bw, Dl2 };

    KIndexedScheme(std::string name, Which which)
        : AxiomScheme(std::move(name), LogicProfile{false, true, false, false}),
          which_(which) {}

    Formula pattern_for(int k) const {
        switch (which_) {
            case Which::Dl1Fw:  // a -> k(dk a)
                return Formula::impl(A, expand_multiple(k, Formula::div(k, A)));
            case Which::Dl1Bw:
                return Formula::impl(expand_multiple(k, Formula::div(k, A)), A);
            case Which::Dl2:  // (a -> k b) -> (dk a -> b)
                return Formula::impl(
                    Formula::impl(A, expand_multiple(k, B)),
                    Formula::impl(Formula::div(k, A), B));
        }
        throw Error("unreachable");
    }

    std::optional<SchemeMatch> match(const Formula& f) const override {
        Formula cf = to_core(f);
        int max_k = static_cast<int>(cf.size()) + 1;
        for (int k = 1; k <= max_k; ++k) {
            SchemeMatch m;
            m.k = k;
            if (unify(to_core(pattern_for(k)), cf, m.vars)) {
                bool complete = m.vars.count("a") &&
                                (which_ != Which::Dl2 || m.vars.count("b"));
                if (complete) return m;
            }
        }
        return std::nullopt;
    }

    Formula instantiate(const SchemeMatch& m) const override {
        if (m.k < 1)
            throw Error("scheme " + name() + " needs parameter k >= 1");
        return substitute_meta(pattern_for(m.k), m.vars);
    }

  private:
    Which which_;
};

/// BK2: book-keeping for implication on truth constants.
class Bk2Scheme : public AxiomScheme {
  public:
    Bk2Scheme(std::string name, bool forward)
        : AxiomScheme(std::move(name), LogicProfile{false, false, false, true}),
          forward_(forward) {}

    std::optional<SchemeMatch> match(const Formula& f) const override {
        Formula c = to_core(f);
        if (c.kind() != Kind::Impl) return std::nullopt;
        const Formula& pair_side = forward_ ? c.lhs() : c.rhs();
        const Formula& value_side = forward_ ? c.rhs() : c.lhs();
        if (pair_side.kind() != Kind::Impl ||
            pair_side.lhs().kind() != Kind::TruthConst ||
            pair_side.rhs().kind() != Kind::TruthConst ||
            value_side.kind() != Kind::TruthConst)
            return std::nullopt;
        Rational01 r = pair_side.lhs().constant();
        Rational01 s = pair_side.rhs().constant();
        if (value_side.constant() != mv_impl(r, s)) return std::nullopt;
        SchemeMatch m;
        m.rats["r"] = r;
        m.rats["s"] = s;
        return m;
    }

    Formula instantiate(const SchemeMatch& m) const override {
        auto r = m.rats.find("r");
        auto s = m.rats.find("s");
        if (r == m.rats.end() || s == m.rats.end())
            throw Error("scheme " + name() + " needs parameters r and s");
        Formula pair = Formula::impl(Formula::truth(r->second),
                                     Formula::truth(s->second));
        Formula value = Formula::truth(mv_impl(r->second, s->second));
        return forward_ ? Formula::impl(std::move(pair), std::move(value))
                        : Formula::impl(std::move(value), std::move(pair));
    }

  private:
    bool forward_;
};

/// BK3 for the product connective: ([r] * [s]) <=> [r s].
class Bk3ProdScheme : public AxiomScheme {
  public:
    Bk3ProdScheme(std::string name, bool forward)
        : AxiomScheme(std::move(name), LogicProfile{true, false, false, true}),
          forward_(forward) {}

    std::optional<SchemeMatch> match(const Formula& f) const override {
        Formula c = to_core(f);
        if (c.kind() != Kind::Impl) return std::nullopt;
        const Formula& app = forward_ ? c.lhs() : c.rhs();
        const Formula& value = forward_ ? c.rhs() : c.lhs();
        if (app.kind() != Kind::Bullet ||
            app.lhs().kind() != Kind::TruthConst ||
            app.rhs().kind() != Kind::TruthConst ||
            value.kind() != Kind::TruthConst)
            return std::nullopt;
        Rational01 r = app.lhs().constant();
        Rational01 s = app.rhs().constant();
        if (value.constant() != mv_prod(r, s)) return std::nullopt;
        SchemeMatch m;
        m.rats["r"] = r;
        m.rats["s"] = s;
        return m;
    }

    Formula instantiate(const SchemeMatch& m) const override {
        auto r = m.rats.find("r");
        auto s = m.rats.find("s");
        if (r == m.rats.end() || s == m.rats.end())
            throw Error("scheme " + name() + " needs parameters r and s");
        Formula app = Formula::bullet(Formula::truth(r->second),
                                      Formula::truth(s->second));
        Formula value = Formula::truth(mv_prod(r->second, s->second));
        return forward_ ? Formula::impl(std::move(app), std::move(value))
                        : Formula::impl(std::move(value), std::move(app));
    }

  private:
    bool forward_;
};

/// BK3 for division: dk([r]) <=> [r/k].
class Bk3DivScheme : public AxiomScheme {
  public:
    Bk3DivScheme(std::string name, bool forward)
        : AxiomScheme(std::move(name), LogicProfile{false, true, false, true}),
          forward_(forward) {}

    std::optional<SchemeMatch> match(const Formula& f) const override {
        Formula c = to_core(f);
        if (c.kind() != Kind::Impl) return std::nullopt;
        const Formula& app = forward_ ? c.lhs() : c.rhs();
        const Formula& value = forward_ ? c.rhs() : c.lhs();
        if (app.kind() != Kind::Div || app.lhs().kind() != Kind::TruthConst ||
            value.kind() != Kind::TruthConst)
            return std::nullopt;
        Rational01 r = app.lhs().constant();
        int k = app.div_index();
        if (value.constant() != mv_div(r, k)) return std::nullopt;
        SchemeMatch m;
        m.rats["r"] = r;
        m.k = k;
        return m;
    }

    Formula instantiate(const SchemeMatch& m) const override {
        auto r = m.rats.find("r");
        if (r == m.rats.end() || m.k < 1)
            throw Error("scheme " + name() + " needs parameters r and k");
        Formula app = Formula::div(m.k, Formula::truth(r->second));
        Formula value = Formula::truth(mv_div(r->second, m.k));
        return forward_ ? Formula::impl(std::move(app), std::move(value))
                        : Formula::impl(std::move(value), std::move(app));
    }

  private:
    bool forward_;
};

std::vector<std::unique_ptr<AxiomScheme>> build_registry() {
    std::vector<std::unique_ptr<AxiomScheme>> reg;
    auto pat = [&](std::string name, Formula pattern, LogicProfile req = {}) {
        reg.push_back(std::make_unique<PatternScheme>(std::move(name),
                                                      std::move(pattern), req));
    };
    auto I = [](Formula x, Formula y) {
        return Formula::impl(std::move(x), std::move(y));
    };

    // Base calculus.
    pat("L1", I(A, I(B, A)));
    pat("L2", I(I(A, B), I(I(B, C), I(A, C))));
    pat("L3", I(I(Formula::neg(A), Formula::neg(B)), I(B, A)));
    pat("L4", I(I(I(A, B), B), I(I(B, A), A)));

    // Product expansion.
    LogicProfile prod{true, false, false, false};
    pat("PL1", I(Formula::bullet(A, B), Formula::bullet(B, A)), prod);
    pat("PL2_fw", I(Formula::bullet(Formula::one(), A), A), prod);
    pat("PL2_bw", I(A, Formula::bullet(Formula::one(), A)), prod);
    pat("PL3", I(Formula::bullet(A, B), B), prod);
    pat("PL4_fw",
        I(Formula::bullet(Formula::bullet(A, B), C),
          Formula::bullet(A, Formula::bullet(B, C))),
        prod);
    pat("PL4_bw",
        I(Formula::bullet(A, Formula::bullet(B, C)),
          Formula::bullet(Formula::bullet(A, B), C)),
        prod);
    Formula pl5_lhs = Formula::bullet(A, Formula::odot(B, Formula::neg(C)));
    Formula pl5_rhs = Formula::odot(Formula::bullet(A, B),
                                    Formula::neg(Formula::bullet(A, C)));
    pat("PL5_fw", I(pl5_lhs, pl5_rhs), prod);
    pat("PL5_bw", I(pl5_rhs, pl5_lhs), prod);

    // Division expansion.
    reg.push_back(std::make_unique<KIndexedScheme>(
        "DL1_fw", KIndexedScheme::Which::Dl1Fw));
    reg.push_back(std::make_unique<KIndexedScheme>(
        "DL1_bw", KIndexedScheme::Which::Dl1Bw));
    reg.push_back(
        std::make_unique<KIndexedScheme>("DL2", KIndexedScheme::Which::Dl2));

    // Fixpoint expansion.
    LogicProfile fix{false, false, true, false};
    pat("FIX_fw", I(Formula::neg(Formula::fixk()), Formula::fixk()), fix);
    pat("FIX_bw", I(Formula::fixk(), Formula::neg(Formula::fixk())), fix);

    // Book-keeping axioms.
    LogicProfile cst{false, false, false, true};
    pat("BK1_fw", I(Formula::truth(Rational01::zero()), Formula::zero()), cst);
    pat("BK1_bw", I(Formula::zero(), Formula::truth(Rational01::zero())), cst);
    reg.push_back(std::make_unique<Bk2Scheme>("BK2_fw", true));
    reg.push_back(std::make_unique<Bk2Scheme>("BK2_bw", false));
    reg.push_back(std::make_unique<Bk3ProdScheme>("BK3_PROD_fw", true));
    reg.push_back(std::make_unique<Bk3ProdScheme>("BK3_PROD_bw", false));
    reg.push_back(std::make_unique<Bk3DivScheme>("BK3_DIV_fw", true));
    reg.push_back(std::make_unique<Bk3DivScheme>("BK3_DIV_bw", false));
    LogicProfile fixcst{false, false, true, true};
    pat("BK3_FIX_fw", I(Formula::fixk(), Formula::truth(Rational01::half())),
        fixcst);
    pat("BK3_FIX_bw", I(Formula::truth(Rational01::half()), Formula::fixk()),
        fixcst);
    return reg;
}

}  // namespace

const std::vector<const AxiomScheme*>& axiom_registry() {
    static const std::vector<std::unique_ptr<AxiomScheme>> owned =
        build_registry();
    static const std::vector<const AxiomScheme*> view = [] {
        std::vector<const AxiomScheme*> v;
        for (const auto& s : owned) v.push_back(s.get());
        return v;
    }();
    return view;
}

std::vector<const AxiomScheme*> schemes_for(const LogicProfile& profile) {
    std::vector<const AxiomScheme*> out;
    for (const AxiomScheme* s : axiom_registry())
        if (profile.includes(s->requires_features())) out.push_back(s);
    return out;
}

const AxiomScheme* find_scheme(const std::string& name) {
    for (const AxiomScheme* s : axiom_registry())
        if (s->name() == name) return s;
    return nullptr;
}

}  // namespace mvpav
