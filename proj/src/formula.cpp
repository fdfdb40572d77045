#include "mvpav/formula.hpp"

#include <functional>

#include "mvpav/errors.hpp"

namespace mvpav {

struct Formula::Node {
    Kind kind = Kind::Zero;
    std::string name;
    Rational01 value;
    int index = 0;
    Formula lhs, rhs;
    std::size_t size = 1;
    std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::shared_ptr<const Formula::Node> make_node(Formula::Node n) {
    n.size = 1 + (n.lhs.valid() ? n.lhs.size() : 0) +
             (n.rhs.valid() ? n.rhs.size() : 0);
    std::size_t h = static_cast<std::size_t>(n.kind);
    h = mix(h, std::hash<std::string>{}(n.name));
    h = mix(h, static_cast<std::size_t>(n.index));
    if (n.kind == Kind::TruthConst) h = mix(h, std::hash<std::string>{}(n.value.str()));
    if (n.lhs.valid()) h = mix(h, n.lhs.hash());
    if (n.rhs.valid()) h = mix(h, n.rhs.hash());
    n.hash = h;
    return std::make_shared<const Formula::Node>(std::move(n));
}

}  // namespace

Formula Formula::var(std::string name) {
    Node n;
    n.kind = Kind::Var;
    n.name = std::move(name);
    return Formula(make_node(std::move(n)));
}

Formula Formula::metavar(std::string name) {
    Node n;
    n.kind = Kind::MetaVar;
    n.name = std::move(name);
    return Formula(make_node(std::move(n)));
}

Formula Formula::zero() {
    Node n;
    n.kind = Kind::Zero;
    return Formula(make_node(std::move(n)));
}

Formula Formula::one() {
    Node n;
    n.kind = Kind::One;
    return Formula(make_node(std::move(n)));
}

Formula Formula::impl(Formula lhs, Formula rhs) {
    Node n;
    n.kind = Kind::Impl;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    if (!n.lhs.valid() || !n.rhs.valid()) throw Error("invalid child formula");
    return Formula(make_node(std::move(n)));
}

Formula Formula::neg(Formula arg) {
    Node n;
    n.kind = Kind::Neg;
    n.lhs = std::move(arg);
    if (!n.lhs.valid()) throw Error("invalid child formula");
    return Formula(make_node(std::move(n)));
}

Formula Formula::odot(Formula lhs, Formula rhs) {
    Node n;
    n.kind = Kind::Odot;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    if (!n.lhs.valid() || !n.rhs.valid()) throw Error("invalid child formula");
    return Formula(make_node(std::move(n)));
}

Formula Formula::oplus(Formula lhs, Formula rhs) {
    Node n;
    n.kind = Kind::Oplus;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    if (!n.lhs.valid() || !n.rhs.valid()) throw Error("invalid child formula");
    return Formula(make_node(std::move(n)));
}

Formula Formula::meet(Formula lhs, Formula rhs) {
    Node n;
    n.kind = Kind::Meet;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    if (!n.lhs.valid() || !n.rhs.valid()) throw Error("invalid child formula");
    return Formula(make_node(std::move(n)));
}

Formula Formula::join(Formula lhs, Formula rhs) {
    Node n;
    n.kind = Kind::Join;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    if (!n.lhs.valid() || !n.rhs.valid()) throw Error("invalid child formula");
    return Formula(make_node(std::move(n)));
}

Formula Formula::bullet(Formula lhs, Formula rhs) {
    Node n;
    n.kind = Kind::Bullet;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    if (!n.lhs.valid() || !n.rhs.valid()) throw Error("invalid child formula");
    return Formula(make_node(std::move(n)));
}

Formula Formula::div(int k, Formula arg) {
    if (k < 1) throw Error("division index must be >= 1");
    Node n;
    n.kind = Kind::Div;
    n.index = k;
    n.lhs = std::move(arg);
    if (!n.lhs.valid()) throw Error("invalid child formula");
    return Formula(make_node(std::move(n)));
}

Formula Formula::fixk() {
    Node n;
    n.kind = Kind::FixK;
    return Formula(make_node(std::move(n)));
}

Formula Formula::truth(Rational01 value) {
    Node n;
    n.kind = Kind::TruthConst;
    n.value = std::move(value);
    return Formula(make_node(std::move(n)));
}

Kind Formula::kind() const {
    if (!node_) throw Error("empty formula handle");
    return node_->kind;
}

int Formula::arity() const {
    switch (kind()) {
        case Kind::Impl:
        case Kind::Odot:
        case Kind::Oplus:
        case Kind::Meet:
        case Kind::Join:
        case Kind::Bullet:
            return 2;
        case Kind::Neg:
        case Kind::Div:
            return 1;
        default:
            return 0;
    }
}

const std::string& Formula::name() const {
    if (kind() != Kind::Var && kind() != Kind::MetaVar)
        throw Error("formula node has no name");
    return node_->name;
}

const Rational01& Formula::constant() const {
    if (kind() != Kind::TruthConst) throw Error("formula node has no constant");
    return node_->value;
}

int Formula::div_index() const {
    if (kind() != Kind::Div) throw Error("formula node has no division index");
    return node_->index;
}

const Formula& Formula::lhs() const {
    if (arity() < 1) throw Error("formula node has no argument");
    return node_->lhs;
}

const Formula& Formula::rhs() const {
    if (arity() < 2) throw Error("formula node has no second argument");
    return node_->rhs;
}

std::size_t Formula::size() const { return node_ ? node_->size : 0; }
std::size_t Formula::hash() const { return node_ ? node_->hash : 0; }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.hash() != b.hash() || a.size() != b.size()) return false;
    return Formula::compare(a, b) == 0;
}

int Formula::compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    if (!a.node_) return -1;
    if (!b.node_) return 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    if (a.kind() != b.kind())
        return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    switch (a.kind()) {
        case Kind::Var:
        case Kind::MetaVar:
            return a.name().compare(b.name());
        case Kind::TruthConst: {
            if (a.constant() == b.constant()) return 0;
            return a.constant() < b.constant() ? -1 : 1;
        }
        case Kind::Div: {
            if (a.div_index() != b.div_index())
                return a.div_index() < b.div_index() ? -1 : 1;
            return compare(a.lhs(), b.lhs());
        }
        case Kind::Neg:
            return compare(a.lhs(), b.lhs());
        case Kind::Zero:
        case Kind::One:
        case Kind::FixK:
            return 0;
        default: {
            int c = compare(a.lhs(), b.lhs());
            if (c != 0) return c;
            return compare(a.rhs(), b.rhs());
        }
    }
}

bool profile_permits(const LogicProfile& profile, const Formula& f,
                     std::string* offender) {
    switch (f.kind()) {
        case Kind::Bullet:
            if (!profile.product) {
                if (offender) *offender = "*";
                return false;
            }
            break;
        case Kind::Div:
            if (!profile.division) {
                if (offender) *offender = "d" + std::to_string(f.div_index());
                return false;
            }
            break;
        case Kind::FixK:
            if (!profile.fixpoint) {
                if (offender) *offender = "K";
                return false;
            }
            break;
        case Kind::TruthConst:
            if (!profile.constants) {
                if (offender) *offender = "[" + f.constant().str() + "]";
                return false;
            }
            break;
        default:
            break;
    }
    for (int i = 0; i < f.arity(); ++i) {
        const Formula& child = i == 0 ? f.lhs() : f.rhs();
        if (!profile_permits(profile, child, offender)) return false;
    }
    return true;
}

void require_profile(const LogicProfile& profile, const Formula& f) {
    std::string offender;
    if (!profile_permits(profile, f, &offender))
        throw ProfileError("connective not in profile: " + offender);
}

namespace {
template <class Pred>
void collect_names(const Formula& f, std::set<std::string>& out, Pred pred) {
    if (pred(f.kind())) out.insert(f.name());
    for (int i = 0; i < f.arity(); ++i)
        collect_names(i == 0 ? f.lhs() : f.rhs(), out, pred);
}
}  // namespace

std::set<std::string> variables(const Formula& f) {
    std::set<std::string> out;
    collect_names(f, out, [](Kind k) { return k == Kind::Var; });
    return out;
}

std::set<std::string> metavariables(const Formula& f) {
    std::set<std::string> out;
    collect_names(f, out, [](Kind k) { return k == Kind::MetaVar; });
    return out;
}

namespace {
Formula rebuild1(const Formula& f, Formula a) {
    switch (f.kind()) {
        case Kind::Neg:
            return Formula::neg(std::move(a));
        case Kind::Div:
            return Formula::div(f.div_index(), std::move(a));
        default:
            throw Error("rebuild1: not unary");
    }
}

Formula rebuild2(const Formula& f, Formula a, Formula b) {
    switch (f.kind()) {
        case Kind::Impl:
            return Formula::impl(std::move(a), std::move(b));
        case Kind::Odot:
            return Formula::odot(std::move(a), std::move(b));
        case Kind::Oplus:
            return Formula::oplus(std::move(a), std::move(b));
        case Kind::Meet:
            return Formula::meet(std::move(a), std::move(b));
        case Kind::Join:
            return Formula::join(std::move(a), std::move(b));
        case Kind::Bullet:
            return Formula::bullet(std::move(a), std::move(b));
        default:
            throw Error("rebuild2: not binary");
    }
}

Formula substitute_impl(const Formula& f,
                        const std::map<std::string, Formula>& bindings,
                        Kind leaf) {
    if (f.kind() == leaf) {
        auto it = bindings.find(f.name());
        return it == bindings.end() ? f : it->second;
    }
    switch (f.arity()) {
        case 0:
            return f;
        case 1: {
            Formula a = substitute_impl(f.lhs(), bindings, leaf);
            if (a == f.lhs()) return f;
            return rebuild1(f, std::move(a));
        }
        default: {
            Formula a = substitute_impl(f.lhs(), bindings, leaf);
            Formula b = substitute_impl(f.rhs(), bindings, leaf);
            if (a == f.lhs() && b == f.rhs()) return f;
            return rebuild2(f, std::move(a), std::move(b));
        }
    }
}
}  // namespace

Formula substitute(const Formula& f,
                   const std::map<std::string, Formula>& bindings) {
    return substitute_impl(f, bindings, Kind::Var);
}

Formula substitute_meta(const Formula& f,
                        const std::map<std::string, Formula>& bindings) {
    return substitute_impl(f, bindings, Kind::MetaVar);
}

Formula to_core(const Formula& f) {
    switch (f.kind()) {
        case Kind::Var:
        case Kind::MetaVar:
        case Kind::Zero:
        case Kind::FixK:
        case Kind::TruthConst:
            return f;
        case Kind::One:
            return Formula::impl(Formula::zero(), Formula::zero());
        case Kind::Neg:
            return Formula::impl(to_core(f.lhs()), Formula::zero());
        case Kind::Impl:
            return Formula::impl(to_core(f.lhs()), to_core(f.rhs()));
        case Kind::Bullet:
            return Formula::bullet(to_core(f.lhs()), to_core(f.rhs()));
        case Kind::Div:
            return Formula::div(f.div_index(), to_core(f.lhs()));
        case Kind::Odot:
            // a & b = !(a -> !b)
            return to_core(Formula::neg(
                Formula::impl(f.lhs(), Formula::neg(f.rhs()))));
        case Kind::Oplus:
            // a + b = !(!a & !b)
            return to_core(Formula::neg(Formula::odot(
                Formula::neg(f.lhs()), Formula::neg(f.rhs()))));
        case Kind::Meet:
            // a /\ b = a & (a -> b)
            return to_core(
                Formula::odot(f.lhs(), Formula::impl(f.lhs(), f.rhs())));
        case Kind::Join:
            // a \/ b = (a -> b) -> b
            return to_core(
                Formula::impl(Formula::impl(f.lhs(), f.rhs()), f.rhs()));
    }
    throw Error("to_core: unknown node");
}

bool core_equal(const Formula& a, const Formula& b) {
    return to_core(a) == to_core(b);
}

Formula expand_multiple(int n, const Formula& f) {
    if (n < 0) throw Error("multiple index must be >= 0");
    if (n == 0) return Formula::zero();
    Formula acc = f;
    for (int i = 1; i < n; ++i) acc = Formula::impl(Formula::neg(f), acc);
    return acc;
}

namespace {
void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
    out.push_back(f);
    for (int i = 0; i < f.arity(); ++i)
        collect_subformulas(i == 0 ? f.lhs() : f.rhs(), out);
}
}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
    std::vector<Formula> all;
    collect_subformulas(f, all);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

}  // namespace mvpav
