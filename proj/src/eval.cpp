#include "mvpav/eval.hpp"

#include "mvpav/errors.hpp"

namespace mvpav {

const Rational01& Valuation::at(const std::string& name) const {
    auto it = assignment.find(name);
    if (it == assignment.end())
        throw EvalError("valuation does not cover variable: " + name);
    return it->second;
}

std::string Valuation::str() const {
    std::string out;
    for (const auto& [name, v] : assignment) {
        if (!out.empty()) out += ',';
        out += name;
        out += '=';
        out += v.str();
    }
    return out;
}

Rational01 eval(const Formula& f, const Valuation& v,
                const LogicProfile& profile) {
    switch (f.kind()) {
        case Kind::Var:
            return v.at(f.name());
        case Kind::MetaVar:
            throw EvalError("cannot evaluate a metavariable pattern");
        case Kind::Zero:
            return Rational01::zero();
        case Kind::One:
            return Rational01::one();
        case Kind::Impl:
            return mv_impl(eval(f.lhs(), v, profile), eval(f.rhs(), v, profile));
        case Kind::Neg:
            return mv_neg(eval(f.lhs(), v, profile));
        case Kind::Odot:
            return mv_odot(eval(f.lhs(), v, profile), eval(f.rhs(), v, profile));
        case Kind::Oplus:
            return mv_oplus(eval(f.lhs(), v, profile),
                            eval(f.rhs(), v, profile));
        case Kind::Meet:
            return mv_meet(eval(f.lhs(), v, profile), eval(f.rhs(), v, profile));
        case Kind::Join:
            return mv_join(eval(f.lhs(), v, profile), eval(f.rhs(), v, profile));
        case Kind::Bullet:
            if (!profile.product)
                throw ProfileError("connective not in profile: *");
            return mv_prod(eval(f.lhs(), v, profile), eval(f.rhs(), v, profile));
        case Kind::Div:
            if (!profile.division)
                throw ProfileError("connective not in profile: d" +
                                   std::to_string(f.div_index()));
            return mv_div(eval(f.lhs(), v, profile), f.div_index());
        case Kind::FixK:
            if (!profile.fixpoint)
                throw ProfileError("connective not in profile: K");
            return Rational01::half();
        case Kind::TruthConst:
            if (!profile.constants)
                throw ProfileError("connective not in profile: truth constant");
            return f.constant();
    }
    throw EvalError("eval: unknown node");
}

FiniteChain::FiniteChain(int d) : denom(d) {
    if (d < 1) throw Error("chain denominator must be >= 1");
}

Rational01 FiniteChain::element(int numerator) const {
    if (numerator < 0 || numerator > denom)
        throw Error("chain element out of range");
    return Rational01(numerator, denom);
}

int FiniteChain::impl(int a, int b) const {
    int v = denom - a + b;
    return v > denom ? denom : v;
}

int FiniteChain::odot(int a, int b) const {
    int v = a + b - denom;
    return v < 0 ? 0 : v;
}

int FiniteChain::oplus(int a, int b) const {
    int v = a + b;
    return v > denom ? denom : v;
}

int eval_chain(const Formula& f, const ChainValuation& v,
               const FiniteChain& chain) {
    switch (f.kind()) {
        case Kind::Var: {
            auto it = v.find(f.name());
            if (it == v.end())
                throw EvalError("chain valuation does not cover variable: " +
                                f.name());
            if (it->second < 0 || it->second > chain.denom)
                throw EvalError("chain valuation out of range for: " +
                                f.name());
            return it->second;
        }
        case Kind::Zero:
            return 0;
        case Kind::One:
            return chain.denom;
        case Kind::Impl:
            return chain.impl(eval_chain(f.lhs(), v, chain),
                              eval_chain(f.rhs(), v, chain));
        case Kind::Neg:
            return chain.neg(eval_chain(f.lhs(), v, chain));
        case Kind::Odot:
            return chain.odot(eval_chain(f.lhs(), v, chain),
                              eval_chain(f.rhs(), v, chain));
        case Kind::Oplus:
            return chain.oplus(eval_chain(f.lhs(), v, chain),
                               eval_chain(f.rhs(), v, chain));
        case Kind::Meet:
            return chain.meet(eval_chain(f.lhs(), v, chain),
                              eval_chain(f.rhs(), v, chain));
        case Kind::Join:
            return chain.join(eval_chain(f.lhs(), v, chain),
                              eval_chain(f.rhs(), v, chain));
        default:
            throw ProfileError(
                "finite chains support the base signature only");
    }
}

}  // namespace mvpav
