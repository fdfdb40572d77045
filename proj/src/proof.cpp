#include "mvpav/proof.hpp"

#include <fstream>
#include <sstream>

#include "mvpav/errors.hpp"
#include "mvpav/lemma.hpp"
#include "mvpav/parse.hpp"

namespace mvpav {

Justification Justification::axiom(std::string name, SchemeMatch m) {
    Justification j;
    j.tag = Tag::Axiom;
    j.name = std::move(name);
    j.binding = std::move(m);
    return j;
}

Justification Justification::hypothesis(int index) {
    Justification j;
    j.tag = Tag::Hypothesis;
    j.i = index;
    return j;
}

Justification Justification::mp(int minor, int major) {
    Justification j;
    j.tag = Tag::ModusPonens;
    j.i = minor;
    j.j = major;
    return j;
}

Justification Justification::lemma(std::string name, SchemeMatch m) {
    Justification j;
    j.tag = Tag::Lemma;
    j.name = std::move(name);
    j.binding = std::move(m);
    return j;
}

std::string Justification::str() const {
    switch (tag) {
        case Tag::Axiom:
            return "axiom:" + name + " " + binding.str();
        case Tag::Hypothesis:
            return "hyp:" + std::to_string(i);
        case Tag::ModusPonens:
            return "mp:" + std::to_string(i) + "," + std::to_string(j);
        case Tag::Lemma:
            return "lemma:" + name + " " + binding.str();
    }
    return "?";
}

const Formula& Proof::final_formula() const {
    if (steps.empty()) throw Error("empty proof");
    return steps.back().formula;
}

namespace {
std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}
}  // namespace

Proof Proof::load(std::istream& in) {
    Proof p;
    std::string line;
    int expected_index = 1;
    while (std::getline(in, line)) {
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.rfind("profile:", 0) == 0) {
            p.theory.profile = LogicProfile::parse(s.substr(8));
            continue;
        }
        if (s.rfind("assume:", 0) == 0) {
            p.theory.generators.push_back(
                parse(trim(s.substr(7)), p.theory.profile));
            continue;
        }
        auto p1 = s.find('|');
        auto p2 = s.find('|', p1 == std::string::npos ? p1 : p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos)
            throw Error("proof step needs '<index> | <formula> | <just>': " +
                        s);
        int index = std::stoi(trim(s.substr(0, p1)));
        if (index != expected_index)
            throw Error("proof steps must be numbered consecutively from 1");
        ++expected_index;
        ProofStep step;
        step.formula = parse(trim(s.substr(p1 + 1, p2 - p1 - 1)),
                             p.theory.profile);
        std::string just = trim(s.substr(p2 + 1));
        if (just.rfind("hyp:", 0) == 0) {
            step.just = Justification::hypothesis(std::stoi(just.substr(4)));
        } else if (just.rfind("mp:", 0) == 0) {
            std::string rest = just.substr(3);
            auto comma = rest.find(',');
            if (comma == std::string::npos)
                throw Error("mp justification needs two indices: " + just);
            step.just = Justification::mp(
                std::stoi(trim(rest.substr(0, comma))),
                std::stoi(trim(rest.substr(comma + 1))));
        } else if (just.rfind("axiom:", 0) == 0 ||
                   just.rfind("lemma:", 0) == 0) {
            bool is_axiom = just[0] == 'a';
            std::string rest = trim(just.substr(6));
            std::string name = rest;
            SchemeMatch m;
            auto brace = rest.find('{');
            if (brace != std::string::npos) {
                name = trim(rest.substr(0, brace));
                m = SchemeMatch::parse(rest.substr(brace), p.theory.profile);
            }
            step.just = is_axiom ? Justification::axiom(name, std::move(m))
                                 : Justification::lemma(name, std::move(m));
        } else {
            throw Error("unknown justification: " + just);
        }
        p.steps.push_back(std::move(step));
    }
    return p;
}

Proof Proof::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open proof file: " + path);
    return load(in);
}

void Proof::save(std::ostream& out) const {
    out << "profile: " << theory.profile.str() << "\n";
    for (const Formula& g : theory.generators)
        out << "assume: " << print(g) << "\n";
    for (std::size_t i = 0; i < steps.size(); ++i)
        out << (i + 1) << " | " << print(steps[i].formula) << " | "
            << steps[i].just.str() << "\n";
}

std::string Proof::str() const {
    std::ostringstream ss;
    save(ss);
    return ss.str();
}

std::string Verdict::lines() const {
    std::string out;
    for (const StepDiagnostic& d : steps) {
        if (d.ok) continue;
        out += "step " + std::to_string(d.index) + " fail " + d.message + "\n";
    }
    out += accepted ? "verdict accepted\n" : "verdict rejected\n";
    return out;
}

Verdict check_proof(const Proof& p, const LemmaRegistry& lemmas) {
    Verdict v;
    auto fail = [&](int index, std::string msg) {
        v.accepted = false;
        v.steps.push_back({index, false, std::move(msg)});
    };
    if (p.steps.empty()) {
        fail(0, "proof has no steps");
        return v;
    }
    std::vector<Formula> core_steps;
    core_steps.reserve(p.steps.size());
    for (const ProofStep& s : p.steps) core_steps.push_back(to_core(s.formula));

    for (std::size_t idx = 0; idx < p.steps.size(); ++idx) {
        const ProofStep& step = p.steps[idx];
        const int index = static_cast<int>(idx) + 1;
        std::string offender;
        if (!profile_permits(p.theory.profile, step.formula, &offender)) {
            fail(index, "formula uses a connective not in profile: " + offender);
            continue;
        }
        switch (step.just.tag) {
            case Justification::Tag::Hypothesis: {
                int g = step.just.i;
                if (g < 1 || g > static_cast<int>(p.theory.generators.size())) {
                    fail(index, "hypothesis cites no generator: " +
                                    std::to_string(g));
                    break;
                }
                if (to_core(p.theory.generators[g - 1]) != core_steps[idx]) {
                    fail(index, "hypothesis formula differs from generator " +
                                    std::to_string(g));
                    break;
                }
                v.steps.push_back({index, true, "hypothesis"});
                break;
            }
            case Justification::Tag::ModusPonens: {
                int i = step.just.i, j = step.just.j;
                if (i < 1 || i >= index || j < 1 || j >= index) {
                    fail(index, "mp premises must cite earlier steps");
                    break;
                }
                const Formula& major = core_steps[j - 1];
                if (major.kind() != Kind::Impl ||
                    major.lhs() != core_steps[i - 1] ||
                    major.rhs() != core_steps[idx]) {
                    fail(index,
                         "mp shape mismatch: step " + std::to_string(j) +
                             " is not (step " + std::to_string(i) +
                             " -> this)");
                    break;
                }
                v.steps.push_back({index, true, "mp"});
                break;
            }
            case Justification::Tag::Axiom: {
                const AxiomScheme* scheme = find_scheme(step.just.name);
                if (!scheme) {
                    fail(index, "unknown axiom scheme: " + step.just.name);
                    break;
                }
                if (!p.theory.profile.includes(scheme->requires_features())) {
                    fail(index, "axiom scheme not in profile: " +
                                    step.just.name);
                    break;
                }
                bool ok = false;
                if (!step.just.binding.vars.empty() ||
                    !step.just.binding.rats.empty() ||
                    step.just.binding.k != 0) {
                    try {
                        ok = to_core(scheme->instantiate(step.just.binding)) ==
                             core_steps[idx];
                    } catch (const Error&) {
                        ok = false;
                    }
                    if (!ok) {
                        fail(index,
                             "binding does not instantiate scheme " +
                                 step.just.name + " to this formula");
                        break;
                    }
                } else {
                    ok = scheme->match(step.formula).has_value();
                    if (!ok) {
                        fail(index, "formula is not an instance of scheme " +
                                        step.just.name);
                        break;
                    }
                }
                v.steps.push_back({index, true, "axiom " + step.just.name});
                break;
            }
            case Justification::Tag::Lemma: {
                const Lemma* lemma = lemmas.find(step.just.name);
                if (!lemma) {
                    fail(index, "unknown lemma: " + step.just.name);
                    break;
                }
                if (!p.theory.profile.includes(lemma->required)) {
                    fail(index, "lemma not in profile: " + step.just.name);
                    break;
                }
                bool ok = false;
                if (!step.just.binding.vars.empty() ||
                    step.just.binding.k != 0) {
                    try {
                        ok = to_core(lemmas.instantiate(
                                 *lemma, step.just.binding)) == core_steps[idx];
                    } catch (const Error&) {
                        ok = false;
                    }
                } else {
                    ok = lemmas.match(*lemma, step.formula).has_value();
                }
                if (!ok) {
                    fail(index, "formula is not an instance of lemma " +
                                    step.just.name);
                    break;
                }
                v.steps.push_back(
                    {index, true,
                     "lemma " + step.just.name + " (semantically admitted)"});
                break;
            }
        }
    }
    return v;
}

}  // namespace mvpav
