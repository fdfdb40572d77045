#include "mvpav/search.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "mvpav/errors.hpp"

namespace mvpav {

namespace {

struct Node {
    Formula core;      // core-normalized formula
    Justification just;  // references other node ids (1-based into nodes)
};

class Saturation {
  public:
    Saturation(const Theory& theory, const Formula& target,
               const SearchBudget& budget)
        : theory_(theory), budget_(budget), target_(to_core(target)) {}

    SearchResult run() {
        SearchResult result;
        for (int level = 0; level <= budget_.pool_arrow_levels; ++level) {
            nodes_.clear();
            known_.clear();
            majors_.clear();
            agenda_.clear();
            if (saturate(level)) {
                result.status = SearchStatus::Found;
                result.proof = extract();
                result.derived = static_cast<std::uint64_t>(nodes_.size());
                return result;
            }
            result.derived += static_cast<std::uint64_t>(nodes_.size());
        }
        return result;
    }

  private:
    std::vector<Formula> build_pool(int levels) const {
        std::vector<Formula> pool;
        auto add_closure = [&](const Formula& f) {
            for (const Formula& s : subformulas(to_core(f)))
                pool.push_back(s);
        };
        add_closure(target_);
        for (const Formula& g : theory_.generators) add_closure(g);
        pool.push_back(Formula::zero());
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        for (int l = 0; l < levels; ++l) {
            std::vector<Formula> grown = pool;
            for (const Formula& a : pool)
                for (const Formula& b : pool) {
                    Formula ab = Formula::impl(a, b);
                    if (ab.size() <= budget_.max_formula_size)
                        grown.push_back(std::move(ab));
                }
            std::sort(grown.begin(), grown.end());
            grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
            pool = std::move(grown);
            if (pool.size() > budget_.max_pool) {
                pool.resize(budget_.max_pool);  // smallest-first, sorted
                break;
            }
        }
        return pool;
    }

    bool insert(Formula core, Justification just) {
        if (core.size() > budget_.max_formula_size) return false;
        if (known_.count(core)) return false;
        nodes_.push_back(Node{core, std::move(just)});
        int id = static_cast<int>(nodes_.size());
        known_.emplace(core, id);
        agenda_.push_back(id);
        return core == target_;
    }

    // Returns true when the target was derived.
    bool saturate(int pool_level) {
        // hypotheses first
        for (std::size_t g = 0; g < theory_.generators.size(); ++g) {
            if (insert(to_core(theory_.generators[g]),
                       Justification::hypothesis(static_cast<int>(g) + 1)))
                return true;
        }
        // axiom instances over the pool
        std::vector<Formula> pool = build_pool(pool_level);
        std::vector<const AxiomScheme*> schemes = schemes_for(theory_.profile);
        std::uint64_t instances = 0;
        for (const AxiomScheme* scheme : schemes) {
            if (!enumerate_scheme(*scheme, pool, instances)) break;
        }
        // modus ponens saturation
        while (!agenda_.empty()) {
            int id = agenda_.front();
            agenda_.pop_front();
            Formula f = nodes_[static_cast<std::size_t>(id - 1)].core;
            if (f.kind() == Kind::Impl) {
                auto minor = known_.find(f.lhs());
                if (minor != known_.end()) {
                    if (derive(f.rhs(), minor->second, id)) return true;
                }
                majors_[f.lhs()].push_back(id);
            }
            auto waiting = majors_.find(f);
            if (waiting != majors_.end()) {
                // copy: derive() may grow the map
                std::vector<int> ws = waiting->second;
                for (int major : ws) {
                    const Formula& mf =
                        nodes_[static_cast<std::size_t>(major - 1)].core;
                    if (derive(mf.rhs(), id, major)) return true;
                }
            }
            if (static_cast<std::uint64_t>(nodes_.size()) >=
                budget_.max_steps)
                return false;
        }
        return false;
    }

    bool derive(const Formula& conclusion, int minor, int major) {
        return insert(conclusion, Justification::mp(minor, major));
    }

    /// Enumerates scheme instances with metavariables drawn from the pool.
    /// Returns false when the instance budget ran out.
    bool enumerate_scheme(const AxiomScheme& scheme,
                          const std::vector<Formula>& pool,
                          std::uint64_t& instances) {
        // Probe the scheme's metavariable names via a trial instantiation.
        static const std::vector<std::string> names = {"a", "b", "c"};
        std::vector<std::string> used;
        for (const auto& nm : names) {
            SchemeMatch probe;
            for (const auto& u : used) probe.vars[u] = Formula::zero();
            probe.k = 1;
            probe.rats["r"] = Rational01::zero();
            probe.rats["s"] = Rational01::zero();
            try {
                scheme.instantiate(probe);
                break;  // instantiation succeeded without nm
            } catch (const Error&) {
                used.push_back(nm);
            }
        }
        // Rational / k parameters: draw from pool constants and div indices.
        std::vector<Rational01> consts{Rational01::zero(), Rational01::one()};
        std::vector<int> ks{1, 2, 3};
        for (const Formula& f : pool) {
            for (const Formula& s : subformulas(f)) {
                if (s.kind() == Kind::TruthConst)
                    consts.push_back(s.constant());
                if (s.kind() == Kind::Div) ks.push_back(s.div_index());
            }
        }
        std::sort(consts.begin(), consts.end());
        consts.erase(std::unique(consts.begin(), consts.end()), consts.end());
        std::sort(ks.begin(), ks.end());
        ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

        std::vector<std::size_t> odo(used.size(), 0);
        while (true) {
            // try every (k, r, s) combo the scheme might need; pattern
            // schemes ignore the parameters
            for (int k : ks) {
                for (const Rational01& r : consts) {
                    for (const Rational01& s : consts) {
                        SchemeMatch m;
                        m.k = k;
                        m.rats["r"] = r;
                        m.rats["s"] = s;
                        for (std::size_t i = 0; i < used.size(); ++i)
                            m.vars[used[i]] = pool[odo[i]];
                        ++instances;
                        if (instances > budget_.max_axiom_instances)
                            return false;
                        try {
                            Formula inst = scheme.instantiate(m);
                            if (insert(to_core(inst),
                                       Justification::axiom(scheme.name(), m)))
                                return true;
                        } catch (const Error&) {
                            // unsatisfiable parameter combo; skip
                        }
                        if (!needs_rs(scheme)) break;
                    }
                    if (!needs_rs(scheme)) break;
                }
                if (!needs_k(scheme)) break;
            }
            // odometer
            std::size_t i = 0;
            for (; i < odo.size(); ++i) {
                if (++odo[i] < pool.size()) break;
                odo[i] = 0;
            }
            if (i == odo.size()) break;
            if (used.empty()) break;
        }
        return true;
    }

    static bool needs_k(const AxiomScheme& s) {
        const std::string& n = s.name();
        return n.rfind("DL", 0) == 0 || n.rfind("BK3_DIV", 0) == 0;
    }

    static bool needs_rs(const AxiomScheme& s) {
        return s.name().rfind("BK", 0) == 0 && s.name().rfind("BK1", 0) != 0 &&
               s.name().rfind("BK3_FIX", 0) != 0;
    }

    Proof extract() const {
        // collect the nodes reachable from the target, keep discovery order
        auto target_it = known_.find(target_);
        std::vector<bool> needed(nodes_.size(), false);
        std::vector<int> stack{target_it->second};
        while (!stack.empty()) {
            int id = stack.back();
            stack.pop_back();
            if (needed[static_cast<std::size_t>(id - 1)]) continue;
            needed[static_cast<std::size_t>(id - 1)] = true;
            const Justification& j =
                nodes_[static_cast<std::size_t>(id - 1)].just;
            if (j.tag == Justification::Tag::ModusPonens) {
                stack.push_back(j.i);
                stack.push_back(j.j);
            }
        }
        std::vector<int> renumber(nodes_.size(), 0);
        Proof proof;
        proof.theory = theory_;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (!needed[i]) continue;
            ProofStep step;
            step.formula = nodes_[i].core;
            step.just = nodes_[i].just;
            if (step.just.tag == Justification::Tag::ModusPonens) {
                step.just.i = renumber[static_cast<std::size_t>(
                    step.just.i - 1)];
                step.just.j = renumber[static_cast<std::size_t>(
                    step.just.j - 1)];
            }
            proof.steps.push_back(std::move(step));
            renumber[i] = static_cast<int>(proof.steps.size());
        }
        return proof;
    }

    const Theory& theory_;
    SearchBudget budget_;
    Formula target_;
    std::vector<Node> nodes_;
    std::map<Formula, int> known_;
    std::map<Formula, std::vector<int>> majors_;
    std::deque<int> agenda_;
};

}  // namespace

SearchResult search_proof(const Formula& target, const Theory& theory,
                          const SearchBudget& budget) {
    require_profile(theory.profile, target);
    Saturation s(theory, target, budget);
    return s.run();
}

}  // namespace mvpav
