// mvpavelka — evaluation, proof checking, truth/proof degrees and the
// verification harnesses, wired into reproducible batch runs.
//
// Exit codes: 0 success / accepted, 1 failed verification, 2 malformed input.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mvpav/congruence.hpp"
#include "mvpav/degrees.hpp"
#include "mvpav/errors.hpp"
#include "mvpav/eval.hpp"
#include "mvpav/gen.hpp"
#include "mvpav/identity.hpp"
#include "mvpav/lemma.hpp"
#include "mvpav/parse.hpp"
#include "mvpav/pavelka.hpp"
#include "mvpav/replay.hpp"
#include "mvpav/report.hpp"

using namespace mvpav;

namespace {

struct Common {
    std::string profile = "base";
    std::uint64_t seed = 0;
    std::string format = "human";
    std::string out_path;

    LogicProfile parsed_profile() const { return LogicProfile::parse(profile); }
    bool lines() const { return format == "lines"; }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--profile", c.profile,
                    "base[,product][,division][,fixpoint][,constants]");
    cmd->add_option("--seed", c.seed, "random seed (default 0)");
    cmd->add_option("--format", c.format, "human|lines")
        ->check(CLI::IsMember({"human", "lines"}));
    cmd->add_option("--out", c.out_path, "write the report/proof here");
}

std::uint64_t env_seed(std::uint64_t fallback) {
    if (const char* s = std::getenv("MVPAVELKA_SEED")) {
        try {
            return std::stoull(s);
        } catch (...) {
            throw Error("MVPAVELKA_SEED is not a number");
        }
    }
    return fallback;
}

void emit(const Common& c, const std::string& text) {
    if (c.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.out_path);
    if (!out) throw Error("cannot write: " + c.out_path);
    out << text;
}

Valuation parse_valuation(const std::string& spec) {
    Valuation v;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error("valuation must be name=p/q[,name=p/q...]");
        v.set(item.substr(0, eq), Rational01::parse(item.substr(eq + 1)));
    }
    return v;
}

Theory load_theory_or(const std::string& path, const LogicProfile& fallback) {
    if (path.empty()) {
        Theory t;
        t.profile = fallback;
        return t;
    }
    return Theory::load_file(path);
}

// The eight defining equations of the algebra (compound items expanded),
// each as a (name, lhs, rhs) triple over x, y, z.
std::vector<std::tuple<std::string, Formula, Formula>> variety_equations() {
    Formula x = Formula::var("x"), y = Formula::var("y"), z = Formula::var("z");
    auto& O = Formula::odot;
    std::vector<std::tuple<std::string, Formula, Formula>> eqs;
    // 1: abelian monoid under odot
    eqs.emplace_back("eq1.assoc", O(O(x, y), z), O(x, O(y, z)));
    eqs.emplace_back("eq1.comm", O(x, y), O(y, x));
    eqs.emplace_back("eq1.unit", O(x, Formula::one()), x);
    // 2: bounded lattice
    eqs.emplace_back("eq2.join_comm", Formula::join(x, y), Formula::join(y, x));
    eqs.emplace_back("eq2.meet_comm", Formula::meet(x, y), Formula::meet(y, x));
    eqs.emplace_back("eq2.join_assoc", Formula::join(Formula::join(x, y), z),
                     Formula::join(x, Formula::join(y, z)));
    eqs.emplace_back("eq2.meet_assoc", Formula::meet(Formula::meet(x, y), z),
                     Formula::meet(x, Formula::meet(y, z)));
    eqs.emplace_back("eq2.absorb1", Formula::join(x, Formula::meet(x, y)), x);
    eqs.emplace_back("eq2.absorb2", Formula::meet(x, Formula::join(x, y)), x);
    eqs.emplace_back("eq2.bottom", Formula::join(x, Formula::zero()), x);
    eqs.emplace_back("eq2.top", Formula::meet(x, Formula::one()), x);
    // 3: (x&y)->z = x->(y->z)
    eqs.emplace_back("eq3", Formula::impl(O(x, y), z),
                     Formula::impl(x, Formula::impl(y, z)));
    // 4: ((x->y)&x)/\y = (x->y)&x
    eqs.emplace_back("eq4", Formula::meet(O(Formula::impl(x, y), x), y),
                     O(Formula::impl(x, y), x));
    // 5: (x/\y)->y = 1
    eqs.emplace_back("eq5", Formula::impl(Formula::meet(x, y), y),
                     Formula::one());
    // 6: x&(x->y) = x/\y
    eqs.emplace_back("eq6", O(x, Formula::impl(x, y)), Formula::meet(x, y));
    // 7: (x->y)\/(y->x) = 1
    eqs.emplace_back("eq7",
                     Formula::join(Formula::impl(x, y), Formula::impl(y, x)),
                     Formula::one());
    // 8: (x->0)->0 = x
    eqs.emplace_back("eq8",
                     Formula::impl(Formula::impl(x, Formula::zero()),
                                   Formula::zero()),
                     x);
    return eqs;
}

int run_axioms_suite(const Common& c, std::uint64_t trials, int chain_lo,
                     int chain_hi) {
    LogicProfile profile = c.parsed_profile();
    Rng rng(env_seed(c.seed));
    std::string out;
    bool all_pass = true;

    auto run_pair = [&](const std::string& name, const Formula& lhs,
                        const Formula& rhs, bool chains) {
        std::uint64_t total = 0;
        std::vector<std::string> fails;
        if (chains && profile_permits(LogicProfile::base(), lhs) &&
            profile_permits(LogicProfile::base(), rhs)) {
            for (int m = chain_lo; m <= chain_hi; ++m) {
                IdentityReport r =
                    check_identity_chain(lhs, rhs, FiniteChain::with_size(m));
                total += r.trials;
                for (const auto& cex : r.counterexamples)
                    fails.push_back("chain" + std::to_string(m) + " " +
                                    cex.valuation.str());
            }
        }
        Rng sub = rng.fork();
        IdentityReport r =
            check_identity_sampled(lhs, rhs, LogicProfile::all(), sub, trials);
        total += r.trials;
        for (const auto& cex : r.counterexamples)
            fails.push_back(cex.valuation.str() + " lhs=" +
                            cex.lhs_value.str() + " rhs=" +
                            cex.rhs_value.str());
        if (fails.empty()) {
            out += "PASS " + name + " trials=" + std::to_string(total) + "\n";
        } else {
            all_pass = false;
            for (const auto& f : fails) out += "FAIL " + name + " " + f + "\n";
        }
    };

    for (const auto& [name, lhs, rhs] : variety_equations())
        run_pair("mv." + name, lhs, rhs, true);

    if (profile.product) {
        Formula x = Formula::var("x"), y = Formula::var("y"),
                z = Formula::var("z");
        Formula lhs = Formula::bullet(x, Formula::odot(y, Formula::neg(z)));
        Formula rhs = Formula::odot(Formula::bullet(x, y),
                                    Formula::neg(Formula::bullet(x, z)));
        run_pair("pmv.eq3", lhs, rhs, false);
    }
    if (profile.division) {
        Formula x = Formula::var("x");
        for (int n = 1; n <= 12; ++n) {
            Formula dx = Formula::div(n, x);
            run_pair("dmv.n" + std::to_string(n) + ".multiple",
                     expand_multiple(n, dx), x, false);
            run_pair("dmv.n" + std::to_string(n) + ".remainder",
                     Formula::odot(dx, expand_multiple(n - 1, dx)),
                     Formula::zero(), false);
        }
    }
    if (profile.fixpoint) {
        run_pair("fix.negk", Formula::neg(Formula::fixk()), Formula::fixk(),
                 false);
        Formula half = profile.constants
                           ? Formula::truth(Rational01::half())
                           : Formula{};
        if (half.valid()) run_pair("fix.value", Formula::fixk(), half, false);
    }

    emit(c, out);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lukasiewicz logic with admissible expansions: exact "
                 "evaluation, proof checking, degrees, harnesses"};
    app.require_subcommand(1);

    // --- eval ---
    Common eval_c;
    std::string eval_formula, eval_val;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula exactly");
    add_common(eval_cmd, eval_c);
    eval_cmd->add_option("formula", eval_formula)->required();
    eval_cmd->add_option("--val", eval_val, "p=1/2,q=3/4");

    // --- degree ---
    Common deg_c;
    std::string deg_formula, deg_theory;
    bool deg_grid = false;
    std::string deg_eps = "1/20", deg_delta = "1/20";
    int region_cap = 24;
    auto* deg_cmd =
        app.add_subcommand("degree", "truth degree (exact or grid bounds)");
    add_common(deg_cmd, deg_c);
    deg_cmd->add_option("formula", deg_formula)->required();
    deg_cmd->add_option("--theory", deg_theory, "theory file");
    deg_cmd->add_flag("--grid", deg_grid, "force the grid engine");
    deg_cmd->add_option("--eps", deg_eps, "grid lo-certificate slack");
    deg_cmd->add_option("--delta", deg_delta, "grid constraint relaxation");
    deg_cmd->add_option("--region-cap", region_cap, "truncation-node cap");

    // --- check ---
    Common check_c;
    std::string check_path, check_theory;
    auto* check_cmd = app.add_subcommand("check", "check a proof file");
    add_common(check_cmd, check_c);
    check_cmd->add_option("proof", check_path)->required();
    check_cmd->add_option("--theory", check_theory,
                          "theory file (overrides proof headers)");

    // --- axioms ---
    Common ax_c;
    std::uint64_t ax_trials = 10000;
    int ax_chain_lo = 2, ax_chain_hi = 6;
    auto* ax_cmd = app.add_subcommand(
        "axioms", "identity suite over finite chains and random rationals");
    add_common(ax_cmd, ax_c);
    ax_cmd->add_option("--trials", ax_trials, "random valuations per equation");
    ax_cmd->add_option("--chain-lo", ax_chain_lo, "smallest chain size");
    ax_cmd->add_option("--chain-hi", ax_chain_hi, "largest chain size");

    // --- gap ---
    Common gap_c;
    std::string gap_formula, gap_theory;
    std::uint64_t gap_steps = 20000;
    auto* gap_cmd =
        app.add_subcommand("gap", "Pavelka gap: proof degree vs truth degree");
    add_common(gap_cmd, gap_c);
    gap_cmd->add_option("formula", gap_formula)->required();
    gap_cmd->add_option("--theory", gap_theory, "theory file");
    gap_cmd->add_option("--budget-steps", gap_steps, "proof-search budget");

    // --- compact ---
    Common cmp_c;
    std::string cmp_formula, cmp_theory, cmp_r;
    auto* cmp_cmd = app.add_subcommand(
        "compact", "minimal finite subtheory reaching the degree");
    add_common(cmp_cmd, cmp_c);
    cmp_cmd->add_option("formula", cmp_formula)->required();
    cmp_cmd->add_option("--theory", cmp_theory, "theory file")->required();
    cmp_cmd->add_option("--r", cmp_r, "target degree p/q")->required();

    // --- congr ---
    Common congr_c;
    std::string congr_path;
    int congr_bound = 40;
    auto* congr_cmd =
        app.add_subcommand("congr", "congruence report for an algebra file");
    add_common(congr_cmd, congr_c);
    congr_cmd->add_option("algebra", congr_path)->required();
    congr_cmd->add_option("--bound", congr_bound, "carrier size bound");

    // --- replay ---
    Common rep_c;
    std::string rep_what = "prop33", rep_alpha = "p", rep_beta = "q",
                rep_gamma = "r";
    auto* rep_cmd =
        app.add_subcommand("replay", "emit + check a built-in derivation");
    add_common(rep_cmd, rep_c);
    rep_cmd->add_option("derivation", rep_what, "prop33");
    rep_cmd->add_option("--alpha", rep_alpha);
    rep_cmd->add_option("--beta", rep_beta);
    rep_cmd->add_option("--gamma", rep_gamma);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) {
            LogicProfile profile = eval_c.parsed_profile();
            Formula f = parse(eval_formula, profile);
            Valuation v = parse_valuation(eval_val);
            Rational01 value = eval(f, v, profile);
            emit(eval_c, eval_c.lines() ? "value " + value.str() + "\n"
                                        : value.str() + "\n");
            return 0;
        }
        if (deg_cmd->parsed()) {
            LogicProfile profile = deg_c.parsed_profile();
            Formula f = parse(deg_formula, profile);
            Theory theory = load_theory_or(deg_theory, profile);
            DegreeOptions opts;
            opts.compile.truncation_cap = region_cap;
            DegreeBounds d;
            if (!deg_grid && pl_fragment(to_core(f)) &&
                std::all_of(theory.generators.begin(),
                            theory.generators.end(), [](const Formula& g) {
                                return pl_fragment(to_core(g));
                            })) {
                d = truth_degree_exact(f, theory, opts);
            } else {
                d = truth_degree_grid(f, theory, rat_from_string(deg_eps),
                                      rat_from_string(deg_delta), opts);
            }
            emit(deg_c, deg_c.lines() ? degree_lines(d)
                                      : degree_human(d) + "\n");
            return 0;
        }
        if (check_cmd->parsed()) {
            Proof p = Proof::load_file(check_path);
            if (!check_theory.empty()) p.theory = Theory::load_file(check_theory);
            Verdict v = check_proof(p, LemmaRegistry::builtin());
            emit(check_c, check_c.lines()
                              ? v.lines()
                              : std::string(v.accepted ? "accepted"
                                                       : "rejected") +
                                    "\n");
            return v.accepted ? 0 : 1;
        }
        if (ax_cmd->parsed())
            return run_axioms_suite(ax_c, ax_trials, ax_chain_lo, ax_chain_hi);
        if (gap_cmd->parsed()) {
            LogicProfile profile = gap_c.parsed_profile();
            Formula f = parse(gap_formula, profile);
            Theory theory = load_theory_or(gap_theory, profile);
            GapOptions opts;
            opts.budget.max_steps = gap_steps;
            GapReport g = pavelka_gap(f, theory, opts);
            std::string text =
                gap_c.lines() ? gap_lines(g) : gap_human(g) + "\n";
            if (!gap_c.out_path.empty()) {
                std::ofstream pf(gap_c.out_path);
                if (!pf) throw Error("cannot write: " + gap_c.out_path);
                g.proof_lower.best_proof().save(pf);
                text += "proof_file " + gap_c.out_path + "\n";
                std::cout << text;
            } else {
                std::cout << text;
            }
            return g.sound ? 0 : 1;
        }
        if (cmp_cmd->parsed()) {
            LogicProfile profile = cmp_c.parsed_profile();
            Formula f = parse(cmp_formula, profile);
            Theory theory = Theory::load_file(cmp_theory);
            CompactnessResult res =
                compactness_probe(f, theory, Rational01::parse(cmp_r));
            std::string out = "subset {";
            for (std::size_t i = 0; i < res.subset.size(); ++i)
                out += (i ? "," : "") + std::to_string(res.subset[i] + 1);
            out += "}\n";
            for (int i : res.subset)
                out += "generator " + std::to_string(i + 1) + " " +
                       print(theory.generators[static_cast<std::size_t>(i)]) +
                       "\n";
            out += "degree " + res.subset_degree.lo.str() + "\n";
            emit(cmp_c, out);
            return 0;
        }
        if (congr_cmd->parsed()) {
            FiniteAlgebra a = FiniteAlgebra::load_file(congr_path);
            std::string out;
            CongruenceSet all = enumerate_congruences(a, {}, congr_bound);
            out += "congruences " + std::to_string(all.size()) + "\n";
            for (const Partition& p : all.partitions)
                out += "congruence " + partition_blocks_str(p) + "\n";
            int code = 0;
            if (!a.reduct_ops.empty()) {
                bool compatible = check_compatible_expansion(a, congr_bound);
                out += std::string("compatible ") +
                       (compatible ? "yes" : "no") + "\n";
                code = compatible ? 0 : 1;
            }
            emit(congr_c, out);
            return code;
        }
        if (rep_cmd->parsed()) {
            if (rep_what != "prop33") throw Error("unknown derivation");
            LogicProfile profile = LogicProfile::all();
            Proof p = replay_prop33(parse(rep_alpha, profile),
                                    parse(rep_beta, profile),
                                    parse(rep_gamma, profile));
            Verdict v = check_proof(p, LemmaRegistry::builtin());
            std::string text = p.str();
            if (!rep_c.out_path.empty()) {
                std::ofstream out(rep_c.out_path);
                if (!out) throw Error("cannot write: " + rep_c.out_path);
                out << text;
                std::cout << (v.accepted ? "accepted\n" : "rejected\n");
            } else {
                std::cout << text
                          << (v.accepted ? "# accepted\n" : "# rejected\n");
            }
            return v.accepted ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.pos << ": " << e.what()
                  << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
