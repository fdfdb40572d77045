#include "mvpav/report.hpp"

namespace mvpav {

namespace {
std::string witness_braced(const DegreeBounds& d) {
    std::string out = "{";
    if (d.witness) {
        bool first = true;
        for (const auto& [name, v] : d.witness->assignment) {
            if (!first) out += ", ";
            first = false;
            out += name + ": " + v.str();
        }
    }
    out += "}";
    return out;
}
}  // namespace

std::string degree_lines(const DegreeBounds& d) {
    std::string out;
    out += d.exact ? "exact\n" : "grid\n";
    out += "lo " + d.lo.str() + "\n";
    out += "hi " + d.hi.str() + "\n";
    out += "witness " + witness_braced(d) + "\n";
    out += std::string("vacuous: ") + (d.vacuous ? "yes" : "no") + "\n";
    return out;
}

std::string degree_human(const DegreeBounds& d) {
    std::string out = d.exact ? "exact" : "grid";
    out += " lo " + d.lo.str() + " hi " + d.hi.str();
    if (d.witness) {
        out += " witness ";
        bool first = true;
        for (const auto& [name, v] : d.witness->assignment) {
            if (!first) out += ",";
            first = false;
            out += name + "=" + v.str();
        }
    }
    if (d.vacuous) out += " (vacuous)";
    return out;
}

std::string gap_lines(const GapReport& g) {
    Rat gap = g.truth.lo.value() - g.proof_lower.bounds.lo.value();
    if (gap < 0) gap = 0;
    std::string out;
    out += "proof_lower " + g.proof_lower.bounds.lo.str() + "\n";
    out += "truth " + (g.truth.exact ? g.truth.lo.str()
                                     : g.truth.lo.str() + ".." +
                                           g.truth.hi.str()) +
           "\n";
    out += "gap " + rat_to_string(gap) + "\n";
    out += std::string("engine ") + (g.used_exact_engine ? "exact" : "grid") +
           "\n";
    out += std::string("sound ") + (g.sound ? "yes" : "no") + "\n";
    out += std::string("equal ") + (g.equal ? "yes" : "no") + "\n";
    return out;
}

std::string gap_human(const GapReport& g) {
    std::string out = "proof_lower " + g.proof_lower.bounds.lo.str() +
                      "  truth " + degree_human(g.truth);
    out += g.sound ? "  sound" : "  UNSOUND";
    if (g.equal) out += "  (equality)";
    return out;
}

}  // namespace mvpav
