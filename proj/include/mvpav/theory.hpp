#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mvpav/formula.hpp"
#include "mvpav/profile.hpp"

namespace mvpav {

/// Finite presentation of a theory: an ordered set of generator formulas
/// under a logic profile. Stands for the theory generated by the set.
struct Theory {
    LogicProfile profile;
    std::vector<Formula> generators;

    Theory() = default;
    Theory(LogicProfile p, std::vector<Formula> gens);

    /// File format: optional comment lines starting with '#', a header line
    /// "profile: base[,product][,division][,fixpoint][,constants]", then one
    /// formula per line.
    static Theory load(std::istream& in);
    static Theory load_file(const std::string& path);
    void save(std::ostream& out) const;
};

}  // namespace mvpav
