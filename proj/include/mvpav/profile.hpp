#pragma once

#include <string>

namespace mvpav {

/// Which expansion of the base calculus is active. The base connectives
/// {->, 0} and everything definable from them are always available; the four
/// flags gate the genuinely new material (product, division operators,
/// negation fixpoint, rational truth constants).
struct LogicProfile {
    bool product = false;
    bool division = false;
    bool fixpoint = false;
    bool constants = false;

    static LogicProfile base() { return {}; }
    static LogicProfile all() { return {true, true, true, true}; }

    /// Parses "base[,product][,division][,fixpoint][,constants]".
    static LogicProfile parse(const std::string& spec);
    std::string str() const;

    friend bool operator==(const LogicProfile&, const LogicProfile&) = default;

    /// True when every feature of `other` is also enabled here.
    bool includes(const LogicProfile& other) const {
        return (product || !other.product) && (division || !other.division) &&
               (fixpoint || !other.fixpoint) &&
               (constants || !other.constants);
    }
};

}  // namespace mvpav
