#include "mvpav/profile.hpp"

#include <sstream>

#include "mvpav/errors.hpp"

namespace mvpav {

LogicProfile LogicProfile::parse(const std::string& spec) {
    LogicProfile p;
    std::stringstream ss(spec);
    std::string item;
    bool saw_base = false;
    while (std::getline(ss, item, ',')) {
        // trim
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        item = item.substr(b, e - b + 1);
        if (item == "base")
            saw_base = true;
        else if (item == "product")
            p.product = true;
        else if (item == "division")
            p.division = true;
        else if (item == "fixpoint")
            p.fixpoint = true;
        else if (item == "constants")
            p.constants = true;
        else
            throw Error("unknown profile feature: " + item);
    }
    (void)saw_base;  // "base" is implicit and always allowed
    return p;
}

std::string LogicProfile::str() const {
    std::string s = "base";
    if (product) s += ",product";
    if (division) s += ",division";
    if (fixpoint) s += ",fixpoint";
    if (constants) s += ",constants";
    return s;
}

}  // namespace mvpav
