#include "mvpav/theory.hpp"

#include <fstream>
#include <sstream>

#include "mvpav/errors.hpp"
#include "mvpav/parse.hpp"

namespace mvpav {

namespace {
std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}
}  // namespace

Theory::Theory(LogicProfile p, std::vector<Formula> gens)
    : profile(p), generators(std::move(gens)) {
    for (const Formula& g : generators) require_profile(profile, g);
}

Theory Theory::load(std::istream& in) {
    Theory t;
    bool have_profile = false;
    std::string line;
    while (std::getline(in, line)) {
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.rfind("profile:", 0) == 0) {
            if (have_profile) throw Error("duplicate profile header");
            t.profile = LogicProfile::parse(s.substr(8));
            have_profile = true;
            continue;
        }
        if (!have_profile)
            throw Error("theory file must start with a 'profile:' header");
        t.generators.push_back(parse(s, t.profile));
    }
    if (!have_profile)
        throw Error("theory file must contain a 'profile:' header");
    return t;
}

Theory Theory::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open theory file: " + path);
    return load(in);
}

void Theory::save(std::ostream& out) const {
    out << "profile: " << profile.str() << "\n";
    for (const Formula& g : generators) out << print(g) << "\n";
}

}  // namespace mvpav
