#pragma once

#include <string>

#include "mvpav/degrees.hpp"
#include "mvpav/pavelka.hpp"

namespace mvpav {

/// Machine-readable lines:
///   exact|grid
///   lo p/q
///   hi p/q
///   witness {p: 1/2, q: 1}
///   vacuous: yes|no
std::string degree_lines(const DegreeBounds& d);

/// One-line human form: "exact lo 1/2 hi 1/2 witness p=1/2".
std::string degree_human(const DegreeBounds& d);

/// Gap report lines: proof_lower / truth / gap (+ engine, sound, equal).
std::string gap_lines(const GapReport& g);
std::string gap_human(const GapReport& g);

}  // namespace mvpav
