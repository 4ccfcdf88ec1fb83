#pragma once

#include <string>

#include "toricsplit/bundle_data.hpp"
#include "toricsplit/fan.hpp"

namespace toricsplit {

// Fan file:
//   dim n
//   ray x1 ... xn        (one per ray)
//   cone i1 ... in       (1-based ray indices)
// Blank lines and '#' comments are ignored; anything else is an error.
Fan parse_fan(const std::string& text);
std::string format_fan(const Fan& fan);

// Bundle file (against a fan given separately):
//   rank r
//   weights s: (w1);(w2);...      (one line per maximal cone, 1-based s)
//   pasting s2 s1: e11 e12 ...    (r*r rationals "p" or "p/q", row-major)
// Omitted pastings are derived as in make_bundle_data().
KaneyamaBundleData parse_bundle(const std::string& text, const Fan& fan);
std::string format_bundle(const KaneyamaBundleData& data);

// Euler-sequence bundle file:
//   euler
//   summand d1 ... dJ section s1 ... sJ   (one line per summand)
EulerBundleSpec parse_euler(const std::string& text, const Fan& fan);
std::string format_euler(const EulerBundleSpec& spec);

// Whole file contents; Error("io") if unreadable.
std::string read_file(const std::string& path);

}  // namespace toricsplit
