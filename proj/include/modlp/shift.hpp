#pragma once

#include <limits>

#include "modlp/core.hpp"

namespace modlp {

// Head atoms are projected onto each strongly connected component they meet;
// the remainder of the head moves to the negative body. Constraints pass
// through untouched. Preserves stable models even across head-cycles.
dlp_function general_shift(const dlp_function& fn);

inline constexpr unsigned k_no_body_naming = std::numeric_limits<unsigned>::max();

// Same transformation, but a rule whose head meets two or more components and
// whose body holds at least min_body literals gets its body named: a fresh
// hidden atom @bd_<n> carries the body once and the per-component shifts
// reference it. min_body = k_no_body_naming disables naming entirely.
dlp_function general_shift_named(const dlp_function& fn, unsigned min_body = 2);

}  // namespace modlp
