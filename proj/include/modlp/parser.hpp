#pragma once

#include <string>
#include <string_view>

#include "modlp/core.hpp"

namespace modlp {

// Text format, one statement per line, '%' starts a comment:
//
//   #module name.            (optional)
//   #input a, c.             (each directive at most once; omitted = empty)
//   #output b.
//   #hidden d.
//   a | b :- c, not d.       (rule; facts drop ':-', constraints drop the head)
//
// Every atom must be declared in exactly one directive.
dlp_function parse_module(std::string_view text, workspace ws);

// Canonical text: directives in input/output/hidden order with sorted atoms,
// empty directives omitted, rules in canonical order. Re-parses to an equal
// value.
std::string render_module(const dlp_function& fn);
std::string render_module(const dlp_function& fn, std::string_view name);

std::string render_rule(const atom_table& tbl, const rule& r);

// One model per line, "{a, b}" with atoms sorted, lines in canonical order;
// the empty set renders as no output at all.
std::string render_models(const model_set& ms);

}  // namespace modlp
