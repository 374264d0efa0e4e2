#pragma once

#include <string>
#include <vector>

#include "modlp/core.hpp"
#include "modlp/parser.hpp"

// Small programs shared across the suites, built through the text format so
// every fixture also exercises the parser.
namespace fixtures {

using modlp::dlp_function;
using modlp::workspace;

inline dlp_function parse(const workspace& ws, const std::string& text) {
  return modlp::parse_module(text, ws);
}

// choice between a and b guarded by the input c
inline dlp_function guarded_choice(const workspace& ws) {
  return parse(ws,
               "#input c.\n#output a, b.\n"
               "a | b :- not c.\na :- c, not b.\nb :- c, not a.\n");
}

// two modules sharing the disjunctive rule a | b :- c
inline dlp_function share_pair_left(const workspace& ws) {
  return parse(ws, "#input a, c.\n#output b.\n#hidden d.\na | b :- c.\nd :- a, not d.\n");
}
inline dlp_function share_pair_right(const workspace& ws) {
  return parse(ws, "#input b, c.\n#output a.\n#hidden e.\na | b :- c.\ne :- a, not e.\n");
}

// composable but mutually dependent through the cycle a <-> b
inline dlp_function dependent_pair_left(const workspace& ws) {
  return parse(ws, "#input a, c.\n#output b.\na | b :- c.\nb :- a, not c.\n");
}
inline dlp_function dependent_pair_right(const workspace& ws) {
  return parse(ws, "#input b, c.\n#output a.\na | b :- c.\na :- b, not c.\n");
}

// the two interface choices over R = {a | c :- b. b :- a.}
inline dlp_function cycle_defs_input_a(const workspace& ws) {
  return parse(ws, "#input a.\n#output b, c.\na | c :- b.\nb :- a.\n");
}
inline dlp_function cycle_defs_input_c(const workspace& ws) {
  return parse(ws, "#input c.\n#output a, b.\na | c :- b.\nb :- a.\n");
}
inline dlp_function cycle_defs_closed(const workspace& ws) {
  return parse(ws, "#output a, b, c.\na | c :- b.\nb :- a.\n");
}

// three pairwise joinable modules over disjunctive facts
inline dlp_function fork_left(const workspace& ws) {
  return parse(ws, "#input a, c.\n#output b.\na | b.\nb | c.\n");
}
inline dlp_function fork_right(const workspace& ws) {
  return parse(ws, "#input a, b.\n#output c.\na | c.\nb | c.\n");
}
inline dlp_function fork_third(const workspace& ws) {
  return parse(ws, "#input b, c.\n#output a.\na | b.\na | c.\n");
}

// positive pair with one minimal model after the join
inline dlp_function positive_chain_left(const workspace& ws) {
  return parse(ws,
               "#input d, e.\n#output a, b, c.\n"
               "a | b.\na :- b.\nb :- a.\na :- c.\nc | d | e :- a, b.\n");
}
inline dlp_function positive_chain_right(const workspace& ws) {
  return parse(ws,
               "#input a, b, c.\n#output d, e.\n"
               "d :- c.\ne :- d.\nd :- e.\nc | d | e :- a, b.\n");
}

// two 2-cycles bridged by a disjunctive fact and kept apart by constraints
inline dlp_function quad_cycle(const workspace& ws) {
  return parse(ws,
               "#output a, b, c, d.\n"
               "a | b | c | d.\n"
               ":- a, c.\n:- b, c.\n:- a, d.\n:- b, d.\n"
               "a :- b.\nb :- a.\nc :- d.\nd :- c.\n");
}

// one rule set, three hiding choices
inline dlp_function mixed_hiding(const workspace& ws, const std::string& output,
                                 const std::string& hidden) {
  std::string text = "#output " + output + ".\n";
  if (!hidden.empty()) text += "#hidden " + hidden + ".\n";
  text +=
      ":- a, not c.\n"
      "a | b.\n"
      "b | c | d.\n"
      "c :- d.\n"
      "d :- c, not b.\n";
  return parse(ws, text);
}

// disjunctive fact over a two-atom cycle plus a free atom
inline dlp_function head_cycle_triple(const workspace& ws) {
  return parse(ws, "#output a, b, c.\na | b | c.\na :- b.\nb :- a.\n");
}
// its rule-by-rule (unsound) local shifting
inline dlp_function naive_shift_triple(const workspace& ws) {
  return parse(ws,
               "#output a, b, c.\n"
               "a :- not b, not c.\nb :- not a, not c.\nc :- not a, not b.\n"
               "a :- b.\nb :- a.\n");
}

inline dlp_function flip_flop(const workspace& ws) {
  return parse(ws, "#output a, b.\na :- not b.\nb :- not a.\n");
}

// four-disjunct formula whose validity is witnessed by x1 alone
inline std::string valid_qbf_text() {
  return "exists: x1 x2\n"
         "forall: y1 y2\n"
         "disjunct: x1 y1 y2\n"
         "disjunct: -x2 y1 -y2\n"
         "disjunct: x1 -y1 y2\n"
         "disjunct: x1 -x2 -y1 -y2\n";
}

}  // namespace fixtures
