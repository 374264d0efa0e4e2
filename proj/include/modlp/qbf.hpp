#pragma once

#include <optional>
#include <string_view>

#include "modlp/core.hpp"

namespace modlp {

// One disjunct of the DNF matrix: negated/positive existential variables and
// negated/positive universal variables.
struct qbf_disjunct {
  atom_set neg_exists, pos_exists;  // A, B
  atom_set neg_forall, pos_forall;  // C, D
  bool operator==(const qbf_disjunct&) const = default;
};

// ∃X ∀Y with a DNF matrix. Every declared variable occurs in some disjunct;
// duplicate disjuncts collapse, keeping first-occurrence order.
struct qbf_instance {
  workspace ws;
  atom_set exists_vars, forall_vars;
  std::vector<qbf_disjunct> disjuncts;
};

// Text format:
//   exists: x1 x2
//   forall: y1 y2
//   disjunct: x1 -y1 y2        ('-' negates; one line per disjunct)
qbf_instance parse_qbf(std::string_view text, workspace ws);

// The guessing module: output X, one act(i) input per disjunct.
dlp_function encode_sat(const qbf_instance& q);
// The refutation module: no output, the universal variables and the marker u
// stay hidden.
dlp_function encode_unsat(const qbf_instance& q);

struct qbf_verdict {
  bool valid = false;
  std::optional<atom_set> certificate;  // witnessing existential assignment
};

// Valid iff the join of the two encodings has a stable model; reports the
// X-projection of one such model. If either side alone has no stable model
// the formula is already invalid and the join is skipped.
qbf_verdict evaluate_qbf(const qbf_instance& q, unsigned cap = 24);

// Independent ground truth: two-level exhaustive assignment enumeration.
bool qbf_brute_oracle(const qbf_instance& q);

}  // namespace modlp
