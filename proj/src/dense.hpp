#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "modlp/core.hpp"

namespace modlp::detail {

using mask = std::uint32_t;

struct dense_rule {
  mask head = 0;
  mask pos = 0;
  mask neg = 0;
};

// Dense view of a module for mask-based enumeration. Bit i stands for the
// i-th atom in name order, so enumeration order is reproducible.
struct dense_module {
  std::vector<atom_id> atoms;  // local bit -> atom id, name-sorted
  mask input = 0;
  mask defined = 0;  // output | hidden
  mask all = 0;
  std::vector<dense_rule> rules;

  // Throws SignatureTooLarge when the signature exceeds cap (or the hard
  // 30-bit representation limit). `what` names the operation in the message.
  static dense_module build(const dlp_function& fn, unsigned cap, const char* what);

  mask bit_of(atom_id id) const;
  mask mask_of(const atom_set& s) const;
  atom_set set_of(mask m) const;
  unsigned width() const { return static_cast<unsigned>(atoms.size()); }
};

// classical satisfaction of all rules
inline bool satisfies(const dense_module& d, mask m) {
  for (const auto& r : d.rules)
    if ((r.pos & ~m) == 0 && (r.neg & m) == 0 && (r.head & m) == 0) return false;
  return true;
}

// satisfaction of the GL-reduct taken w.r.t. `reducer`, evaluated under `m`
inline bool satisfies_reduct(const dense_module& d, mask reducer, mask m) {
  for (const auto& r : d.rules) {
    if (r.neg & reducer) continue;
    if ((r.pos & ~m) == 0 && (r.head & m) == 0) return false;
  }
  return true;
}

// Visits proper subsets of `free` in order of increasing cardinality; stops
// and returns true as soon as pred holds. Small witnesses are common, so the
// cardinality order pays for itself.
template <typename Pred>
bool any_proper_subset_by_card(mask free, Pred&& pred) {
  unsigned bits[32];
  unsigned n = 0;
  for (mask rest = free; rest;) {
    unsigned b = static_cast<unsigned>(std::countr_zero(rest));
    bits[n++] = b;
    rest &= rest - 1;
  }
  if (n == 0) return false;  // no proper subsets
  if (pred(mask{0})) return true;
  for (unsigned k = 1; k < n; ++k) {
    // k-combinations over bits[0..n-1], Gosper's hack on compressed indices
    mask comb = (mask{1} << k) - 1;
    const mask limit = mask{1} << n;
    while (comb < limit) {
      mask expanded = 0;
      for (mask c = comb; c;) {
        unsigned j = static_cast<unsigned>(std::countr_zero(c));
        expanded |= mask{1} << bits[j];
        c &= c - 1;
      }
      if (pred(expanded)) return true;
      mask lo = comb & -comb;
      mask lz = (comb + lo);
      comb = lz | (((comb ^ lz) >> 2) / lo);
    }
  }
  return false;
}

// M is I-minimal among models of the reduct w.r.t. reducer iff no proper
// subset of its defined part still satisfies that reduct.
inline bool minimal_for_reduct(const dense_module& d, mask reducer, mask m) {
  mask fixed = m & d.input;
  return !any_proper_subset_by_card(m & d.defined, [&](mask sub) {
    return satisfies_reduct(d, reducer, fixed | sub);
  });
}

inline bool stable(const dense_module& d, mask m) {
  return satisfies_reduct(d, m, m) && minimal_for_reduct(d, m, m);
}

}  // namespace modlp::detail
