#pragma once

#include <string>

#include "modlp/core.hpp"
#include "modlp/semantics.hpp"

namespace modlp {

// Per-component bound for loop enumeration (a component of size n yields
// 2^n - 1 loops).
inline constexpr unsigned k_scc_cap = 12;

// Positive dependency graph over output ∪ hidden; edge (b, a) when some rule
// has a in the head and b in the positive body. Input atoms are excluded.
struct dep_graph {
  atom_set nodes;
  std::vector<std::pair<atom_id, atom_id>> edges;
};

// Strongly connected components plus the lifted dependency order. Components
// are listed by their least atom name; leq[i][j] says components[i] <=
// components[j].
struct scc_partition {
  std::vector<atom_set> components;
  std::vector<std::vector<char>> leq;

  std::size_t index_of(atom_id id) const;  // npos when id is not a node
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

dep_graph positive_dependency_graph(const dlp_function& fn);
scc_partition strongly_connected_components(const dlp_function& fn);

// Every non-empty subset of every component, singletons included.
std::vector<atom_set> enumerate_loops(const dlp_function& fn, unsigned scc_cap = k_scc_cap);

struct literal {
  atom_id atom;
  bool negated = false;
  bool operator==(const literal&) const = default;
};

// Conjunction of literals; canonical form is name-sorted.
using literal_term = std::vector<literal>;

// Shallow implication: a literal conjunction implies a disjunction of literal
// conjunctions. The empty antecedent reads as true, the empty consequent as
// false. Canonical form makes equality of formula sets syntactic.
struct prop_formula {
  std::vector<literal> antecedent;
  std::vector<literal_term> consequent;
  bool operator==(const prop_formula&) const = default;
};

// SuppF(a, Π): one term per rule with a in the head.
std::vector<literal_term> supporting_formulas(const dlp_function& fn, atom_id a);
// ESuppF(L, Π): support reaching L from outside the loop.
std::vector<literal_term> ext_supporting_formulas(const dlp_function& fn, const atom_set& loop);

// Comp(Π): one implication per rule plus one support implication per defined
// atom. Canonical formula set.
std::vector<prop_formula> completion(const dlp_function& fn);
// LF(Π): one implication per loop.
std::vector<prop_formula> loop_formulas(const dlp_function& fn, unsigned scc_cap = k_scc_cap);

bool is_tight(const dlp_function& fn);

// Name-sorted, duplicate-free formula list; the form Comp and LF come in.
std::vector<prop_formula> canonical_formula_set(const atom_table& tbl,
                                                std::vector<prop_formula> fs);

bool satisfies(const interpretation& m, const prop_formula& f);

// Second engine: models of Comp(Π) ∪ LF(Π), with the loop half skipped for
// tight modules.
model_set stable_models_via_completion(const dlp_function& fn, unsigned cap = k_enum_cap,
                                       unsigned scc_cap = k_scc_cap);

// "a & b -> c | d & -e"; "_|_" for the empty consequent; a formula with an
// empty antecedent prints as its consequent alone.
std::string render_formula(const atom_table& tbl, const prop_formula& f);

}  // namespace modlp
