#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modlp/error.hpp"

namespace modlp {

using atom_id = std::uint32_t;

// Interned atom names. Interning is append-only and ids are stable, so every
// value built over the same table can share sets by id. One table acts as the
// workspace for everything that may ever be combined (parsed files, derived
// modules, model sets).
class atom_table {
 public:
  atom_id intern(std::string_view name);
  std::optional<atom_id> find(std::string_view name) const;
  const std::string& name(atom_id id) const { return names_[id]; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, atom_id> index_;
};

using workspace = std::shared_ptr<atom_table>;
workspace make_workspace();

// Names starting with '@' are reserved for generated atoms.
bool is_reserved_name(std::string_view name);

// Finite atom set, kept as a sorted unique id vector.
class atom_set {
 public:
  atom_set() = default;
  explicit atom_set(std::vector<atom_id> ids);

  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  bool contains(atom_id id) const;
  bool subset_of(const atom_set& other) const;
  bool intersects(const atom_set& other) const;
  void insert(atom_id id);

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<atom_id>& ids() const { return ids_; }

  friend atom_set operator|(const atom_set& a, const atom_set& b);
  friend atom_set operator&(const atom_set& a, const atom_set& b);
  friend atom_set operator-(const atom_set& a, const atom_set& b);
  bool operator==(const atom_set&) const = default;
  auto operator<=>(const atom_set&) const = default;

 private:
  std::vector<atom_id> ids_;
};

// Atom names in byte order; the canonical order used by all rendering.
std::vector<std::string> sorted_names(const atom_table& tbl, const atom_set& s);
// "{a, b, c}" with names sorted; "{}" when empty.
std::string show_atoms(const atom_table& tbl, const atom_set& s);

struct rule {
  atom_set head;
  atom_set pos_body;
  atom_set neg_body;

  bool is_constraint() const { return head.empty(); }
  bool is_fact() const { return pos_body.empty() && neg_body.empty(); }
  atom_set atoms() const { return head | pos_body | neg_body; }
  bool operator==(const rule&) const = default;
};

// Rules sorted by their name-based key with duplicates collapsed.
std::vector<rule> canonical_rules(const atom_table& tbl, std::vector<rule> rules);
atom_set rule_atoms(const std::vector<rule>& rules);

enum class part { input, output, visible, hidden };

// A disjunctive program together with its disjoint input/output/hidden
// interface. Values are immutable; rule lists are canonical.
class dlp_function {
 public:
  // Checked constructor. Verifies the interface is pairwise disjoint, every
  // rule atom lies inside it, and no non-empty head sits entirely in the
  // input signature. Reserved '@' names are rejected unless allow_reserved
  // (operations that mint generated atoms set it).
  static dlp_function validate(workspace ws, std::vector<rule> rules,
                               atom_set input, atom_set output, atom_set hidden,
                               bool allow_reserved = false);

  const workspace& ws() const { return ws_; }
  const atom_table& table() const { return *ws_; }
  const std::vector<rule>& rules() const { return rules_; }
  const atom_set& input() const { return input_; }
  const atom_set& output() const { return output_; }
  const atom_set& hidden() const { return hidden_; }
  atom_set atoms() const { return input_ | output_ | hidden_; }
  atom_set visible() const { return input_ | output_; }
  // The atoms this module may define: output ∪ hidden.
  atom_set defined() const { return output_ | hidden_; }

  bool positive() const;

  // Structural equality; meaningful for values over the same workspace.
  bool operator==(const dlp_function& other) const;

 private:
  dlp_function(workspace ws, std::vector<rule> rules, atom_set input,
               atom_set output, atom_set hidden);

  workspace ws_;
  std::vector<rule> rules_;
  atom_set input_;
  atom_set output_;
  atom_set hidden_;
};

dlp_function empty_module(workspace ws);

// Re-intern a value into another workspace by name.
dlp_function transfer(const dlp_function& fn, const workspace& target);

using interpretation = atom_set;

// Set of interpretations in canonical order: models compared by the
// lexicographic order of their sorted name lists, duplicates collapsed.
class model_set {
 public:
  model_set() = default;
  model_set(workspace ws, std::vector<interpretation> models);

  const std::vector<interpretation>& models() const { return models_; }
  const workspace& ws() const { return ws_; }
  std::size_t size() const { return models_.size(); }
  bool empty() const { return models_.empty(); }
  bool contains(const interpretation& m) const;
  bool operator==(const model_set& other) const { return models_ == other.models_; }

 private:
  workspace ws_;
  std::vector<interpretation> models_;
};

// Def_R(S): rules whose head meets S.
std::vector<rule> defining_rules(const dlp_function& fn, const atom_set& s);
// IC(R): rules with empty head.
std::vector<rule> integrity_constraints(const std::vector<rule>& rules);
// Projection of an interpretation onto one interface part.
atom_set project(const interpretation& m, part p, const dlp_function& fn);
// Simultaneous injective substitution over rules and interface.
dlp_function rename_atoms(const dlp_function& fn,
                          const std::vector<std::pair<atom_id, atom_id>>& mapping);

}  // namespace modlp
