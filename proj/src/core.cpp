#include "modlp/core.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace modlp {

atom_id atom_table::intern(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return it->second;
  atom_id id = static_cast<atom_id>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return id;
}

std::optional<atom_id> atom_table::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

workspace make_workspace() { return std::make_shared<atom_table>(); }

bool is_reserved_name(std::string_view name) {
  return !name.empty() && name.front() == '@';
}

atom_set::atom_set(std::vector<atom_id> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool atom_set::contains(atom_id id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool atom_set::subset_of(const atom_set& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool atom_set::intersects(const atom_set& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    (*a < *b) ? ++a : ++b;
  }
  return false;
}

void atom_set::insert(atom_id id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

atom_set operator|(const atom_set& a, const atom_set& b) {
  atom_set r;
  r.ids_.reserve(a.size() + b.size());
  std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                 std::back_inserter(r.ids_));
  return r;
}

atom_set operator&(const atom_set& a, const atom_set& b) {
  atom_set r;
  std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                        std::back_inserter(r.ids_));
  return r;
}

atom_set operator-(const atom_set& a, const atom_set& b) {
  atom_set r;
  std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                      std::back_inserter(r.ids_));
  return r;
}

std::vector<std::string> sorted_names(const atom_table& tbl, const atom_set& s) {
  std::vector<std::string> names;
  names.reserve(s.size());
  for (atom_id id : s) names.push_back(tbl.name(id));
  std::sort(names.begin(), names.end());
  return names;
}

std::string show_atoms(const atom_table& tbl, const atom_set& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& name : sorted_names(tbl, s)) {
    if (!first) out << ", ";
    out << name;
    first = false;
  }
  out << '}';
  return out.str();
}

namespace {

std::vector<std::string> name_key(const atom_table& tbl, const atom_set& s) {
  return sorted_names(tbl, s);
}

// (head names, positive body names, negative body names), each sorted
using rule_key = std::array<std::vector<std::string>, 3>;

rule_key key_of(const atom_table& tbl, const rule& r) {
  return {name_key(tbl, r.head), name_key(tbl, r.pos_body), name_key(tbl, r.neg_body)};
}

}  // namespace

std::vector<rule> canonical_rules(const atom_table& tbl, std::vector<rule> rules) {
  std::vector<std::pair<rule_key, rule>> keyed;
  keyed.reserve(rules.size());
  for (auto& r : rules) keyed.emplace_back(key_of(tbl, r), std::move(r));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<rule> out;
  out.reserve(keyed.size());
  for (auto& [key, r] : keyed) out.push_back(std::move(r));
  return out;
}

atom_set rule_atoms(const std::vector<rule>& rules) {
  atom_set all;
  for (const auto& r : rules) all = all | r.atoms();
  return all;
}

dlp_function::dlp_function(workspace ws, std::vector<rule> rules, atom_set input,
                           atom_set output, atom_set hidden)
    : ws_(std::move(ws)),
      rules_(canonical_rules(*ws_, std::move(rules))),
      input_(std::move(input)),
      output_(std::move(output)),
      hidden_(std::move(hidden)) {}

dlp_function dlp_function::validate(workspace ws, std::vector<rule> rules,
                                    atom_set input, atom_set output, atom_set hidden,
                                    bool allow_reserved) {
  const atom_table& tbl = *ws;
  atom_set overlap = (input & output) | (input & hidden) | (output & hidden);
  if (!overlap.empty())
    fail(errc::overlapping_signature,
         "interface sets overlap on " + show_atoms(tbl, overlap));
  atom_set signature = input | output | hidden;
  if (!allow_reserved) {
    for (atom_id id : signature)
      if (is_reserved_name(tbl.name(id)))
        fail(errc::reserved_atom, "atom '" + tbl.name(id) + "' uses the reserved '@' prefix");
  }
  atom_set defined = output | hidden;
  for (const auto& r : rules) {
    atom_set foreign = r.atoms() - signature;
    if (!foreign.empty())
      fail(errc::foreign_atom,
           "rule mentions " + show_atoms(tbl, foreign) + " outside the interface");
    if (!r.head.empty() && !r.head.intersects(defined))
      fail(errc::input_only_head,
           "head " + show_atoms(tbl, r.head) + " contains no output or hidden atom");
  }
  return dlp_function(std::move(ws), std::move(rules), std::move(input),
                      std::move(output), std::move(hidden));
}

bool dlp_function::positive() const {
  for (const auto& r : rules_)
    if (!r.neg_body.empty()) return false;
  return true;
}

bool dlp_function::operator==(const dlp_function& other) const {
  return input_ == other.input_ && output_ == other.output_ &&
         hidden_ == other.hidden_ && rules_ == other.rules_;
}

dlp_function empty_module(workspace ws) {
  return dlp_function::validate(std::move(ws), {}, {}, {}, {});
}

dlp_function transfer(const dlp_function& fn, const workspace& target) {
  const atom_table& src = fn.table();
  auto move_set = [&](const atom_set& s) {
    atom_set out;
    for (atom_id id : s) out.insert(target->intern(src.name(id)));
    return out;
  };
  std::vector<rule> rules;
  rules.reserve(fn.rules().size());
  for (const auto& r : fn.rules())
    rules.push_back({move_set(r.head), move_set(r.pos_body), move_set(r.neg_body)});
  return dlp_function::validate(target, std::move(rules), move_set(fn.input()),
                                move_set(fn.output()), move_set(fn.hidden()),
                                /*allow_reserved=*/true);
}

model_set::model_set(workspace ws, std::vector<interpretation> models)
    : ws_(std::move(ws)) {
  std::vector<std::pair<std::vector<std::string>, interpretation>> keyed;
  keyed.reserve(models.size());
  for (auto& m : models) keyed.emplace_back(sorted_names(*ws_, m), std::move(m));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  models_.reserve(keyed.size());
  for (auto& [key, m] : keyed) models_.push_back(std::move(m));
}

bool model_set::contains(const interpretation& m) const {
  return std::find(models_.begin(), models_.end(), m) != models_.end();
}

std::vector<rule> defining_rules(const dlp_function& fn, const atom_set& s) {
  std::vector<rule> out;
  for (const auto& r : fn.rules())
    if (r.head.intersects(s)) out.push_back(r);
  return out;
}

std::vector<rule> integrity_constraints(const std::vector<rule>& rules) {
  std::vector<rule> out;
  for (const auto& r : rules)
    if (r.is_constraint()) out.push_back(r);
  return out;
}

atom_set project(const interpretation& m, part p, const dlp_function& fn) {
  if (!m.subset_of(fn.atoms()))
    fail(errc::out_of_signature,
         "interpretation mentions " + show_atoms(fn.table(), m - fn.atoms()));
  switch (p) {
    case part::input: return m & fn.input();
    case part::output: return m & fn.output();
    case part::visible: return m & fn.visible();
    case part::hidden: return m & fn.hidden();
  }
  return {};
}

dlp_function rename_atoms(const dlp_function& fn,
                          const std::vector<std::pair<atom_id, atom_id>>& mapping) {
  const atom_table& tbl = fn.table();
  std::unordered_map<atom_id, atom_id> map;
  atom_set sources;
  atom_set images;
  for (auto [from, to] : mapping) {
    if (!map.emplace(from, to).second && map[from] != to)
      fail(errc::name_clash, "atom '" + tbl.name(from) + "' mapped twice");
    sources.insert(from);
    if (from != to && images.contains(to))
      fail(errc::name_clash, "two atoms mapped to '" + tbl.name(to) + "'");
    images.insert(to);
  }
  atom_set signature = fn.atoms();
  bool adds_reserved = false;
  for (auto [from, to] : mapping) {
    if (to == from) continue;
    if (signature.contains(to) && !sources.contains(to))
      fail(errc::name_clash, "image '" + tbl.name(to) + "' already names an atom");
    if (is_reserved_name(tbl.name(to))) adds_reserved = true;
  }
  if (adds_reserved)
    fail(errc::reserved_atom, "renaming may not introduce '@' atoms");

  auto move_set = [&](const atom_set& s) {
    atom_set out;
    for (atom_id id : s) {
      auto it = map.find(id);
      out.insert(it == map.end() ? id : it->second);
    }
    return out;
  };
  std::vector<rule> rules;
  rules.reserve(fn.rules().size());
  for (const auto& r : fn.rules())
    rules.push_back({move_set(r.head), move_set(r.pos_body), move_set(r.neg_body)});
  bool had_reserved = false;
  for (atom_id id : signature)
    if (is_reserved_name(tbl.name(id))) had_reserved = true;
  return dlp_function::validate(fn.ws(), std::move(rules), move_set(fn.input()),
                                move_set(fn.output()), move_set(fn.hidden()),
                                had_reserved);
}

}  // namespace modlp
