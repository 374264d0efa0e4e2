#include "modlp/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace modlp {

std::string interface_report::describe(const atom_table& tbl) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) out << "; ";
    out << "condition " << v.condition << " on " << show_atoms(tbl, v.witnesses);
    first = false;
  }
  return out.str();
}

interface_report respects_interfaces(const dlp_function& a, const dlp_function& b) {
  interface_report rep;
  auto violated = [&](int cond, atom_set witnesses) {
    rep.ok = false;
    rep.violations.push_back({cond, std::move(witnesses)});
  };

  atom_set leak1 = a.atoms() & b.hidden();
  if (!leak1.empty()) violated(1, leak1);
  atom_set leak2 = b.atoms() & a.hidden();
  if (!leak2.empty()) violated(2, leak2);
  atom_set shared_out = a.output() & b.output();
  if (!shared_out.empty()) violated(3, shared_out);

  std::vector<rule> both = a.rules();
  both.insert(both.end(), b.rules().begin(), b.rules().end());
  both = canonical_rules(a.table(), std::move(both));
  auto def_of = [](const std::vector<rule>& rules, const atom_set& s) {
    std::vector<rule> out;
    for (const auto& r : rules)
      if (r.head.intersects(s)) out.push_back(r);
    return out;
  };
  auto head_gap = [&](const std::vector<rule>& own, const atom_set& outs) {
    // atoms of `outs` that gained defining rules from the other side
    atom_set gap;
    std::vector<rule> mine = def_of(own, outs);
    for (const auto& r : def_of(both, outs))
      if (std::find(mine.begin(), mine.end(), r) == mine.end())
        gap = gap | (r.head & outs);
    return gap;
  };
  atom_set gap4 = head_gap(a.rules(), a.output());
  if (!gap4.empty()) violated(4, gap4);
  atom_set gap5 = head_gap(b.rules(), b.output());
  if (!gap5.empty()) violated(5, gap5);
  return rep;
}

dlp_function compose(const dlp_function& a, const dlp_function& b) {
  interface_report rep = respects_interfaces(a, b);
  if (!rep.ok)
    fail(errc::interface_violation, rep.describe(a.table()));
  std::vector<rule> rules = a.rules();
  rules.insert(rules.end(), b.rules().begin(), b.rules().end());
  atom_set input = (a.input() - b.output()) | (b.input() - a.output());
  return dlp_function::validate(a.ws(), std::move(rules), std::move(input),
                                a.output() | b.output(), a.hidden() | b.hidden(),
                                /*allow_reserved=*/true);
}

namespace {

// first SCC of the composition meeting both output signatures, if any
std::optional<atom_set> dependence_witness(const dlp_function& a, const dlp_function& b,
                                           const dlp_function& composed) {
  scc_partition p = strongly_connected_components(composed);
  for (const auto& comp : p.components)
    if (comp.intersects(a.output()) && comp.intersects(b.output())) return comp;
  return std::nullopt;
}

}  // namespace

bool mutually_dependent(const dlp_function& a, const dlp_function& b) {
  return dependence_witness(a, b, compose(a, b)).has_value();
}

dlp_function join(const dlp_function& a, const dlp_function& b) {
  dlp_function composed = compose(a, b);
  if (auto scc = dependence_witness(a, b, composed))
    fail(errc::mutual_dependence,
         "outputs of both operands meet the component " + show_atoms(a.table(), *scc));
  return composed;
}

dlp_function join_all(const std::vector<dlp_function>& parts) {
  if (parts.empty()) fail(errc::usage, "join needs at least one operand");
  dlp_function acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = join(acc, parts[i]);
  return acc;
}

bool compatible(const interpretation& m1, const dlp_function& f1,
                const interpretation& m2, const dlp_function& f2) {
  if (!m1.subset_of(f1.atoms()))
    fail(errc::out_of_signature,
         "interpretation mentions " + show_atoms(f1.table(), m1 - f1.atoms()));
  if (!m2.subset_of(f2.atoms()))
    fail(errc::out_of_signature,
         "interpretation mentions " + show_atoms(f2.table(), m2 - f2.atoms()));
  return (m1 & f2.visible()) == (m2 & f1.visible());
}

model_set natural_join(const model_set& a1, const dlp_function& f1,
                       const model_set& a2, const dlp_function& f2, bool raw) {
  if (!raw) join(f1, f2);  // the hypothesis of the module theorem
  const atom_set v1 = f1.visible();
  const atom_set v2 = f2.visible();
  std::vector<interpretation> out;
  for (const auto& m1 : a1.models()) {
    atom_set key = m1 & v2;
    for (const auto& m2 : a2.models())
      if (key == (m2 & v1)) out.push_back(m1 | m2);
  }
  return model_set(f1.ws(), std::move(out));
}

dlp_function reveal(const dlp_function& fn, const atom_set& atoms) {
  if (!atoms.subset_of(fn.hidden()))
    fail(errc::not_hidden,
         show_atoms(fn.table(), atoms - fn.hidden()) + " not hidden in this module");
  return dlp_function::validate(fn.ws(), fn.rules(), fn.input(), fn.output() | atoms,
                                fn.hidden() - atoms, /*allow_reserved=*/true);
}

dlp_function hide(const dlp_function& fn, const atom_set& atoms) {
  if (!atoms.subset_of(fn.output()))
    fail(errc::not_output,
         show_atoms(fn.table(), atoms - fn.output()) + " not output in this module");
  return dlp_function::validate(fn.ws(), fn.rules(), fn.input(), fn.output() - atoms,
                                fn.hidden() | atoms, /*allow_reserved=*/true);
}

namespace {

void require_ordinary(const dlp_function& fn, const char* what) {
  if (!fn.input().empty() || !fn.hidden().empty())
    fail(errc::not_ordinary,
         std::string(what) + " needs a module of shape <R, {}, O, {}>");
}

bool closed_under_heads(const dlp_function& fn, const atom_set& u) {
  for (const auto& r : fn.rules())
    if (r.head.intersects(u) && !r.atoms().subset_of(u)) return false;
  return true;
}

}  // namespace

std::vector<atom_set> splitting_sets(const dlp_function& fn, unsigned cap) {
  require_ordinary(fn, "splitting_sets");
  const atom_set out = fn.output();
  if (out.size() > cap || out.size() > 30)
    fail(errc::signature_too_large,
         "splitting_sets: " + std::to_string(out.size()) + " atoms exceed the cap of " +
             std::to_string(std::min(cap, 30u)));
  std::vector<atom_id> ids(out.begin(), out.end());
  std::vector<atom_set> found;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << ids.size()); ++m) {
    atom_set u;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (m & (std::uint64_t{1} << i)) u.insert(ids[i]);
    if (closed_under_heads(fn, u)) found.push_back(std::move(u));
  }
  std::sort(found.begin(), found.end(), [&](const atom_set& a, const atom_set& b) {
    return sorted_names(fn.table(), a) < sorted_names(fn.table(), b);
  });
  return found;
}

std::pair<dlp_function, dlp_function> split(const dlp_function& fn, const atom_set& u) {
  require_ordinary(fn, "split");
  if (!u.subset_of(fn.output()) || !closed_under_heads(fn, u))
    fail(errc::not_a_splitting_set, show_atoms(fn.table(), u) + " is not a splitting set");
  std::vector<rule> bottom, top;
  for (const auto& r : fn.rules())
    (r.atoms().subset_of(u) ? bottom : top).push_back(r);
  dlp_function b = dlp_function::validate(fn.ws(), std::move(bottom), {}, u, {},
                                          /*allow_reserved=*/true);
  dlp_function t = dlp_function::validate(fn.ws(), std::move(top), u, fn.output() - u, {},
                                          /*allow_reserved=*/true);
  return {std::move(b), std::move(t)};
}

}  // namespace modlp
