#include "modlp/shift.hpp"

#include "modlp/completion.hpp"

namespace modlp {

namespace {

void shift_into(std::vector<rule>& out, const rule& r, const scc_partition& sccs,
                const atom_set& body_name) {
  for (const auto& s : sccs.components) {
    atom_set kept = r.head & s;
    if (kept.empty()) continue;
    atom_set shifted = r.head - s;
    if (body_name.empty()) {
      out.push_back({kept, r.pos_body, r.neg_body | shifted});
    } else {
      out.push_back({kept, body_name, shifted});
    }
  }
}

}  // namespace

dlp_function general_shift(const dlp_function& fn) {
  scc_partition sccs = strongly_connected_components(fn);
  std::vector<rule> rules = integrity_constraints(fn.rules());
  for (const auto& r : fn.rules()) {
    if (r.is_constraint()) continue;
    shift_into(rules, r, sccs, {});
  }
  bool reserved = false;
  for (atom_id id : fn.atoms())
    if (is_reserved_name(fn.table().name(id))) reserved = true;
  return dlp_function::validate(fn.ws(), std::move(rules), fn.input(), fn.output(),
                                fn.hidden(), reserved);
}

dlp_function general_shift_named(const dlp_function& fn, unsigned min_body) {
  scc_partition sccs = strongly_connected_components(fn);
  std::vector<rule> rules = integrity_constraints(fn.rules());
  atom_set hidden = fn.hidden();
  const atom_set signature = fn.atoms();
  unsigned counter = 0;
  for (const auto& r : fn.rules()) {
    if (r.is_constraint()) continue;
    unsigned met = 0;
    for (const auto& s : sccs.components)
      if (r.head.intersects(s)) ++met;
    bool name_it = met >= 2 && r.pos_body.size() + r.neg_body.size() >= min_body &&
                   min_body != k_no_body_naming;
    if (!name_it) {
      shift_into(rules, r, sccs, {});
      continue;
    }
    atom_id body;
    do {
      body = fn.ws()->intern("@bd_" + std::to_string(counter++));
    } while (signature.contains(body));
    hidden.insert(body);
    rules.push_back({atom_set({body}), r.pos_body, r.neg_body});
    shift_into(rules, r, sccs, atom_set({body}));
  }
  return dlp_function::validate(fn.ws(), std::move(rules), fn.input(), fn.output(),
                                std::move(hidden), /*allow_reserved=*/true);
}

}  // namespace modlp
