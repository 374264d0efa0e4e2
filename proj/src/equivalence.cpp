#include "modlp/equivalence.hpp"

#include <algorithm>
#include <map>

#include "modlp/semantics.hpp"

namespace modlp {

dlp_function hidden_part(const dlp_function& fn) {
  return dlp_function::validate(fn.ws(), defining_rules(fn, fn.hidden()), fn.visible(),
                                fn.hidden(), {}, /*allow_reserved=*/true);
}

namespace {

// all subsets of `atoms` in canonical model order
std::vector<atom_set> canonical_subsets(const workspace& ws, const atom_set& atoms) {
  std::vector<atom_id> ids(atoms.begin(), atoms.end());
  std::vector<atom_set> subsets;
  subsets.reserve(std::size_t{1} << ids.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << ids.size()); ++m) {
    atom_set s;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (m & (std::uint64_t{1} << i)) s.insert(ids[i]);
    subsets.push_back(std::move(s));
  }
  return model_set(ws, std::move(subsets)).models();
}

}  // namespace

eva_result has_eva(const dlp_function& fn, unsigned cap) {
  atom_set visible = fn.visible();
  if (visible.size() > cap)
    fail(errc::signature_too_large,
         "has_eva: " + std::to_string(visible.size()) + " visible atoms exceed the cap of " +
             std::to_string(cap));
  dlp_function hp = hidden_part(fn);
  for (const auto& mv : canonical_subsets(fn.ws(), visible)) {
    if (stable_models(instantiate(hp, mv)).size() != 1) return {false, mv};
  }
  return {true, std::nullopt};
}

rename_scheme make_rename_scheme(const dlp_function& against) {
  const atom_table& tbl = against.table();
  workspace ws = against.ws();
  rename_scheme rs;
  for (atom_id id : against.hidden()) rs.star[id] = ws->intern("@s_" + tbl.name(id));
  for (atom_id id : against.defined()) {
    rs.bullet[id] = ws->intern("@b_" + tbl.name(id));
    rs.circle[id] = ws->intern("@c_" + tbl.name(id));
  }
  rs.unsat = ws->intern("@unsat");
  rs.unsat_b = ws->intern("@unsat_b");
  rs.diff = ws->intern("@diff");
  rs.ok = ws->intern("@ok");
  return rs;
}

namespace {

atom_set mapped(const std::unordered_map<atom_id, atom_id>& map, const atom_set& s) {
  atom_set out;
  for (atom_id id : s) out.insert(map.at(id));
  return out;
}

void require_unrenamed(const dlp_function& fn) {
  for (atom_id id : fn.atoms())
    if (is_reserved_name(fn.table().name(id)))
      fail(errc::reserved_atom,
           "module already carries generated atom '" + fn.table().name(id) + "'");
}

}  // namespace

dlp_function build_hidden(const dlp_function& fn, const rename_scheme& rs) {
  const atom_set vis = fn.visible();
  const atom_set hid = fn.hidden();
  std::vector<rule> rules;
  for (const auto& r : fn.rules()) {
    atom_set head_h = r.head & hid;
    if (head_h.empty()) continue;
    rule out;
    out.head = mapped(rs.star, head_h);
    out.pos_body = (r.pos_body & vis) | mapped(rs.star, r.pos_body & hid);
    out.neg_body = (r.head & vis) | (r.neg_body & vis) | mapped(rs.star, r.neg_body & hid);
    rules.push_back(std::move(out));
  }
  return dlp_function::validate(fn.ws(), std::move(rules), fn.visible(),
                                mapped(rs.star, hid), {}, /*allow_reserved=*/true);
}

dlp_function build_tr(const dlp_function& fn, const rename_scheme& rs) {
  const atom_set vis = fn.visible();
  const atom_set in = fn.input();
  const atom_set out_atoms = fn.output();
  const atom_set hid = fn.hidden();
  const atom_set star_h = mapped(rs.star, hid);
  const atom_set unsat_only = atom_set({rs.unsat});

  std::vector<rule> rules;

  // 1. the candidate fails some rule
  for (const auto& r : fn.rules()) {
    rule g1;
    g1.head = atom_set({rs.unsat});
    g1.pos_body = (r.pos_body & vis) | mapped(rs.star, r.pos_body & hid);
    g1.neg_body = (r.head & vis) | mapped(rs.star, r.head & hid) | (r.neg_body & vis) |
                  mapped(rs.star, r.neg_body & hid);
    rules.push_back(std::move(g1));
  }

  // 2. guess a subset of the candidate over output ∪ hidden
  auto choice = [&](atom_id src, atom_id a) {
    atom_id b = rs.bullet.at(a);
    atom_id c = rs.circle.at(a);
    rules.push_back({atom_set({b}), atom_set({src}), atom_set({c}) | unsat_only});
    rules.push_back({atom_set({c}), atom_set({src}), atom_set({b}) | unsat_only});
  };
  for (atom_id a : out_atoms) choice(a, a);
  for (atom_id a : hid) choice(rs.star.at(a), a);

  // 3. the guessed subset fails the reduct
  for (const auto& r : fn.rules()) {
    rule g3;
    g3.head = atom_set({rs.unsat_b});
    g3.pos_body = (r.pos_body & in) | mapped(rs.bullet, r.pos_body & out_atoms) |
                  mapped(rs.bullet, r.pos_body & hid);
    g3.neg_body = (r.head & in) | mapped(rs.bullet, r.head & out_atoms) |
                  mapped(rs.bullet, r.head & hid) | (r.neg_body & vis) |
                  mapped(rs.star, r.neg_body & hid) | unsat_only;
    rules.push_back(std::move(g3));
  }

  // 4. the subset is proper
  for (atom_id a : out_atoms)
    rules.push_back(
        {atom_set({rs.diff}), atom_set({a}), atom_set({rs.bullet.at(a)}) | unsat_only});
  for (atom_id a : hid)
    rules.push_back({atom_set({rs.diff}), atom_set({rs.star.at(a)}),
                     atom_set({rs.bullet.at(a)}) | unsat_only});

  // 5. verdict wiring
  rules.push_back({atom_set({rs.ok}), unsat_only, {}});
  rules.push_back({atom_set({rs.ok}), atom_set({rs.diff}),
                   atom_set({rs.unsat, rs.unsat_b})});
  rules.push_back({{}, {}, atom_set({rs.ok})});

  atom_set outputs = mapped(rs.bullet, fn.defined()) |
                     atom_set({rs.unsat, rs.unsat_b, rs.diff, rs.ok});
  atom_set hiddens = mapped(rs.circle, fn.defined());
  return dlp_function::validate(fn.ws(), std::move(rules), vis | star_h, std::move(outputs),
                                std::move(hiddens), /*allow_reserved=*/true);
}

namespace {

void require_compatible(const dlp_function& a, const dlp_function& b) {
  if (!(a.input() == b.input()) || !(a.output() == b.output()))
    fail(errc::incompatible, "modules must share input and output signatures");
}

void require_eva(const dlp_function& fn, const char* which, unsigned eva_cap) {
  eva_result ev = has_eva(fn, eva_cap);
  if (!ev.has_eva)
    fail(errc::no_eva, std::string(which) + " lacks enough visible atoms; hidden part is " +
                           "not uniquely stable under input " +
                           show_atoms(fn.table(), *ev.counterexample));
}

}  // namespace

dlp_function eqt(const dlp_function& a, const dlp_function& b, unsigned eva_cap) {
  require_compatible(a, b);
  require_unrenamed(a);
  require_unrenamed(b);
  require_eva(b, "second module", eva_cap);
  rename_scheme rs = make_rename_scheme(b);
  return join(join(a, build_hidden(b, rs)), build_tr(b, rs));
}

namespace {

using projection_counts = std::map<std::vector<std::string>, int>;

projection_counts visible_projections(const dlp_function& fn, const model_set& sm) {
  projection_counts counts;
  const atom_set vis = fn.visible();
  for (const auto& m : sm.models()) ++counts[sorted_names(fn.table(), m & vis)];
  return counts;
}

eq_result direct_check(const dlp_function& a, const dlp_function& b, unsigned cap) {
  model_set sma = stable_models(a, cap);
  model_set smb = stable_models(b, cap);
  projection_counts ca = visible_projections(a, sma);
  projection_counts cb = visible_projections(b, smb);
  if (ca == cb) return {true, std::nullopt};
  // find the projection with surplus models on one side
  for (const auto& [key, n] : ca) {
    auto it = cb.find(key);
    if (it == cb.end() || it->second < n) {
      for (const auto& m : sma.models())
        if (sorted_names(a.table(), m & a.visible()) == key) return {false, {{1, m}}};
    }
  }
  for (const auto& [key, n] : cb) {
    auto it = ca.find(key);
    if (it == ca.end() || it->second < n) {
      for (const auto& m : smb.models())
        if (sorted_names(b.table(), m & b.visible()) == key) return {false, {{2, m}}};
    }
  }
  return {false, std::nullopt};
}

}  // namespace

eq_result modularly_equivalent(const dlp_function& a, const dlp_function& b,
                               eq_method method, unsigned cap) {
  require_compatible(a, b);
  if (method == eq_method::direct) return direct_check(a, b, cap);

  require_eva(a, "first module", k_eva_cap);
  require_eva(b, "second module", k_eva_cap);
  if (auto m = first_stable_model(eqt(a, b), cap))
    return {false, {{1, *m & a.atoms()}}};
  if (auto m = first_stable_model(eqt(b, a), cap))
    return {false, {{2, *m & b.atoms()}}};
  return {true, std::nullopt};
}

eq_result equivalent_in_context(const dlp_function& a, const dlp_function& b,
                                const dlp_function& context, unsigned cap) {
  if (auto m = first_stable_model(join(eqt(a, b), context), cap))
    return {false, {{1, *m & (a.atoms() | context.atoms())}}};
  if (auto m = first_stable_model(join(eqt(b, a), context), cap))
    return {false, {{2, *m & (b.atoms() | context.atoms())}}};
  return {true, std::nullopt};
}

}  // namespace modlp
