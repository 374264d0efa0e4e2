#include "modlp/qbf.hpp"

#include <algorithm>
#include <cctype>

#include "modlp/algebra.hpp"
#include "modlp/semantics.hpp"

namespace modlp {

namespace {

struct qbf_line {
  std::string keyword;
  std::vector<std::pair<bool, std::string>> items;  // (negated, name)
  int lineno = 0;
};

std::vector<qbf_line> lex_qbf(std::string_view text) {
  std::vector<qbf_line> lines;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++lineno;
    if (auto cut = line.find('%'); cut != std::string_view::npos) line = line.substr(0, cut);

    std::size_t pos = 0;
    auto skip = [&] { while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos; };
    skip();
    if (pos < line.size()) {
      qbf_line out;
      out.lineno = lineno;
      std::size_t kw_start = pos;
      while (pos < line.size() && std::isalpha(static_cast<unsigned char>(line[pos]))) ++pos;
      out.keyword = std::string(line.substr(kw_start, pos - kw_start));
      if (pos >= line.size() || line[pos] != ':')
        fail(errc::syntax_error, "line " + std::to_string(lineno) +
                                     ": expected 'exists:', 'forall:' or 'disjunct:'");
      ++pos;
      while (true) {
        skip();
        if (pos >= line.size()) break;
        bool neg = false;
        if (line[pos] == '-') {
          neg = true;
          ++pos;
        }
        if (pos >= line.size() || !std::islower(static_cast<unsigned char>(line[pos])))
          fail(errc::syntax_error, "line " + std::to_string(lineno) +
                                       ": expected a variable (lowercase identifier)");
        std::size_t vs = pos;
        while (pos < line.size() &&
               (std::isalnum(static_cast<unsigned char>(line[pos])) || line[pos] == '_'))
          ++pos;
        out.items.emplace_back(neg, std::string(line.substr(vs, pos - vs)));
      }
      lines.push_back(std::move(out));
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

}  // namespace

qbf_instance parse_qbf(std::string_view text, workspace ws) {
  std::vector<qbf_line> lines = lex_qbf(text);
  qbf_instance q;
  q.ws = ws;
  bool saw_exists = false, saw_forall = false;
  for (const auto& ln : lines) {
    auto block = [&](atom_set& into, bool& seen) {
      if (seen)
        fail(errc::syntax_error, "line " + std::to_string(ln.lineno) + ": duplicate '" +
                                     ln.keyword + ":' line");
      seen = true;
      for (const auto& [neg, name] : ln.items) {
        if (neg)
          fail(errc::syntax_error, "line " + std::to_string(ln.lineno) +
                                       ": quantifier blocks list plain variables");
        if (name == "u")
          fail(errc::syntax_error, "line " + std::to_string(ln.lineno) +
                                       ": variable name 'u' is reserved");
        atom_id id = ws->intern(name);
        if (into.contains(id) || q.exists_vars.contains(id) || q.forall_vars.contains(id))
          fail(errc::syntax_error, "line " + std::to_string(ln.lineno) + ": variable '" +
                                       name + "' declared twice");
        into.insert(id);
      }
    };
    if (ln.keyword == "exists") {
      block(q.exists_vars, saw_exists);
    } else if (ln.keyword == "forall") {
      block(q.forall_vars, saw_forall);
    } else if (ln.keyword == "disjunct") {
      qbf_disjunct d;
      for (const auto& [neg, name] : ln.items) {
        auto id = ws->find(name);
        if (!id || (!q.exists_vars.contains(*id) && !q.forall_vars.contains(*id)))
          fail(errc::block_violation, "line " + std::to_string(ln.lineno) + ": variable '" +
                                          name + "' is in neither quantifier block");
        bool existential = q.exists_vars.contains(*id);
        atom_set& into = existential ? (neg ? d.neg_exists : d.pos_exists)
                                     : (neg ? d.neg_forall : d.pos_forall);
        atom_set& other = existential ? (neg ? d.pos_exists : d.neg_exists)
                                      : (neg ? d.pos_forall : d.neg_forall);
        if (other.contains(*id))
          fail(errc::syntax_error, "line " + std::to_string(ln.lineno) + ": variable '" +
                                       name + "' occurs with both signs in one disjunct");
        into.insert(*id);
      }
      if (std::find(q.disjuncts.begin(), q.disjuncts.end(), d) == q.disjuncts.end())
        q.disjuncts.push_back(std::move(d));
    } else {
      fail(errc::syntax_error, "line " + std::to_string(ln.lineno) + ": unknown keyword '" +
                                   ln.keyword + ":'");
    }
  }
  atom_set used;
  for (const auto& d : q.disjuncts)
    used = used | d.neg_exists | d.pos_exists | d.neg_forall | d.pos_forall;
  atom_set unused = (q.exists_vars | q.forall_vars) - used;
  if (!unused.empty())
    fail(errc::unused_variable,
         show_atoms(*ws, unused) + " never appear in any disjunct");
  return q;
}

namespace {

std::vector<atom_id> act_atoms(const qbf_instance& q) {
  std::vector<atom_id> acts;
  for (std::size_t i = 0; i < q.disjuncts.size(); ++i)
    acts.push_back(q.ws->intern("act(" + std::to_string(i + 1) + ")"));
  return acts;
}

}  // namespace

dlp_function encode_sat(const qbf_instance& q) {
  std::vector<atom_id> acts = act_atoms(q);
  std::vector<rule> rules;
  for (std::size_t i = 0; i < q.disjuncts.size(); ++i) {
    const qbf_disjunct& d = q.disjuncts[i];
    const atom_set act({acts[i]});
    for (atom_id x : d.neg_exists) rules.push_back({{}, atom_set({x}) | act, {}});
    for (atom_id x : d.pos_exists) rules.push_back({atom_set({x}), act, {}});
    rules.push_back({d.neg_exists, d.pos_exists, act});
  }
  return dlp_function::validate(q.ws, std::move(rules), atom_set(acts), q.exists_vars, {});
}

dlp_function encode_unsat(const qbf_instance& q) {
  std::vector<atom_id> acts = act_atoms(q);
  atom_id u = q.ws->intern("u");
  std::vector<rule> rules;
  for (std::size_t i = 0; i < q.disjuncts.size(); ++i) {
    const qbf_disjunct& d = q.disjuncts[i];
    rules.push_back({d.neg_forall | atom_set({u}), d.pos_forall | atom_set({acts[i]}), {}});
  }
  for (atom_id y : q.forall_vars) rules.push_back({atom_set({y}), atom_set({u}), {}});
  rules.push_back({atom_set({u}), {}, atom_set({u})});
  return dlp_function::validate(q.ws, std::move(rules), atom_set(acts), {},
                                q.forall_vars | atom_set({u}));
}

qbf_verdict evaluate_qbf(const qbf_instance& q, unsigned cap) {
  dlp_function sat = encode_sat(q);
  dlp_function unsat = encode_unsat(q);
  std::size_t joined_size = (sat.atoms() | unsat.atoms()).size();
  if (joined_size > cap)
    fail(errc::signature_too_large,
         "evaluate_qbf: " + std::to_string(joined_size) + " atoms exceed the cap of " +
             std::to_string(cap));
  // either side empty already refutes validity
  if (!has_stable_model(sat, cap) || !has_stable_model(unsat, cap)) return {false, {}};
  dlp_function joined = join(sat, unsat);
  if (auto m = first_stable_model(joined, cap)) return {true, *m & q.exists_vars};
  return {false, {}};
}

bool qbf_brute_oracle(const qbf_instance& q) {
  std::vector<atom_id> xs(q.exists_vars.begin(), q.exists_vars.end());
  std::vector<atom_id> ys(q.forall_vars.begin(), q.forall_vars.end());
  if (xs.size() + ys.size() > 20)
    fail(errc::signature_too_large, "qbf_brute_oracle: more than 20 variables");
  auto covered = [&](const atom_set& mx, const atom_set& my) {
    for (const auto& d : q.disjuncts) {
      if (d.neg_exists.intersects(mx)) continue;
      if (!d.pos_exists.subset_of(mx)) continue;
      if (d.neg_forall.intersects(my)) continue;
      if (!d.pos_forall.subset_of(my)) continue;
      return true;
    }
    return false;
  };
  for (std::uint64_t mx = 0; mx < (std::uint64_t{1} << xs.size()); ++mx) {
    atom_set x_set;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (mx & (std::uint64_t{1} << i)) x_set.insert(xs[i]);
    bool all = true;
    for (std::uint64_t my = 0; all && my < (std::uint64_t{1} << ys.size()); ++my) {
      atom_set y_set;
      for (std::size_t i = 0; i < ys.size(); ++i)
        if (my & (std::uint64_t{1} << i)) y_set.insert(ys[i]);
      all = covered(x_set, y_set);
    }
    if (all) return true;
  }
  return false;
}

}  // namespace modlp
