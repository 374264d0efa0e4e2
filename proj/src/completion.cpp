#include "modlp/completion.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "dense.hpp"

namespace modlp {

namespace {

struct lit_key {
  std::string name;
  bool negated;
  auto operator<=>(const lit_key&) const = default;
};

lit_key key_of(const atom_table& tbl, literal l) { return {tbl.name(l.atom), l.negated}; }

std::vector<lit_key> key_of(const atom_table& tbl, const literal_term& t) {
  std::vector<lit_key> k;
  k.reserve(t.size());
  for (literal l : t) k.push_back(key_of(tbl, l));
  return k;
}

literal_term canonical_term(const atom_table& tbl, literal_term t) {
  std::sort(t.begin(), t.end(), [&](literal a, literal b) {
    return key_of(tbl, a) < key_of(tbl, b);
  });
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

std::vector<literal_term> canonical_terms(const atom_table& tbl,
                                          std::vector<literal_term> terms) {
  for (auto& t : terms) t = canonical_term(tbl, std::move(t));
  std::sort(terms.begin(), terms.end(), [&](const literal_term& a, const literal_term& b) {
    return key_of(tbl, a) < key_of(tbl, b);
  });
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

literal_term term_of(const atom_set& pos, const atom_set& neg1, const atom_set& neg2) {
  literal_term t;
  for (atom_id id : pos) t.push_back({id, false});
  for (atom_id id : neg1) t.push_back({id, true});
  for (atom_id id : neg2) t.push_back({id, true});
  return t;
}

prop_formula canonical_formula(const atom_table& tbl, prop_formula f) {
  f.antecedent = canonical_term(tbl, std::move(f.antecedent));
  f.consequent = canonical_terms(tbl, std::move(f.consequent));
  return f;
}

using formula_key = std::pair<std::vector<lit_key>, std::vector<std::vector<lit_key>>>;

formula_key key_of(const atom_table& tbl, const prop_formula& f) {
  std::vector<std::vector<lit_key>> ck;
  ck.reserve(f.consequent.size());
  for (const auto& t : f.consequent) ck.push_back(key_of(tbl, t));
  return {key_of(tbl, f.antecedent), std::move(ck)};
}

std::vector<prop_formula> canonical_set(const atom_table& tbl,
                                        std::vector<prop_formula> fs) {
  return canonical_formula_set(tbl, std::move(fs));
}

}  // namespace

std::vector<prop_formula> canonical_formula_set(const atom_table& tbl,
                                                std::vector<prop_formula> fs) {
  std::vector<std::pair<formula_key, prop_formula>> keyed;
  keyed.reserve(fs.size());
  for (auto& f : fs) {
    auto cf = canonical_formula(tbl, std::move(f));
    keyed.emplace_back(key_of(tbl, cf), std::move(cf));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<prop_formula> out;
  out.reserve(keyed.size());
  for (auto& [k, f] : keyed) out.push_back(std::move(f));
  return out;
}

dep_graph positive_dependency_graph(const dlp_function& fn) {
  const atom_table& tbl = fn.table();
  dep_graph g;
  g.nodes = fn.defined();
  std::vector<std::pair<atom_id, atom_id>> edges;
  for (const auto& r : fn.rules()) {
    atom_set heads = r.head & g.nodes;
    atom_set bodies = r.pos_body & g.nodes;
    for (atom_id b : bodies)
      for (atom_id a : heads) edges.emplace_back(b, a);
  }
  std::sort(edges.begin(), edges.end(), [&](const auto& x, const auto& y) {
    return std::pair(tbl.name(x.first), tbl.name(x.second)) <
           std::pair(tbl.name(y.first), tbl.name(y.second));
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  return g;
}

std::size_t scc_partition::index_of(atom_id id) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].contains(id)) return i;
  return npos;
}

namespace {

struct tarjan {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> index, low, stack_pos;
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int counter = 0;

  explicit tarjan(const std::vector<std::vector<int>>& a)
      : adj(a), index(a.size(), -1), low(a.size(), 0), stack_pos(a.size(), -1) {}

  void visit(int v) {
    index[v] = low[v] = counter++;
    stack_pos[v] = static_cast<int>(stack.size());
    stack.push_back(v);
    for (int w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (stack_pos[w] >= 0) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> comp;
      while (true) {
        int w = stack.back();
        stack.pop_back();
        stack_pos[w] = -1;
        comp.push_back(w);
        if (w == v) break;
      }
      sccs.push_back(std::move(comp));
    }
  }
};

}  // namespace

scc_partition strongly_connected_components(const dlp_function& fn) {
  const atom_table& tbl = fn.table();
  dep_graph g = positive_dependency_graph(fn);

  // name-sorted node list keeps everything downstream deterministic
  std::vector<atom_id> nodes(g.nodes.begin(), g.nodes.end());
  std::sort(nodes.begin(), nodes.end(),
            [&](atom_id a, atom_id b) { return tbl.name(a) < tbl.name(b); });
  std::unordered_map<atom_id, int> pos;
  for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> adj(nodes.size());
  for (auto [b, a] : g.edges) adj[pos[b]].push_back(pos[a]);

  tarjan t(adj);
  for (std::size_t v = 0; v < nodes.size(); ++v)
    if (t.index[v] < 0) t.visit(static_cast<int>(v));

  scc_partition p;
  for (auto& comp : t.sccs) {
    atom_set s;
    for (int v : comp) s.insert(nodes[v]);
    p.components.push_back(std::move(s));
  }
  std::sort(p.components.begin(), p.components.end(),
            [&](const atom_set& a, const atom_set& b) {
              return sorted_names(tbl, a) < sorted_names(tbl, b);
            });

  // lifted order: reachability between components, reflexively closed
  std::size_t n = p.components.size();
  std::vector<int> comp_of(nodes.size());
  for (std::size_t i = 0; i < n; ++i)
    for (atom_id id : p.components[i]) comp_of[pos[id]] = static_cast<int>(i);
  p.leq.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) p.leq[i][i] = 1;
  for (auto [b, a] : g.edges) p.leq[comp_of[pos[b]]][comp_of[pos[a]]] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq[k][j]) p.leq[i][j] = 1;
  return p;
}

std::vector<atom_set> enumerate_loops(const dlp_function& fn, unsigned scc_cap) {
  const atom_table& tbl = fn.table();
  scc_partition p = strongly_connected_components(fn);
  std::vector<atom_set> loops;
  for (const auto& comp : p.components) {
    if (comp.size() > scc_cap)
      fail(errc::component_too_large,
           "component " + show_atoms(tbl, comp) + " exceeds the loop cap of " +
               std::to_string(scc_cap));
    std::vector<atom_id> ids(comp.begin(), comp.end());
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << ids.size()); ++m) {
      atom_set loop;
      for (std::size_t i = 0; i < ids.size(); ++i)
        if (m & (std::uint64_t{1} << i)) loop.insert(ids[i]);
      loops.push_back(std::move(loop));
    }
  }
  std::sort(loops.begin(), loops.end(), [&](const atom_set& a, const atom_set& b) {
    return sorted_names(tbl, a) < sorted_names(tbl, b);
  });
  return loops;
}

std::vector<literal_term> supporting_formulas(const dlp_function& fn, atom_id a) {
  if (!fn.defined().contains(a))
    fail(errc::not_defined_here,
         "atom '" + fn.table().name(a) + "' is not an output or hidden atom");
  std::vector<literal_term> terms;
  for (const auto& r : fn.rules()) {
    if (!r.head.contains(a)) continue;
    atom_set rest = r.head;
    rest = rest - atom_set({a});
    terms.push_back(term_of(r.pos_body, r.neg_body, rest));
  }
  return canonical_terms(fn.table(), std::move(terms));
}

std::vector<literal_term> ext_supporting_formulas(const dlp_function& fn,
                                                  const atom_set& loop) {
  scc_partition p = strongly_connected_components(fn);
  bool is_loop = !loop.empty();
  if (is_loop) {
    std::size_t c = p.index_of(*loop.begin());
    is_loop = c != scc_partition::npos && loop.subset_of(p.components[c]);
  }
  if (!is_loop)
    fail(errc::not_a_loop, show_atoms(fn.table(), loop) +
                               " is not a non-empty subset of a strongly connected component");
  std::vector<literal_term> terms;
  for (const auto& r : fn.rules()) {
    if (!r.head.intersects(loop)) continue;
    if (r.pos_body.intersects(loop)) continue;
    terms.push_back(term_of(r.pos_body, r.neg_body, r.head - loop));
  }
  return canonical_terms(fn.table(), std::move(terms));
}

std::vector<prop_formula> completion(const dlp_function& fn) {
  std::vector<prop_formula> fs;
  for (const auto& r : fn.rules()) {
    prop_formula f;
    f.antecedent = term_of(r.pos_body, r.neg_body, {});
    for (atom_id a : r.head) f.consequent.push_back({{a, false}});
    fs.push_back(std::move(f));
  }
  for (atom_id a : fn.defined()) {
    prop_formula f;
    f.antecedent = {{a, false}};
    f.consequent = supporting_formulas(fn, a);
    fs.push_back(std::move(f));
  }
  return canonical_set(fn.table(), std::move(fs));
}

std::vector<prop_formula> loop_formulas(const dlp_function& fn, unsigned scc_cap) {
  std::vector<prop_formula> fs;
  for (const auto& loop : enumerate_loops(fn, scc_cap)) {
    prop_formula f;
    for (atom_id a : loop) f.antecedent.push_back({a, false});
    f.consequent = ext_supporting_formulas(fn, loop);
    fs.push_back(std::move(f));
  }
  return canonical_set(fn.table(), std::move(fs));
}

bool is_tight(const dlp_function& fn) {
  dep_graph g = positive_dependency_graph(fn);
  for (auto [b, a] : g.edges)
    if (b == a) return false;
  scc_partition p = strongly_connected_components(fn);
  for (const auto& comp : p.components)
    if (comp.size() > 1) return false;
  return true;
}

bool satisfies(const interpretation& m, const prop_formula& f) {
  for (literal l : f.antecedent)
    if (m.contains(l.atom) == l.negated) return true;
  for (const auto& t : f.consequent) {
    bool all = true;
    for (literal l : t)
      if (m.contains(l.atom) == l.negated) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

model_set stable_models_via_completion(const dlp_function& fn, unsigned cap,
                                       unsigned scc_cap) {
  std::vector<prop_formula> theory = completion(fn);
  if (!is_tight(fn)) {
    auto lf = loop_formulas(fn, scc_cap);
    theory.insert(theory.end(), lf.begin(), lf.end());
  }

  detail::dense_module d = detail::dense_module::build(fn, cap, "stable_models_via_completion");
  struct dense_formula {
    detail::mask ant_pos = 0, ant_neg = 0;
    std::vector<std::pair<detail::mask, detail::mask>> terms;  // (pos, neg)
    bool unconditional = false;                                // empty antecedent
  };
  std::vector<dense_formula> compiled;
  compiled.reserve(theory.size());
  for (const auto& f : theory) {
    dense_formula df;
    for (literal l : f.antecedent)
      (l.negated ? df.ant_neg : df.ant_pos) |= d.bit_of(l.atom);
    df.unconditional = f.antecedent.empty();
    for (const auto& t : f.consequent) {
      detail::mask tp = 0, tn = 0;
      for (literal l : t) (l.negated ? tn : tp) |= d.bit_of(l.atom);
      df.terms.emplace_back(tp, tn);
    }
    compiled.push_back(std::move(df));
  }

  auto holds = [](const dense_formula& df, detail::mask m) {
    if (!df.unconditional && ((df.ant_pos & ~m) != 0 || (df.ant_neg & m) != 0)) return true;
    for (auto [tp, tn] : df.terms)
      if ((tp & ~m) == 0 && (tn & m) == 0) return true;
    return false;
  };

  std::vector<interpretation> out;
  for (detail::mask m = 0;; ++m) {
    bool all = true;
    for (const auto& df : compiled)
      if (!holds(df, m)) {
        all = false;
        break;
      }
    if (all) out.push_back(d.set_of(m));
    if (m == d.all) break;
  }
  return model_set(fn.ws(), std::move(out));
}

std::string render_formula(const atom_table& tbl, const prop_formula& f) {
  std::ostringstream out;
  auto put_lit = [&](literal l) {
    if (l.negated) out << '-';
    out << tbl.name(l.atom);
  };
  if (!f.antecedent.empty()) {
    bool first = true;
    for (literal l : f.antecedent) {
      if (!first) out << " & ";
      put_lit(l);
      first = false;
    }
    out << " -> ";
  }
  if (f.consequent.empty()) {
    out << "_|_";
  } else {
    bool first_term = true;
    for (const auto& t : f.consequent) {
      if (!first_term) out << " | ";
      if (t.empty()) out << 'T';  // the empty conjunction, e.g. support by a fact
      bool first = true;
      for (literal l : t) {
        if (!first) out << " & ";
        put_lit(l);
        first = false;
      }
      first_term = false;
    }
  }
  return out.str();
}

}  // namespace modlp
