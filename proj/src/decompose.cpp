#include "modlp/decompose.hpp"

#include <algorithm>
#include <numeric>

namespace modlp {

namespace {

struct component_view {
  scc_partition sccs;
  std::vector<atom_set> inputs;   // per component: At(Def_R(S)) \ S
  std::vector<atom_set> hiddens;  // per component: S ∩ H
};

component_view analyze(const dlp_function& fn) {
  component_view v;
  v.sccs = strongly_connected_components(fn);
  for (const auto& s : v.sccs.components) {
    atom_set def_atoms = rule_atoms(defining_rules(fn, s));
    v.inputs.push_back(def_atoms - s);
    v.hiddens.push_back(s & fn.hidden());
  }
  return v;
}

std::vector<std::pair<std::size_t, std::size_t>> conflict_pairs(const dlp_function& fn,
                                                                const component_view& v) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t n = v.sccs.components.size();
  std::vector<rule> constraints = integrity_constraints(fn.rules());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool conflict = v.hiddens[i].intersects(v.inputs[j]) ||
                      v.hiddens[j].intersects(v.inputs[i]);
      for (std::size_t c = 0; !conflict && c < constraints.size(); ++c) {
        atom_set body = constraints[c].pos_body | constraints[c].neg_body;
        conflict = body.intersects(v.hiddens[i]) && body.intersects(v.hiddens[j]);
      }
      if (conflict) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

struct union_find {
  std::vector<std::size_t> parent;
  explicit union_find(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::pair<atom_set, atom_set>> hidden_conflicts(const dlp_function& fn) {
  component_view v = analyze(fn);
  std::vector<std::pair<atom_set, atom_set>> out;
  for (auto [i, j] : conflict_pairs(fn, v))
    out.emplace_back(v.sccs.components[i], v.sccs.components[j]);
  return out;
}

decomposition decompose(const dlp_function& fn) {
  const atom_table& tbl = fn.table();
  component_view v = analyze(fn);
  const std::size_t n = v.sccs.components.size();

  union_find uf(n);
  for (auto [i, j] : conflict_pairs(fn, v)) uf.unite(i, j);

  // gather blocks; remember which components feed each block for ordering
  std::vector<std::vector<std::size_t>> members;
  std::vector<atom_set> blocks;
  std::vector<std::size_t> block_of(n);
  {
    std::vector<std::size_t> root_to_block(n, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = uf.find(i);
      if (root_to_block[r] == static_cast<std::size_t>(-1)) {
        root_to_block[r] = blocks.size();
        blocks.push_back({});
        members.push_back({});
      }
      std::size_t b = root_to_block[r];
      block_of[i] = b;
      blocks[b] = blocks[b] | v.sccs.components[i];
      members[b].push_back(i);
    }
  }

  // block-level dependency, linearized with the least atom name as tiebreak
  const std::size_t nb = blocks.size();
  std::vector<std::vector<char>> before(nb, std::vector<char>(nb, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (v.sccs.leq[i][j] && block_of[i] != block_of[j])
        before[block_of[i]][block_of[j]] = 1;
  auto min_name = [&](std::size_t b) { return sorted_names(tbl, blocks[b]).front(); };
  std::vector<std::size_t> order;
  std::vector<char> emitted(nb, 0);
  while (order.size() < nb) {
    std::size_t pick = nb;
    for (std::size_t b = 0; b < nb; ++b) {
      if (emitted[b]) continue;
      bool ready = true;
      for (std::size_t p = 0; p < nb && ready; ++p)
        if (!emitted[p] && p != b && before[p][b]) ready = false;
      if (!ready) continue;
      if (pick == nb || min_name(b) < min_name(pick)) pick = b;
    }
    if (pick == nb) {  // dependency cycle between blocks: fall back to names
      for (std::size_t b = 0; b < nb; ++b)
        if (!emitted[b] && (pick == nb || min_name(b) < min_name(pick))) pick = b;
    }
    emitted[pick] = 1;
    order.push_back(pick);
  }

  // constraints touching no hidden atom stay in the carrier module
  std::vector<rule> loose_constraints;
  for (const auto& r : integrity_constraints(fn.rules()))
    if (!(r.pos_body | r.neg_body).intersects(fn.hidden())) loose_constraints.push_back(r);
  atom_set carrier_input = rule_atoms(loose_constraints) | (fn.input() - rule_atoms(fn.rules()));
  dlp_function carrier = dlp_function::validate(fn.ws(), loose_constraints,
                                                std::move(carrier_input), {}, {},
                                                /*allow_reserved=*/true);

  decomposition d{std::move(carrier), {}};
  for (std::size_t b : order) {
    const atom_set& block = blocks[b];
    atom_set block_hidden = block & fn.hidden();
    std::vector<rule> rules = defining_rules(fn, block);
    for (const auto& r : integrity_constraints(fn.rules()))
      if ((r.pos_body | r.neg_body).intersects(block_hidden)) rules.push_back(r);
    atom_set inputs = rule_atoms(rules) - block;
    dlp_function part = dlp_function::validate(fn.ws(), std::move(rules), std::move(inputs),
                                               block & fn.output(), block_hidden,
                                               /*allow_reserved=*/true);
    d.parts.emplace_back(block, std::move(part));
  }
  return d;
}

dlp_function reconstruct(const decomposition& d) {
  dlp_function acc = d.constraint_module;
  for (const auto& [block, part] : d.parts) acc = join(acc, part);
  return acc;
}

}  // namespace modlp
