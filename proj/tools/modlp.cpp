#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modlp/algebra.hpp"
#include "modlp/completion.hpp"
#include "modlp/core.hpp"
#include "modlp/decompose.hpp"
#include "modlp/equivalence.hpp"
#include "modlp/parser.hpp"
#include "modlp/qbf.hpp"
#include "modlp/semantics.hpp"
#include "modlp/shift.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) modlp::fail(modlp::errc::usage, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

modlp::dlp_function load(const std::string& path, const modlp::workspace& ws) {
  return modlp::parse_module(slurp(path), ws);
}

modlp::atom_set parse_atom_list(const std::string& csv, const modlp::workspace& ws) {
  modlp::atom_set out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string name = csv.substr(
        start, comma == std::string::npos ? csv.size() - start : comma - start);
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    while (!name.empty() && name.back() == ' ') name.pop_back();
    if (!name.empty()) {
      auto id = ws->find(name);
      if (!id) modlp::fail(modlp::errc::usage, "unknown atom '" + name + "'");
      out.insert(*id);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular disjunctive logic program toolkit"};
  app.require_subcommand(1);

  std::string file, file2, context_file, engine = "reduct", method = "direct";
  std::string set_csv, outdir = ".", qbf_part = "sat";
  std::vector<std::string> join_files;
  unsigned cap = modlp::k_enum_cap;
  unsigned loop_cap = modlp::k_scc_cap;
  unsigned eva_cap = modlp::k_eva_cap;
  unsigned name_bodies = 2;
  bool with_loops = false;

  auto* solve = app.add_subcommand("solve", "print the stable models of a module");
  solve->add_option("file", file)->required();
  solve->add_option("--engine", engine, "reduct|complf")->check(CLI::IsMember({"reduct", "complf"}));
  solve->add_option("--cap", cap, "enumeration cap (default 24)");
  solve->add_option("--loop-cap", loop_cap, "per-component loop cap (default 12)");

  auto* compose_cmd = app.add_subcommand("compose", "compose two modules");
  compose_cmd->add_option("file1", file)->required();
  compose_cmd->add_option("file2", file2)->required();

  auto* join_cmd = app.add_subcommand("join", "join two or more modules");
  join_cmd->add_option("files", join_files)->expected(2, -1)->required();

  auto* dec = app.add_subcommand("decompose", "split a module along its components");
  dec->add_option("file", file)->required();
  dec->add_option("--outdir", outdir, "directory for the part files (default .)");

  auto* shift_cmd = app.add_subcommand("shift", "general shifting of disjunctive heads");
  shift_cmd->add_option("file", file)->required();
  shift_cmd->add_option("--name-bodies", name_bodies,
                        "name bodies of this many literals or more (bare flag: 2; "
                        "omitted: no naming)")
      ->expected(0, 1);

  auto* split_cmd = app.add_subcommand("split", "split along a splitting set");
  split_cmd->add_option("file", file)->required();
  split_cmd->add_option("--set", set_csv, "comma-separated atoms")->required();

  auto* tight_cmd = app.add_subcommand("tight", "check positive-dependency acyclicity");
  tight_cmd->add_option("file", file)->required();

  auto* comp_cmd = app.add_subcommand("completion", "dump the completion formulas");
  comp_cmd->add_option("file", file)->required();
  comp_cmd->add_flag("--with-loops", with_loops, "include the loop formulas");
  comp_cmd->add_option("--loop-cap", loop_cap);

  auto* verify = app.add_subcommand("verify", "check modular equivalence of two modules");
  verify->add_option("file1", file)->required();
  verify->add_option("file2", file2)->required();
  verify->add_option("--method", method, "direct|translate")
      ->check(CLI::IsMember({"direct", "translate"}));
  verify->add_option("--context", context_file, "verify relative to this context module");
  verify->add_option("--cap", cap);

  auto* qbf_cmd = app.add_subcommand("qbf", "exists-forall formula tooling");
  qbf_cmd->require_subcommand(1);
  auto* qbf_encode = qbf_cmd->add_subcommand("encode", "emit one side of the encoding");
  qbf_encode->add_option("file", file)->required();
  qbf_encode->add_option("--part", qbf_part, "sat|unsat (default sat)")
      ->check(CLI::IsMember({"sat", "unsat"}));
  auto* qbf_eval = qbf_cmd->add_subcommand("eval", "decide validity");
  qbf_eval->add_option("file", file)->required();
  qbf_eval->add_option("--cap", cap);

  auto* eva_cmd = app.add_subcommand("eva", "check the enough-visible-atoms property");
  eva_cmd->add_option("file", file)->required();
  eva_cmd->add_option("--cap", eva_cap, "visible-atom cap (default 16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: Usage: " << e.what() << "\n";
    return 2;
  }

  modlp::workspace ws = modlp::make_workspace();
  try {
    if (*solve) {
      modlp::dlp_function fn = load(file, ws);
      modlp::model_set sm = engine == "reduct"
                                ? modlp::stable_models(fn, cap)
                                : modlp::stable_models_via_completion(fn, cap, loop_cap);
      std::cout << modlp::render_models(sm);
      return 0;
    }
    if (*compose_cmd) {
      std::cout << modlp::render_module(modlp::compose(load(file, ws), load(file2, ws)));
      return 0;
    }
    if (*join_cmd) {
      std::vector<modlp::dlp_function> parts;
      for (const auto& f : join_files) parts.push_back(load(f, ws));
      std::cout << modlp::render_module(modlp::join_all(parts));
      return 0;
    }
    if (*dec) {
      modlp::dlp_function fn = load(file, ws);
      modlp::decomposition d = modlp::decompose(fn);
      std::filesystem::create_directories(outdir);
      auto write_part = [&](const modlp::dlp_function& part, const std::string& name) {
        std::filesystem::path path = std::filesystem::path(outdir) / (name + ".dlpm");
        std::ofstream out(path, std::ios::binary);
        out << modlp::render_module(part, name);
        std::cout << path.string() << "\n";
      };
      write_part(d.constraint_module, "part_0");
      for (const auto& [block, part] : d.parts)
        write_part(part, "part_" + modlp::sorted_names(fn.table(), block).front());
      return 0;
    }
    if (*shift_cmd) {
      modlp::dlp_function fn = load(file, ws);
      bool named = shift_cmd->count("--name-bodies") > 0;
      std::cout << modlp::render_module(named ? modlp::general_shift_named(fn, name_bodies)
                                              : modlp::general_shift(fn));
      return 0;
    }
    if (*split_cmd) {
      modlp::dlp_function fn = load(file, ws);
      auto [bottom, top] = modlp::split(fn, parse_atom_list(set_csv, ws));
      std::cout << modlp::render_module(bottom, "bottom") << modlp::render_module(top, "top");
      return 0;
    }
    if (*tight_cmd) {
      bool tight = modlp::is_tight(load(file, ws));
      std::cout << (tight ? "tight\n" : "not tight\n");
      return tight ? 0 : 1;
    }
    if (*comp_cmd) {
      modlp::dlp_function fn = load(file, ws);
      std::vector<modlp::prop_formula> theory = modlp::completion(fn);
      if (with_loops) {
        auto lf = modlp::loop_formulas(fn, loop_cap);
        theory.insert(theory.end(), lf.begin(), lf.end());
        theory = modlp::canonical_formula_set(fn.table(), std::move(theory));
      }
      for (const auto& f : theory) std::cout << modlp::render_formula(fn.table(), f) << "\n";
      return 0;
    }
    if (*verify) {
      modlp::dlp_function a = load(file, ws);
      modlp::dlp_function b = load(file2, ws);
      modlp::eq_method m =
          method == "direct" ? modlp::eq_method::direct : modlp::eq_method::translate;
      modlp::eq_result r;
      if (verify->count("--context")) {
        modlp::dlp_function ctx = load(context_file, ws);
        r = m == modlp::eq_method::direct
                ? modlp::modularly_equivalent(modlp::join(a, ctx), modlp::join(b, ctx),
                                              modlp::eq_method::direct, cap)
                : modlp::equivalent_in_context(a, b, ctx, cap);
      } else {
        r = modlp::modularly_equivalent(a, b, m, cap);
      }
      if (r.equivalent) {
        std::cout << "equivalent\n";
        return 0;
      }
      std::cout << "not equivalent\n";
      if (r.witness)
        std::cout << "witness (" << (r.witness->first == 1 ? "left" : "right")
                  << "): " << modlp::show_atoms(*ws, r.witness->second) << "\n";
      return 1;
    }
    if (*qbf_encode) {
      modlp::qbf_instance q = modlp::parse_qbf(slurp(file), ws);
      std::cout << modlp::render_module(qbf_part == "sat" ? modlp::encode_sat(q)
                                                          : modlp::encode_unsat(q));
      return 0;
    }
    if (*qbf_eval) {
      modlp::qbf_instance q = modlp::parse_qbf(slurp(file), ws);
      modlp::qbf_verdict v = modlp::evaluate_qbf(q, cap);
      if (v.valid) {
        std::cout << "VALID " << modlp::show_atoms(*ws, *v.certificate) << "\n";
        return 0;
      }
      std::cout << "INVALID\n";
      return 1;
    }
    if (*eva_cmd) {
      modlp::eva_result r = modlp::has_eva(load(file, ws), eva_cap);
      if (r.has_eva) {
        std::cout << "eva: yes\n";
        return 0;
      }
      std::cout << "eva: no\n"
                << "counterexample: " << modlp::show_atoms(*ws, *r.counterexample) << "\n";
      return 1;
    }
  } catch (const modlp::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
