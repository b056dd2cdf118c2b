// factoriad: load finite categories, build their squares and diagonal-quotient
// completions, and run every law, factorisation-system, and algebra
// correspondence check exhaustively.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "factoriad/algcorr.hpp"
#include "factoriad/arrowmonad.hpp"
#include "factoriad/factsys.hpp"
#include "factoriad/fincat.hpp"
#include "factoriad/freyd.hpp"
#include "factoriad/json_io.hpp"
#include "factoriad/monad.hpp"
#include "json.hpp"

namespace {

using factoriad::CheckReport;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuard = 3;

struct Options {
  bool pretty = false;
  factoriad::SizeGuard guard;
};

struct InputRecord {
  std::string path;
  std::string digest;
};

struct Invocation {
  std::string command;
  std::vector<InputRecord> inputs;
  ordered_json params = ordered_json::object();
  CheckReport checks;
  ordered_json result;  // artifact payload, when a command produces one
  bool has_result = false;
};

std::string load_input(Invocation& inv, const std::string& path) {
  std::string text = factoriad::read_file(path);
  inv.inputs.push_back({path, "fnv1a64:" + factoriad::fnv1a64_hex(text)});
  return text;
}

factoriad::CatPtr load_category(Invocation& inv, const std::string& path) {
  return factoriad::load_category_json(load_input(inv, path), path);
}

// every command except `check` refuses algebraically broken categories
factoriad::CatPtr load_valid_category(Invocation& inv, const std::string& path) {
  factoriad::CatPtr cat = load_category(inv, path);
  CheckReport report = factoriad::validate_category(*cat);
  if (!report.ok()) {
    std::string why;
    for (const auto& r : report.records)
      if (!r.pass) {
        why = r.law + ": " + r.counterexample;
        break;
      }
    throw factoriad::LoadError(path + ": not a category (" + why + ")");
  }
  return cat;
}

ordered_json report_json(const Invocation& inv, bool pass) {
  ordered_json j;
  j["command"] = inv.command;
  j["inputs"] = ordered_json::array();
  for (const auto& in : inv.inputs) {
    ordered_json entry;
    entry["path"] = in.path;
    entry["digest"] = in.digest;
    j["inputs"].push_back(std::move(entry));
  }
  if (!inv.params.empty()) j["params"] = inv.params;
  j["checks"] = ordered_json::array();
  for (const auto& r : inv.checks.records) {
    ordered_json entry;
    entry["law"] = r.law;
    entry["anchor"] = r.anchor;
    entry["pass"] = r.pass;
    if (!r.pass) entry["counterexample"] = r.counterexample;
    j["checks"].push_back(std::move(entry));
  }
  if (inv.has_result) j["result"] = inv.result;
  j["status"] = pass ? "pass" : "fail";
  return j;
}

int finish(const Invocation& inv, const Options& opt) {
  const bool pass = inv.checks.ok();
  if (opt.pretty) {
    for (const auto& r : inv.checks.records) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.law << "  [" << r.anchor << "]";
      if (!r.pass) std::cout << "  -- " << r.counterexample;
      std::cout << "\n";
    }
    if (inv.has_result) std::cout << inv.result.dump(2) << "\n";
    std::cout << (pass ? "status: pass" : "status: fail") << "\n";
  } else {
    std::cout << report_json(inv, pass).dump(2) << "\n";
  }
  return pass ? kExitPass : kExitCheckFailed;
}

void write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw factoriad::LoadError(out_path + ": cannot write file");
  out << text;
}

ordered_json fs_json(const factoriad::FinCategory& c, const std::vector<char>& e,
                     const std::vector<char>& m, bool strict) {
  ordered_json j;
  j[strict ? "E0" : "E"] = factoriad::fs_member_names(c, e);
  j[strict ? "M0" : "M"] = factoriad::fs_member_names(c, m);
  return j;
}

factoriad::FactorisationChoice choice_from_file(const factoriad::FactorisationSystem& fs,
                                                const factoriad::ChoiceData& data) {
  const factoriad::FinCategory& c = *fs.base;
  factoriad::FactorisationChoice choice;
  choice.base = fs.base;
  choice.triples.resize(c.morphism_count());
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) {
      choice.triples[f] = {f, c.dom(f), f};
      continue;
    }
    auto it = data.find(c.morphism_name(f));
    if (it == data.end())
      throw factoriad::LoadError("choice: missing entry for '" + c.morphism_name(f) + "'");
    int e = c.morphism_index(it->second.e);
    int mid = c.object_index(it->second.mid);
    int m = c.morphism_index(it->second.m);
    if (e < 0 || mid < 0 || m < 0)
      throw factoriad::LoadError("choice: unknown name in the entry for '" + c.morphism_name(f) +
                                 "'");
    choice.triples[f] = {e, mid, m};
  }
  auto bad = factoriad::choice_violations(fs, choice);
  if (!bad.empty()) throw factoriad::LoadError("choice: " + bad.front());
  return choice;
}

// ---------------------------------------------------------------- commands

int cmd_check(const Options& opt, const std::string& cat_path) {
  Invocation inv;
  inv.command = "check";
  factoriad::CatPtr cat = load_category(inv, cat_path);
  inv.checks = factoriad::validate_category(*cat);
  return finish(inv, opt);
}

int cmd_arrow(const Options& opt, const std::string& cat_path, const std::string& out_path) {
  Invocation inv;
  inv.command = "arrow";
  factoriad::CatPtr cat = load_valid_category(inv, cat_path);
  factoriad::ArrowCat a = factoriad::arrow_category(cat);
  std::string text = factoriad::emit_arrow(a);
  if (out_path.empty()) {
    std::cout << text;
    return kExitPass;
  }
  write_or_print(text, out_path);
  inv.params["output"] = out_path;
  inv.checks.add_pass("squares category emitted", "§1 (1) commutative squares");
  return finish(inv, opt);
}

int cmd_freyd(const Options& opt, const std::string& cat_path, const std::string& out_path) {
  Invocation inv;
  inv.command = "freyd";
  factoriad::CatPtr cat = load_valid_category(inv, cat_path);
  factoriad::FreydCat f = factoriad::freyd_completion(cat);
  std::string text = factoriad::emit_freyd(f);
  if (out_path.empty()) {
    std::cout << text;
    return kExitPass;
  }
  write_or_print(text, out_path);
  inv.params["output"] = out_path;
  inv.checks.add_pass("completion emitted", "§2 FrX = X²/R");
  return finish(inv, opt);
}

int cmd_monad_laws(const Options& opt, const std::string& cat_path, const std::string& monad) {
  Invocation inv;
  inv.command = "monad-laws";
  inv.params["monad"] = monad;
  factoriad::CatPtr cat = load_valid_category(inv, cat_path);
  inv.checks = factoriad::check_monad_laws(factoriad::monad_from_name(monad), cat, opt.guard);
  return finish(inv, opt);
}

int cmd_cubical(const Options& opt, const std::string& cat_path) {
  Invocation inv;
  inv.command = "cubical";
  factoriad::CatPtr cat = load_valid_category(inv, cat_path);
  inv.checks = factoriad::check_cubical_equations(cat, opt.guard);
  return finish(inv, opt);
}

int cmd_fs_check(const Options& opt, const std::string& cat_path, const std::string& fs_path,
                 bool strict_flag, bool proper_flag) {
  Invocation inv;
  inv.command = "fs-check";
  factoriad::CatPtr cat = load_valid_category(inv, cat_path);
  factoriad::FsData data = factoriad::load_fs_json(load_input(inv, fs_path), fs_path);
  const bool strict = strict_flag || data.strict;
  inv.params["strict"] = strict;
  inv.params["proper"] = proper_flag;
  if (strict) {
    auto fs = factoriad::strict_fs_from_names(cat, data.left, data.right);
    inv.checks = factoriad::check_strict_factorisation_system(fs);
    if (proper_flag) {
      factoriad::LawCheck proper("classes are epi/mono", "Abstract: proper (epi-mono)");
      if (!factoriad::is_proper_strict(fs)) proper.violate("a class member fails epi/mono");
      proper.flush(inv.checks);
    }
  } else {
    auto fs = factoriad::fs_from_names(cat, data.left, data.right);
    inv.checks = factoriad::check_factorisation_system(fs);
    if (proper_flag) {
      factoriad::LawCheck proper("classes are epi/mono", "Abstract: proper (epi-mono)");
      if (!factoriad::is_proper(fs)) proper.violate("a class member fails epi/mono");
      proper.flush(inv.checks);
    }
  }
  return finish(inv, opt);
}

int cmd_fs_enumerate(const Options& opt, const std::string& cat_path, bool strict,
                     bool proper_only) {
  Invocation inv;
  inv.command = "fs-enumerate";
  inv.params["strict"] = strict;
  inv.params["proper_only"] = proper_only;
  factoriad::CatPtr cat = load_valid_category(inv, cat_path);
  inv.result = ordered_json::array();
  inv.has_result = true;
  if (strict) {
    for (const auto& fs : factoriad::enumerate_strict_fs(cat, opt.guard)) {
      if (proper_only && !factoriad::is_proper_strict(fs)) continue;
      inv.result.push_back(fs_json(*cat, fs.in_e0, fs.in_m0, true));
    }
  } else {
    for (const auto& fs : factoriad::enumerate_fs(cat, opt.guard)) {
      if (proper_only && !factoriad::is_proper(fs)) continue;
      inv.result.push_back(fs_json(*cat, fs.in_e, fs.in_m, false));
    }
  }
  inv.params["count"] = inv.result.size();
  inv.checks.add_pass("enumeration complete", "standard (FK): fs axioms");
  return finish(inv, opt);
}

int cmd_algebra_check(const Options& opt, const std::string& cat_path,
                      const std::string& alg_path) {
  Invocation inv;
  inv.command = "algebra-check";
  factoriad::CatPtr cat = load_valid_category(inv, cat_path);
  factoriad::AlgebraData data = factoriad::load_algebra_json(load_input(inv, alg_path), alg_path);
  factoriad::MonadKind kind = factoriad::monad_from_name(data.monad);
  factoriad::require_tower_guard(kind, *cat, opt.guard, "algebra-check");
  factoriad::MonadTower tower = factoriad::make_tower(kind, cat);
  factoriad::Algebra a = factoriad::algebra_from_data(tower, data);
  inv.params["monad"] = data.monad;
  inv.params["pseudo"] = data.has_theta;
  inv.checks = data.has_theta ? factoriad::check_pseudo_algebra(tower, a)
                              : factoriad::check_strict_algebra(tower, a);
  return finish(inv, opt);
}

int cmd_algebra_to_fs(const Options& opt, const std::string& cat_path,
                      const std::string& alg_path, const std::string& out_path) {
  Invocation inv;
  inv.command = "algebra-to-fs";
  factoriad::CatPtr cat = load_valid_category(inv, cat_path);
  factoriad::AlgebraData data = factoriad::load_algebra_json(load_input(inv, alg_path), alg_path);
  factoriad::MonadKind kind = factoriad::monad_from_name(data.monad);
  factoriad::require_tower_guard(kind, *cat, opt.guard, "algebra-to-fs");
  factoriad::MonadTower tower = factoriad::make_tower(kind, cat);
  factoriad::Algebra a = factoriad::algebra_from_data(tower, data);
  factoriad::FactorisationSystem fs = factoriad::algebra_to_fs(tower, a);
  factoriad::FsData out;
  out.strict = false;
  out.left = factoriad::fs_member_names(*cat, fs.in_e);
  out.right = factoriad::fs_member_names(*cat, fs.in_m);
  std::string text = factoriad::emit_fs(out);
  if (out_path.empty()) {
    std::cout << text;
    return kExitPass;
  }
  write_or_print(text, out_path);
  inv.params["output"] = out_path;
  inv.checks.add_pass("derived system emitted", "§4 (A)");
  return finish(inv, opt);
}

int cmd_fs_to_algebra(const Options& opt, const std::string& cat_path, const std::string& fs_path,
                      const std::string& choice_path, const std::string& out_path) {
  Invocation inv;
  inv.command = "fs-to-algebra";
  factoriad::CatPtr cat = load_valid_category(inv, cat_path);
  factoriad::FsData data = factoriad::load_fs_json(load_input(inv, fs_path), fs_path);
  factoriad::require_tower_guard(factoriad::MonadKind::P, *cat, opt.guard, "fs-to-algebra");
  factoriad::MonadTower tower = factoriad::make_tower(factoriad::MonadKind::P, cat);

  factoriad::Algebra a;
  if (data.strict) {
    // the strict factorisations are the only choice
    if (!choice_path.empty())
      throw factoriad::LoadError(choice_path +
                                 ": a choice file applies to ordinary systems only");
    auto strict = factoriad::strict_fs_from_names(cat, data.left, data.right);
    CheckReport fs_check = factoriad::check_strict_factorisation_system(strict);
    if (!fs_check.ok()) {
      inv.checks = std::move(fs_check);
      return finish(inv, opt);
    }
    a = factoriad::strict_fs_to_algebra(tower, strict);
  } else {
    factoriad::FactorisationSystem fs = factoriad::fs_from_names(cat, data.left, data.right);
    CheckReport fs_check = factoriad::check_factorisation_system(fs);
    if (!fs_check.ok()) {
      inv.checks = std::move(fs_check);
      return finish(inv, opt);
    }
    factoriad::FactorisationChoice choice =
        choice_path.empty()
            ? factoriad::default_choice(fs)
            : choice_from_file(fs, factoriad::load_choice_json(load_input(inv, choice_path),
                                                               choice_path));
    a = factoriad::fs_to_pseudo_algebra(tower, fs, choice);
  }
  std::string text = factoriad::emit_algebra(factoriad::algebra_to_data(tower, a));
  if (out_path.empty()) {
    std::cout << text;
    return kExitPass;
  }
  write_or_print(text, out_path);
  inv.params["output"] = out_path;
  inv.checks.add_pass("algebra emitted", "§4 (B)");
  return finish(inv, opt);
}

int cmd_fr_compat(const Options& opt, const std::string& cat_path, const std::string& alg_path) {
  Invocation inv;
  inv.command = "fr-compat";
  factoriad::CatPtr cat = load_valid_category(inv, cat_path);
  factoriad::AlgebraData data = factoriad::load_algebra_json(load_input(inv, alg_path), alg_path);
  if (data.monad != "P")
    throw factoriad::LoadError(alg_path + ": fr-compat expects an algebra for P");
  factoriad::require_tower_guard(factoriad::MonadKind::Fr, *cat, opt.guard, "fr-compat");
  factoriad::MonadTower p_tower = factoriad::make_tower(factoriad::MonadKind::P, cat);
  factoriad::Algebra a = factoriad::algebra_from_data(p_tower, data);

  const bool compatible = factoriad::is_r_compatible(p_tower, a);
  inv.params["compatible"] = compatible;
  factoriad::LawCheck compat("structure constant on diagonal classes", "§2 compatible with R");
  if (!compatible) compat.violate("two parallel squares with one diagonal map apart");
  compat.flush(inv.checks);
  if (compatible) {
    factoriad::MonadTower fr_tower = factoriad::make_tower(factoriad::MonadKind::Fr, cat);
    factoriad::Algebra induced = factoriad::induce_fr_algebra(p_tower, fr_tower, a);
    inv.checks.merge(induced.strict() ? factoriad::check_strict_algebra(fr_tower, induced)
                                      : factoriad::check_pseudo_algebra(fr_tower, induced));
  }
  return finish(inv, opt);
}

int cmd_projection_check(const Options& opt, const std::string& cat_path) {
  Invocation inv;
  inv.command = "projection-check";
  factoriad::CatPtr cat = load_valid_category(inv, cat_path);
  inv.checks = factoriad::check_projection_monad_morphism(cat, opt.guard);
  return finish(inv, opt);
}

int cmd_roundtrip(const Options& opt, const std::string& cat_path) {
  Invocation inv;
  inv.command = "roundtrip";
  factoriad::CatPtr cat = load_valid_category(inv, cat_path);
  const factoriad::FinCategory& b = *cat;
  factoriad::require_tower_guard(factoriad::MonadKind::P, b, opt.guard, "roundtrip");
  factoriad::MonadTower tower = factoriad::make_tower(factoriad::MonadKind::P, cat);

  auto systems = factoriad::enumerate_fs(cat, opt.guard);
  inv.params["fs_count"] = systems.size();

  factoriad::LawCheck coherent("derived pseudo algebras pass every coherence condition",
                               "§3 (1)-(4) via §4 (B)");
  factoriad::LawCheck back("fs -> algebra -> fs is the identity", "§4 (C)");
  factoriad::LawCheck pseudo_iso("two choices give pseudo isomorphic algebras", "§4 (C) (7)");
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto& fs = systems[i];
    const std::string tag = "fs#" + std::to_string(i);
    factoriad::FactorisationChoice choice = factoriad::default_choice(fs);
    factoriad::Algebra a = factoriad::fs_to_pseudo_algebra(tower, fs, choice);
    CheckReport pseudo = factoriad::check_pseudo_algebra(tower, a);
    if (!pseudo.ok()) coherent.violate(tag + " fails a coherence condition");
    if (!factoriad::roundtrip_fs(tower, fs, choice)) back.violate(tag);

    factoriad::FactorisationChoice other = factoriad::reverse_choice(fs);
    factoriad::Algebra a2 = factoriad::fs_to_pseudo_algebra(tower, fs, other);
    factoriad::AlgebraMorphism iso = factoriad::roundtrip_algebra(tower, a, a2);
    CheckReport morphism = factoriad::check_algebra_morphism(tower, a, tower, a2, iso);
    if (!morphism.ok()) pseudo_iso.violate(tag);
  }
  coherent.flush(inv.checks);
  back.flush(inv.checks);
  pseudo_iso.flush(inv.checks);

  // strict side: the comparison is a bijection with identity round trips
  auto strict_systems = factoriad::enumerate_strict_fs(cat, opt.guard);
  auto strict_algebras = factoriad::enumerate_strict_algebras(factoriad::MonadKind::P, cat,
                                                              opt.guard);
  inv.params["strict_fs_count"] = strict_systems.size();
  inv.params["strict_algebra_count"] = strict_algebras.size();
  factoriad::LawCheck bijection("strict systems and strict algebras correspond",
                                "Theorem 4 (i) K0 isomorphism");
  if (strict_systems.size() != strict_algebras.size())
    bijection.violate("counts differ: " + std::to_string(strict_systems.size()) + " vs " +
                      std::to_string(strict_algebras.size()));
  for (std::size_t i = 0; i < strict_systems.size(); ++i) {
    factoriad::Algebra a = factoriad::strict_fs_to_algebra(tower, strict_systems[i]);
    auto back_fs = factoriad::strict_algebra_to_strict_fs(tower, a);
    if (!(back_fs == strict_systems[i]))
      bijection.violate("strict fs#" + std::to_string(i) + " does not round trip");
  }
  for (std::size_t i = 0; i < strict_algebras.size(); ++i) {
    auto fs = factoriad::strict_algebra_to_strict_fs(tower, strict_algebras[i]);
    factoriad::Algebra back_a = factoriad::strict_fs_to_algebra(tower, fs);
    if (!factoriad::functors_equal(back_a.structure, strict_algebras[i].structure))
      bijection.violate("strict algebra#" + std::to_string(i) + " does not round trip");
  }
  bijection.flush(inv.checks);

  inv.checks.merge(factoriad::proper_correspondence_check(cat, opt.guard));
  return finish(inv, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-category factorisation laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  if (const char* env = std::getenv("FACTORIAD_SIZE_GUARD")) opt.guard.tower = std::atoi(env);
  app.add_flag("--pretty", opt.pretty, "human-readable report instead of JSON");
  app.add_option("--size-guard", opt.guard.tower,
                 "base morphism bound for third-iterate operations");
  app.add_option("--fs-guard", opt.guard.enumerate_fs, "morphism bound for fs enumeration");
  app.add_option("--strict-fs-guard", opt.guard.enumerate_strict_fs,
                 "morphism bound for strict fs enumeration");
  app.add_option("--algebra-guard", opt.guard.enumerate_algebras,
                 "morphism bound for strict algebra enumeration");

  std::string cat_path, fs_path, alg_path, choice_path, out_path, monad = "P";
  bool strict = false, proper = false, proper_only = false;

  auto* c_check = app.add_subcommand("check", "validate a category file");
  c_check->add_option("cat", cat_path)->required();

  auto* c_arrow = app.add_subcommand("arrow", "emit the category of squares");
  c_arrow->add_option("cat", cat_path)->required();
  c_arrow->add_option("-o,--output", out_path);

  auto* c_freyd = app.add_subcommand("freyd", "emit the diagonal-quotient completion");
  c_freyd->add_option("cat", cat_path)->required();
  c_freyd->add_option("-o,--output", out_path);

  auto* c_laws = app.add_subcommand("monad-laws", "check unit and associativity laws");
  c_laws->add_option("cat", cat_path)->required();
  c_laws->add_option("--monad", monad, "P or Fr")->required();

  auto* c_cubical = app.add_subcommand("cubical", "check the cubical structure equations");
  c_cubical->add_option("cat", cat_path)->required();

  auto* c_fs_check = app.add_subcommand("fs-check", "verify a factorisation system file");
  c_fs_check->add_option("cat", cat_path)->required();
  c_fs_check->add_option("fs", fs_path)->required();
  c_fs_check->add_flag("--strict", strict);
  c_fs_check->add_flag("--proper", proper);

  auto* c_fs_enum = app.add_subcommand("fs-enumerate", "enumerate factorisation systems");
  c_fs_enum->add_option("cat", cat_path)->required();
  c_fs_enum->add_flag("--strict", strict);
  c_fs_enum->add_flag("--proper-only", proper_only);

  auto* c_alg_check = app.add_subcommand("algebra-check", "verify an algebra file");
  c_alg_check->add_option("cat", cat_path)->required();
  c_alg_check->add_option("algebra", alg_path)->required();

  auto* c_alg_fs = app.add_subcommand("algebra-to-fs", "derive the factorisation system");
  c_alg_fs->add_option("cat", cat_path)->required();
  c_alg_fs->add_option("algebra", alg_path)->required();
  c_alg_fs->add_option("-o,--output", out_path);

  auto* c_fs_alg = app.add_subcommand("fs-to-algebra", "derive the pseudo algebra");
  c_fs_alg->add_option("cat", cat_path)->required();
  c_fs_alg->add_option("fs", fs_path)->required();
  c_fs_alg->add_option("--choice", choice_path);
  c_fs_alg->add_option("-o,--output", out_path);

  auto* c_roundtrip = app.add_subcommand("roundtrip", "full correspondence suite");
  c_roundtrip->add_option("cat", cat_path)->required();

  auto* c_fr = app.add_subcommand("fr-compat", "diagonal-congruence compatibility of an algebra");
  c_fr->add_option("cat", cat_path)->required();
  c_fr->add_option("algebra", alg_path)->required();

  auto* c_proj = app.add_subcommand("projection-check", "projection as a morphism of monads");
  c_proj->add_option("cat", cat_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_check->parsed()) return cmd_check(opt, cat_path);
    if (c_arrow->parsed()) return cmd_arrow(opt, cat_path, out_path);
    if (c_freyd->parsed()) return cmd_freyd(opt, cat_path, out_path);
    if (c_laws->parsed()) return cmd_monad_laws(opt, cat_path, monad);
    if (c_cubical->parsed()) return cmd_cubical(opt, cat_path);
    if (c_fs_check->parsed()) return cmd_fs_check(opt, cat_path, fs_path, strict, proper);
    if (c_fs_enum->parsed()) return cmd_fs_enumerate(opt, cat_path, strict, proper_only);
    if (c_alg_check->parsed()) return cmd_algebra_check(opt, cat_path, alg_path);
    if (c_alg_fs->parsed()) return cmd_algebra_to_fs(opt, cat_path, alg_path, out_path);
    if (c_fs_alg->parsed()) return cmd_fs_to_algebra(opt, cat_path, fs_path, choice_path, out_path);
    if (c_roundtrip->parsed()) return cmd_roundtrip(opt, cat_path);
    if (c_fr->parsed()) return cmd_fr_compat(opt, cat_path, alg_path);
    if (c_proj->parsed()) return cmd_projection_check(opt, cat_path);
  } catch (const factoriad::GuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const factoriad::LoadError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const factoriad::CatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
