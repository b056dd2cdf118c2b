// Acceptance suite: one line per criterion, nonzero exit when any fails.
// argv[1] is the CLI binary; fixtures come from FACTORIAD_FIXTURES_DIR.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "factoriad/algcorr.hpp"
#include "factoriad/arrowmonad.hpp"
#include "factoriad/factsys.hpp"
#include "factoriad/fincat.hpp"
#include "factoriad/fixtures.hpp"
#include "factoriad/freyd.hpp"
#include "factoriad/json_io.hpp"
#include "factoriad/monad.hpp"
#include "oracles.hpp"

using namespace factoriad;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
const std::string kFixturesDir = FACTORIAD_FIXTURES_DIR;

std::string fixture_path(const std::string& name) { return kFixturesDir + "/" + name + ".json"; }

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  std::string command = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int g_failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << "criterion " << number << (pass ? " PASS" : " FAIL") << " — " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

bool fs_preserves(const FactorisationSystem& fsx, const FactorisationSystem& fsy,
                  const Functor& f) {
  for (int m = 0; m < fsx.base->morphism_count(); ++m) {
    if (fsx.in_e[m] && !fsy.in_e[f.on_morphisms[m]]) return false;
    if (fsx.in_m[m] && !fsy.in_m[f.on_morphisms[m]]) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>" << std::endl;
    return 2;
  }
  g_cli = argv[1];

  const std::vector<std::string> fixture_names = fixtures::names();

  criterion(1, "monad laws for P and Fr on all fixtures in under 10 s each", [&](std::string& d) {
    bool ok = true;
    double worst = 0.0;
    for (const auto& name : fixture_names) {
      for (const char* monad : {"P", "Fr"}) {
        auto start = Clock::now();
        CliResult r = run_cli("monad-laws " + fixture_path(name) + " --monad " + monad);
        double elapsed = seconds_since(start);
        worst = std::max(worst, elapsed);
        if (r.exit_code != 0) {
          d = name + "/" + monad + " exited " + std::to_string(r.exit_code);
          ok = false;
        }
        if (elapsed >= 10.0) {
          d = name + "/" + monad + " took " + std::to_string(elapsed) + " s";
          ok = false;
        }
      }
    }
    if (ok) d = "worst fixture " + std::to_string(worst).substr(0, 4) + " s";
    return ok;
  });

  criterion(2, "cubical equations on all fixtures in under 30 s total", [&](std::string& d) {
    auto start = Clock::now();
    for (const auto& name : fixture_names) {
      CliResult r = run_cli("cubical " + fixture_path(name));
      if (r.exit_code != 0) {
        d = name + " exited " + std::to_string(r.exit_code);
        return false;
      }
    }
    double elapsed = seconds_since(start);
    d = "total " + std::to_string(elapsed).substr(0, 4) + " s";
    return elapsed < 30.0;
  });

  criterion(3, "projection is a strict morphism of monads on all fixtures", [&](std::string& d) {
    for (const auto& name : fixture_names) {
      CliResult r = run_cli("projection-check " + fixture_path(name));
      if (r.exit_code != 0) {
        d = name + " exited " + std::to_string(r.exit_code);
        return false;
      }
    }
    return true;
  });

  criterion(4, "completion carries a proper strict system with the split-epi span",
            [&](std::string& d) {
    for (const auto& name : fixture_names) {
      CatPtr base = fixtures::by_name(name);
      FreydCat f = freyd_completion(base);
      auto strict = strict_fs_from_class_pair(f.cat, canonical_proper_strict_fs(f));
      if (!is_strict_fs(strict)) {
        d = name + ": canonical classes are not strict";
        return false;
      }
      if (!is_proper_strict(strict)) {
        d = name + ": canonical classes are not proper";
        return false;
      }
      MorphismClassPair spanned = spanned_fs(f);  // throws if the span disagrees
      if (!is_fs(fs_from_class_pair(f.cat, spanned))) {
        d = name + ": spanned classes are not an fs";
        return false;
      }
      if (!check_epi_mono_transfer(f).ok()) {
        d = name + ": epi/mono transfer fails";
        return false;
      }
    }
    return true;
  });

  criterion(5, "strict systems and strict algebras are in bijection on two and idem (2 and 2)",
            [&](std::string& d) {
    for (const auto& name : {std::string("two"), std::string("idem")}) {
      CatPtr base = fixtures::by_name(name);
      MonadTower tower = make_tower(MonadKind::P, base);
      auto systems = enumerate_strict_fs(base);
      auto algebras = enumerate_strict_algebras(MonadKind::P, base);
      if (systems.size() != 2 || algebras.size() != 2) {
        d = name + ": counts " + std::to_string(systems.size()) + " and " +
            std::to_string(algebras.size());
        return false;
      }
      for (const auto& fs : systems) {
        Algebra a = strict_fs_to_algebra(tower, fs);
        if (!check_strict_algebra(tower, a).ok() ||
            !(strict_algebra_to_strict_fs(tower, a) == fs)) {
          d = name + ": system round trip broken";
          return false;
        }
      }
      for (const auto& a : algebras) {
        auto fs = strict_algebra_to_strict_fs(tower, a);
        if (!functors_equal(strict_fs_to_algebra(tower, fs).structure, a.structure)) {
          d = name + ": algebra round trip broken";
          return false;
        }
      }
    }
    return true;
  });

  criterion(6, "every enumerated system yields a coherent pseudo algebra and round trips",
            [&](std::string& d) {
    for (const auto& name : {std::string("two"), std::string("idem"), std::string("split")}) {
      CatPtr base = fixtures::by_name(name);
      MonadTower tower = make_tower(MonadKind::P, base);
      for (const auto& fs : enumerate_fs(base)) {
        FactorisationChoice choice = default_choice(fs);
        Algebra a = fs_to_pseudo_algebra(tower, fs, choice);
        if (!check_pseudo_algebra(tower, a).ok()) {
          d = name + ": a derived algebra fails a coherence condition";
          return false;
        }
        if (!roundtrip_fs(tower, fs, choice)) {
          d = name + ": fs round trip broken";
          return false;
        }
        Algebra b = fs_to_pseudo_algebra(tower, fs, reverse_choice(fs));
        AlgebraMorphism iso = roundtrip_algebra(tower, a, b);
        if (!check_algebra_morphism(tower, a, tower, b, iso).ok()) {
          d = name + ": choice comparison is not a pseudo isomorphism";
          return false;
        }
      }
    }
    return true;
  });

  criterion(7, "proper systems correspond to diagonal-compatible algebras", [&](std::string& d) {
    for (const auto& name : {std::string("two"), std::string("idem"), std::string("split")}) {
      CatPtr base = fixtures::by_name(name);
      if (!proper_correspondence_check(base).ok()) {
        d = name + ": equivalence fails";
        return false;
      }
    }
    CatPtr idem = fixtures::idem();
    int proper = 0;
    for (const auto& fs : enumerate_fs(idem))
      if (is_proper(fs)) ++proper;
    if (proper != 0) {
      d = "idem has " + std::to_string(proper) + " proper systems, expected 0";
      return false;
    }
    int proper_strict = 0;
    for (const auto& fs : enumerate_strict_fs(idem))
      if (is_proper_strict(fs)) ++proper_strict;
    auto fr_algebras = enumerate_strict_algebras(MonadKind::Fr, idem);
    if (static_cast<int>(fr_algebras.size()) != proper_strict) {
      d = "idem: " + std::to_string(fr_algebras.size()) + " completion algebras vs " +
          std::to_string(proper_strict) + " proper strict systems";
      return false;
    }
    return true;
  });

  criterion(8, "unused coherence conditions hold: 3.3/3.4 on derived algebras, 3.6/3.7 on "
               "induced morphisms and two-cells",
            [&](std::string& d) {
    for (const auto& name : {std::string("two"), std::string("idem"), std::string("split")}) {
      CatPtr base = fixtures::by_name(name);
      MonadTower tower = make_tower(MonadKind::P, base);
      for (const auto& fs : enumerate_fs(base)) {
        Algebra a = fs_to_pseudo_algebra(tower, fs, default_choice(fs));
        CheckReport report = check_pseudo_algebra(tower, a);
        bool coh33 = false, coh34 = false;
        for (const auto& r : report.records) {
          if (r.law.rfind("3.3", 0) == 0) coh33 = r.pass;
          if (r.law.rfind("3.4", 0) == 0) coh34 = r.pass;
        }
        if (!coh33 || !coh34) {
          d = name + ": the unused coherence conditions fail";
          return false;
        }
        algebra_to_fs(tower, a);  // the derivation itself never reads them
      }
    }
    CatPtr two = fixtures::two();
    CatPtr split = fixtures::split();
    MonadTower tx = make_tower(MonadKind::P, two);
    MonadTower ty = make_tower(MonadKind::P, split);
    auto functors = enumerate_functors(two, split);
    for (const auto& fsx : enumerate_fs(two)) {
      Algebra ax = fs_to_pseudo_algebra(tx, fsx, default_choice(fsx));
      for (const auto& fsy : enumerate_fs(split)) {
        Algebra ay = fs_to_pseudo_algebra(ty, fsy, default_choice(fsy));
        std::vector<std::pair<Functor, AlgebraMorphism>> preserving;
        for (const auto& f : functors)
          if (fs_preserves(fsx, fsy, f))
            preserving.push_back({f, induced_algebra_morphism(tx, ax, ty, ay, f)});
        for (const auto& [f, m] : preserving) {
          CheckReport report = check_algebra_morphism(tx, ax, ty, ay, m);
          for (const auto& r : report.records)
            if (r.law.rfind("3.6", 0) == 0 && !r.pass) {
              d = "3.6 fails for an induced morphism";
              return false;
            }
        }
        for (const auto& [f, mf] : preserving)
          for (const auto& [g, mg] : preserving)
            for (const auto& alpha : enumerate_natural(f, g))
              if (!check_two_cell(tx, ax, ty, ay, mf, mg, alpha)) {
                d = "3.7 fails for a two-cell";
                return false;
              }
      }
    }
    return true;
  });

  criterion(9, "free extension along the embedding, and through the projection when proper",
            [&](std::string& d) {
    CatPtr two = fixtures::two();
    ArrowCat ax = arrow_category(two);
    FreydCat fx = freyd_completion(two);
    MorphismClassPair canonical = canonical_fs(ax);
    for (const auto& name : fixture_names) {
      CatPtr target = fixtures::by_name(name);
      for (const auto& fs : enumerate_fs(target)) {
        FactorisationChoice choice = default_choice(fs);
        for (const auto& f : enumerate_functors(two, target)) {
          Functor g = extend_functor(ax, f, fs, choice);
          if (!check_functor(g)) {
            d = name + ": extension is not a functor";
            return false;
          }
          if (!functors_equal(compose_functors(g, arrow_unit(ax)), f)) {
            d = name + ": extension does not restrict to the embedding";
            return false;
          }
          for (int m = 0; m < ax.cat->morphism_count(); ++m) {
            if (canonical.left[m] && !fs.in_e[g.on_morphisms[m]]) {
              d = name + ": canonical E not preserved";
              return false;
            }
            if (canonical.right[m] && !fs.in_m[g.on_morphisms[m]]) {
              d = name + ": canonical M not preserved";
              return false;
            }
          }
          if (is_proper(fs)) {
            Functor gp = extend_functor_proper(fx, f, fs, choice);
            if (!check_functor(gp) || !functors_equal(compose_functors(gp, fx.projection), g)) {
              d = name + ": proper extension does not factor the plain one";
              return false;
            }
          }
        }
      }
    }
    return true;
  });

  criterion(10, "pruned enumeration equals the naive power-set oracle (two: 2 systems, 2 strict)",
            [&](std::string& d) {
    for (const auto& name : fixture_names) {
      CatPtr base = fixtures::by_name(name);
      if (base->morphism_count() > 5) continue;
      auto pruned = enumerate_fs(base);
      auto naive = oracles::naive_enumerate_fs(base);
      if (pruned.size() != naive.size()) {
        d = name + ": " + std::to_string(pruned.size()) + " vs naive " +
            std::to_string(naive.size());
        return false;
      }
      for (const auto& fs : pruned) {
        bool found = false;
        for (const auto& n : naive)
          if (n == fs) found = true;
        if (!found) {
          d = name + ": pruned result missing from the oracle";
          return false;
        }
      }
      auto pruned_strict = enumerate_strict_fs(base);
      auto naive_strict = oracles::naive_enumerate_strict_fs(base);
      if (pruned_strict.size() != naive_strict.size()) {
        d = name + ": strict " + std::to_string(pruned_strict.size()) + " vs naive " +
            std::to_string(naive_strict.size());
        return false;
      }
    }
    CatPtr two = fixtures::two();
    if (enumerate_fs(two).size() != 2 || enumerate_strict_fs(two).size() != 2) {
      d = "two: expected 2 systems and 2 strict systems";
      return false;
    }
    return true;
  });

  criterion(11, "every command is byte-reproducible", [&](std::string& d) {
    const std::string two = fixture_path("two");
    const std::string split = fixture_path("split");
    std::string fs_file = "/tmp/factoriad_accept_fs.json";
    std::string alg_file = "/tmp/factoriad_accept_alg.json";
    {
      std::FILE* f = std::fopen(fs_file.c_str(), "w");
      std::fputs("{\"E\": [\"idA\", \"idB\", \"p\"], \"M\": [\"idA\", \"idB\", \"s\"]}\n", f);
      std::fclose(f);
    }
    CliResult alg = run_cli("fs-to-algebra " + split + " " + fs_file);
    {
      std::FILE* f = std::fopen(alg_file.c_str(), "w");
      std::fputs(alg.output.c_str(), f);
      std::fclose(f);
    }
    const std::vector<std::string> commands = {
        "check " + two,
        "arrow " + split,
        "freyd " + split,
        "monad-laws " + two + " --monad P",
        "monad-laws " + two + " --monad Fr",
        "cubical " + two,
        "fs-check " + split + " " + fs_file + " --proper",
        "fs-enumerate " + split,
        "fs-enumerate " + split + " --strict",
        "fs-enumerate " + split + " --proper-only",
        "algebra-check " + split + " " + alg_file,
        "algebra-to-fs " + split + " " + alg_file,
        "fs-to-algebra " + split + " " + fs_file,
        "roundtrip " + two,
        "fr-compat " + split + " " + alg_file,
        "projection-check " + two,
    };
    for (const auto& cmd : commands) {
      CliResult first = run_cli(cmd);
      CliResult second = run_cli(cmd);
      if (first.output.empty() || first.output != second.output ||
          first.exit_code != second.exit_code) {
        d = "'" + cmd + "' is not reproducible";
        return false;
      }
    }
    return true;
  });

  std::cout << (g_failures == 0 ? "acceptance: all criteria pass"
                                : "acceptance: " + std::to_string(g_failures) + " criteria failed")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
