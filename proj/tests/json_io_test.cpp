#include <string>

#include "doctest.h"
#include "factoriad/arrowmonad.hpp"
#include "factoriad/fincat.hpp"
#include "factoriad/fixtures.hpp"
#include "factoriad/freyd.hpp"
#include "factoriad/json_io.hpp"

using namespace factoriad;

namespace {
const std::string kFixturesDir = FACTORIAD_FIXTURES_DIR;
}

TEST_CASE("bundled fixture files match the builders") {
  for (const auto& name : fixtures::names()) {
    CatPtr loaded = load_category_file(kFixturesDir + "/" + name + ".json");
    CatPtr built = fixtures::by_name(name);
    CAPTURE(name);
    CHECK(same_category(loaded, built));
  }
}

TEST_CASE("emission round trips through the loader") {
  for (const auto& name : fixtures::names()) {
    CatPtr cat = fixtures::by_name(name);
    std::string text = emit_category(*cat);
    CatPtr again = load_category_json(text, "emitted");
    CHECK(same_category(cat, again));
    CHECK(emit_category(*again) == text);
  }
}

TEST_CASE("derived emissions round trip and stay deterministic") {
  CatPtr split = fixtures::split();
  ArrowCat a = arrow_category(split);
  std::string arrow1 = emit_arrow(a);
  std::string arrow2 = emit_arrow(arrow_category(split));
  CHECK(arrow1 == arrow2);
  CatPtr arrow_reload = load_category_json(arrow1, "arrow");
  CHECK(same_category(arrow_reload, a.cat));

  FreydCat f = freyd_completion(split);
  std::string freyd1 = emit_freyd(f);
  CHECK(freyd1 == emit_freyd(freyd_completion(split)));
  CatPtr freyd_reload = load_category_json(freyd1, "freyd");
  CHECK(same_category(freyd_reload, f.cat));
}

TEST_CASE("loader rejections carry positions") {
  SUBCASE("unknown name") {
    std::string text = R"({"objects": ["0"], "morphisms": [{"name": "f", "dom": "0", "cod": "Q"}],
                           "identities": {"0": "f"}})";
    CHECK_THROWS_WITH_AS(load_category_json(text, "t"),
                         doctest::Contains("unknown cod 'Q'"), LoadError);
  }
  SUBCASE("duplicate composition entry") {
    std::string text = R"({"objects": ["o"],
      "morphisms": [{"name": "1", "dom": "o", "cod": "o"}, {"name": "e", "dom": "o", "cod": "o"}],
      "identities": {"o": "1"},
      "composition": [["e", "e", "e"], ["e", "e", "1"]]})";
    CHECK_THROWS_WITH_AS(load_category_json(text, "t"), doctest::Contains("composition[1]"),
                         LoadError);
  }
  SUBCASE("identity composites are implied") {
    std::string text = R"({"objects": ["o"],
      "morphisms": [{"name": "1", "dom": "o", "cod": "o"}, {"name": "e", "dom": "o", "cod": "o"}],
      "identities": {"o": "1"},
      "composition": [["e", "e", "e"], ["e", "1", "e"]]})";
    CHECK_THROWS_WITH_AS(load_category_json(text, "t"), doctest::Contains("implied"), LoadError);
  }
  SUBCASE("non-composable pair") {
    std::string text = R"({"objects": ["0", "1"],
      "morphisms": [{"name": "id0", "dom": "0", "cod": "0"}, {"name": "id1", "dom": "1", "cod": "1"},
                    {"name": "a", "dom": "0", "cod": "1"}],
      "identities": {"0": "id0", "1": "id1"},
      "composition": [["a", "a", "a"]]})";
    CHECK_THROWS_WITH_AS(load_category_json(text, "t"), doctest::Contains("not composable"),
                         LoadError);
  }
  SUBCASE("parse error") {
    CHECK_THROWS_AS(load_category_json("{", "t"), LoadError);
  }
}

TEST_CASE("fs and choice and algebra files") {
  FsData fs = load_fs_json(R"({"E": ["a"], "M": ["b"]})", "t");
  CHECK_FALSE(fs.strict);
  CHECK(fs.left == std::vector<std::string>{"a"});

  FsData strict = load_fs_json(R"({"E0": [], "M0": ["b"]})", "t");
  CHECK(strict.strict);

  CHECK_THROWS_AS(load_fs_json(R"({"E": [], "M0": []})", "t"), LoadError);
  CHECK_THROWS_AS(load_fs_json(R"({})", "t"), LoadError);

  ChoiceData choice = load_choice_json(R"({"a": {"e": "x", "mid": "M", "m": "y"}})", "t");
  CHECK(choice.at("a").mid == "M");
  CHECK_THROWS_AS(load_choice_json(R"({"a": {"e": "x"}})", "t"), LoadError);

  AlgebraData alg = load_algebra_json(
      R"({"monad": "P", "on_objects": {"x": "0"}, "on_morphisms": {"f": "a"}})", "t");
  CHECK(alg.monad == "P");
  CHECK_FALSE(alg.has_theta);
  AlgebraData alg2 = load_algebra_json(
      R"({"monad": "Fr", "on_objects": {}, "on_morphisms": {}, "theta": {"x": "a"}})", "t");
  CHECK(alg2.has_theta);
  CHECK_THROWS_AS(load_algebra_json(R"({"on_objects": {}, "on_morphisms": {}})", "t"), LoadError);
}

TEST_CASE("digests are stable") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("abc") == fnv1a64_hex("abc"));
  CHECK(fnv1a64_hex("abc") != fnv1a64_hex("abd"));
}
