#include "factoriad/fixtures.hpp"

namespace factoriad::fixtures {

CatPtr two() {
  CategoryData d;
  d.objects = {"0", "1"};
  d.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"a", "0", "1"}};
  d.identities = {{"0", "id0"}, {"1", "id1"}};
  return make_category(d);
}

CatPtr three() {
  CategoryData d;
  d.objects = {"0", "1", "2"};
  d.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"id2", "2", "2"},
                 {"f", "0", "1"},   {"g", "1", "2"},   {"gf", "0", "2"}};
  d.identities = {{"0", "id0"}, {"1", "id1"}, {"2", "id2"}};
  d.composition = {{"g", "f", "gf"}};
  return make_category(d);
}

CatPtr idem() {
  CategoryData d;
  d.objects = {"o"};
  d.morphisms = {{"1", "o", "o"}, {"e", "o", "o"}};
  d.identities = {{"o", "1"}};
  d.composition = {{"e", "e", "e"}};
  return make_category(d);
}

CatPtr split() {
  CategoryData d;
  d.objects = {"A", "B"};
  d.morphisms = {{"idA", "A", "A"}, {"idB", "B", "B"}, {"p", "A", "B"},
                 {"s", "B", "A"},   {"e", "A", "A"}};
  d.identities = {{"A", "idA"}, {"B", "idB"}};
  d.composition = {{"p", "s", "idB"}, {"s", "p", "e"}, {"e", "e", "e"},
                   {"p", "e", "p"},   {"e", "s", "s"}};
  return make_category(d);
}

CatPtr pair() {
  CategoryData d;
  d.objects = {"A", "B"};
  d.morphisms = {{"idA", "A", "A"}, {"idB", "B", "B"}, {"f", "A", "B"}, {"g", "A", "B"}};
  d.identities = {{"A", "idA"}, {"B", "idB"}};
  return make_category(d);
}

CatPtr empty() { return make_category(CategoryData{}); }

CatPtr one() {
  CategoryData d;
  d.objects = {"o"};
  d.morphisms = {{"1", "o", "o"}};
  d.identities = {{"o", "1"}};
  return make_category(d);
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = {"two", "three", "idem", "split", "pair"};
  return n;
}

CatPtr by_name(const std::string& name) {
  if (name == "two") return two();
  if (name == "three") return three();
  if (name == "idem") return idem();
  if (name == "split") return split();
  if (name == "pair") return pair();
  throw CatError("unknown fixture '" + name + "'");
}

}  // namespace factoriad::fixtures
