#pragma once

// Extra categories with non-identity isomorphisms; the bundled fixtures have
// none, so these exercise the genuinely pseudo side of the machinery.

#include "factoriad/fincat.hpp"

namespace testcats {

// Z/2 as a one-object groupoid.
inline factoriad::CatPtr group_z2() {
  factoriad::CategoryData d;
  d.objects = {"o"};
  d.morphisms = {{"1", "o", "o"}, {"g", "o", "o"}};
  d.identities = {{"o", "1"}};
  d.composition = {{"g", "g", "1"}};
  return factoriad::make_category(d);
}

// Two isomorphic objects: u: A -> B inverse to v.
inline factoriad::CatPtr iso_pair() {
  factoriad::CategoryData d;
  d.objects = {"A", "B"};
  d.morphisms = {{"idA", "A", "A"}, {"idB", "B", "B"}, {"u", "A", "B"}, {"v", "B", "A"}};
  d.identities = {{"A", "idA"}, {"B", "idB"}};
  d.composition = {{"u", "v", "idB"}, {"v", "u", "idA"}};
  return factoriad::make_category(d);
}

}  // namespace testcats
