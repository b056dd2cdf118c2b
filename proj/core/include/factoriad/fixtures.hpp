#pragma once

#include <string>
#include <vector>

#include "factoriad/fincat.hpp"

namespace factoriad::fixtures {

/// The thin category {0 -> 1}: morphisms id0, id1, a.
CatPtr two();

/// Thin chain 0 -> 1 -> 2 with composite gf (6 morphisms).
CatPtr three();

/// One object o with an idempotent: morphisms 1, e, e.e = e.
CatPtr idem();

/// Objects A, B with p: A->B split by s: B->A; p.s = idB, s.p = e.
CatPtr split();

/// Two parallel arrows f, g: A -> B.
CatPtr pair();

/// Empty category.
CatPtr empty();

/// One object, one (identity) morphism.
CatPtr one();

const std::vector<std::string>& names();  // the five bundled fixture names
CatPtr by_name(const std::string& name);

}  // namespace factoriad::fixtures
