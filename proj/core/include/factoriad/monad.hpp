#pragma once

#include <optional>
#include <string>

#include "factoriad/arrowmonad.hpp"
#include "factoriad/freyd.hpp"

namespace factoriad {

enum class MonadKind { P, Fr };

std::string monad_name(MonadKind k);
MonadKind monad_from_name(const std::string& name);

/// One application of the chosen construction to a base, with provenance.
/// For Fr the squares category is kept alongside the quotient.
struct MonadApp {
  MonadKind kind = MonadKind::P;
  ArrowCat arrow;
  std::optional<FreydCat> fr;

  const CatPtr& cat() const { return kind == MonadKind::P ? arrow.cat : fr->cat; }
  const CatPtr& base() const { return arrow.base; }

  int object_of(int obj) const;
  int object_index(int base_mor) const;
  int square(int src_bm, int tgt_bm, int top_bm, int bot_bm) const;
  int square_or_throw(int src_bm, int tgt_bm, int top_bm, int bot_bm) const;
  int top(int m) const;
  int bottom(int m) const;
  int diagonal(int m) const;
};

MonadApp monad_apply(MonadKind kind, CatPtr base);

/// T over one base together with T of the result, unit and multiplication.
struct MonadTower {
  MonadKind kind = MonadKind::P;
  CatPtr base;
  MonadApp t;    // T(base)
  MonadApp tt;   // T(t.cat())
  Functor unit;  // base -> t
  Functor mult;  // tt -> t
};

MonadTower make_tower(MonadKind kind, CatPtr base);

Functor monad_unit(const MonadApp& t);
Functor monad_mult(const MonadApp& t, const MonadApp& tt);
/// T applied to f: base(tc) -> base(td).
Functor monad_map(const MonadApp& tc, const MonadApp& td, const Functor& f);

/// Unit laws over TX and associativity streamed over the third iterate,
/// which is enumerated exhaustively but never materialized.
CheckReport check_monad_laws(MonadKind kind, CatPtr base, const SizeGuard& guard = {});

void require_tower_guard(MonadKind kind, const FinCategory& base, const SizeGuard& guard,
                         const std::string& operation);

}  // namespace factoriad
