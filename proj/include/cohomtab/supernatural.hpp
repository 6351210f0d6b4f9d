#pragma once

#include "cohomtab/polynomial.hpp"
#include "cohomtab/table.hpp"

namespace cohomtab {

// Normalized supernatural table γ^z (degree s!, so χ(d) = ∏(d - z_k)),
// multiplied by `scale` and embedded in P^ambient with zero rows above s.
struct SupernaturalSpec {
  RootSequence roots;
  Rational scale{1};
  int ambient = 0;

  SupernaturalSpec(RootSequence roots, int ambient, Rational scale = Rational(1));
  // ambient = s
  static SupernaturalSpec of(RootSequence roots, Rational scale = Rational(1));
};

// scale · ∏|d - z_k| when z_i > d > z_{i+1}, else 0.
Rational supernatural_entry(const SupernaturalSpec& spec, int i, int d);

// Materializes γ^z over `window`. The upper tail (row 0 = scale·∏(d - z_k))
// is attached when hi >= z_1 - 1 and the lower tail (row s = scale·∏|d - z_k|)
// when lo <= z_s + 1; those are exactly the windows beyond which each tail
// describes the whole table.
CohomologyTable supernatural_table(const SupernaturalSpec& spec, Window window);

// scale · ∏(d - z_k)
Polynomial hilbert_polynomial(const SupernaturalSpec& spec);

}  // namespace cohomtab
