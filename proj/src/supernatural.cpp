#include "cohomtab/supernatural.hpp"

#include <stdexcept>

namespace cohomtab {

SupernaturalSpec::SupernaturalSpec(RootSequence roots_, int ambient_, Rational scale_)
    : roots(std::move(roots_)), scale(std::move(scale_)), ambient(ambient_) {
  if (scale <= 0) throw std::invalid_argument("supernatural scale must be positive");
  if (ambient < roots.length()) {
    throw std::invalid_argument("ambient dimension " + std::to_string(ambient) +
                                " is smaller than the support dimension " +
                                std::to_string(roots.length()));
  }
}

SupernaturalSpec SupernaturalSpec::of(RootSequence roots, Rational scale) {
  const int s = roots.length();
  return SupernaturalSpec(std::move(roots), s, std::move(scale));
}

Rational supernatural_entry(const SupernaturalSpec& spec, int i, int d) {
  const RootSequence& z = spec.roots;
  const int s = z.length();
  if (i < 0 || i > spec.ambient) throw OutOfWindow(i, d);
  if (i > s) return 0;
  const bool below_upper = i == 0 || d < z[i];
  const bool above_lower = i == s || d > z[i + 1];
  if (!below_upper || !above_lower) return 0;
  Integer product = 1;
  for (int root : z.values()) product *= (d > root ? d - root : root - d);
  return spec.scale * Rational(product);
}

Polynomial hilbert_polynomial(const SupernaturalSpec& spec) {
  return spec.scale * Polynomial::from_roots(spec.roots.values());
}

CohomologyTable supernatural_table(const SupernaturalSpec& spec, Window window) {
  if (window.empty()) throw std::invalid_argument("supernatural_table: empty window");
  const RootSequence& z = spec.roots;
  const int s = z.length();
  const Polynomial chi = hilbert_polynomial(spec);

  Tails tails;
  if (s == 0 || window.hi >= z[1] - 1) tails.upper = chi;
  if (s == 0 || window.lo <= z[s] + 1) {
    // Below z_s only row s is nonzero, with value (-1)^s χ(d).
    std::vector<Polynomial> lower(static_cast<std::size_t>(spec.ambient + 1));
    lower[static_cast<std::size_t>(s)] = s % 2 == 0 ? chi : chi * Rational(-1);
    tails.lower = std::move(lower);
  }
  return CohomologyTable::generate(
      spec.ambient, window, [&](int i, int d) { return supernatural_entry(spec, i, d); },
      std::move(tails));
}

}  // namespace cohomtab
