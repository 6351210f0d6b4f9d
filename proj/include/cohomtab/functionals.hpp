#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cohomtab/table.hpp"

namespace cohomtab {

// Strictly increasing d_0 < d_1 < ... < d_{s+1}.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees);

  // s, i.e. length - 2.
  int s() const noexcept { return static_cast<int>(degrees_.size()) - 2; }
  int size() const noexcept { return static_cast<int>(degrees_.size()); }
  int operator[](int i) const { return degrees_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& values() const noexcept { return degrees_; }
  std::string to_string() const;
  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

// Bounds ψ_0..ψ_{s+1}; entries may be kInfinity, and -1 means an empty sum.
using BoundSequence = std::vector<int>;

// r_i(d) = ∏_{0<=j<k<=s+1, j,k≠i} (d_k - d_j)
Rational vandermonde_weight(const DegreeSequence& d, int i);
std::vector<Rational> vandermonde_weights(const DegreeSequence& d);

// φ^j(s) for 1 <= j <= s and the special φ^0(s).
BoundSequence phi_bounds(int j, int s);
// (∞, ..., ∞) of length s+2.
BoundSequence infinite_bounds(int s);

// L(d,ψ)(γ) = Σ (-1)^i r_i χ_{-d_i}^{<=ψ_i}(γ)
Rational evaluate_L(const DegreeSequence& d, const BoundSequence& psi, const CohomologyTable& t);

// The table of coefficients c_{j,e} with L(d,ψ)(γ) = Σ c_{j,e} γ_{j,e},
// laid out on an n-row table whose window spans the twists -d_i.
CohomologyTable functional_table(const DegreeSequence& d, const BoundSequence& psi, int n);

// L(d,∞)(γ) after checking that χ is a polynomial of degree <= s on the
// table window (NotPolynomial otherwise). Zero whenever the check passes.
Rational interpolation_check(const DegreeSequence& d, const CohomologyTable& t);

// Finitely supported β_{i,k} (homological index i, degree k).
struct BettiTable {
  std::map<std::pair<int, int>, Rational> entries;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// β^d: β_{i,d_i} = r_i(d).
BettiTable pure_betti(const DegreeSequence& d);

// ⟨β,γ⟩ = Σ_{j<=i} (-1)^{i-j} β_{i,k} γ_{j,-k}
Rational pairing(const BettiTable& beta, const CohomologyTable& t);

// ⟨β,γ⟩_{c,τ}: the j<τ or j<=i-2 part of the pairing, plus the terms with
// j = τ, i = τ+ε, k <= c+ε for ε ∈ {0,1}.
Rational pairing_c_tau(const BettiTable& beta, const CohomologyTable& t, int c, int tau);

// A_0..A_s for the decomposition of -L(d,φ^0) into all-tops functionals on
// the truncated sequences d^{(s+1-k)} = (d_1, ..., d_{s+1-k}).
std::vector<Rational> chi_expansion_coefficients(const DegreeSequence& d);

struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

// lhs = -L(d,φ^0(s))(γ), rhs = Σ_k A_k L(d^{(s+1-k)}, ψ^{(s+1-k)})(γ).
IdentitySides chi_expansion_sides(const DegreeSequence& d, const CohomologyTable& t);

// Both sides of the descending-induction product identity, for values
// d_0..d_{s+1} (any rationals), 0 <= ell <= s+1 and -1 <= t <= ell-1.
// Throws IndexRange otherwise.
IdentitySides messy_identity_sides(const std::vector<Rational>& d, int ell, int t);
bool messy_identity_check(const std::vector<Rational>& d, int ell, int t);

// Degree box for certificate_search; all d_i lie in [lo, hi].
struct DegreeBox {
  int lo = 0;
  int hi = -1;
};

struct Certificate {
  DegreeSequence degrees;
  int j = 0;
  Rational value;  // L(d,φ^j)(γ); negative for j >= 1, positive for j = 0
};

// First (d, j) with L(d,φ^j)(γ) < 0 (j >= 1) or -L(d,φ^0)(γ) < 0, searching
// s = 0..s_max, then span d_{s+1} - d_0 ascending, then d lexicographically,
// then j ascending. std::nullopt is inconclusive, not a realizability proof.
std::optional<Certificate> certificate_search(const CohomologyTable& t, DegreeBox box, int s_max);

}  // namespace cohomtab
