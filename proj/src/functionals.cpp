#include "cohomtab/functionals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cohomtab {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.size() < 2) throw std::invalid_argument("degree sequence needs at least 2 entries");
  for (std::size_t k = 1; k < degrees_.size(); ++k) {
    if (degrees_[k] <= degrees_[k - 1]) {
      throw std::invalid_argument("degree sequence must be strictly increasing");
    }
  }
}

std::string DegreeSequence::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < degrees_.size(); ++k) os << (k ? "," : "") << degrees_[k];
  os << ')';
  return os.str();
}

Rational vandermonde_weight(const DegreeSequence& d, int i) {
  if (i < 0 || i >= d.size()) throw IndexRange("r_i: index out of range");
  Integer acc = 1;
  for (int j = 0; j < d.size(); ++j) {
    if (j == i) continue;
    for (int k = j + 1; k < d.size(); ++k) {
      if (k == i) continue;
      acc *= d[k] - d[j];
    }
  }
  return Rational(acc);
}

std::vector<Rational> vandermonde_weights(const DegreeSequence& d) {
  std::vector<Rational> r;
  for (int i = 0; i < d.size(); ++i) r.push_back(vandermonde_weight(d, i));
  return r;
}

BoundSequence phi_bounds(int j, int s) {
  if (s < 0 || j < 0 || j > s) throw IndexRange("phi_bounds: need 0 <= j <= s");
  BoundSequence psi(static_cast<std::size_t>(s + 2));
  if (j == 0) {
    psi[0] = -1;
    for (int i = 1; i <= s; ++i) psi[static_cast<std::size_t>(i)] = i - 1;
    psi[static_cast<std::size_t>(s + 1)] = s - 1;
    return psi;
  }
  for (int i = 0; i <= s + 1; ++i) {
    psi[static_cast<std::size_t>(i)] = i < j ? i : (i == j ? i - 1 : i - 2);
  }
  return psi;
}

BoundSequence infinite_bounds(int s) { return BoundSequence(static_cast<std::size_t>(s + 2), kInfinity); }

Rational evaluate_L(const DegreeSequence& d, const BoundSequence& psi, const CohomologyTable& t) {
  if (static_cast<int>(psi.size()) != d.size()) {
    throw std::invalid_argument("bound sequence length does not match degree sequence");
  }
  Rational acc = 0;
  for (int i = 0; i < d.size(); ++i) {
    const int bound = psi[static_cast<std::size_t>(i)];
    if (bound < 0) continue;
    Rational term = vandermonde_weight(d, i) * partial_euler(t, -d[i], bound);
    if (i % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

CohomologyTable functional_table(const DegreeSequence& d, const BoundSequence& psi, int n) {
  if (static_cast<int>(psi.size()) != d.size()) {
    throw std::invalid_argument("bound sequence length does not match degree sequence");
  }
  const Window w{-d[d.size() - 1], -d[0]};
  std::vector<Rational> values(static_cast<std::size_t>((n + 1) * w.size()));
  for (int i = 0; i < d.size(); ++i) {
    const Rational r = vandermonde_weight(d, i);
    const int top = std::min(psi[static_cast<std::size_t>(i)], n);
    for (int j = 0; j <= top; ++j) {
      auto& cell = values[static_cast<std::size_t>(j * w.size() + (-d[i] - w.lo))];
      cell = (i + j) % 2 == 0 ? r : Rational(-r);
    }
  }
  return CohomologyTable(n, w, std::move(values), {});
}

Rational interpolation_check(const DegreeSequence& d, const CohomologyTable& t) {
  if (t.window().size() >= d.s() + 3) euler_polynomial(t, d.s());
  return evaluate_L(d, infinite_bounds(d.s()), t);
}

BettiTable pure_betti(const DegreeSequence& d) {
  BettiTable b;
  for (int i = 0; i < d.size(); ++i) b.entries[{i, d[i]}] = vandermonde_weight(d, i);
  return b;
}

Rational pairing(const BettiTable& beta, const CohomologyTable& t) {
  Rational acc = 0;
  for (const auto& [key, value] : beta.entries) {
    const auto [i, k] = key;
    if (value == 0) continue;
    for (int j = 0; j <= std::min(i, t.ambient()); ++j) {
      Rational term = value * t.entry(j, -k);
      if ((i - j) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
  }
  return acc;
}

Rational pairing_c_tau(const BettiTable& beta, const CohomologyTable& t, int c, int tau) {
  if (tau < 0 || tau > t.ambient()) throw IndexRange("pairing_c_tau: need 0 <= tau <= n");
  Rational acc = 0;
  for (const auto& [key, value] : beta.entries) {
    const auto [i, k] = key;
    if (value == 0) continue;
    for (int j = 0; j <= std::min(i, t.ambient()); ++j) {
      const bool first = j < tau || j <= i - 2;
      const int eps = i - j;
      const bool second = j == tau && (eps == 0 || eps == 1) && k <= c + eps;
      if (!first && !second) continue;
      // the two index sets are disjoint
      Rational term = value * t.entry(j, -k);
      if ((i - j) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
  }
  return acc;
}

std::vector<Rational> chi_expansion_coefficients(const DegreeSequence& d) {
  const int s = d.s();
  std::vector<Rational> a;
  for (int k = 0; k <= s; ++k) {
    Integer acc = 1;
    for (int j = 1; j <= s - k; ++j) acc *= d[j] - d[0];
    for (int i = 1; i <= s + 1; ++i) {
      for (int j = std::max(i + 1, s + 2 - k); j <= s + 1; ++j) acc *= d[j] - d[i];
    }
    a.emplace_back(acc);
  }
  return a;
}

IdentitySides chi_expansion_sides(const DegreeSequence& d, const CohomologyTable& t) {
  const int s = d.s();
  IdentitySides out;
  out.lhs = -evaluate_L(d, phi_bounds(0, s), t);
  const auto a = chi_expansion_coefficients(d);
  out.rhs = 0;
  for (int k = 0; k <= s; ++k) {
    const int m = s + 1 - k;
    // d^{(m)} = (d_1..d_m) has length m, so it is a degree sequence of s' = m - 2.
    std::vector<int> sub(d.values().begin() + 1, d.values().begin() + 1 + m);
    BoundSequence psi;
    for (int i = 0; i < m; ++i) psi.push_back(i);
    if (m == s + 1) psi.back() = s - 1;
    if (m < 2) {
      // a single degree: L = r_0 χ^{<=0} with the empty product r_0 = 1
      out.rhs += a[static_cast<std::size_t>(k)] * partial_euler(t, -sub[0], psi[0]);
      continue;
    }
    out.rhs += a[static_cast<std::size_t>(k)] * evaluate_L(DegreeSequence(sub), psi, t);
  }
  return out;
}

IdentitySides messy_identity_sides(const std::vector<Rational>& d, int ell, int t) {
  const int s = static_cast<int>(d.size()) - 2;
  if (s < 0) throw IndexRange("messy identity: need at least two values");
  if (ell < 0 || ell > s + 1) throw IndexRange("messy identity: need 0 <= ell <= s+1");
  if (t < -1 || t > ell - 1) throw IndexRange("messy identity: need -1 <= t <= ell-1");
  const int b = s - ell + 1;
  auto at = [&](int j) -> const Rational& { return d.at(static_cast<std::size_t>(j)); };
  auto term = [&](int k) {
    Rational p = 1;
    for (int j = b; j <= s - k; ++j) p *= at(j) - at(0);
    for (int j = s - k + 2; j <= s + 1; ++j) p *= at(j) - at(b);
    return p;
  };
  IdentitySides out;
  out.lhs = 0;
  for (int k = 0; k <= ell; ++k) out.lhs += term(k);
  Rational head = 1;
  for (int j = b + 1; j <= s - t; ++j) head *= at(j) - at(0);
  for (int j = s - t + 1; j <= s + 1; ++j) head *= at(j) - at(b);
  out.rhs = head;
  for (int k = 0; k <= t; ++k) out.rhs += term(k);
  return out;
}

bool messy_identity_check(const std::vector<Rational>& d, int ell, int t) {
  return messy_identity_sides(d, ell, t).holds();
}

namespace {

void combinations(int lo, int hi, int len, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  const int start = cur.empty() ? lo : cur.back() + 1;
  for (int v = start; v <= hi - (len - static_cast<int>(cur.size()) - 1); ++v) {
    cur.push_back(v);
    combinations(lo, hi, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<Certificate> certificate_search(const CohomologyTable& t, DegreeBox box, int s_max) {
  for (int s = 0; s <= s_max; ++s) {
    std::vector<std::vector<int>> seqs;
    std::vector<int> cur;
    combinations(box.lo, box.hi, s + 2, cur, seqs);
    std::stable_sort(seqs.begin(), seqs.end(), [](const auto& x, const auto& y) {
      return x.back() - x.front() < y.back() - y.front();
    });
    for (const auto& seq : seqs) {
      const DegreeSequence d(seq);
      for (int j = 0; j <= s; ++j) {
        Rational value;
        try {
          value = evaluate_L(d, phi_bounds(j, s), t);
        } catch (const OutOfWindow&) {
          continue;
        }
        if (j == 0) value = -value;
        if (value < 0) return Certificate{d, j, value};
      }
    }
  }
  return std::nullopt;
}

}  // namespace cohomtab
