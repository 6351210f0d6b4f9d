#include "cohomtab/identity_suite.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cohomtab/sheaf_library.hpp"
#include "cohomtab/supernatural.hpp"

namespace cohomtab {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.trials;
  if (!ok) {
    if (r.failures == 0) r.first_failure = what;
    ++r.failures;
  }
}

std::string values_string(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + format_rational(v[k], true);
  return out + ")";
}

}  // namespace

std::vector<int> random_increasing(Rng& rng, int length, int lo, int hi) {
  if (length < 0 || length > hi - lo + 1) throw std::invalid_argument("random_increasing: range too small");
  std::vector<int> pool(static_cast<std::size_t>(hi - lo + 1));
  std::iota(pool.begin(), pool.end(), lo);
  std::vector<int> out;
  std::sample(pool.begin(), pool.end(), std::back_inserter(out), length, rng);
  std::sort(out.begin(), out.end());
  return out;
}

DegreeSequence random_degrees(Rng& rng, int s, int lo, int hi) {
  return DegreeSequence(random_increasing(rng, s + 2, lo, hi));
}

Rational random_rational(Rng& rng, int num_bound, int den_bound) {
  Rational q(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
  q.canonicalize();
  return q;
}

CohomologyTable random_table(Rng& rng, int n, Window window, bool nonnegative) {
  return CohomologyTable::generate(n, window, [&](int, int) {
    Rational q = random_rational(rng, 12, 5);
    return nonnegative ? Rational(abs(q)) : q;
  });
}

std::vector<RootSequence> random_chain(Rng& rng, int n, int count, int lo, int hi) {
  const int len = uniform(rng, std::max(1, n / 2), n);
  std::vector<int> z = random_increasing(rng, len, lo, hi);
  std::reverse(z.begin(), z.end());
  std::vector<RootSequence> chain{RootSequence(z)};
  while (static_cast<int>(chain.size()) < count) {
    if (!z.empty() && uniform(rng, 0, 3) == 0) {
      z.pop_back();
    } else if (!z.empty()) {
      const int k = uniform(rng, 0, static_cast<int>(z.size()) - 1);
      const int delta = uniform(rng, 1, 2);
      for (std::size_t j = static_cast<std::size_t>(k); j < z.size(); ++j) z[j] -= delta;
    } else {
      break;
    }
    chain.emplace_back(z);
  }
  return chain;
}

SuiteResult chi_expansion_suite(const SuiteOptions& options) {
  SuiteResult r;
  r.name = "chi-expansion";
  Rng rng(options.seed);
  for (int trial = 0; trial < options.trials; ++trial) {
    const int s = uniform(rng, 0, options.max_s);
    const DegreeSequence d = random_degrees(rng, s, -12, 12);
    const int n = uniform(rng, std::max(s, 1), s + 2);
    const CohomologyTable t = random_table(rng, n, {-d[s + 1], -d[0]}, false);
    const IdentitySides sides = chi_expansion_sides(d, t);
    record(r, sides.holds(), "d=" + d.to_string());
  }
  return r;
}

SuiteResult product_identity_suite(const SuiteOptions& options) {
  SuiteResult r;
  r.name = "product-identity";
  Rng rng(options.seed + 1);
  for (int trial = 0; trial < options.trials; ++trial) {
    const int s = uniform(rng, 0, options.max_s);
    std::vector<Rational> d;
    for (int k = 0; k < s + 2; ++k) d.push_back(random_rational(rng, 20, 6));
    bool ok = true;
    std::string where;
    for (int ell = 0; ell <= s + 1 && ok; ++ell) {
      for (int t = -1; t <= ell - 1; ++t) {
        if (!messy_identity_check(d, ell, t)) {
          ok = false;
          where = "d=" + values_string(d) + " ell=" + std::to_string(ell) + " t=" + std::to_string(t);
          break;
        }
      }
    }
    record(r, ok, where);
  }
  return r;
}

SuiteResult interpolation_suite(const SuiteOptions& options) {
  SuiteResult r;
  r.name = "interpolation";
  Rng rng(options.seed + 2);
  for (int trial = 0; trial < options.trials; ++trial) {
    const int s = uniform(rng, 0, std::min(options.max_s, 5));
    const RootSequence z(
        [&] {
          auto v = random_increasing(rng, s, -8, 8);
          std::reverse(v.begin(), v.end());
          return v;
        }());
    const DegreeSequence d = random_degrees(rng, s, -8, 8);
    Rational scale(uniform(rng, 1, 9), uniform(rng, 1, 9));
    scale.canonicalize();
    const SupernaturalSpec spec(z, s, scale);
    const CohomologyTable t = supernatural_table(spec, {-d[s + 1], -d[0]});
    const Rational v = evaluate_L(d, infinite_bounds(s), t);
    record(r, v == 0, "z=" + z.to_string() + " d=" + d.to_string());
  }
  return r;
}

SuiteResult pairing_reduction_suite(const SuiteOptions& options) {
  SuiteResult r;
  r.name = "pairing-reductions";
  Rng rng(options.seed + 3);
  const auto catalog = stock_catalog();
  for (int trial = 0; trial < options.trials; ++trial) {
    const StockSheaf& sheaf = catalog[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(catalog.size()) - 1))];
    const int s = uniform(rng, 1, std::min(options.max_s, 5));
    const DegreeSequence d = random_degrees(rng, s, -8, 8);
    const CohomologyTable t = stock_table(sheaf, {-d[s + 1], -d[0]});
    const BettiTable beta = pure_betti(d);
    const int n = t.ambient();
    std::string where = sheaf.name() + " d=" + d.to_string();

    BoundSequence tops;
    for (int i = 0; i <= s + 1; ++i) tops.push_back(i);
    bool ok = pairing(beta, t) == evaluate_L(d, tops, t);

    const int tau_lo = uniform(rng, 1, std::min(s, n));
    const int c_lo = d[tau_lo] - uniform(rng, 1, 4);
    ok = ok && pairing_c_tau(beta, t, c_lo, tau_lo) == evaluate_L(d, phi_bounds(tau_lo, s), t);

    if (s >= 1) {
      const int tau_hi = uniform(rng, 0, std::min(s - 1, n));
      const int c_hi = d[tau_hi + 1] + uniform(rng, 0, 4);
      ok = ok && pairing_c_tau(beta, t, c_hi, tau_hi) == evaluate_L(d, phi_bounds(tau_hi + 1, s), t);
      where += " tau=" + std::to_string(tau_lo) + "/" + std::to_string(tau_hi);
    }
    record(r, ok, where);
  }
  return r;
}

std::vector<SuiteResult> run_identity_suites(const SuiteOptions& options) {
  return {chi_expansion_suite(options), product_identity_suite(options), interpolation_suite(options),
          pairing_reduction_suite(options)};
}

SuiteResult positivity_suite(const std::string& name, const CohomologyTable& t, Rng& rng, int count,
                             int box_lo, int box_hi, int s_max) {
  SuiteResult r;
  r.name = "positivity " + name;
  for (int trial = 0; trial < count; ++trial) {
    const int s = uniform(rng, 0, std::min(s_max, box_hi - box_lo - 1));
    const DegreeSequence d = random_degrees(rng, s, box_lo, box_hi);
    bool ok = true;
    std::string where;
    for (int j = 0; j <= s && ok; ++j) {
      Rational v = evaluate_L(d, phi_bounds(j, s), t);
      if (j == 0) v = -v;
      if (v < 0) {
        ok = false;
        where = "d=" + d.to_string() + " j=" + std::to_string(j) + " value=" + format_rational(v, true);
      }
    }
    record(r, ok, where);
  }
  return r;
}

SuiteResult interpolation_on_table(const std::string& name, const CohomologyTable& t, Rng& rng,
                                   int count, int box_lo, int box_hi, int s_max) {
  SuiteResult r;
  r.name = "interpolation " + name;
  const int dim = std::max(dimension(t), 0);
  for (int trial = 0; trial < count; ++trial) {
    const int s = uniform(rng, dim, std::max(dim, s_max));
    const DegreeSequence d = random_degrees(rng, s, box_lo, box_hi);
    const Rational v = interpolation_check(d, t);
    record(r, v == 0, "d=" + d.to_string() + " value=" + format_rational(v, true));
  }
  return r;
}

}  // namespace cohomtab
