#include "cohomtab/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohomtab {

NonAdmissible::NonAdmissible(int step, int row, int degree, Rational value, const std::string& why)
    : Error("non-admissible at step " + std::to_string(step) + ": entry (" + std::to_string(row) +
            "," + std::to_string(degree) + ") = " + format_rational(value, true) + ": " + why),
      step_(step),
      row_(row),
      degree_(degree),
      value_(std::move(value)) {}

std::string to_string(DecompositionStatus status) {
  switch (status) {
    case DecompositionStatus::kExhaustedToZero:
      return "exhausted_to_zero";
    case DecompositionStatus::kBudgetReached:
      return "budget_reached";
    case DecompositionStatus::kWindowExhausted:
      return "window_exhausted";
  }
  return "unknown";
}

namespace {

void check_nonnegative(const CohomologyTable& r, int step_index) {
  const Window w = r.window();
  for (int i = 0; i <= r.ambient(); ++i) {
    for (int d = w.lo; d <= w.hi; ++d) {
      if (r.stored(i, d) < 0) {
        throw NonAdmissible(step_index, i, d, r.stored(i, d), "negative residual entry");
      }
    }
  }
}

}  // namespace

StepResult decompose_step(const CohomologyTable& t, int step_index) {
  const int n = t.ambient();
  const int s = dimension(t);
  if (s < 0) throw std::invalid_argument("decompose_step: zero table");
  const Window w = t.window();

  if (s == 0) {
    Rational q;
    int at = w.lo;
    for (int d = w.lo; d <= w.hi; ++d) {
      if (d == w.lo || t.stored(0, d) < q) {
        q = t.stored(0, d);
        at = d;
      }
    }
    if (q <= 0) throw NonAdmissible(step_index, 0, at, q, "row 0 of a dimension-0 table must be positive");
    const SupernaturalSpec spec(RootSequence{}, n);
    CohomologyTable residual = linear_combine({Rational(1), -q}, {t, supernatural_table(spec, w)});
    check_nonnegative(residual, step_index);
    return {{RootSequence{}, q, {0}}, std::move(residual)};
  }

  const RootSequence z = regularity_sequence(t);
  const SupernaturalSpec spec(z, n);
  std::vector<Corner> cs;
  for (int i = 1; i <= s; ++i) {
    if (i < s && z[i + 1] >= z[i] - 1) continue;
    const int d = z[i] - 1;
    if (!t.evaluable(i, d)) throw WindowExhausted(i, d, "corner outside the window");
    cs.push_back({i, d, t.entry(i, d)});
  }

  std::optional<Rational> q;
  std::vector<int> killed;
  for (const auto& c : cs) {
    const Rational ratio = c.value / supernatural_entry(spec, c.row, c.degree);
    if (!q || ratio < *q) {
      q = ratio;
      killed = {c.row};
    } else if (ratio == *q) {
      killed.push_back(c.row);
    }
  }
  if (!q || *q <= 0) {
    // The last row is never empty, so its corner exists and has positive
    // γ^z value; a nonpositive ratio means a nonpositive corner entry.
    const Corner& c = cs.back();
    throw NonAdmissible(step_index, c.row, c.degree, c.value, "corner value is not positive");
  }

  // γ^z on a window wide enough that both of its tails are exact.
  const Window gw{std::min(w.lo, z[s] + 1), std::max(w.hi, z[1] - 1)};
  const CohomologyTable gz = supernatural_table(spec, gw);
  CohomologyTable residual = linear_combine({Rational(1), -*q}, {t, gz});
  check_nonnegative(residual, step_index);

  if (!residual.tails().lower) {
    // A row whose γ^z support reaches below the window may still be nonzero
    // there; an all-zero window row would fake a dimension drop.
    const int lo = residual.window().lo;
    for (int i = 1; i <= s; ++i) {
      const bool reaches_below = i == s || z[i + 1] + 1 < lo;
      if (reaches_below && residual.row_sup(i).kind == RowSup::Kind::kNegInf) {
        throw WindowExhausted(i, lo - 1, "row vanishes on the window but may not below it");
      }
    }
  }
  return {{z, *q, std::move(killed)}, std::move(residual)};
}

Decomposition decompose(const CohomologyTable& t, int max_steps) {
  return decompose(t, DecomposeOptions{max_steps, std::nullopt});
}

Decomposition decompose(const CohomologyTable& t, const DecomposeOptions& options) {
  const AdmissibilityReport report = admissibility_check(t);
  if (!report.passed()) {
    if (report.first_negative) {
      const Corner& c = *report.first_negative;
      throw NonAdmissible(0, c.row, c.degree, c.value, "negative input entry");
    }
    std::string why = "input fails the admissibility check";
    for (const auto& note : report.notes) why += "; " + note;
    throw NonAdmissible(0, 0, t.window().lo, Rational(0), why);
  }

  Decomposition dec;
  dec.ambient = t.ambient();
  dec.residual = t;
  int dim = dimension(t);
  int in_dimension = 0;
  dec.status = DecompositionStatus::kBudgetReached;
  while (true) {
    if (dec.residual.is_zero()) {
      dec.status = DecompositionStatus::kExhaustedToZero;
      break;
    }
    if (static_cast<int>(dec.steps.size()) >= options.max_steps) break;
    if (options.per_dimension_budget && in_dimension >= *options.per_dimension_budget) break;
    try {
      StepResult r = decompose_step(dec.residual, static_cast<int>(dec.steps.size()) + 1);
      dec.steps.push_back(std::move(r.step));
      dec.residual = std::move(r.residual);
    } catch (const WindowExhausted& e) {
      dec.status = DecompositionStatus::kWindowExhausted;
      dec.exhausted_at = std::make_pair(e.row(), e.degree());
      dec.exhausted_reason = e.what();
      break;
    }
    const int now = dimension(dec.residual);
    if (now != dim) {
      dec.dimension_drops.push_back({static_cast<int>(dec.steps.size()), dim, now});
      dim = now;
      in_dimension = 0;
    } else {
      ++in_dimension;
    }
  }

  dec.top_row_max = 0;
  if (dim >= 0) {
    const Window w = dec.residual.window();
    for (int d = w.lo; d <= w.hi; ++d) {
      dec.top_row_max = std::max(dec.top_row_max, Rational(dec.residual.stored(dim, d)));
    }
  }
  return dec;
}

CohomologyTable reconstruct(const std::vector<DecompositionStep>& steps, int n, Window window) {
  CohomologyTable acc = CohomologyTable::generate(n, window, [](int, int) { return Rational(0); });
  for (const auto& step : steps) {
    const SupernaturalSpec spec(step.roots, n, step.coefficient);
    const CohomologyTable g = supernatural_table(spec, window);
    acc = CohomologyTable::generate(
        n, window, [&](int i, int d) { return Rational(acc.stored(i, d) + g.stored(i, d)); });
  }
  return acc;
}

CohomologyTable reconstruct(const Decomposition& dec, Window window) {
  return reconstruct(dec.steps, dec.ambient, window);
}

bool verify_chain(const std::vector<DecompositionStep>& steps) {
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k].coefficient <= 0) return false;
    if (k > 0 && !termwise_less(steps[k].roots, steps[k - 1].roots)) return false;
  }
  return true;
}

bool verify_chain(const Decomposition& dec) { return verify_chain(dec.steps); }

}  // namespace cohomtab
