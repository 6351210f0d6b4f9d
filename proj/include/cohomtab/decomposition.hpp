#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohomtab/supernatural.hpp"
#include "cohomtab/table.hpp"

namespace cohomtab {

// A subtraction produced a negative entry (or the input failed the
// admissibility surrogate). The position is a witness that no positive
// multiple of the input is a sheaf cohomology table.
class NonAdmissible : public Error {
 public:
  NonAdmissible(int step, int row, int degree, Rational value, const std::string& why);

  int step() const noexcept { return step_; }
  int row() const noexcept { return row_; }
  int degree() const noexcept { return degree_; }
  const Rational& value() const noexcept { return value_; }

 private:
  int step_;
  int row_;
  int degree_;
  Rational value_;
};

struct DecompositionStep {
  RootSequence roots;
  Rational coefficient;
  std::vector<int> killed_corners;  // rows where the minimal ratio was attained
  friend bool operator==(const DecompositionStep&, const DecompositionStep&) = default;
};

enum class DecompositionStatus { kExhaustedToZero, kBudgetReached, kWindowExhausted };

std::string to_string(DecompositionStatus status);

struct DimensionDrop {
  int after_step = 0;  // number of steps taken when the drop was observed
  int from = 0;
  int to = 0;
};

struct Decomposition {
  int ambient = 0;
  std::vector<DecompositionStep> steps;
  CohomologyTable residual{0, Window{0, 0}};
  DecompositionStatus status = DecompositionStatus::kExhaustedToZero;
  std::vector<DimensionDrop> dimension_drops;
  // Set when status is kWindowExhausted.
  std::optional<std::pair<int, int>> exhausted_at;
  std::string exhausted_reason;
  // Largest residual entry in the current top row.
  Rational top_row_max;
};

struct StepResult {
  DecompositionStep step;
  CohomologyTable residual{0, Window{0, 0}};
};

// One greedy step: z = regularity sequence, q = minimal corner ratio,
// residual = γ - q·γ^z. Throws WindowExhausted, UnboundedRow, NonAdmissible.
// `step_index` only labels errors.
StepResult decompose_step(const CohomologyTable& t, int step_index = 1);

struct DecomposeOptions {
  int max_steps = 100;
  // Optional cap on consecutive steps spent in one dimension.
  std::optional<int> per_dimension_budget;
};

// Runs decompose_step until the residual is zero, a budget is reached, or the
// window is exhausted. The input must pass admissibility_check (NonAdmissible
// otherwise); a negative residual entry propagates as NonAdmissible.
Decomposition decompose(const CohomologyTable& t, const DecomposeOptions& options);
Decomposition decompose(const CohomologyTable& t, int max_steps);

// Σ q_z γ^z over `window` in P^n.
CohomologyTable reconstruct(const Decomposition& dec, Window window);
CohomologyTable reconstruct(const std::vector<DecompositionStep>& steps, int n, Window window);

// Strictly decreasing roots (termwise, -∞ padded) and positive coefficients.
bool verify_chain(const std::vector<DecompositionStep>& steps);
bool verify_chain(const Decomposition& dec);

}  // namespace cohomtab
