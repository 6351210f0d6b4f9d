#pragma once

#include <compare>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cohomtab/errors.hpp"
#include "cohomtab/polynomial.hpp"
#include "cohomtab/rational.hpp"

namespace cohomtab {

// Stands for +∞ wherever an integer bound is expected (partial Euler
// characteristics, bound sequences).
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Closed degree interval [lo, hi].
struct Window {
  int lo = 0;
  int hi = -1;

  bool empty() const noexcept { return hi < lo; }
  bool contains(int d) const noexcept { return lo <= d && d <= hi; }
  int size() const noexcept { return empty() ? 0 : hi - lo + 1; }
  friend bool operator==(const Window&, const Window&) = default;
};

// Polynomial continuation of a table outside its window.
//  upper: for d > hi, row 0 equals *upper and every row >= 1 vanishes.
//  lower: for d < lo, row i equals (*lower)[i].
struct Tails {
  std::optional<Polynomial> upper;
  std::optional<std::vector<Polynomial>> lower;
  friend bool operator==(const Tails&, const Tails&) = default;
};

// Largest degree at which a row is nonzero.
struct RowSup {
  enum class Kind { kNegInf, kFinite, kPosInf, kUnknown };
  Kind kind = Kind::kNegInf;
  int value = 0;

  static RowSup neg_inf() { return {Kind::kNegInf, 0}; }
  static RowSup finite(int d) { return {Kind::kFinite, d}; }
  static RowSup pos_inf() { return {Kind::kPosInf, 0}; }
  static RowSup unknown() { return {Kind::kUnknown, 0}; }
  bool is_finite() const noexcept { return kind == Kind::kFinite; }
  friend bool operator==(const RowSup&, const RowSup&) = default;
};

// Strictly decreasing integers z_1 > ... > z_s. Conceptually z_0 = +∞ and
// z_{s+1} = z_{s+2} = ... = -∞.
class RootSequence {
 public:
  RootSequence() = default;
  explicit RootSequence(std::vector<int> roots);

  int length() const noexcept { return static_cast<int>(roots_.size()); }
  bool empty() const noexcept { return roots_.empty(); }
  // 1-based, as in z_i.
  int operator[](int i) const { return roots_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& values() const noexcept { return roots_; }
  RootSequence shifted(int a) const;  // z_k + a
  std::string to_string() const;

  friend bool operator==(const RootSequence&, const RootSequence&) = default;

 private:
  std::vector<int> roots_;
};

// Termwise order with -∞ padding.
bool termwise_leq(const RootSequence& a, const RootSequence& b);
bool termwise_less(const RootSequence& a, const RootSequence& b);

struct Corner {
  int row = 0;
  int degree = 0;  // entry coordinate: the value is γ_{row, degree}
  Rational value;
  friend bool operator==(const Corner&, const Corner&) = default;
};

// Exact cohomology table γ_{i,d} (0 <= i <= n) on a finite degree window,
// optionally continued by polynomial tails. Entries are addressed in entry
// coordinates (i, d) with value h^i(F(d)); only rendering uses the display
// column d + i.
class CohomologyTable {
 public:
  CohomologyTable(int n, Window window, Tails tails = {});
  // `row_major` holds (n+1) * window.size() values, row 0 first.
  CohomologyTable(int n, Window window, std::vector<Rational> row_major, Tails tails);

  template <class Fn>
  static CohomologyTable generate(int n, Window window, Fn&& fn, Tails tails = {}) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>((n + 1) * window.size()));
    for (int i = 0; i <= n; ++i) {
      for (int d = window.lo; d <= window.hi; ++d) values.emplace_back(fn(i, d));
    }
    return CohomologyTable(n, window, std::move(values), std::move(tails));
  }

  int ambient() const noexcept { return n_; }
  const Window& window() const noexcept { return window_; }
  const Tails& tails() const noexcept { return tails_; }

  // Window-only access; throws OutOfWindow outside the window.
  const Rational& stored(int i, int d) const;
  // γ_{i,d}, falling back on tails outside the window.
  Rational entry(int i, int d) const;
  bool evaluable(int i, int d) const noexcept;

  RowSup row_sup(int i) const { return row_sup_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const noexcept;

  friend bool operator==(const CohomologyTable& a, const CohomologyTable& b) {
    return a.n_ == b.n_ && a.window_ == b.window_ && a.values_ == b.values_ &&
           a.tails_ == b.tails_;
  }

 private:
  std::size_t index(int i, int d) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(window_.size()) +
           static_cast<std::size_t>(d - window_.lo);
  }
  void validate_shape() const;
  RowSup scan_row_sup(int i) const;

  int n_;
  Window window_;
  std::vector<Rational> values_;
  Tails tails_;
  std::vector<RowSup> row_sup_;
};

// Σ coeffs[k] · tables[k]. Tables must share n. The result window is the hull
// of the inputs on each side where every input can be evaluated by tails, and
// otherwise the tightest window among inputs lacking that tail.
CohomologyTable linear_combine(const std::vector<Rational>& coeffs,
                               const std::vector<CohomologyTable>& tables);

// Largest i with a nonzero row, -1 for the zero table.
int dimension(const CohomologyTable& t);

// z_i = max_{j>=i}(row_sup[j] + 1 + j) - i for i = 1..dim.
RootSequence regularity_sequence(const CohomologyTable& t);

std::vector<Corner> corners(const CohomologyTable& t);

// χ_d^{<=bound} = Σ_{i<=min(bound,n)} (-1)^i γ_{i,d}; bound may be kInfinity.
Rational partial_euler(const CohomologyTable& t, int d, int bound = kInfinity);

// Interpolates d ↦ χ_d over the window after checking that the
// (expected_degree+1)-st finite differences vanish at every sample.
Polynomial euler_polynomial(const CohomologyTable& t, int expected_degree);

enum class CheckStatus { kPass, kFail, kNotChecked };

struct AdmissibilityReport {
  CheckStatus nonnegative = CheckStatus::kNotChecked;       // (a)
  CheckStatus higher_rows_vanish = CheckStatus::kNotChecked;  // (b)
  CheckStatus euler_polynomial = CheckStatus::kNotChecked;    // (c)
  // Sheaf-realizability of the lower positions cannot be decided from a table.
  CheckStatus lower_positions = CheckStatus::kNotChecked;
  std::optional<Corner> first_negative;  // position and value of a negative entry
  std::vector<std::string> notes;

  bool passed() const noexcept {
    return nonnegative == CheckStatus::kPass && higher_rows_vanish == CheckStatus::kPass &&
           euler_polynomial != CheckStatus::kFail;
  }
};

AdmissibilityReport admissibility_check(const CohomologyTable& t);

struct RenderOptions {
  // Display column range; defaults to [lo + n, hi] (or the full span if
  // that is empty).
  std::optional<int> first_column;
  std::optional<int> last_column;
  bool pretty = true;
};

std::string render(const CohomologyTable& t, const RenderOptions& options = {});

}  // namespace cohomtab
