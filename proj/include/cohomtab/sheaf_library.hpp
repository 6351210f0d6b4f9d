#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cohomtab/table.hpp"

namespace cohomtab {

enum class StockKind {
  kLineBundle,    // O_{P^s}(a) on a linear P^s ⊂ P^n
  kPointIdealP2,  // I_p, p a point of P^2
  kLineInPn,      // O_L(a), L a line in P^n
  kSkewLinesP3,   // I_X, X two skew lines in P^3
  kConicPointP3,  // I_Y, Y a plane conic plus a point off its plane
  kFixtureT2,
  kFixtureT3,
};

struct StockSheaf {
  StockKind kind = StockKind::kPointIdealP2;
  int s = 0;  // line bundles only
  int a = 0;  // line bundles and lines
  int n = 2;  // ambient dimension
  int twist = 0;

  static StockSheaf line_bundle(int s, int a, int n);
  static StockSheaf point_ideal_p2();
  static StockSheaf line_in_pn(int a, int n);
  static StockSheaf skew_lines_p3();
  static StockSheaf conic_point_p3();
  static StockSheaf fixture_t2();
  static StockSheaf fixture_t3();

  StockSheaf twisted(int by) const;
  std::string name() const;
  // The functionals are negative on T2 and T3, which are not sheaf tables.
  bool is_sheaf() const noexcept;
};

// Exact table with both tails. The returned window contains `window` and is
// widened just enough for the tails to be exact beyond it.
CohomologyTable stock_table(const StockSheaf& spec, Window window);

// Every stock sheaf the library knows, with small parameters.
std::vector<StockSheaf> stock_catalog();

// Entrywise sum; windows must overlap unless tails fill the gap.
CohomologyTable direct_sum(const CohomologyTable& a, const CohomologyTable& b);

// γ_{i,d} ↦ γ_{i,d+a}: the table of F(a).
CohomologyTable twist(const CohomologyTable& t, int a);

// Printed grid of a fixture: rows[i][c - first_column] is the value printed
// at display column c in row i (entry (i, c - i)); 0 where blank.
struct PrintedGrid {
  int first_column = 0;
  std::vector<std::vector<long>> rows;
};
const PrintedGrid& printed_grid(StockKind kind);

// Names: ideal-point-p2, line:a:n, bundle:s:a:n, skew-lines, conic-point, T2,
// T3; `name+name` forms a direct sum.
std::vector<StockSheaf> parse_stock_names(std::string_view text);
CohomologyTable stock_table(std::string_view names, Window window, int twist_by = 0);

}  // namespace cohomtab
