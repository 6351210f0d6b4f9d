#include "cohomtab/table.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace cohomtab {

// ---------------------------------------------------------------- RootSequence

RootSequence::RootSequence(std::vector<int> roots) : roots_(std::move(roots)) {
  for (std::size_t k = 1; k < roots_.size(); ++k) {
    if (roots_[k] >= roots_[k - 1]) {
      throw std::invalid_argument("root sequence must be strictly decreasing: " + to_string());
    }
  }
}

RootSequence RootSequence::shifted(int a) const {
  std::vector<int> out = roots_;
  for (int& z : out) z += a;
  return RootSequence(std::move(out));
}

std::string RootSequence::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(roots_[k]);
  }
  return out + ")";
}

bool termwise_leq(const RootSequence& a, const RootSequence& b) {
  // A missing entry is -∞: a longer sequence cannot sit below a shorter one.
  if (a.length() > b.length()) return false;
  for (int i = 1; i <= a.length(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool termwise_less(const RootSequence& a, const RootSequence& b) {
  return termwise_leq(a, b) && !(a == b);
}

// ------------------------------------------------------------ CohomologyTable

CohomologyTable::CohomologyTable(int n, Window window, Tails tails)
    : CohomologyTable(n, window,
                      std::vector<Rational>(static_cast<std::size_t>((n + 1) * window.size())),
                      std::move(tails)) {}

CohomologyTable::CohomologyTable(int n, Window window, std::vector<Rational> row_major,
                                 Tails tails)
    : n_(n), window_(window), values_(std::move(row_major)), tails_(std::move(tails)) {
  validate_shape();
  row_sup_.reserve(static_cast<std::size_t>(n_ + 1));
  for (int i = 0; i <= n_; ++i) row_sup_.push_back(scan_row_sup(i));
}

void CohomologyTable::validate_shape() const {
  if (n_ < 0) throw std::invalid_argument("ambient dimension must be non-negative");
  if (window_.empty()) throw std::invalid_argument("table window must be nonempty");
  if (values_.size() != static_cast<std::size_t>((n_ + 1) * window_.size())) {
    throw std::invalid_argument("table data does not match (n+1) x window size");
  }
  if (tails_.lower && tails_.lower->size() != static_cast<std::size_t>(n_ + 1)) {
    throw std::invalid_argument("lower tail needs one polynomial per row");
  }
}

const Rational& CohomologyTable::stored(int i, int d) const {
  if (i < 0 || i > n_ || !window_.contains(d)) throw OutOfWindow(i, d);
  return values_[index(i, d)];
}

bool CohomologyTable::evaluable(int i, int d) const noexcept {
  if (i < 0 || i > n_) return false;
  if (window_.contains(d)) return true;
  return d > window_.hi ? tails_.upper.has_value() : tails_.lower.has_value();
}

Rational CohomologyTable::entry(int i, int d) const {
  if (i < 0 || i > n_) throw OutOfWindow(i, d);
  if (window_.contains(d)) return values_[index(i, d)];
  if (d > window_.hi && tails_.upper) return i == 0 ? (*tails_.upper)(d) : Rational(0);
  if (d < window_.lo && tails_.lower) return (*tails_.lower)[static_cast<std::size_t>(i)](d);
  throw OutOfWindow(i, d);
}

bool CohomologyTable::is_zero() const noexcept {
  return std::all_of(row_sup_.begin(), row_sup_.end(),
                     [](const RowSup& r) { return r.kind == RowSup::Kind::kNegInf; });
}

RowSup CohomologyTable::scan_row_sup(int i) const {
  if (tails_.upper && i == 0 && !tails_.upper->is_zero()) return RowSup::pos_inf();
  for (int d = window_.hi; d >= window_.lo; --d) {
    if (values_[index(i, d)] != 0) {
      if (d == window_.hi && !tails_.upper) return RowSup::unknown();
      return RowSup::finite(d);
    }
  }
  if (tails_.lower) {
    const Polynomial& p = (*tails_.lower)[static_cast<std::size_t>(i)];
    if (!p.is_zero()) {
      // A nonzero polynomial of degree k has at most k roots, so one of the
      // first k+1 degrees below the window is nonzero.
      for (int d = window_.lo - 1;; --d) {
        if (p(d) != 0) return RowSup::finite(d);
      }
    }
  }
  return RowSup::neg_inf();
}

// -------------------------------------------------------------- linear algebra

CohomologyTable linear_combine(const std::vector<Rational>& coeffs,
                               const std::vector<CohomologyTable>& tables) {
  if (coeffs.size() != tables.size() || tables.empty()) {
    throw std::invalid_argument("linear_combine needs matching, nonempty coefficient and table lists");
  }
  const int n = tables.front().ambient();
  bool all_lower = true;
  bool all_upper = true;
  int min_lo = tables.front().window().lo;
  int max_hi = tables.front().window().hi;
  int bare_lo = std::numeric_limits<int>::min();  // tightest lo among tables without lower tail
  int bare_hi = std::numeric_limits<int>::max();
  for (const auto& t : tables) {
    if (t.ambient() != n) throw std::invalid_argument("linear_combine: tables differ in n");
    min_lo = std::min(min_lo, t.window().lo);
    max_hi = std::max(max_hi, t.window().hi);
    if (!t.tails().lower) {
      all_lower = false;
      bare_lo = std::max(bare_lo, t.window().lo);
    }
    if (!t.tails().upper) {
      all_upper = false;
      bare_hi = std::min(bare_hi, t.window().hi);
    }
  }
  const Window window{all_lower ? min_lo : bare_lo, all_upper ? max_hi : bare_hi};
  if (window.empty()) {
    throw OutOfWindow(0, window.lo,
                      "linear_combine: windows do not overlap and tails cannot fill the gap");
  }

  Tails tails;
  if (all_upper) {
    Polynomial upper;
    for (std::size_t k = 0; k < tables.size(); ++k) upper += coeffs[k] * *tables[k].tails().upper;
    tails.upper = std::move(upper);
  }
  if (all_lower) {
    std::vector<Polynomial> lower(static_cast<std::size_t>(n + 1));
    for (std::size_t k = 0; k < tables.size(); ++k) {
      for (int i = 0; i <= n; ++i) {
        lower[static_cast<std::size_t>(i)] +=
            coeffs[k] * (*tables[k].tails().lower)[static_cast<std::size_t>(i)];
      }
    }
    tails.lower = std::move(lower);
  }

  return CohomologyTable::generate(
      n, window,
      [&](int i, int d) {
        Rational acc = 0;
        for (std::size_t k = 0; k < tables.size(); ++k) {
          if (coeffs[k] != 0) acc += coeffs[k] * tables[k].entry(i, d);
        }
        return acc;
      },
      std::move(tails));
}

int dimension(const CohomologyTable& t) {
  for (int i = t.ambient(); i >= 0; --i) {
    if (t.row_sup(i).kind != RowSup::Kind::kNegInf) return i;
  }
  return -1;
}

RootSequence regularity_sequence(const CohomologyTable& t) {
  const int s = dimension(t);
  if (s < 0) throw std::invalid_argument("regularity_sequence of the zero table");
  std::vector<int> z(static_cast<std::size_t>(s));
  // Descending sweep: m holds max_{j>=i}(row_sup[j] + 1 + j).
  std::optional<int> m;
  for (int i = s; i >= 1; --i) {
    const RowSup sup = t.row_sup(i);
    if (sup.kind == RowSup::Kind::kUnknown || sup.kind == RowSup::Kind::kPosInf) {
      throw UnboundedRow(i);
    }
    if (sup.is_finite()) m = std::max(m.value_or(sup.value + 1 + i), sup.value + 1 + i);
    z[static_cast<std::size_t>(i - 1)] = *m - i;
  }
  return RootSequence(std::move(z));
}

std::vector<Corner> corners(const CohomologyTable& t) {
  const RootSequence z = regularity_sequence(t);
  const int s = z.length();
  std::vector<Corner> out;
  for (int i = 1; i <= s; ++i) {
    if (i == s || z[i + 1] < z[i] - 1) out.push_back({i, z[i] - 1, t.entry(i, z[i] - 1)});
  }
  return out;
}

Rational partial_euler(const CohomologyTable& t, int d, int bound) {
  Rational acc = 0;
  const int top = std::min(bound, t.ambient());
  for (int i = 0; i <= top; ++i) {
    if (i % 2 == 0) {
      acc += t.entry(i, d);
    } else {
      acc -= t.entry(i, d);
    }
  }
  return acc;
}

Polynomial euler_polynomial(const CohomologyTable& t, int expected_degree) {
  const Window w = t.window();
  if (expected_degree < -1) throw std::invalid_argument("expected degree must be >= -1");
  if (w.size() < expected_degree + 3) {
    throw std::invalid_argument("euler_polynomial: window of " + std::to_string(w.size()) +
                                " degrees is too short to certify degree " +
                                std::to_string(expected_degree));
  }
  std::vector<Rational> diff;
  diff.reserve(static_cast<std::size_t>(w.size()));
  for (int d = w.lo; d <= w.hi; ++d) diff.push_back(partial_euler(t, d));

  // leading[m] = Δ^m χ at w.lo
  std::vector<Rational> leading;
  for (int m = 0; m <= expected_degree; ++m) {
    leading.push_back(diff.front());
    for (std::size_t k = 0; k + 1 < diff.size(); ++k) diff[k] = diff[k + 1] - diff[k];
    diff.pop_back();
  }
  for (std::size_t k = 0; k < diff.size(); ++k) {
    if (diff[k] != 0) {
      throw NotPolynomial("χ_d is not a polynomial of degree <= " +
                          std::to_string(expected_degree) + " on the window (difference of order " +
                          std::to_string(expected_degree + 1) + " is nonzero at d = " +
                          std::to_string(w.lo + static_cast<int>(k)) + ")");
    }
  }
  // Newton forward form: Σ Δ^m χ(lo) · C(d - lo, m).
  Polynomial p;
  for (int m = 0; m <= expected_degree; ++m) {
    p += leading[static_cast<std::size_t>(m)] * Polynomial::binomial(-w.lo, m);
  }
  return p;
}

AdmissibilityReport admissibility_check(const CohomologyTable& t) {
  AdmissibilityReport report;
  const Window w = t.window();

  report.nonnegative = CheckStatus::kPass;
  for (int i = 0; i <= t.ambient() && !report.first_negative; ++i) {
    for (int d = w.lo; d <= w.hi; ++d) {
      if (t.stored(i, d) < 0) {
        report.nonnegative = CheckStatus::kFail;
        report.first_negative = Corner{i, d, t.stored(i, d)};
        break;
      }
    }
  }
  if (t.tails().lower) {
    // Sign of each lower tail as d -> -∞.
    for (int i = 0; i <= t.ambient(); ++i) {
      const Polynomial& p = (*t.tails().lower)[static_cast<std::size_t>(i)];
      if (p.is_zero()) continue;
      const bool odd = p.degree() % 2 != 0;
      if ((p.leading() < 0) != odd) {
        report.nonnegative = CheckStatus::kFail;
        report.notes.push_back("lower tail of row " + std::to_string(i) +
                               " is eventually negative");
      }
    }
  }
  if (t.tails().upper && t.tails().upper->leading() < 0) {
    report.nonnegative = CheckStatus::kFail;
    report.notes.push_back("upper tail of row 0 is eventually negative");
  }

  report.higher_rows_vanish = CheckStatus::kPass;
  if (!t.tails().upper) {
    for (int i = 1; i <= t.ambient(); ++i) {
      if (t.stored(i, w.hi) != 0) {
        report.higher_rows_vanish = CheckStatus::kFail;
        report.notes.push_back("row " + std::to_string(i) +
                               " is nonzero at the top of the window and no tail says it vanishes");
        break;
      }
    }
  }

  const int dim = dimension(t);
  if (w.size() < dim + 3) {
    report.euler_polynomial = CheckStatus::kNotChecked;
    report.notes.push_back("window too short to certify the Euler polynomial");
  } else {
    try {
      euler_polynomial(t, dim);
      report.euler_polynomial = CheckStatus::kPass;
    } catch (const NotPolynomial& e) {
      report.euler_polynomial = CheckStatus::kFail;
      report.notes.push_back(e.what());
    }
  }
  report.notes.push_back("values at the lower positions are not checked");
  return report;
}

// ------------------------------------------------------------------ rendering

std::string render(const CohomologyTable& t, const RenderOptions& options) {
  const Window w = t.window();
  const int n = t.ambient();
  int first = w.lo + n;
  int last = w.hi;
  if (first > last) {
    first = w.lo;
    last = w.hi + n;
  }
  first = options.first_column.value_or(first);
  last = options.last_column.value_or(last);

  // cells[row][col]
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(n + 1));
  std::size_t width = 3;  // fits the "d\i" footer label
  for (int i = 0; i <= n; ++i) {
    for (int c = first; c <= last; ++c) {
      std::string cell;
      const int d = c - i;
      if (t.evaluable(i, d)) {
        const Rational v = t.entry(i, d);
        if (v != 0) cell = format_rational(v, options.pretty);
      }
      width = std::max(width, cell.size());
      cells[static_cast<std::size_t>(i)].push_back(std::move(cell));
    }
  }
  for (int c = first; c <= last; ++c) width = std::max(width, std::to_string(c).size());
  const std::size_t label_width = std::max<std::size_t>(3, std::to_string(n).size());

  std::ostringstream os;
  for (int i = n; i >= 0; --i) {
    for (const auto& cell : cells[static_cast<std::size_t>(i)]) {
      os << std::setw(static_cast<int>(width + 1)) << cell;
    }
    os << " | " << i << '\n';
  }
  const std::size_t body = static_cast<std::size_t>(last - first + 1) * (width + 1);
  os << std::string(body + 1, '-') << "+" << std::string(label_width + 1, '-') << '\n';
  for (int c = first; c <= last; ++c) os << std::setw(static_cast<int>(width + 1)) << c;
  os << " | d\\i\n";
  return os.str();
}

}  // namespace cohomtab
