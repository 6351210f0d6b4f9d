#include "cohomtab/sheaf_library.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "cohomtab/supernatural.hpp"

namespace cohomtab {

StockSheaf StockSheaf::line_bundle(int s, int a, int n) {
  if (s < 0 || n < s) throw std::invalid_argument("line bundle needs 0 <= s <= n");
  return {StockKind::kLineBundle, s, a, n, 0};
}
StockSheaf StockSheaf::point_ideal_p2() { return {StockKind::kPointIdealP2, 0, 0, 2, 0}; }
StockSheaf StockSheaf::line_in_pn(int a, int n) {
  if (n < 1) throw std::invalid_argument("a line needs n >= 1");
  return {StockKind::kLineInPn, 1, a, n, 0};
}
StockSheaf StockSheaf::skew_lines_p3() { return {StockKind::kSkewLinesP3, 0, 0, 3, 0}; }
StockSheaf StockSheaf::conic_point_p3() { return {StockKind::kConicPointP3, 0, 0, 3, 0}; }
StockSheaf StockSheaf::fixture_t2() { return {StockKind::kFixtureT2, 0, 0, 3, 0}; }
StockSheaf StockSheaf::fixture_t3() { return {StockKind::kFixtureT3, 0, 0, 3, 0}; }

StockSheaf StockSheaf::twisted(int by) const {
  StockSheaf out = *this;
  out.twist += by;
  return out;
}

std::string StockSheaf::name() const {
  std::string base;
  switch (kind) {
    case StockKind::kLineBundle:
      base = "bundle:" + std::to_string(s) + ":" + std::to_string(a) + ":" + std::to_string(n);
      break;
    case StockKind::kPointIdealP2:
      base = "ideal-point-p2";
      break;
    case StockKind::kLineInPn:
      base = "line:" + std::to_string(a) + ":" + std::to_string(n);
      break;
    case StockKind::kSkewLinesP3:
      base = "skew-lines";
      break;
    case StockKind::kConicPointP3:
      base = "conic-point";
      break;
    case StockKind::kFixtureT2:
      base = "T2";
      break;
    case StockKind::kFixtureT3:
      base = "T3";
      break;
  }
  if (twist != 0) base += "(" + std::to_string(twist) + ")";
  return base;
}

bool StockSheaf::is_sheaf() const noexcept {
  return kind != StockKind::kFixtureT2 && kind != StockKind::kFixtureT3;
}

namespace {

// Closed form of a table together with the degrees beyond which its tails
// are exact: rows >= 1 vanish and row 0 = upper for d >= upper_from; row i
// = lower[i] for d <= lower_to.
struct ClosedForm {
  int n = 0;
  std::function<Rational(int, int)> entry;
  Polynomial upper;
  int upper_from = 0;
  std::vector<Polynomial> lower;
  int lower_to = 0;
  const PrintedGrid* printed = nullptr;
};

Rational binom(long top, int k) {
  if (top < k || top < 0) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), Integer(top).get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(out);
}

const PrintedGrid kPointIdeal{-4,
                              {{0, 0, 0, 0, 0, 2, 5, 9, 14},
                               {1, 1, 1, 1, 1, 0, 0, 0, 0},
                               {10, 6, 3, 1, 0, 0, 0, 0, 0}}};
const PrintedGrid kSkewLines{-4,
                             {{0, 0, 0, 0, 0, 0, 4, 12, 25},
                              {0, 0, 0, 0, 0, 1, 0, 0, 0},
                              {10, 8, 6, 4, 2, 0, 0, 0, 0},
                              {20, 10, 4, 1, 0, 0, 0, 0, 0}}};
const PrintedGrid kConicPoint{-4,
                              {{0, 0, 0, 0, 0, 0, 4, 12, 25},
                               {1, 1, 1, 1, 1, 1, 0, 0, 0},
                               {11, 9, 7, 5, 3, 1, 0, 0, 0},
                               {20, 10, 4, 1, 0, 0, 0, 0, 0}}};
const PrintedGrid kT2{-4,
                      {{0, 0, 0, 0, 0, 0, 4, 12, 25},
                       {0, 0, 0, 0, 1, 1, 0, 0, 0},
                       {10, 8, 6, 4, 2, 1, 0, 0, 0},
                       {20, 10, 4, 1, 0, 0, 0, 0, 0}}};
const PrintedGrid kT3{-4,
                      {{0, 0, 0, 0, 0, 0, 4, 12, 25},
                       {0, 0, 0, 1, 1, 1, 0, 0, 0},
                       {10, 8, 6, 4, 3, 1, 0, 0, 0},
                       {20, 10, 4, 1, 0, 0, 0, 0, 0}}};

// h^0 of the ideal of a degree-2, genus -1 curve: C(d+3,3) - (2d+2) for d >= 1
Polynomial curve_ideal_h0() {
  return Polynomial::binomial(3, 3) - Polynomial({Rational(2), Rational(2)});
}

ClosedForm ideal_p3(StockKind kind) {
  // T_k agrees with I_Y for d > -k and with I_X's lower rows for d <= -k.
  const int cut = kind == StockKind::kConicPointP3 ? kInfinity
                  : kind == StockKind::kFixtureT2  ? -2
                  : kind == StockKind::kFixtureT3  ? -3
                                                   : 0;
  ClosedForm f;
  f.n = 3;
  f.entry = [kind, cut](int i, int d) -> Rational {
    const bool x_like = kind == StockKind::kSkewLinesP3 ? d != 0 : cut != kInfinity && d <= cut;
    switch (i) {
      case 0:
        return d >= 1 ? binom(d + 3, 3) - 2 * d - 2 : Rational(0);
      case 1:
        if (kind == StockKind::kSkewLinesP3) return d == 0 ? 1 : 0;
        return d <= 0 && !x_like ? 1 : 0;
      case 2:
        if (d > -1) return 0;
        return x_like ? -2 * d - 2 : -2 * d - 1;
      default:
        return binom(-d - 1, 3);
    }
  };
  f.upper = curve_ideal_h0();
  f.upper_from = 1;
  const bool lower_x = kind != StockKind::kConicPointP3;
  f.lower = {Polynomial(), lower_x ? Polynomial() : Polynomial::constant(1),
             lower_x ? Polynomial({Rational(-2), Rational(-2)}) : Polynomial({Rational(-1), Rational(-2)}),
             Rational(-1) * Polynomial::binomial(3, 3)};
  f.lower_to = kind == StockKind::kSkewLinesP3 || kind == StockKind::kConicPointP3 ? -1 : cut;
  switch (kind) {
    case StockKind::kSkewLinesP3:
      f.printed = &kSkewLines;
      break;
    case StockKind::kConicPointP3:
      f.printed = &kConicPoint;
      break;
    case StockKind::kFixtureT2:
      f.printed = &kT2;
      break;
    default:
      f.printed = &kT3;
      break;
  }
  return f;
}

ClosedForm point_ideal() {
  ClosedForm f;
  f.n = 2;
  f.entry = [](int i, int d) -> Rational {
    switch (i) {
      case 0:
        return d >= 0 ? binom(d + 2, 2) - 1 : Rational(0);
      case 1:
        return d <= -1 ? 1 : 0;
      default:
        return binom(-d - 1, 2);
    }
  };
  f.upper = Polynomial::binomial(2, 2) - Polynomial::constant(1);
  f.upper_from = 0;
  f.lower = {Polynomial(), Polynomial::constant(1), Polynomial::binomial(2, 2)};
  f.lower_to = -1;
  f.printed = &kPointIdeal;
  return f;
}

bool printed_covers(const PrintedGrid& g, int i, int d) {
  if (i < 0 || i >= static_cast<int>(g.rows.size())) return false;
  const int c = d + i - g.first_column;
  return c >= 0 && c < static_cast<int>(g.rows[static_cast<std::size_t>(i)].size());
}

long printed_value(const PrintedGrid& g, int i, int d) {
  return g.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(d + i - g.first_column)];
}

CohomologyTable materialize(const ClosedForm& f, Window window) {
  if (f.printed) {
    // The printed data must agree with the closed form before it is used.
    for (int i = 0; i < static_cast<int>(f.printed->rows.size()); ++i) {
      for (std::size_t c = 0; c < f.printed->rows[static_cast<std::size_t>(i)].size(); ++c) {
        const int d = f.printed->first_column + static_cast<int>(c) - i;
        if (f.entry(i, d) != printed_value(*f.printed, i, d)) {
          throw std::logic_error("printed fixture disagrees with its closed form at (" +
                                 std::to_string(i) + "," + std::to_string(d) + ")");
        }
      }
    }
  }
  const Window w{std::min(window.lo, f.lower_to + 1), std::max(window.hi, f.upper_from - 1)};
  Tails tails;
  tails.upper = f.upper;
  tails.lower = f.lower;
  return CohomologyTable::generate(
      f.n, w,
      [&](int i, int d) -> Rational {
        if (f.printed && printed_covers(*f.printed, i, d)) return printed_value(*f.printed, i, d);
        return f.entry(i, d);
      },
      std::move(tails));
}

CohomologyTable bundle_table(int s, int a, int n, Window window) {
  std::vector<int> roots;
  for (int k = 1; k <= s; ++k) roots.push_back(-a - k);
  Integer fact = 1;
  for (int k = 2; k <= s; ++k) fact *= k;
  const SupernaturalSpec spec(RootSequence(roots), n, Rational(1) / Rational(fact));
  Window w = window;
  if (s > 0) {
    w.lo = std::min(w.lo, roots.back() + 1);
    w.hi = std::max(w.hi, roots.front() - 1);
  }
  return supernatural_table(spec, w);
}

}  // namespace

const PrintedGrid& printed_grid(StockKind kind) {
  switch (kind) {
    case StockKind::kPointIdealP2:
      return kPointIdeal;
    case StockKind::kSkewLinesP3:
      return kSkewLines;
    case StockKind::kConicPointP3:
      return kConicPoint;
    case StockKind::kFixtureT2:
      return kT2;
    case StockKind::kFixtureT3:
      return kT3;
    default:
      throw std::invalid_argument("no printed grid for this stock sheaf");
  }
}

CohomologyTable stock_table(const StockSheaf& spec, Window window) {
  if (window.empty()) throw UnsupportedWindow("stock_table: empty window");
  const Window base{window.lo + spec.twist, window.hi + spec.twist};
  CohomologyTable t = [&] {
    switch (spec.kind) {
      case StockKind::kLineBundle:
      case StockKind::kLineInPn:
        return bundle_table(spec.s, spec.a, spec.n, base);
      case StockKind::kPointIdealP2:
        return materialize(point_ideal(), base);
      default:
        return materialize(ideal_p3(spec.kind), base);
    }
  }();
  return spec.twist == 0 ? t : twist(t, spec.twist);
}

std::vector<StockSheaf> stock_catalog() {
  return {StockSheaf::point_ideal_p2(),   StockSheaf::line_in_pn(-4, 2),
          StockSheaf::line_in_pn(0, 3),   StockSheaf::line_bundle(0, 0, 2),
          StockSheaf::line_bundle(2, 0, 2), StockSheaf::line_bundle(3, -2, 3),
          StockSheaf::line_bundle(2, 1, 3), StockSheaf::skew_lines_p3(),
          StockSheaf::conic_point_p3(),   StockSheaf::fixture_t2(),
          StockSheaf::fixture_t3()};
}

CohomologyTable direct_sum(const CohomologyTable& a, const CohomologyTable& b) {
  return linear_combine({Rational(1), Rational(1)}, {a, b});
}

CohomologyTable twist(const CohomologyTable& t, int a) {
  const Window w{t.window().lo - a, t.window().hi - a};
  Tails tails;
  if (t.tails().upper) tails.upper = t.tails().upper->shifted(a);
  if (t.tails().lower) {
    std::vector<Polynomial> rows;
    for (const auto& p : *t.tails().lower) rows.push_back(p.shifted(a));
    tails.lower = std::move(rows);
  }
  return CohomologyTable::generate(
      t.ambient(), w, [&](int i, int d) { return t.stored(i, d + a); }, std::move(tails));
}

namespace {

int to_int(std::string_view s, std::string_view name) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("stock name '" + std::string(name) + "': malformed integer '" +
                     std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

StockSheaf parse_one(std::string_view name) {
  if (name == "ideal-point-p2") return StockSheaf::point_ideal_p2();
  if (name == "skew-lines" || name == "IX") return StockSheaf::skew_lines_p3();
  if (name == "conic-point" || name == "IY") return StockSheaf::conic_point_p3();
  if (name == "T2") return StockSheaf::fixture_t2();
  if (name == "T3") return StockSheaf::fixture_t3();
  const auto parts = split(name, ':');
  if (parts[0] == "line" && parts.size() == 3) {
    return StockSheaf::line_in_pn(to_int(parts[1], name), to_int(parts[2], name));
  }
  if (parts[0] == "bundle" && parts.size() == 4) {
    return StockSheaf::line_bundle(to_int(parts[1], name), to_int(parts[2], name),
                                   to_int(parts[3], name));
  }
  throw ParseError("unknown stock sheaf '" + std::string(name) + "'");
}

}  // namespace

std::vector<StockSheaf> parse_stock_names(std::string_view text) {
  std::vector<StockSheaf> out;
  for (auto part : split(text, '+')) out.push_back(parse_one(part));
  for (const auto& s : out) {
    if (s.n != out.front().n) throw ParseError("direct sum of stock sheaves on different P^n");
  }
  return out;
}

CohomologyTable stock_table(std::string_view names, Window window, int twist_by) {
  const auto parts = parse_stock_names(names);
  std::optional<CohomologyTable> acc;
  for (const auto& p : parts) {
    CohomologyTable t = stock_table(p.twisted(twist_by), window);
    acc = acc ? direct_sum(*acc, t) : t;
  }
  return *acc;
}

}  // namespace cohomtab
