#include "cohomtab/table_io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include <json.hpp>

namespace cohomtab {

namespace {

using nlohmann::json;

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

Window parse_window_spec(std::string_view s) {
  if (s.empty()) throw ParseError("window must be lo:hi");
  const auto colon = s.find(':', s.front() == '-' ? 1 : 0);
  if (colon == std::string_view::npos) throw ParseError("window must be lo:hi");
  Window w{parse_int(s.substr(0, colon), "window bound"),
           parse_int(s.substr(colon + 1), "window bound")};
  if (w.empty()) throw ParseError("window lo:hi must have lo <= hi");
  return w;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

CohomologyTable assemble(int n, Window w, const std::map<std::pair<int, int>, Rational>& entries,
                         Tails tails) {
  if (n < 0) throw ParseError("n must be non-negative");
  std::vector<Rational> values(static_cast<std::size_t>((n + 1) * w.size()));
  for (const auto& [pos, value] : entries) {
    const auto [i, d] = pos;
    if (i < 0 || i > n || !w.contains(d)) {
      throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(d) +
                       ") lies outside n/window");
    }
    values[static_cast<std::size_t>(i) * static_cast<std::size_t>(w.size()) +
           static_cast<std::size_t>(d - w.lo)] = value;
  }
  return CohomologyTable(n, w, std::move(values), std::move(tails));
}

json polynomial_json(const Polynomial& p, bool pretty) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(format_rational(c, pretty));
  return out;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("tail polynomial must be a coefficient list");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    coeffs.push_back(c.is_string() ? parse_rational(c.get<std::string>())
                                   : Rational(c.get<long>()));
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

std::string format_text(const CohomologyTable& t, bool pretty) {
  std::ostringstream os;
  const Window w = t.window();
  os << "n=" << t.ambient() << " window=" << w.lo << ':' << w.hi << '\n';
  for (int i = 0; i <= t.ambient(); ++i) {
    for (int d = w.lo; d <= w.hi; ++d) {
      const Rational& v = t.stored(i, d);
      if (v != 0) os << i << ' ' << d << ' ' << format_rational(v, pretty) << '\n';
    }
  }
  auto coeffs = [&](const Polynomial& p) {
    for (const auto& c : p.coefficients()) os << ' ' << format_rational(c, pretty);
    os << '\n';
  };
  if (t.tails().upper) {
    os << "upper";
    coeffs(*t.tails().upper);
  }
  if (t.tails().lower) {
    for (std::size_t i = 0; i < t.tails().lower->size(); ++i) {
      os << "lower " << i;
      coeffs((*t.tails().lower)[i]);
    }
  }
  return os.str();
}

CohomologyTable parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  int n = 0;
  Window w;
  std::map<std::pair<int, int>, Rational> entries;
  Tails tails;
  std::map<int, Polynomial> lower;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream fields{std::string(body)};
    if (!have_header) {
      std::string a, b, extra;
      fields >> a >> b;
      if (a.rfind("n=", 0) != 0 || b.rfind("window=", 0) != 0 || (fields >> extra)) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header 'n=<int> window=<lo>:<hi>'");
      }
      n = parse_int(std::string_view(a).substr(2), "n");
      w = parse_window_spec(std::string_view(b).substr(7));
      have_header = true;
      continue;
    }
    if (body.rfind("upper", 0) == 0 || body.rfind("lower", 0) == 0) {
      std::string tag, tok;
      fields >> tag;
      int row = 0;
      if (tag == "lower") {
        if (!(fields >> tok)) throw ParseError("line " + std::to_string(line_no) + ": missing tail row");
        row = parse_int(tok, "tail row");
      } else if (tag != "upper") {
        throw ParseError("line " + std::to_string(line_no) + ": unknown keyword '" + tag + "'");
      }
      std::vector<Rational> cs;
      while (fields >> tok) cs.push_back(parse_rational(tok));
      if (tag == "upper") {
        if (tails.upper) throw ParseError("line " + std::to_string(line_no) + ": duplicate upper tail");
        tails.upper = Polynomial(std::move(cs));
      } else {
        if (lower.contains(row)) throw ParseError("line " + std::to_string(line_no) + ": duplicate lower tail row");
        lower.emplace(row, Polynomial(std::move(cs)));
      }
      continue;
    }
    std::string si, sd, sv, extra;
    if (!(fields >> si >> sd >> sv) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected '<i> <d> <value>'");
    }
    const std::pair<int, int> pos{parse_int(si, "row"), parse_int(sd, "degree")};
    if (entries.contains(pos)) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate entry");
    }
    entries.emplace(pos, parse_rational(sv));
  }
  if (!have_header) throw ParseError("empty table input");
  if (!lower.empty()) {
    std::vector<Polynomial> rows;
    for (int i = 0; i <= n; ++i) {
      auto it = lower.find(i);
      if (it == lower.end()) throw ParseError("lower tail needs one polynomial per row");
      rows.push_back(it->second);
    }
    if (static_cast<int>(lower.size()) != n + 1) throw ParseError("lower tail row out of range");
    tails.lower = std::move(rows);
  }
  return assemble(n, w, entries, std::move(tails));
}

std::string format_json(const CohomologyTable& t, bool pretty) {
  json out;
  out["n"] = t.ambient();
  out["window"] = {t.window().lo, t.window().hi};
  json entries = json::array();
  for (int i = 0; i <= t.ambient(); ++i) {
    for (int d = t.window().lo; d <= t.window().hi; ++d) {
      const Rational& v = t.stored(i, d);
      if (v != 0) entries.push_back({i, d, format_rational(v, pretty)});
    }
  }
  out["entries"] = std::move(entries);
  if (t.tails().upper || t.tails().lower) {
    json tail = json::object();
    if (t.tails().upper) tail["upper"] = polynomial_json(*t.tails().upper, pretty);
    if (t.tails().lower) {
      json rows = json::array();
      for (const auto& p : *t.tails().lower) rows.push_back(polynomial_json(p, pretty));
      tail["lower"] = std::move(rows);
    }
    out["tail"] = std::move(tail);
  }
  return out.dump();
}

CohomologyTable parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON table: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    Window w;
    const json& jw = j.at("window");
    if (jw.is_string()) {
      w = parse_window_spec(jw.get<std::string>());
    } else {
      w = Window{jw.at(0).get<int>(), jw.at(1).get<int>()};
      if (w.empty()) throw ParseError("window lo:hi must have lo <= hi");
    }
    std::map<std::pair<int, int>, Rational> entries;
    for (const auto& e : j.at("entries")) {
      const std::pair<int, int> pos{e.at(0).get<int>(), e.at(1).get<int>()};
      const json& v = e.at(2);
      if (!entries.emplace(pos, v.is_string() ? parse_rational(v.get<std::string>())
                                              : Rational(v.get<long>()))
               .second) {
        throw ParseError("duplicate entry in JSON table");
      }
    }
    Tails tails;
    if (j.contains("tail")) {
      const json& tail = j.at("tail");
      if (tail.contains("upper")) tails.upper = polynomial_from_json(tail.at("upper"));
      if (tail.contains("lower")) {
        std::vector<Polynomial> rows;
        for (const auto& p : tail.at("lower")) rows.push_back(polynomial_from_json(p));
        if (rows.size() != static_cast<std::size_t>(n + 1)) {
          throw ParseError("lower tail needs one polynomial per row");
        }
        tails.lower = std::move(rows);
      }
    }
    return assemble(n, w, entries, std::move(tails));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON table: ") + e.what());
  }
}

CohomologyTable parse_table(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_json(body);
  return parse_text(text);
}

}  // namespace cohomtab
