#include "qhr/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qhr/errors.hpp"

namespace qhr {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

long parse_long(const std::string& s, int line) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'", line);
  }
}

std::string strip_wrap(const std::string& s, char open, char close, int line) {
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw ParseError(std::string("expected '") + open + "...'" + close +
                         ", got '" + s + "'",
                     line);
  return s.substr(1, s.size() - 2);
}

std::vector<long> parse_long_vector(const std::string& s, int line) {
  std::vector<long> out;
  const std::string inner = strip_wrap(s, '(', ')', line);
  for (const auto& part : split_top_level(inner, ','))
    out.push_back(parse_long(part, line));
  return out;
}

std::vector<Rational> parse_rational_vector(const std::string& s, int line) {
  std::vector<Rational> out;
  const std::string inner = strip_wrap(s, '(', ')', line);
  for (const auto& part : split_top_level(inner, ',')) {
    try {
      out.push_back(parse_rational(part));
    } catch (const Error& e) {
      throw ParseError(e.what(), line);
    }
  }
  return out;
}

std::vector<std::vector<long>> parse_long_matrix(const std::string& s,
                                                 int line) {
  std::vector<std::vector<long>> out;
  const std::string inner = strip_wrap(s, '[', ']', line);
  for (const auto& row : split_top_level(inner, ',')) {
    std::vector<long> r;
    for (const auto& part : split_top_level(strip_wrap(row, '[', ']', line),
                                            ','))
      r.push_back(parse_long(part, line));
    out.push_back(r);
  }
  return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  std::set<std::string> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError("unterminated section header", line_no);
      section = line.substr(1, line.size() - 2);
      if (section != "setup" && section != "truncation" &&
          section != "output")
        throw ParseError("unknown section [" + section + "]", line_no);
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key = value", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty())
      throw ParseError("key '" + key + "' outside any section", line_no);
    if (!seen.insert(section + "." + key).second)
      throw ParseError("duplicate key '" + key + "'", line_no);

    if (section == "setup") {
      if (key == "kind") {
        cfg.kind = value;
      } else if (key == "matrix") {
        cfg.matrix = parse_long_matrix(value, line_no);
      } else if (key == "family") {
        cfg.family = value;
      } else if (key == "ell") {
        cfg.ell = static_cast<int>(parse_long(value, line_no));
      } else if (key == "n") {
        cfg.n = static_cast<int>(parse_long(value, line_no));
      } else if (key == "vertices") {
        cfg.vertices = static_cast<int>(parse_long(value, line_no));
      } else if (key == "arrows") {
        for (const auto& row : parse_long_matrix(value, line_no)) {
          if (row.size() != 2)
            throw ParseError("arrow rows must have two entries", line_no);
          cfg.arrows.emplace_back(static_cast<int>(row[0]),
                                  static_cast<int>(row[1]));
        }
      } else if (key == "v") {
        for (long x : parse_long_vector(value, line_no))
          cfg.v.push_back(static_cast<int>(x));
      } else if (key == "distinguished") {
        cfg.distinguished = static_cast<int>(parse_long(value, line_no));
        cfg.has_distinguished = true;
      } else if (key == "theta") {
        cfg.theta = parse_rational_vector(value, line_no);
      } else if (key == "c") {
        cfg.c = parse_rational_vector(value, line_no);
      } else if (key == "negative_control") {
        if (value != "duplicate-moment")
          throw ParseError("unknown negative control '" + value + "'",
                           line_no);
        cfg.negative_control = value;
      } else {
        throw ParseError("unknown setup key '" + key + "'", line_no);
      }
    } else if (section == "truncation") {
      if (key == "max_degree") {
        cfg.max_degree = static_cast<int>(parse_long(value, line_no));
      } else if (key == "weight") {
        cfg.weight = parse_long_vector(value, line_no);
      } else {
        throw ParseError("unknown truncation key '" + key + "'", line_no);
      }
    } else {
      if (key == "format") {
        if (value != "text" && value != "json")
          throw ParseError("format must be text or json", line_no);
        cfg.format = value;
      } else {
        throw ParseError("unknown output key '" + key + "'", line_no);
      }
    }
  }
  if (cfg.kind.empty())
    throw ParseError("missing [setup] kind", line_no ? line_no : 1);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

Quiver config_quiver(const RunConfig& cfg) {
  if (cfg.kind == "quiver") return make_quiver(cfg.vertices, cfg.arrows);
  if (cfg.family == "affine-a") return affine_a(cfg.ell);
  if (cfg.family == "affine-d") return affine_d(cfg.ell);
  throw UnknownFamily("unknown quiver family '" + cfg.family + "'");
}

ReductionSetup build_setup(const RunConfig& cfg) {
  if (cfg.kind == "hypertoric") {
    HypertoricData h;
    h.M = cfg.matrix;
    h.theta = cfg.theta;
    h.c = cfg.c;
    return build_hypertoric_setup(h);
  }
  if (cfg.kind == "preprojective")
    return build_preprojective_setup(config_quiver(cfg), cfg.theta, cfg.c);
  if (cfg.kind == "calogero-moser")
    return build_cm_setup(config_quiver(cfg), cfg.n, cfg.theta, cfg.c);
  if (cfg.kind == "quiver") {
    if (!cfg.has_distinguished)
      throw ValidationFailure("quiver setup needs a distinguished vertex");
    return build_quiver_setup(config_quiver(cfg), cfg.v, cfg.theta, cfg.c,
                              cfg.distinguished);
  }
  throw UnknownFamily("unknown setup kind '" + cfg.kind + "'");
}

}  // namespace qhr
