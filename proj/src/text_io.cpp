#include "toricsplit/text_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "toricsplit/error.hpp"

namespace toricsplit {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back({n, line.substr(first, last - first + 1)});
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& msg) {
  throw Error("parse", "line " + std::to_string(l.number) + ": " + msg);
}

Int parse_int(const Line& l, const std::string& tok) {
  Int v;
  if (tok.empty() || v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0) {
    fail(l, "bad integer '" + tok + "'");
  }
  return v;
}

Rational parse_rational(const Line& l, const std::string& tok) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) return Rational(parse_int(l, tok));
  Int num = parse_int(l, tok.substr(0, slash));
  Int den = parse_int(l, tok.substr(slash + 1));
  if (sgn(den) == 0) fail(l, "zero denominator in '" + tok + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::size_t parse_index(const Line& l, const std::string& tok, std::size_t limit,
                        const char* what) {
  Int v = parse_int(l, tok);
  if (v < 1 || v > static_cast<unsigned long>(limit)) {
    fail(l, std::string(what) + " index " + tok + " outside 1.." + std::to_string(limit));
  }
  return v.get_ui() - 1;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

// Splits "head rest" at the first ':'.
std::pair<std::string, std::string> split_colon(const Line& l) {
  auto colon = l.text.find(':');
  if (colon == std::string::npos) fail(l, "missing ':'");
  return {l.text.substr(0, colon), l.text.substr(colon + 1)};
}

}  // namespace

Fan parse_fan(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error("parse", "empty fan file");
  auto head = tokens(lines[0].text);
  if (head.size() != 2 || head[0] != "dim") fail(lines[0], "expected 'dim n'");
  Int dim = parse_int(lines[0], head[1]);
  if (dim < 1 || dim > 64) fail(lines[0], "dimension out of range");
  const std::size_t n = dim.get_ui();

  std::vector<IntVector> rays;
  std::vector<Cone> cones;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    auto tok = tokens(l.text);
    if (tok[0] == "ray") {
      if (!cones.empty()) fail(l, "ray after cone");
      if (tok.size() != n + 1) fail(l, "ray needs " + std::to_string(n) + " coordinates");
      IntVector v;
      for (std::size_t i = 1; i < tok.size(); ++i) v.push_back(parse_int(l, tok[i]));
      rays.push_back(std::move(v));
    } else if (tok[0] == "cone") {
      if (tok.size() != n + 1) fail(l, "cone needs " + std::to_string(n) + " ray indices");
      Cone c;
      for (std::size_t i = 1; i < tok.size(); ++i) c.push_back(parse_index(l, tok[i], rays.size(), "ray"));
      cones.push_back(std::move(c));
    } else {
      fail(l, "unexpected '" + tok[0] + "'");
    }
  }
  return make_fan(n, std::move(rays), std::move(cones));
}

std::string format_fan(const Fan& fan) {
  std::ostringstream os;
  os << "dim " << fan.dim() << '\n';
  for (const auto& r : fan.rays()) os << "ray " << to_string(r, " ") << '\n';
  for (const auto& c : fan.max_cones()) {
    os << "cone";
    for (auto j : c) os << ' ' << j + 1;
    os << '\n';
  }
  return os.str();
}

KaneyamaBundleData parse_bundle(const std::string& text, const Fan& fan) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error("parse", "empty bundle file");
  auto head = tokens(lines[0].text);
  if (head.size() != 2 || head[0] != "rank") fail(lines[0], "expected 'rank r'");
  Int rk = parse_int(lines[0], head[1]);
  if (rk < 1 || rk > 64) fail(lines[0], "rank out of range");
  const std::size_t r = rk.get_ui();
  const std::size_t nc = fan.num_cones();

  std::vector<std::vector<IntVector>> weights(nc);
  std::vector<bool> have(nc, false);
  std::map<std::pair<std::size_t, std::size_t>, RatMatrix> pastings;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    auto [left, right] = split_colon(l);
    auto lt = tokens(left);
    if (lt.empty()) fail(l, "missing keyword");
    if (lt[0] == "weights") {
      if (lt.size() != 2) fail(l, "expected 'weights s: ...'");
      std::size_t s = parse_index(l, lt[1], nc, "cone");
      if (have[s]) fail(l, "weights for cone " + lt[1] + " given twice");
      have[s] = true;
      std::istringstream in(right);
      std::string item;
      while (std::getline(in, item, ';')) {
        auto open = item.find('('), close = item.find(')');
        if (open == std::string::npos || close == std::string::npos || close < open) {
          fail(l, "weight must look like (x1,...,xn)");
        }
        if (item.find_first_not_of(" \t", close + 1) != std::string::npos ||
            item.find_first_not_of(" \t") != open) {
          fail(l, "stray text around weight '" + item + "'");
        }
        IntVector w;
        std::istringstream coords(item.substr(open + 1, close - open - 1));
        std::string c;
        while (std::getline(coords, c, ',')) {
          auto t = tokens(c);
          if (t.size() != 1) fail(l, "bad weight coordinate in '" + item + "'");
          w.push_back(parse_int(l, t[0]));
        }
        if (w.size() != fan.dim()) fail(l, "weight '" + item + "' has the wrong dimension");
        weights[s].push_back(std::move(w));
      }
      if (weights[s].size() != r) fail(l, "expected " + std::to_string(r) + " weights");
    } else if (lt[0] == "pasting") {
      if (lt.size() != 3) fail(l, "expected 'pasting s2 s1: ...'");
      std::size_t s2 = parse_index(l, lt[1], nc, "cone");
      std::size_t s1 = parse_index(l, lt[2], nc, "cone");
      auto entries = tokens(right);
      if (entries.size() != r * r) fail(l, "pasting needs " + std::to_string(r * r) + " entries");
      RatMatrix m(r, r);
      for (std::size_t e = 0; e < entries.size(); ++e) m(e / r, e % r) = parse_rational(l, entries[e]);
      if (!pastings.emplace(std::make_pair(s2, s1), std::move(m)).second) {
        fail(l, "pasting given twice");
      }
    } else {
      fail(l, "unexpected '" + lt[0] + "'");
    }
  }
  for (std::size_t s = 0; s < nc; ++s)
    if (!have[s]) throw Error("parse", "no weights for cone " + std::to_string(s + 1));
  return make_bundle_data(fan, r, std::move(weights), pastings);
}

std::string format_bundle(const KaneyamaBundleData& data) {
  std::ostringstream os;
  const std::size_t nc = data.fan().num_cones();
  os << "rank " << data.rank() << '\n';
  for (std::size_t s = 0; s < nc; ++s) {
    os << "weights " << s + 1 << ":";
    const auto& ws = data.weights(s);
    for (std::size_t i = 0; i < ws.size(); ++i) os << (i ? ";" : " ") << '(' << to_string(ws[i]) << ')';
    os << '\n';
  }
  for (std::size_t s2 = 0; s2 < nc; ++s2)
    for (std::size_t s1 = 0; s1 < nc; ++s1) {
      if (s1 == s2) continue;
      os << "pasting " << s2 + 1 << ' ' << s1 + 1 << ":";
      const RatMatrix& m = data.pasting(s2, s1);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) os << ' ' << m(i, j).get_str();
      os << '\n';
    }
  return os.str();
}

EulerBundleSpec parse_euler(const std::string& text, const Fan& fan) {
  auto lines = content_lines(text);
  if (lines.empty() || lines[0].text != "euler") throw Error("parse", "expected 'euler' header");
  const std::size_t J = fan.num_rays();
  EulerBundleSpec spec{fan, {}, {}};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    auto tok = tokens(l.text);
    if (tok.size() != 2 * J + 2 || tok[0] != "summand" || tok[J + 1] != "section") {
      fail(l, "expected 'summand d1..d" + std::to_string(J) + " section s1..s" + std::to_string(J) + "'");
    }
    IntVector d, s;
    for (std::size_t j = 0; j < J; ++j) {
      d.push_back(parse_int(l, tok[1 + j]));
      s.push_back(parse_int(l, tok[J + 2 + j]));
    }
    spec.divisors.push_back(std::move(d));
    spec.sections.push_back(std::move(s));
  }
  check_euler_spec(spec);
  return spec;
}

std::string format_euler(const EulerBundleSpec& spec) {
  std::ostringstream os;
  os << "euler\n";
  for (std::size_t i = 0; i < spec.divisors.size(); ++i) {
    os << "summand " << to_string(spec.divisors[i], " ") << " section "
       << to_string(spec.sections[i], " ") << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace toricsplit
