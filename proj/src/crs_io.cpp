#include <algorithm>
#include <limits>
#include <sstream>

#include "homocut/surface.hpp"

namespace homocut {

namespace {

std::string at_line(int line) { return "line " + std::to_string(line) + ": "; }

int parse_int(const std::string& tok, int line) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != tok.size()) throw ParseError(at_line(line) + "expected integer, got '" + tok + "'");
  return value;
}

Dart parse_dart(const std::string& tok, int line) {
  if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
    throw ParseError(at_line(line) + "dart must look like <eid>+ or <eid>-, got '" + tok + "'");
  const int e = parse_int(tok.substr(0, tok.size() - 1), line);
  if (e < 0) throw ParseError(at_line(line) + "negative edge id");
  return 2 * e + (tok.back() == '-' ? 1 : 0);
}

std::string dart_token(Dart d) { return std::to_string(edge_of(d)) + ((d & 1) ? "-" : "+"); }

struct RawWeight {
  std::string digits;  // integer digits followed by fraction digits
  int decimals = 0;
};

RawWeight parse_weight(const std::string& tok, int line) {
  RawWeight w;
  bool seen_dot = false;
  for (char c : tok) {
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      w.digits.push_back(c);
      if (seen_dot) ++w.decimals;
    } else {
      throw ParseError(at_line(line) + "weight must be a non-negative decimal, got '" + tok + "'");
    }
  }
  if (w.digits.empty()) throw ParseError(at_line(line) + "empty weight");
  return w;
}

Weight scaled(const RawWeight& w, int decimals, int line) {
  std::string digits = w.digits + std::string(decimals - w.decimals, '0');
  Weight value = 0;
  for (char c : digits) {
    if (value > (std::numeric_limits<Weight>::max() - 9) / 10)
      throw ParseError(at_line(line) + "weight overflows 64-bit integer");
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Surface parse_crs(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  std::vector<RawWeight> weights;
  std::vector<int> weight_line;
  std::vector<char> edge_seen;
  std::vector<std::vector<Dart>> rot;
  std::vector<char> rot_seen;
  std::vector<Dart> boundary;

  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "surface") {
      if (n >= 0) throw ParseError(at_line(line) + "duplicate surface header");
      if (tok.size() != 3) throw ParseError(at_line(line) + "expected: surface <n> <m>");
      n = parse_int(tok[1], line);
      m = parse_int(tok[2], line);
      if (n <= 0 || m < 0) throw ParseError(at_line(line) + "bad sizes");
      edges.resize(m);
      weights.resize(m);
      weight_line.assign(m, 0);
      edge_seen.assign(m, 0);
      rot.resize(n);
      rot_seen.assign(n, 0);
      continue;
    }
    if (n < 0) throw ParseError(at_line(line) + "missing surface header");
    if (tok[0] == "edge") {
      if (tok.size() != 5) throw ParseError(at_line(line) + "expected: edge <eid> <u> <v> <weight>");
      const int e = parse_int(tok[1], line);
      if (e < 0 || e >= m) throw ParseError(at_line(line) + "edge id out of range");
      if (edge_seen[e]) throw ParseError(at_line(line) + "duplicate edge " + tok[1]);
      edge_seen[e] = 1;
      edges[e].u = parse_int(tok[2], line);
      edges[e].v = parse_int(tok[3], line);
      if (edges[e].u < 0 || edges[e].u >= n || edges[e].v < 0 || edges[e].v >= n)
        throw ParseError(at_line(line) + "endpoint out of range");
      weights[e] = parse_weight(tok[4], line);
      weight_line[e] = line;
    } else if (tok[0] == "rot") {
      if (tok.size() < 3 || tok[2] != ":") throw ParseError(at_line(line) + "expected: rot <v> : <dart>...");
      const int v = parse_int(tok[1], line);
      if (v < 0 || v >= n) throw ParseError(at_line(line) + "vertex out of range");
      if (rot_seen[v]) throw ParseError(at_line(line) + "duplicate rotation for vertex " + tok[1]);
      rot_seen[v] = 1;
      for (std::size_t i = 3; i < tok.size(); ++i) rot[v].push_back(parse_dart(tok[i], line));
    } else if (tok[0] == "boundary") {
      if (tok.size() != 2) throw ParseError(at_line(line) + "expected: boundary <dart>");
      const Dart d = parse_dart(tok[1], line);
      if (d >= 2 * m) throw ParseError(at_line(line) + "unknown boundary face reference");
      boundary.push_back(d);
    } else {
      throw ParseError(at_line(line) + "unknown directive '" + tok[0] + "'");
    }
  }
  if (n < 0) throw ParseError("missing surface header");
  for (int e = 0; e < m; ++e)
    if (!edge_seen[e]) throw ParseError("edge " + std::to_string(e) + " is not defined");

  int decimals = 0;
  for (const RawWeight& w : weights) decimals = std::max(decimals, w.decimals);
  for (int e = 0; e < m; ++e) edges[e].weight = scaled(weights[e], decimals, weight_line[e]);

  return Surface(n, std::move(edges), std::move(rot), boundary);
}

std::string emit_crs(const Surface& s) {
  std::ostringstream out;
  out << "surface " << s.num_vertices() << ' ' << s.num_edges() << '\n';
  for (int e = 0; e < s.num_edges(); ++e)
    out << "edge " << e << ' ' << s.edge(e).u << ' ' << s.edge(e).v << ' ' << s.weight(e) << '\n';
  for (int v = 0; v < s.num_vertices(); ++v) {
    out << "rot " << v << " :";
    for (Dart d : s.rotation(v)) out << ' ' << dart_token(d);
    out << '\n';
  }
  for (Dart d : s.boundary_representatives()) out << "boundary " << dart_token(d) << '\n';
  return out.str();
}

}  // namespace homocut
