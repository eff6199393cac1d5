#include "homocut/generators.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <stdexcept>

namespace homocut {

GenKind parse_gen_kind(const std::string& name) {
  if (name == "planar-grid") return GenKind::planar_grid;
  if (name == "torus-grid") return GenKind::torus_grid;
  if (name == "genus-schema") return GenKind::genus_schema;
  if (name == "random-rotation") return GenKind::random_rotation;
  throw std::invalid_argument("unknown generator kind '" + name + "'");
}

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::planar_grid: return "planar-grid";
    case GenKind::torus_grid: return "torus-grid";
    case GenKind::genus_schema: return "genus-schema";
    case GenKind::random_rotation: return "random-rotation";
  }
  return "unknown";
}

namespace {

struct Builder {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Dart>> rot;

  int add_vertex() {
    rot.emplace_back();
    return n++;
  }
  int add_edge(int u, int v) {
    edges.push_back(Edge{u, v, 1});
    return static_cast<int>(edges.size()) - 1;
  }
  Surface surface() const { return Surface(n, edges, rot); }

  /// Replaces edge e by a path through k new vertices; e keeps its tail end.
  void subdivide(int e, int k) {
    if (k == 0) return;
    const int v = edges[e].v;
    int prev = add_vertex();
    edges[e].v = prev;
    const Dart old_back = 2 * e + 1;
    rot[prev].push_back(old_back);
    for (int i = 1; i <= k; ++i) {
      const int next = i < k ? add_vertex() : v;
      const int f = add_edge(prev, next);
      rot[prev].push_back(2 * f);
      if (i < k) {
        rot[next].push_back(2 * f + 1);
      } else {
        // The far end of e now belongs to the last piece.
        for (Dart& d : rot[v])
          if (d == old_back) d = 2 * f + 1;
      }
      prev = next;
    }
  }

  void insert_after(int v, Dart after, Dart d) {
    auto& r = rot[v];
    r.insert(std::find(r.begin(), r.end(), after) + 1, d);
  }
};

Builder planar_grid(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows * cols < 2) throw std::invalid_argument("planar grid needs at least two vertices");
  Builder b;
  for (int i = 0; i < rows * cols; ++i) b.add_vertex();
  auto id = [cols](int i, int j) { return i * cols + j; };
  std::vector<int> east(rows * cols, -1), north(rows * cols, -1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) east[id(i, j)] = b.add_edge(id(i, j), id(i, j + 1));
      if (i + 1 < rows) north[id(i, j)] = b.add_edge(id(i, j), id(i + 1, j));
    }
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      auto& r = b.rot[id(i, j)];
      if (j + 1 < cols) r.push_back(2 * east[id(i, j)]);
      if (i + 1 < rows) r.push_back(2 * north[id(i, j)]);
      if (j > 0) r.push_back(2 * east[id(i, j - 1)] + 1);
      if (i > 0) r.push_back(2 * north[id(i - 1, j)] + 1);
    }
  return b;
}

Builder torus_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("torus grid needs positive sizes");
  Builder b;
  for (int i = 0; i < rows * cols; ++i) b.add_vertex();
  auto id = [cols](int i, int j) { return i * cols + j; };
  std::vector<int> east(rows * cols), north(rows * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      east[id(i, j)] = b.add_edge(id(i, j), id(i, (j + 1) % cols));
      north[id(i, j)] = b.add_edge(id(i, j), id((i + 1) % rows, j));
    }
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      b.rot[id(i, j)] = {2 * east[id(i, j)], 2 * north[id(i, j)], 2 * east[id(i, (j + cols - 1) % cols)] + 1,
                         2 * north[id((i + rows - 1) % rows, j)] + 1};
  return b;
}

Builder genus_schema(int genus) {
  if (genus < 1) throw std::invalid_argument("genus schema needs genus >= 1");
  Builder b;
  b.add_vertex();
  for (int i = 0; i < genus; ++i) {
    const int a = b.add_edge(0, 0);
    const int c = b.add_edge(0, 0);
    b.rot[0].insert(b.rot[0].end(), {2 * a, 2 * c, 2 * a + 1, 2 * c + 1});
  }
  return b;
}

Builder random_rotation(int n, int m, std::mt19937_64& rng) {
  if (n < 2 || m < n - 1) throw std::invalid_argument("random rotation needs n >= 2 and m >= n - 1");
  Builder b;
  for (int i = 0; i < n; ++i) b.add_vertex();
  for (int v = 1; v < n; ++v) b.add_edge(static_cast<int>(rng() % v), v);
  while (static_cast<int>(b.edges.size()) < m) {
    const int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % (n - 1));
    if (v >= u) ++v;
    b.add_edge(u, v);
  }
  for (int e = 0; e < m; ++e) {
    b.rot[b.edges[e].u].push_back(2 * e);
    b.rot[b.edges[e].v].push_back(2 * e + 1);
  }
  for (auto& r : b.rot) std::shuffle(r.begin(), r.end(), rng);
  return b;
}

void add_chord(Builder& b, std::mt19937_64& rng) {
  const Surface s = b.surface();
  const int f = static_cast<int>(rng() % s.num_faces());
  const auto darts = s.face_darts(f);
  // Corner after rev(d) at head(d) lies on face f.
  const Dart d1 = darts[rng() % darts.size()];
  const Dart d2 = darts[rng() % darts.size()];
  const int e = b.add_edge(s.head(d1), s.head(d2));
  b.insert_after(s.head(d1), rev(d1), 2 * e);
  b.insert_after(s.head(d2), rev(d2), 2 * e + 1);
}

std::vector<Weight> read_weight_file(const std::string& path, int m) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open weight file '" + path + "'");
  std::vector<Weight> out;
  for (Weight w; in >> w;) {
    if (w < 0) throw std::invalid_argument("negative weight in '" + path + "'");
    out.push_back(w);
  }
  if (!in.eof()) throw std::invalid_argument("weight file '" + path + "' holds a non-integer");
  if (static_cast<int>(out.size()) != m)
    throw std::invalid_argument("weight file has " + std::to_string(out.size()) + " weights, expected " +
                                std::to_string(m));
  return out;
}

}  // namespace

Surface generate(const GenSpec& spec) {
  if (spec.subdivisions < 0 || spec.chords < 0 || spec.boundary < 0)
    throw std::invalid_argument("counts must be non-negative");
  std::mt19937_64 rng(spec.seed);
  Builder b;
  switch (spec.kind) {
    case GenKind::planar_grid: b = planar_grid(spec.rows, spec.cols); break;
    case GenKind::torus_grid: b = torus_grid(spec.rows, spec.cols); break;
    case GenKind::genus_schema: b = genus_schema(spec.genus); break;
    case GenKind::random_rotation: b = random_rotation(spec.vertices, spec.edges, rng); break;
  }
  if (spec.kind == GenKind::genus_schema && b.surface().num_faces() != 1)
    throw std::logic_error("genus schema does not have a single face");

  const int base_edges = static_cast<int>(b.edges.size());
  for (int e = 0; e < base_edges; ++e) b.subdivide(e, spec.subdivisions);
  for (int i = 0; i < spec.chords; ++i) add_chord(b, rng);

  const int m = static_cast<int>(b.edges.size());
  switch (spec.weights) {
    case WeightKind::unit:
      for (Edge& e : b.edges) e.weight = 1;
      break;
    case WeightKind::uniform: {
      if (spec.weight_lo < 0 || spec.weight_hi < spec.weight_lo) throw std::invalid_argument("bad weight range");
      const auto span = static_cast<std::uint64_t>(spec.weight_hi - spec.weight_lo) + 1;
      for (Edge& e : b.edges) e.weight = spec.weight_lo + static_cast<Weight>(rng() % span);
      break;
    }
    case WeightKind::file: {
      const auto w = read_weight_file(spec.weight_file, m);
      for (int e = 0; e < m; ++e) b.edges[e].weight = w[e];
      break;
    }
  }

  Surface s = b.surface();
  if (spec.boundary == 0) return s;
  if (spec.boundary >= s.num_faces()) throw std::invalid_argument("cannot turn every face into boundary");
  std::vector<int> faces(s.num_faces());
  for (int f = 0; f < s.num_faces(); ++f) faces[f] = f;
  for (int i = 0; i < spec.boundary; ++i) std::swap(faces[i], faces[i + rng() % (faces.size() - i)]);
  faces.resize(spec.boundary);
  std::sort(faces.begin(), faces.end());
  return remove_faces(s, faces);
}

}  // namespace homocut
