#include "homocut/cover.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

namespace homocut {

int beta_cap() {
  constexpr int kDefault = 20;
  const char* env = std::getenv("HOMOCUT_BETA_CAP");
  if (env == nullptr || *env == '\0') return kDefault;
  std::size_t pos = 0;
  int cap = 0;
  try {
    cap = std::stoi(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || env[pos] != '\0' || cap < 0 || cap > 40)
    throw std::invalid_argument(std::string("HOMOCUT_BETA_CAP must be an integer in [0, 40], got '") + env + "'");
  return cap;
}

namespace {

int mask_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (int bit = 0; bit < 64; ++bit) {
    const std::uint64_t b = std::uint64_t{1} << bit;
    auto it = std::find_if(rows.begin() + rank, rows.end(), [b](std::uint64_t r) { return r & b; });
    if (it == rows.end()) continue;
    std::swap(*it, rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != rank && (rows[i] & b)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

std::int64_t per_component_genus(std::int64_t closed_euler, std::int64_t components) {
  return (2 * components - closed_euler) / (2 * components);
}

}  // namespace

CoverGraph::CoverGraph(const Surface& s) : CoverGraph(s, edge_signatures(s)) {}

CoverGraph::CoverGraph(const Surface& s, std::vector<HomologySignature> sigs)
    : base_(s), sigs_(std::move(sigs)) {
  if (static_cast<int>(sigs_.size()) != s.num_edges())
    throw std::invalid_argument("one signature per edge is required");
  beta_ = sigs_.empty() ? 0 : sigs_[0].size();
  const int cap = beta_cap();
  if (beta_ > cap)
    throw ResourceLimit("cover needs 2^" + std::to_string(beta_) + " sheets, above the cap of 2^" +
                        std::to_string(cap) + " (set HOMOCUT_BETA_CAP to raise it)");
  masks_.reserve(sigs_.size());
  for (const auto& h : sigs_) {
    if (h.size() != beta_) throw std::invalid_argument("signatures differ in length");
    masks_.push_back(h.to_mask());
  }
}

CoverStats CoverGraph::stats() const {
  const auto sheets_count = static_cast<std::int64_t>(sheets());
  CoverStats st;
  st.vertices = sheets_count * base_.num_vertices();
  st.edges = sheets_count * base_.num_edges();
  // The orbit of (d, h) closes after one turn around the face when the face
  // boundary lifts to a closed walk, otherwise after two.
  for (int f = 0; f < base_.num_faces(); ++f) {
    std::uint64_t shift = 0;
    for (Dart d : base_.face_darts(f)) shift ^= masks_[edge_of(d)];
    const std::int64_t copies = shift == 0 ? sheets_count : sheets_count / 2;
    st.faces += copies;
    if (base_.is_boundary_face(f)) st.boundaries += copies;
  }
  st.components = sheets_count >> mask_rank(masks_);
  st.euler_characteristic = st.vertices - st.edges + st.faces - st.boundaries;
  st.genus = per_component_genus(st.vertices - st.edges + st.faces, st.components);
  return st;
}

CoverStats trace_cover_stats(const CoverGraph& c) {
  const Surface& s = c.base();
  const std::uint64_t sheets = c.sheets();
  const std::int64_t darts = s.num_darts();
  CoverStats st;
  st.vertices = c.num_vertices();
  st.edges = static_cast<std::int64_t>(sheets) * s.num_edges();

  std::vector<char> seen(static_cast<std::size_t>(sheets) * darts, 0);
  for (std::uint64_t h0 = 0; h0 < sheets; ++h0) {
    for (Dart d0 = 0; d0 < darts; ++d0) {
      if (seen[h0 * darts + d0]) continue;
      ++st.faces;
      if (s.is_boundary_face(s.face_of(d0))) ++st.boundaries;
      Dart d = d0;
      std::uint64_t h = h0;
      while (!seen[h * darts + d]) {
        seen[h * darts + d] = 1;
        h ^= c.mask(edge_of(d));
        d = s.face_next(d);
      }
    }
  }

  std::vector<char> reached(static_cast<std::size_t>(st.vertices), 0);
  for (std::int64_t x0 = 0; x0 < st.vertices; ++x0) {
    if (reached[x0]) continue;
    ++st.components;
    reached[x0] = 1;
    std::deque<std::int64_t> queue{x0};
    while (!queue.empty()) {
      const std::int64_t x = queue.front();
      queue.pop_front();
      for (Dart d : s.rotation(c.project(x))) {
        const std::int64_t y = c.head(x, d);
        if (!reached[y]) {
          reached[y] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  st.euler_characteristic = st.vertices - st.edges + st.faces - st.boundaries;
  st.genus = per_component_genus(st.vertices - st.edges + st.faces, st.components);
  return st;
}

std::vector<std::int64_t> lift_walk(const CoverGraph& c, int start, std::span<const Dart> darts,
                                    std::uint64_t h0) {
  const Surface& s = c.base();
  if (start < 0 || start >= s.num_vertices()) throw std::invalid_argument("start vertex out of range");
  if (h0 >= c.sheets()) throw std::invalid_argument("start sheet out of range");
  std::vector<std::int64_t> out{c.vertex(start, h0)};
  int at = start;
  for (Dart d : darts) {
    if (d < 0 || d >= s.num_darts() || s.tail(d) != at) throw std::invalid_argument("darts do not form a walk");
    out.push_back(c.head(out.back(), d));
    at = s.head(d);
  }
  return out;
}

}  // namespace homocut
