#include "repanim/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace repanim {

// ---------------------------------------------------------------- Builder

GraphWindow::Builder::Builder(std::size_t vertex_count)
    : n_(vertex_count), ambient_override_(vertex_count, -1) {}

GraphWindow::Builder& GraphWindow::Builder::add_edge(VertexId u, VertexId v) {
  if (u >= n_ || v >= n_)
    throw ArgumentError("add_edge: vertex id out of range");
  if (u == v) throw ArgumentError("add_edge: loops are not allowed");
  if (u > v) std::swap(u, v);
  edges_.emplace_back(u, v);
  return *this;
}

GraphWindow::Builder& GraphWindow::Builder::set_ambient_degree(
    VertexId v, std::uint32_t degree) {
  if (v >= n_) throw ArgumentError("set_ambient_degree: vertex out of range");
  ambient_override_[v] = degree;
  return *this;
}

GraphWindow::Builder& GraphWindow::Builder::set_origin(VertexId v) {
  if (v >= n_) throw ArgumentError("set_origin: vertex out of range");
  origin_ = v;
  return *this;
}

GraphWindow GraphWindow::Builder::build() {
  std::sort(edges_.begin(), edges_.end());
  auto last = std::unique(edges_.begin(), edges_.end());
  if (last != edges_.end())
    throw ArgumentError("build: duplicate edge in input");
  GraphWindow w;
  w.offsets_.assign(n_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++w.offsets_[u + 1];
    ++w.offsets_[v + 1];
  }
  for (std::size_t i = 1; i <= n_; ++i) w.offsets_[i] += w.offsets_[i - 1];
  w.flat_.resize(edges_.size() * 2);
  std::vector<std::size_t> cursor(w.offsets_.begin(), w.offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    w.flat_[cursor[u]++] = v;
    w.flat_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n_; ++v)
    std::sort(w.flat_.begin() + w.offsets_[v],
              w.flat_.begin() + w.offsets_[v + 1]);

  w.ambient_.resize(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    std::uint32_t in_window =
        static_cast<std::uint32_t>(w.offsets_[v + 1] - w.offsets_[v]);
    if (ambient_override_[v] >= 0) {
      if (ambient_override_[v] < in_window)
        throw ArgumentError("build: ambient degree of vertex " +
                            std::to_string(v) +
                            " is below its in-window degree");
      w.ambient_[v] = static_cast<std::uint32_t>(ambient_override_[v]);
    } else {
      w.ambient_[v] = in_window;
    }
    w.max_ambient_ = std::max(w.max_ambient_, w.ambient_[v]);
  }
  w.origin_ = origin_;
  return w;
}

// ---------------------------------------------------------------- queries

bool GraphWindow::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::uint32_t> GraphWindow::distances_from(VertexId x) const {
  check_vertex(x);
  std::vector<std::uint32_t> dist(vertex_count(), kUnreachable);
  std::deque<VertexId> queue;
  dist[x] = 0;
  queue.push_back(x);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : neighbors(v)) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::uint32_t GraphWindow::path_distance(VertexId x, VertexId y) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) return 0;
  // Early-exit BFS.
  std::vector<std::uint32_t> dist(vertex_count(), kUnreachable);
  std::deque<VertexId> queue;
  dist[x] = 0;
  queue.push_back(x);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : neighbors(v)) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        if (u == y) return dist[u];
        queue.push_back(u);
      }
    }
  }
  return kUnreachable;
}

std::uint32_t GraphWindow::max_exact_radius(VertexId x) const {
  auto dist = distances_from(x);
  std::uint32_t radius = kUnreachable;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (dist[v] == kUnreachable) continue;
    if (!complete(static_cast<VertexId>(v)))
      radius = std::min(radius, dist[v] + 1);
  }
  return radius;  // kUnreachable: every reachable vertex is complete
}

BallSphere GraphWindow::ball_sphere(VertexId x, std::uint32_t radius) const {
  check_vertex(x);
  auto dist = distances_from(x);
  // The ball is exact iff every vertex strictly inside it has all of its
  // ambient neighbors in the window.
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (dist[v] != kUnreachable && dist[v] + 1 <= radius &&
        !complete(static_cast<VertexId>(v)))
      throw TruncationError(
          "window too small: ball of radius " + std::to_string(radius) +
          " around vertex " + std::to_string(x) +
          " reaches past the window boundary (vertex " + std::to_string(v) +
          " at distance " + std::to_string(dist[v]) +
          " is missing ambient neighbors)");
  }
  BallSphere out;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (dist[v] == kUnreachable) continue;
    if (dist[v] <= radius) out.ball.push_back(static_cast<VertexId>(v));
    if (dist[v] == radius) out.sphere.push_back(static_cast<VertexId>(v));
  }
  return out;
}

// ---------------------------------------------------------------- text IO

namespace {

std::uint64_t parse_u64(std::string_view token, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ArgumentError(std::string("graph text: bad ") + what + " '" +
                        std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

GraphWindow GraphWindow::from_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  std::size_t idx = 0;
  auto next_tokens = [&]() -> std::vector<std::string_view> {
    while (idx < lines.size()) {
      auto toks = split_ws(lines[idx]);
      ++idx;
      if (!toks.empty()) return toks;
    }
    return {};
  };

  auto header = next_tokens();
  if (header.size() != 2)
    throw ArgumentError("graph text: expected header 'V E'");
  std::uint64_t v_count = parse_u64(header[0], "vertex count");
  std::uint64_t e_count = parse_u64(header[1], "edge count");
  Builder b(v_count);
  for (std::uint64_t e = 0; e < e_count; ++e) {
    auto toks = next_tokens();
    if (toks.size() != 2)
      throw ArgumentError("graph text: expected edge line 'u v'");
    b.add_edge(static_cast<VertexId>(parse_u64(toks[0], "vertex id")),
               static_cast<VertexId>(parse_u64(toks[1], "vertex id")));
  }
  auto section = next_tokens();
  if (!section.empty() && section[0] == "DEGREES") {
    for (;;) {
      auto toks = next_tokens();
      if (toks.empty() || toks[0] == "ORIGIN") {
        section = toks;
        break;
      }
      if (toks.size() != 2)
        throw ArgumentError("graph text: expected degree line 'u n(u)'");
      b.set_ambient_degree(
          static_cast<VertexId>(parse_u64(toks[0], "vertex id")),
          static_cast<std::uint32_t>(parse_u64(toks[1], "ambient degree")));
    }
  }
  if (!section.empty() && section[0] == "ORIGIN") {
    if (section.size() != 2)
      throw ArgumentError("graph text: expected 'ORIGIN v'");
    b.set_origin(static_cast<VertexId>(parse_u64(section[1], "origin")));
    section = next_tokens();
  }
  if (!section.empty())
    throw ArgumentError("graph text: trailing content '" +
                        std::string(section[0]) + "'");
  return b.build();
}

std::string GraphWindow::to_text() const {
  std::ostringstream out;
  out << vertex_count() << ' ' << edge_count() << '\n';
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (VertexId v : neighbors(static_cast<VertexId>(u)))
      if (u < v) out << u << ' ' << v << '\n';
  bool have_degrees = false;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (!complete(static_cast<VertexId>(v))) {
      if (!have_degrees) {
        out << "DEGREES\n";
        have_degrees = true;
      }
      out << v << ' ' << ambient_[v] << '\n';
    }
  }
  if (origin_) out << "ORIGIN " << *origin_ << '\n';
  return out.str();
}

// ---------------------------------------------------------------- Path

bool Path::is_simple() const {
  std::vector<VertexId> sorted(vertices);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool Path::is_walk_in(const GraphWindow& w) const {
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!w.has_edge(vertices[i], vertices[i + 1])) return false;
  return true;
}

// ---------------------------------------------------------------- Animal

Animal::Animal(const GraphWindow& window, std::vector<VertexId> sorted_vertices)
    : window_(&window), vertices_(std::move(sorted_vertices)) {
  const std::size_t n = vertices_.size();
  local_offsets_.assign(n + 1, 0);
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (VertexId u : window_->neighbors(vertices_[i])) {
      auto it = std::lower_bound(vertices_.begin(), vertices_.end(), u);
      if (it != vertices_.end() && *it == u)
        adj[i].push_back(
            static_cast<std::uint32_t>(it - vertices_.begin()));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    local_offsets_[i + 1] = local_offsets_[i] + adj[i].size();
  local_flat_.reserve(local_offsets_[n]);
  for (auto& row : adj)
    local_flat_.insert(local_flat_.end(), row.begin(), row.end());
}

std::ptrdiff_t Animal::local_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return it - vertices_.begin();
}

std::uint32_t Animal::max_ambient_degree() const {
  std::uint32_t m = 0;
  for (VertexId v : vertices_) m = std::max(m, window_->ambient_degree(v));
  return m;
}

std::vector<std::uint32_t> Animal::internal_distances(
    std::uint32_t local) const {
  std::vector<std::uint32_t> dist(order(), kUnreachable);
  std::deque<std::uint32_t> queue;
  dist[local] = 0;
  queue.push_back(local);
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t u : local_neighbors(v)) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

Animal induced_animal(const GraphWindow& w, std::span<const VertexId> vs) {
  if (vs.empty()) throw ArgumentError("induced_animal: empty vertex set");
  std::vector<VertexId> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexId v : sorted) w.check_vertex(v);

  Animal a(w, std::move(sorted));
  auto dist = a.internal_distances(0);
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (dist[i] == kUnreachable)
      throw ConnectivityError(
          "induced_animal: vertex set is disconnected (vertices " +
              std::to_string(a.vertices()[0]) + " and " +
              std::to_string(a.vertices()[i]) +
              " lie in different components)",
          a.vertices()[0], a.vertices()[i]);
  }
  return a;
}

Path euler_double_cover(const Animal& a, VertexId x) {
  auto start = a.local_index(x);
  if (start < 0)
    throw ArgumentError("euler_double_cover: vertex " + std::to_string(x) +
                        " is not in the animal");
  const std::size_t n = a.order();
  // Hierholzer on the directed doubling: each induced edge becomes two
  // opposite arcs, and every arc is used exactly once.
  std::vector<std::size_t> next_arc(n);
  for (std::size_t v = 0; v < n; ++v) next_arc[v] = 0;
  std::vector<std::vector<bool>> used(n);
  for (std::size_t v = 0; v < n; ++v)
    used[v].assign(a.local_degree(static_cast<std::uint32_t>(v)), false);

  std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(start)};
  std::vector<std::uint32_t> circuit;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    auto nb = a.local_neighbors(v);
    while (next_arc[v] < nb.size() && used[v][next_arc[v]]) ++next_arc[v];
    if (next_arc[v] == nb.size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      used[v][next_arc[v]] = true;
      stack.push_back(nb[next_arc[v]]);
    }
  }
  // In a connected graph with balanced arc degrees the circuit covers
  // all arcs; reverse to get traversal order from x.
  std::reverse(circuit.begin(), circuit.end());
  Path p;
  p.vertices.reserve(circuit.size());
  for (std::uint32_t local : circuit) p.vertices.push_back(a.vertices()[local]);
  return p;
}

// -------------------------------------------------- window constructors

GraphWindow grid_window(std::uint32_t rows, std::uint32_t cols,
                        bool infinite_ambient, bool set_center_origin) {
  if (rows == 0 || cols == 0)
    throw ArgumentError("grid_window: empty grid");
  GraphWindow::Builder b(static_cast<std::size_t>(rows) * cols);
  auto id = [cols](std::uint32_t r, std::uint32_t c) {
    return static_cast<VertexId>(r * cols + c);
  };
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) b.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) b.add_edge(id(r, c), id(r + 1, c));
    }
  if (infinite_ambient)
    for (std::uint32_t v = 0; v < rows * cols; ++v) b.set_ambient_degree(v, 4);
  if (set_center_origin) b.set_origin(id(rows / 2, cols / 2));
  return b.build();
}

GraphWindow path_window(std::uint32_t n) {
  if (n == 0) throw ArgumentError("path_window: empty path");
  GraphWindow::Builder b(n);
  for (std::uint32_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  b.set_origin(0);
  return b.build();
}

GraphWindow line_window(std::uint32_t n, std::uint32_t origin_pos) {
  if (n < 2) throw ArgumentError("line_window: need at least two vertices");
  if (origin_pos >= n) throw ArgumentError("line_window: origin out of range");
  GraphWindow::Builder b(n);
  for (std::uint32_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  b.set_ambient_degree(0, 2);
  b.set_ambient_degree(n - 1, 2);
  b.set_origin(origin_pos);
  return b.build();
}

}  // namespace repanim
