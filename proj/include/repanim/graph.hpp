#ifndef REPANIM_GRAPH_HPP
#define REPANIM_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repanim/common.hpp"

namespace repanim {

using VertexId = std::uint32_t;
inline constexpr std::uint32_t kUnreachable =
    std::numeric_limits<std::uint32_t>::max();

struct BallSphere {
  std::vector<VertexId> ball;    // { y : rho(x,y) <= N }, sorted by id
  std::vector<VertexId> sphere;  // { y : rho(x,y) == N }, sorted by id
};

// A finite window of a (possibly infinite) graph: simple, loop-free,
// undirected.  Adjacency is stored CSR-style with sorted neighbor lists.
// Each vertex carries an ambient degree n(x) -- its degree in the full
// graph the window was cut from -- which may exceed the in-window degree
// for boundary vertices.  Every bound in this library is stated in terms
// of ambient degrees, which is why they are tracked separately.
//
// Windows are immutable after construction and safe to share across
// threads.
class GraphWindow {
 public:
  class Builder {
   public:
    explicit Builder(std::size_t vertex_count);

    Builder& add_edge(VertexId u, VertexId v);
    /// Overrides the ambient degree of a boundary vertex.  Must be >=
    /// the final in-window degree.
    Builder& set_ambient_degree(VertexId v, std::uint32_t degree);
    Builder& set_origin(VertexId v);

    GraphWindow build();

   private:
    std::size_t n_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::int64_t> ambient_override_;
    std::optional<VertexId> origin_;
  };

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return flat_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    return {flat_.data() + offsets_[v], flat_.data() + offsets_[v + 1]};
  }

  std::uint32_t degree(VertexId v) const {
    check_vertex(v);
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::uint32_t ambient_degree(VertexId v) const {
    check_vertex(v);
    return ambient_[v];
  }

  /// True when all neighbors of v in the ambient graph are present in
  /// the window.  Balls are exact only while they stay strictly inside
  /// the region of complete vertices.
  bool complete(VertexId v) const { return ambient_[v] == degree(v); }

  std::optional<VertexId> origin() const { return origin_; }
  std::uint32_t max_ambient_degree() const { return max_ambient_; }

  bool has_edge(VertexId u, VertexId v) const;

  /// BFS distances from x; kUnreachable marks other components.
  std::vector<std::uint32_t> distances_from(VertexId x) const;

  /// rho(x,y): shortest-path length, or kUnreachable.
  std::uint32_t path_distance(VertexId x, VertexId y) const;

  /// B_N(x) and S_N(x).  Throws TruncationError when the window cannot
  /// certify the ball: some vertex within distance N-1 of x is missing
  /// ambient neighbors, so the true ball may contain unseen vertices.
  BallSphere ball_sphere(VertexId x, std::uint32_t radius) const;

  /// Largest N for which ball_sphere(x, N) is certifiably exact.
  std::uint32_t max_exact_radius(VertexId x) const;

  // --- text format ------------------------------------------------
  // Line 1: "V E"; then E lines "u v" with u < v, sorted; then an
  // optional "DEGREES" section listing "u n(u)" for the vertices whose
  // ambient degree exceeds the in-window degree; then an optional
  // "ORIGIN" line.  to_text/from_text round-trip bit-exactly.
  static GraphWindow from_text(std::string_view text);
  std::string to_text() const;

  void check_vertex(VertexId v) const {
    if (v >= vertex_count())
      throw ArgumentError("vertex id " + std::to_string(v) +
                          " out of range (window has " +
                          std::to_string(vertex_count()) + " vertices)");
  }

 private:
  friend class Builder;
  GraphWindow() = default;

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> flat_;
  std::vector<std::uint32_t> ambient_;
  std::optional<VertexId> origin_;
  std::uint32_t max_ambient_ = 0;
};

// A walk x_0 ~ x_1 ~ ... ~ x_n; length is n.  "Simple" means all
// vertices are pairwise distinct.
struct Path {
  std::vector<VertexId> vertices;

  std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  bool is_simple() const;
  /// Consecutive vertices adjacent in w.
  bool is_walk_in(const GraphWindow& w) const;
};

// A connected vertex set with the edges induced inside its window (a
// site animal).  Keeps its own little CSR over local indices so that
// metric queries inside the animal are cheap.
class Animal {
 public:
  Animal(const GraphWindow& window, std::vector<VertexId> sorted_vertices);

  const GraphWindow& window() const { return *window_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t induced_edge_count() const { return local_flat_.size() / 2; }
  std::span<const VertexId> vertices() const { return vertices_; }

  bool contains(VertexId v) const { return local_index(v) >= 0; }
  /// Position of v in the sorted vertex list, or -1.
  std::ptrdiff_t local_index(VertexId v) const;

  std::span<const std::uint32_t> local_neighbors(std::uint32_t local) const {
    return {local_flat_.data() + local_offsets_[local],
            local_flat_.data() + local_offsets_[local + 1]};
  }

  /// Degree of the local vertex inside the animal.
  std::uint32_t local_degree(std::uint32_t local) const {
    return static_cast<std::uint32_t>(local_offsets_[local + 1] -
                                      local_offsets_[local]);
  }

  /// Ambient degree n(x) of a member vertex.
  std::uint32_t ambient_degree_of_local(std::uint32_t local) const {
    return window_->ambient_degree(vertices_[local]);
  }

  /// max_{x in V(A)} n(x).
  std::uint32_t max_ambient_degree() const;

  /// BFS distances inside the animal from a local index.
  std::vector<std::uint32_t> internal_distances(std::uint32_t local) const;

 private:
  const GraphWindow* window_;
  std::vector<VertexId> vertices_;  // sorted
  std::vector<std::size_t> local_offsets_;
  std::vector<std::uint32_t> local_flat_;
};

/// Builds the animal induced by vs, or throws ConnectivityError with a
/// two-component witness when vs is not connected in w.
Animal induced_animal(const GraphWindow& w, std::span<const VertexId> vs);

/// Closed walk from x that traverses every induced edge of the animal
/// exactly once in each direction (Hierholzer circuit on the doubled,
/// directed edge set).  The walk has length 2|E(A)|, visits every vertex
/// of A, and departs each ordered pair (u,v) exactly once -- so it is a
/// member of the departure-constrained walk family of that length.
//
// The doubling is directed on purpose: doubling undirected edges could
// traverse both copies the same way, which the departure constraint
// forbids.
Path euler_double_cover(const Animal& a, VertexId x);

// ---- convenience window constructors ------------------------------

/// rows x cols grid.  infinite_ambient marks the window as a piece of
/// the unbounded grid: every vertex reports ambient degree 4.
GraphWindow grid_window(std::uint32_t rows, std::uint32_t cols,
                        bool infinite_ambient, bool set_center_origin = true);

/// Path graph on n vertices (standalone: ambient degrees match).
GraphWindow path_window(std::uint32_t n);

/// Path graph presented as a window of the two-sided infinite line:
/// both endpoints report ambient degree 2.
GraphWindow line_window(std::uint32_t n, std::uint32_t origin_pos);

}  // namespace repanim

#endif  // REPANIM_GRAPH_HPP
