#ifndef REPANIM_ENUMERATION_HPP
#define REPANIM_ENUMERATION_HPP

#include <functional>
#include <optional>
#include <span>

#include "repanim/common.hpp"
#include "repanim/graph.hpp"

namespace repanim {

// Guards for the exponential enumerators.  The per-object caps stop
// obviously hopeless requests early; the node budget stops everything
// else.  All are configurable.
struct EnumerationOptions {
  std::uint32_t max_path_length = 64;
  std::uint32_t max_theta_length = 12;
  std::uint32_t max_animal_order = 16;
  std::uint64_t node_budget = 4'000'000'000ull;
  bool compute_bound = false;
};

struct CountResult {
  std::uint32_t n = 0;
  BigInt count;
  // Filled when compute_bound is set: log-space upper bounds for the
  // walk family (bound12: max over walks of sum n(y) log n(y)) and the
  // simple-path family (bound13: max of sum log n(y)), over distinct
  // visited vertices.  exp(bound) dominates the respective count.
  std::optional<double> bound12;
  std::optional<double> bound13;
  double wall_seconds = 0.0;
};

using PathSink = std::function<void(std::span<const VertexId>)>;
using AnimalSink = std::function<void(std::span<const VertexId>)>;

/// |Sigma_N(x)|: simple paths (all vertices distinct) of length N
/// starting at x.  Requires B_N(x) to fit in the window.  When a sink
/// is given every path is emitted exactly once.  Fills bound13 when
/// compute_bound is set.
CountResult count_simple_paths(const GraphWindow& w, VertexId x,
                               std::uint32_t n,
                               const EnumerationOptions& opts = {},
                               const PathSink& sink = nullptr);

/// |Theta_N(x)|: walks of length N from x that leave each vertex toward
/// each neighbor at most once.  Fills bound12 when compute_bound is
/// set.
CountResult count_theta_paths(const GraphWindow& w, VertexId x,
                              std::uint32_t n,
                              const EnumerationOptions& opts = {});

/// |A_N(x)|: connected vertex sets of order N containing x (site
/// animals), enumerated duplicate-free by rooted lexicographic
/// extension.  Requires B_{N-1}(x) to fit in the window.
CountResult count_animals(const GraphWindow& w, VertexId x, std::uint32_t n,
                          const EnumerationOptions& opts = {},
                          const AnimalSink& sink = nullptr);

/// max over simple paths of length N from x of sum_{y in V_theta} log n(y).
/// Unset when Sigma_N(x) is empty.
std::optional<double> bound_13(const GraphWindow& w, VertexId x,
                               std::uint32_t n,
                               const EnumerationOptions& opts = {});

/// max over departure-constrained walks of length N from x of
/// sum_{y in V_theta} n(y) log n(y).  Unset when Theta_N(x) is empty.
std::optional<double> bound_12(const GraphWindow& w, VertexId x,
                               std::uint32_t n,
                               const EnumerationOptions& opts = {});

struct ExponentialVerdict {
  std::uint32_t n;
  BigInt count;
  bool pass;  // count <= q^n
};

/// Per entry: count <= q^N, compared in 100-digit floating point.
std::vector<ExponentialVerdict> verify_exponential_bound(
    const std::vector<CountResult>& counts, double q);

// Incremental hooks into the animal enumerator, for callers that keep
// running aggregates (degree sums, weight totals) instead of touching
// every vertex of every emitted animal.
class AnimalVisitor {
 public:
  virtual ~AnimalVisitor() = default;
  virtual void on_add(VertexId) {}
  virtual void on_remove(VertexId) {}
  /// Called once per animal of the requested order; vertices are in
  /// discovery order, not sorted.
  virtual void on_animal(std::span<const VertexId> vertices) = 0;
};

/// Duplicate-free enumeration of all order-n connected sets containing
/// x, with visitor hooks.
void enumerate_animals_containing(const GraphWindow& w, VertexId x,
                                  std::uint32_t n,
                                  const EnumerationOptions& opts,
                                  AnimalVisitor& visitor);

/// Every connected vertex set of order in [min_order, max_order] in the
/// whole window, each exactly once (per-root enumeration restricted to
/// ids >= root).  Window degrees are taken as-is; no truncation check,
/// since membership of a set does not depend on unseen vertices.
void for_each_animal(const GraphWindow& w, std::uint32_t min_order,
                     std::uint32_t max_order, const EnumerationOptions& opts,
                     const AnimalSink& sink);

}  // namespace repanim

#endif  // REPANIM_ENUMERATION_HPP
