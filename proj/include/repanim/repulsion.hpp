#ifndef REPANIM_REPULSION_HPP
#define REPANIM_REPULSION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repanim/graph.hpp"

namespace repanim {

enum class RepulsionFamily { kMinus, kPlus };

inline const char* family_name(RepulsionFamily f) {
  return f == RepulsionFamily::kMinus ? "minus" : "plus";
}

// Strictly increasing profile phi: N -> (0, inf).  The closed forms may
// dip to or below zero for small arguments (e.g. t^2 - 16, or the
// loglog form below t = e); those arguments are clamped onto a tiny
// increasing ramp so that the function stays positive and strictly
// increasing everywhere.  The ramp sits far below 1, so it never
// affects a distance comparison.
class PhiFunction {
 public:
  enum class Family { kPower, kAffine, kLogLog, kTable };

  /// scale * t^exponent + offset
  static PhiFunction power(double scale, double exponent, double offset = 0.0);
  /// slope * t + intercept
  static PhiFunction affine(double slope, double intercept);
  /// upsilon * log t * (log log t)^(1+epsilon)
  static PhiFunction loglog(double upsilon, double epsilon);
  /// explicit values phi(1), phi(2), ... (strictly increasing)
  static PhiFunction table(std::vector<double> values);

  double operator()(std::uint64_t t) const;

  /// phi evaluated in log space: given L = log t returns log phi(t).
  /// Exact for the closed forms even when t itself would overflow.
  double log_value(double log_t) const;

  /// max{ n in N : phi(n) <= y }, or 0 when phi(1) > y.  Exact integer
  /// answer by monotone bracketing.  For table profiles the search is
  /// over the table's domain.
  std::uint64_t inverse(double y) const;

  Family family() const { return family_; }
  const std::vector<double>& params() const { return params_; }
  std::string describe() const;

 private:
  PhiFunction(Family f, std::vector<double> params);
  double raw(double t) const;

  Family family_;
  std::vector<double> params_;  // family-specific
  std::vector<double> table_;
};

struct RepulsionViolation {
  VertexId x;
  VertexId y;
  std::uint32_t distance;
  std::uint32_t m_value;  // the degree phi was applied to
  double required;        // phi(m_value)
};

struct RepulsionReport {
  RepulsionFamily family;
  std::uint32_t n_star;
  bool pass;
  std::vector<RepulsionViolation> witnesses;
};

/// Checks the pairwise distance condition: for every unordered pair with
/// min(n(x), n(y)) > n_star, rho(x,y) >= phi(m) where m is the min
/// (family minus) or max (family plus) of the two ambient degrees.
/// Pairs in different components satisfy the condition vacuously.
RepulsionReport check_repulsion(const GraphWindow& w, const PhiFunction& phi,
                                std::uint32_t n_star, RepulsionFamily family);

struct VertexClassification {
  std::vector<VertexId> v_star;    // n(x) <= n_star
  std::vector<VertexId> v_star_c;  // n(x) >  n_star
  // K(x) = { y : rho(y,x) < phi(n(x)) } for each high-degree x.
  std::map<VertexId, std::vector<VertexId>> kernels;
};

VertexClassification classify_vertices(const GraphWindow& w,
                                       const PhiFunction& phi,
                                       std::uint32_t n_star);

// Witness family for the repulsion classes: a long spine of degree-2
// vertices with pendant-leaf hubs at prescribed positions.  The window
// models a two-sided infinite spine, so both spine endpoints report
// ambient degree 2.  Spine positions are counted from the origin; the
// spine runs from -margin to the last hub position + extent.
struct HubFamilySpec {
  struct Hub {
    std::uint32_t position;  // distance from the origin along the spine
    std::uint32_t degree;    // target ambient degree, >= 3
  };
  std::vector<Hub> hubs;        // strictly increasing positions
  std::uint32_t margin = 0;     // spine extension before the origin
  std::uint32_t extent = 0;     // spine extension past the last hub
  std::uint32_t n_star = 2;
  RepulsionFamily family = RepulsionFamily::kMinus;
};

struct HubWindow {
  GraphWindow window;
  VertexId origin;                    // spine position 0
  std::vector<VertexId> hub_vertices;  // aligned with spec.hubs
};

/// Builds the window for a hub spec and cross-validates it against
/// check_repulsion for the declared family (n_star from the spec).
/// Throws GenerationError naming the offending hub pair when spacing is
/// too tight.
HubWindow generate_hub_graph(const HubFamilySpec& spec, const PhiFunction& phi);

}  // namespace repanim

#endif  // REPANIM_REPULSION_HPP
