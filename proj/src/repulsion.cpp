#include "repanim/repulsion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace repanim {

namespace {
// Ramp used to keep closed forms positive and strictly increasing where
// the raw formula is not: small enough to be below any distance of
// interest.
constexpr double kRampSlope = 0x1.0p-40;
}  // namespace

PhiFunction::PhiFunction(Family f, std::vector<double> params)
    : family_(f), params_(std::move(params)) {}

PhiFunction PhiFunction::power(double scale, double exponent, double offset) {
  if (scale <= 0 || exponent <= 0)
    throw ArgumentError("phi power: scale and exponent must be positive");
  return PhiFunction(Family::kPower, {scale, exponent, offset});
}

PhiFunction PhiFunction::affine(double slope, double intercept) {
  if (slope <= 0) throw ArgumentError("phi affine: slope must be positive");
  return PhiFunction(Family::kAffine, {slope, intercept});
}

PhiFunction PhiFunction::loglog(double upsilon, double epsilon) {
  if (upsilon <= 0) throw ArgumentError("phi loglog: upsilon must be positive");
  if (epsilon <= -1)
    throw ArgumentError("phi loglog: epsilon must exceed -1");
  return PhiFunction(Family::kLogLog, {upsilon, epsilon});
}

PhiFunction PhiFunction::table(std::vector<double> values) {
  if (values.empty()) throw ArgumentError("phi table: empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0)
      throw ArgumentError("phi table: values must be positive");
    if (i > 0 && values[i] <= values[i - 1])
      throw ArgumentError("phi table: not strictly increasing at index " +
                          std::to_string(i + 1));
  }
  PhiFunction phi(Family::kTable, {});
  phi.table_ = std::move(values);
  return phi;
}

double PhiFunction::raw(double t) const {
  switch (family_) {
    case Family::kPower:
      return params_[0] * std::pow(t, params_[1]) + params_[2];
    case Family::kAffine:
      return params_[0] * t + params_[1];
    case Family::kLogLog: {
      if (t <= 1.0) return 0.0;
      double lt = std::log(t);
      if (lt <= 1.0) return 0.0;  // log log t <= 0, ramp takes over
      return params_[0] * lt * std::pow(std::log(lt), 1.0 + params_[1]);
    }
    case Family::kTable:
      break;
  }
  throw ArgumentError("phi: raw() not defined for table profiles");
}

double PhiFunction::operator()(std::uint64_t t) const {
  if (t == 0) throw ArgumentError("phi: argument must be >= 1");
  if (family_ == Family::kTable) {
    if (t > table_.size())
      throw CoverageError("phi table: argument " + std::to_string(t) +
                          " beyond table of size " +
                          std::to_string(table_.size()));
    return table_[t - 1];
  }
  double td = static_cast<double>(t);
  return std::max(raw(td), kRampSlope * td);
}

double PhiFunction::log_value(double log_t) const {
  switch (family_) {
    case Family::kPower: {
      double scale = params_[0], exponent = params_[1], offset = params_[2];
      double main = std::log(scale) + exponent * log_t;
      if (offset == 0.0) return main;
      // log(scale*t^e + offset) = main + log1p(offset / scale*t^e)
      double rel = offset * std::exp(-main);
      if (rel <= -1.0) {
        // Raw form nonpositive: the ramp dominates.
        return std::log(kRampSlope) + log_t;
      }
      return main + std::log1p(rel);
    }
    case Family::kAffine: {
      double main = std::log(params_[0]) + log_t;
      double rel = params_[1] * std::exp(-main);
      if (rel <= -1.0) return std::log(kRampSlope) + log_t;
      return main + std::log1p(rel);
    }
    case Family::kLogLog: {
      if (log_t <= 1.0)
        return std::log(kRampSlope) + log_t;  // ramp region
      return std::log(params_[0]) + std::log(log_t) +
             (1.0 + params_[1]) * std::log(std::log(log_t));
    }
    case Family::kTable:
      break;
  }
  throw ArgumentError("phi: log_value not defined for table profiles");
}

std::uint64_t PhiFunction::inverse(double y) const {
  if (y <= 0) throw ArgumentError("phi inverse: argument must be positive");
  auto leq = [&](std::uint64_t n) { return approx_leq((*this)(n), y); };
  if (family_ == Family::kTable) {
    std::uint64_t best = 0;
    for (std::uint64_t n = 1; n <= table_.size(); ++n)
      if (leq(n)) best = n;
    return best;
  }
  if (!leq(1)) return 0;
  // Exponential bracket then binary search on the strictly increasing
  // profile.
  std::uint64_t lo = 1, hi = 2;
  const std::uint64_t cap = std::uint64_t(1) << 62;
  while (leq(hi)) {
    lo = hi;
    if (hi >= cap)
      throw ArgumentError("phi inverse: result exceeds 2^62");
    hi *= 2;
  }
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (leq(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::string PhiFunction::describe() const {
  std::ostringstream out;
  switch (family_) {
    case Family::kPower:
      out << "power(scale=" << params_[0] << ", exponent=" << params_[1]
          << ", offset=" << params_[2] << ")";
      break;
    case Family::kAffine:
      out << "affine(slope=" << params_[0] << ", intercept=" << params_[1]
          << ")";
      break;
    case Family::kLogLog:
      out << "loglog(upsilon=" << params_[0] << ", epsilon=" << params_[1]
          << ")";
      break;
    case Family::kTable:
      out << "table(" << table_.size() << " values)";
      break;
  }
  return out.str();
}

// ------------------------------------------------------------- checking

RepulsionReport check_repulsion(const GraphWindow& w, const PhiFunction& phi,
                                std::uint32_t n_star,
                                RepulsionFamily family) {
  RepulsionReport report{family, n_star, true, {}};
  std::vector<VertexId> high;
  for (VertexId v = 0; v < w.vertex_count(); ++v)
    if (w.ambient_degree(v) > n_star) high.push_back(v);

  // Only pairs with both degrees above n_star are constrained, so BFS
  // from each high-degree vertex suffices.
  for (std::size_t i = 0; i < high.size(); ++i) {
    auto dist = w.distances_from(high[i]);
    for (std::size_t j = i + 1; j < high.size(); ++j) {
      std::uint32_t d = dist[high[j]];
      if (d == kUnreachable) continue;  // unreachable pairs are unconstrained
      std::uint32_t nx = w.ambient_degree(high[i]);
      std::uint32_t ny = w.ambient_degree(high[j]);
      std::uint32_t m = family == RepulsionFamily::kMinus ? std::min(nx, ny)
                                                          : std::max(nx, ny);
      double required = phi(m);
      if (!approx_geq(static_cast<double>(d), required)) {
        report.pass = false;
        report.witnesses.push_back({high[i], high[j], d, m, required});
      }
    }
  }
  return report;
}

VertexClassification classify_vertices(const GraphWindow& w,
                                       const PhiFunction& phi,
                                       std::uint32_t n_star) {
  VertexClassification out;
  for (VertexId v = 0; v < w.vertex_count(); ++v) {
    if (w.ambient_degree(v) <= n_star)
      out.v_star.push_back(v);
    else
      out.v_star_c.push_back(v);
  }
  for (VertexId x : out.v_star_c) {
    double radius = phi(w.ambient_degree(x));
    auto dist = w.distances_from(x);
    std::vector<VertexId> kernel;
    for (VertexId y = 0; y < w.vertex_count(); ++y)
      if (dist[y] != kUnreachable &&
          strictly_less(static_cast<double>(dist[y]), radius))
        kernel.push_back(y);
    out.kernels.emplace(x, std::move(kernel));
  }
  return out;
}

// ------------------------------------------------------------ generator

HubWindow generate_hub_graph(const HubFamilySpec& spec,
                             const PhiFunction& phi) {
  for (std::size_t k = 0; k < spec.hubs.size(); ++k) {
    if (spec.hubs[k].degree < 3)
      throw GenerationError("hub degree must be >= 3");
    if (k > 0 && spec.hubs[k].position <= spec.hubs[k - 1].position)
      throw GenerationError("hub positions must be strictly increasing");
  }
  if (spec.family == RepulsionFamily::kPlus) {
    for (std::size_t k = 1; k < spec.hubs.size(); ++k)
      if (spec.hubs[k].degree <= spec.hubs[k - 1].degree)
        throw GenerationError(
            "plus-family hub degrees must be strictly increasing");
  }

  // Spacing guard on consecutive hubs; the full pairwise condition is
  // re-checked below by check_repulsion.
  for (std::size_t k = 1; k < spec.hubs.size(); ++k) {
    const auto& a = spec.hubs[k - 1];
    const auto& b = spec.hubs[k];
    std::uint32_t gap = b.position - a.position;
    std::uint32_t m = spec.family == RepulsionFamily::kMinus
                          ? std::min(a.degree, b.degree)
                          : std::max(a.degree, b.degree);
    double required = phi(m);
    if (!approx_geq(static_cast<double>(gap), required)) {
      std::ostringstream msg;
      msg << "hubs at positions " << a.position << " and " << b.position
          << " are " << gap << " apart but phi(" << m << ") = " << required
          << " is required";
      throw GenerationError(msg.str());
    }
  }

  std::uint32_t last_pos = spec.hubs.empty() ? 0 : spec.hubs.back().position;
  std::uint64_t spine_len =
      static_cast<std::uint64_t>(spec.margin) + last_pos + spec.extent + 1;
  std::uint64_t total = spine_len;
  for (const auto& h : spec.hubs) total += h.degree - 2;
  if (total > (std::uint64_t(1) << 31))
    throw GenerationError("hub window too large");

  GraphWindow::Builder b(total);
  for (std::uint64_t i = 0; i + 1 < spine_len; ++i)
    b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  VertexId next_leaf = static_cast<VertexId>(spine_len);
  std::vector<VertexId> hub_vertices;
  for (const auto& h : spec.hubs) {
    VertexId hub = static_cast<VertexId>(spec.margin + h.position);
    if (hub == 0 || hub + 1 == spine_len)
      throw GenerationError(
          "hub at spine position " + std::to_string(h.position) +
          " would sit on the window boundary; widen margin or extent");
    hub_vertices.push_back(hub);
    for (std::uint32_t l = 0; l < h.degree - 2; ++l)
      b.add_edge(hub, next_leaf++);
  }
  // The window models a two-sided infinite spine.
  b.set_ambient_degree(0, 2);
  b.set_ambient_degree(static_cast<VertexId>(spine_len - 1), 2);
  VertexId origin = static_cast<VertexId>(spec.margin);
  b.set_origin(origin);
  GraphWindow w = b.build();

  auto report = check_repulsion(w, phi, spec.n_star, spec.family);
  if (!report.pass) {
    const auto& viol = report.witnesses.front();
    std::ostringstream msg;
    msg << "generated window violates the declared family: vertices "
        << viol.x << " and " << viol.y << " at distance " << viol.distance
        << " < phi(" << viol.m_value << ") = " << viol.required;
    throw GenerationError(msg.str());
  }
  return HubWindow{std::move(w), origin, std::move(hub_vertices)};
}

}  // namespace repanim
