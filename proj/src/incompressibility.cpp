#include "slopes/incompressibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace slopes {

bool RCycle::cyclic_equal(const RCycle& o) const {
  if (values.size() != o.values.size()) return false;
  std::size_t n = values.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (values[i] != o.values[(i + shift) % n]) ok = false;
    if (ok) return true;
  }
  return n == 0;
}

std::string RCycle::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

RCycle final_r_cycle(const EdgepathSystem& sys) {
  RCycle cycle;
  for (const auto& path : sys.paths) {
    if (path.constant) throw std::domain_error("no final r-value");
    bool found = false;
    for (std::size_t i = 0; i + 1 < path.vertices.size() && !found; ++i) {
      if (edge_kind(path.vertices[i], path.vertices[i + 1]) !=
          EdgeKind::NonHorizontal)
        continue;
      cycle.values.push_back(r_value(path.vertices[i + 1], path.vertices[i]));
      found = true;
    }
    if (!found) throw std::domain_error("no final r-value");
  }
  return cycle;
}

namespace {

// Fixture table of asserted reversibility verdicts: the paths
// [<inf>, <0>, <1/q>] are completely reversible.
std::optional<bool> reversibility_fixture(const Edgepath& path) {
  if (path.constant || path.vertices.size() != 3) return std::nullopt;
  if (path.vertices[0] != DiagramVertex::infinity()) return std::nullopt;
  if (path.vertices[1] != DiagramVertex::tangle(Rational(0)))
    return std::nullopt;
  const DiagramVertex& t = path.vertices[2];
  if (t.kind != DiagramVertex::Kind::Tangle || num(t.pq) != 1 ||
      den(t.pq) < 2)
    return std::nullopt;
  return true;
}

bool triangles_share_edge(const std::set<Triangle>& t1,
                          const std::set<Triangle>& t2) {
  for (const auto& a : t1)
    for (const auto& b : t2) {
      int common = 0;
      for (const auto& v : a)
        if (std::find(b.begin(), b.end(), v) != b.end()) ++common;
      if (common >= 2) return true;
    }
  return false;
}

}  // namespace

ReversibilityResult completely_reversible(const Edgepath& path,
                                          const Integer& triangle_bound) {
  ReversibilityResult res;
  res.formal = true;
  if (!path.constant) {
    for (std::size_t i = 0; i + 2 < path.vertices.size() && res.formal; ++i) {
      auto t1 = triangles_containing(path.vertices[i], path.vertices[i + 1],
                                     triangle_bound);
      auto t2 = triangles_containing(path.vertices[i + 1],
                                     path.vertices[i + 2], triangle_bound);
      if (!triangles_share_edge(t1, t2)) res.formal = false;
    }
  }
  if (auto fixture = reversibility_fixture(path)) {
    res.value = *fixture;
    res.from_fixture = true;
  } else {
    res.value = res.formal;
  }
  return res;
}

namespace {

// Dead r-cycle patterns (-4, 1, -2n, 1) for every n with 2n+1 among the
// knot's odd tangle denominators.
std::vector<RCycle> dead_patterns(const MontesinosKnot& knot) {
  std::vector<RCycle> out;
  for (const auto& t : knot.tangles) {
    Integer q = den(t);
    if (q % 2 == 1 && q >= 3) {
      int n = static_cast<int>((q - 1) / 2);
      out.push_back(RCycle{{-4, 1, -2 * n, 1}});
    }
  }
  return out;
}

bool matches_dead_pattern(const RCycle& cycle, const MontesinosKnot& knot) {
  for (const auto& pat : dead_patterns(knot))
    if (cycle.cyclic_equal(pat)) return true;
  return false;
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Compressible: return "compressible";
    case Status::IncompressibleExtendable: return "incompressible-extendable";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::RA: return "R-A";
    case RuleId::RB: return "R-B";
    case RuleId::RC: return "R-C";
    case RuleId::None: return "none";
  }
  return "?";
}

Verdict classify_system(const EdgepathSystem& sys, const MontesinosKnot& knot,
                        const Integer& triangle_bound) {
  if (sys.type == SystemType::III) {
    Rational vertex_sum(0);
    for (const auto& p : sys.paths) {
      if (p.vertices.size() < 2) return {Status::Unknown, RuleId::None, ""};
      vertex_sum += p.vertices[1].pq;  // integer crossing vertex next to <inf>
    }
    int reversible = 0;
    for (const auto& p : sys.paths)
      if (completely_reversible(p, triangle_bound).value) ++reversible;
    if (vertex_sum != 0 && reversible >= 2)
      return {Status::Compressible, RuleId::RA,
              "type III with nonzero vertex sum and " +
                  std::to_string(reversible) + " completely reversible paths"};
    return {Status::Unknown, RuleId::None, ""};
  }

  std::optional<RCycle> cycle;
  try {
    cycle = final_r_cycle(sys);
  } catch (const std::domain_error&) {
  }

  if (sys.type == SystemType::II && cycle &&
      matches_dead_pattern(*cycle, knot))
    return {Status::Compressible, RuleId::RB,
            "r-cycle " + cycle->to_string() + " matches the dead pattern"};

  bool left_edge = true;
  for (const auto& p : sys.paths)
    if (p.final_point().first != 0) left_edge = false;
  Rational final_v_sum(0);
  for (const auto& b : sys.basic) final_v_sum += b.final_point().second;
  if (left_edge && final_v_sum > 0 && cycle &&
      !matches_dead_pattern(*cycle, knot))
    return {Status::IncompressibleExtendable, RuleId::RC,
            "ends on the left edge with positive final v-sum " +
                rat_to_string(final_v_sum)};
  return {Status::Unknown, RuleId::None, ""};
}

std::vector<SlopeRecord> slope_table(const MontesinosKnot& knot,
                                     const Rational& ref_twist,
                                     const Integer& triangle_bound) {
  std::map<Rational, SlopeRecord> by_slope;
  for (const auto& sys : enumerate_all_systems(knot)) {
    SystemRecord rec;
    rec.system = sys;
    rec.slope = boundary_slope(sys, ref_twist);
    try {
      rec.r_cycle = final_r_cycle(sys);
    } catch (const std::domain_error&) {
    }
    rec.verdict = classify_system(sys, knot, triangle_bound);
    auto& slot = by_slope[rec.slope];
    slot.slope = rec.slope;
    slot.systems.push_back(std::move(rec));
  }
  std::vector<SlopeRecord> out;
  for (auto& [slope, rec] : by_slope) out.push_back(std::move(rec));
  return out;
}

}  // namespace slopes
