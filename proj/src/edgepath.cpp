#include "slopes/edgepath.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace slopes {

std::optional<MontesinosKnot> MontesinosKnot::parse(const std::string& text) {
  MontesinosKnot knot;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto f = parse_reduced_fraction(item);
    if (!f) return std::nullopt;
    if (!(*f > 0 && *f < 1)) return std::nullopt;
    knot.tangles.push_back(*f);
  }
  if (knot.tangles.size() < 3) return std::nullopt;
  return knot;
}

std::string MontesinosKnot::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < tangles.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(tangles[i]);
  }
  return out;
}

Edgepath Edgepath::constant_at(const Rational& tangle, const Rational& u) {
  Edgepath p;
  p.vertices = {DiagramVertex::tangle(tangle)};
  p.constant = true;
  p.constant_u = u;
  return p;
}

bool Edgepath::operator==(const Edgepath& o) const {
  return vertices == o.vertices && final_fraction == o.final_fraction &&
         constant == o.constant && (!constant || constant_u == o.constant_u);
}

UV Edgepath::final_point() const {
  if (constant) return {constant_u, vertices.front().pq};
  if (final_fraction == 1) return vertices.front().uv();
  auto [lu, lv] = vertices[0].uv();
  auto [ru, rv] = vertices[1].uv();
  Rational f = final_fraction;
  return {ru + f * (lu - ru), rv + f * (lv - rv)};
}

std::string Edgepath::to_string() const {
  if (constant)
    return "const(" + vertices.front().to_string() + " at u=" +
           rat_to_string(constant_u) + ")";
  std::string out = "[";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ",";
    out += vertices[i].to_string();
  }
  out += "]";
  if (final_fraction != 1) out += "@" + rat_to_string(final_fraction);
  return out;
}

namespace {

// +1 for a slope-decreasing edge (e_-), -1 for slope-increasing (e_+),
// 0 for edges that carry no twist.  The edge runs right-to-left from
// `right` to `left`.
int edge_twist_sign(const DiagramVertex& left, const DiagramVertex& right) {
  EdgeKind k = edge_kind(left, right);
  if (k != EdgeKind::NonHorizontal && k != EdgeKind::Vertical) return 0;
  Rational dv = left.uv().second - right.uv().second;
  if (dv == 0) throw std::logic_error("level non-horizontal edge");
  return dv > 0 ? -1 : 1;
}

}  // namespace

long twist_number(const Edgepath& path) {
  if (path.constant) return 0;
  if (path.final_fraction != 1)
    throw std::domain_error("twist_number needs vertex endpoints");
  long t = 0;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
    t += 2 * edge_twist_sign(path.vertices[i], path.vertices[i + 1]);
  return t;
}

Rational twist_fractional(const Edgepath& path) {
  if (path.constant) return Rational(0);
  Rational t(0);
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    Rational w = i == 0 ? path.final_fraction : Rational(1);
    t += 2 * w * edge_twist_sign(path.vertices[i], path.vertices[i + 1]);
  }
  return t;
}

const char* system_type_name(SystemType t) {
  switch (t) {
    case SystemType::I: return "I";
    case SystemType::II: return "II";
    case SystemType::III: return "III";
  }
  return "?";
}

Rational system_twist(const EdgepathSystem& sys) {
  Rational t(0);
  for (const auto& p : sys.paths) t += twist_fractional(p);
  return t;
}

namespace {

// The Farey parents of p/q (q >= 2): its two neighbors with smaller
// denominator.
std::vector<DiagramVertex> farey_parents(const Rational& pq) {
  Integer p = num(pq), q = den(pq);
  std::vector<DiagramVertex> out;
  for (Integer s = 1; s < q; ++s) {
    for (int sign : {-1, 1}) {
      Integer ps = p * s + sign;
      if (ps % q != 0) continue;
      DiagramVertex v = DiagramVertex::tangle(Rational(ps / q, s));
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  return out;
}

bool clique_edge(const DiagramVertex& x, const DiagramVertex& y) {
  EdgeKind k = edge_kind(x, y);
  return k == EdgeKind::NonHorizontal || k == EdgeKind::Vertical ||
         k == EdgeKind::Infinity;
}

void basic_path_dfs(std::vector<DiagramVertex>& stack,
                    std::vector<Edgepath>& out) {
  const DiagramVertex& cur = stack.back();
  if (den(cur.pq) == 1) {
    // Reached u = 0: store leftmost-first.
    std::vector<DiagramVertex> vs(stack.rbegin(), stack.rend());
    out.push_back(Edgepath::through(std::move(vs)));
    return;
  }
  for (const auto& next : farey_parents(cur.pq)) {
    // (E2): never traverse two sides of one triangle in succession.
    if (stack.size() >= 2 && clique_edge(stack[stack.size() - 2], next))
      continue;
    stack.push_back(next);
    basic_path_dfs(stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Edgepath> basic_paths(const Rational& tangle) {
  if (den(tangle) < 2)
    throw std::invalid_argument("basic_paths: integer tangle");
  std::vector<DiagramVertex> stack{DiagramVertex::tangle(tangle)};
  std::vector<Edgepath> out;
  basic_path_dfs(stack, out);
  std::sort(out.begin(), out.end(), [](const Edgepath& a, const Edgepath& b) {
    return a.vertices < b.vertices;
  });
  return out;
}

namespace {

// All combinations of one basic path per tangle.
std::vector<std::vector<Edgepath>> basic_combos(const MontesinosKnot& knot) {
  std::vector<std::vector<Edgepath>> per_tangle;
  for (const auto& t : knot.tangles) per_tangle.push_back(basic_paths(t));
  std::vector<std::vector<Edgepath>> combos{{}};
  for (const auto& options : per_tangle) {
    std::vector<std::vector<Edgepath>> next;
    for (const auto& partial : combos)
      for (const auto& opt : options) {
        auto c = partial;
        c.push_back(opt);
        next.push_back(std::move(c));
      }
    combos = std::move(next);
  }
  return combos;
}

EdgepathSystem make_type3(const std::vector<Edgepath>& basic) {
  EdgepathSystem sys;
  sys.type = SystemType::III;
  sys.basic = basic;
  for (const auto& b : basic) {
    Edgepath p = b;
    p.vertices.insert(p.vertices.begin(), DiagramVertex::infinity());
    sys.paths.push_back(std::move(p));
  }
  sys.twist = system_twist(sys);
  return sys;
}

EdgepathSystem make_type2(const std::vector<Edgepath>& basic) {
  EdgepathSystem sys;
  sys.type = SystemType::II;
  sys.basic = basic;
  for (const auto& b : basic) {
    Edgepath p = b;
    // Canonical representative: extend the endpoint to <0> by vertical
    // edges.
    Integer m = num(p.vertices.front().pq);
    std::vector<DiagramVertex> prefix;
    Integer step = m > 0 ? 1 : -1;
    for (Integer k = 0; k != m; k += step)
      prefix.push_back(DiagramVertex::tangle(Rational(k)));
    p.vertices.insert(p.vertices.begin(), prefix.begin(), prefix.end());
    sys.paths.push_back(std::move(p));
  }
  sys.twist = system_twist(sys);
  return sys;
}

// v-coordinate of a basic path at horizontal position u (0 <= u <= start).
Rational path_v_at(const Edgepath& b, const Rational& u) {
  for (std::size_t i = 0; i + 1 < b.vertices.size(); ++i) {
    auto [lu, lv] = b.vertices[i].uv();
    auto [ru, rv] = b.vertices[i + 1].uv();
    if (u >= lu && u <= ru) {
      if (lu == ru) return lv;
      return lv + (u - lu) / (ru - lu) * (rv - lv);
    }
  }
  throw std::domain_error("u outside path range");
}

// Truncate a basic path at horizontal position u.
Edgepath truncate_at(const Edgepath& b, const Rational& u) {
  for (std::size_t i = 0; i + 1 < b.vertices.size(); ++i) {
    auto [lu, lv] = b.vertices[i].uv();
    auto [ru, rv] = b.vertices[i + 1].uv();
    if (!(u >= lu && u <= ru)) continue;
    if (u == ru)
      return Edgepath::through({b.vertices.begin() + i + 1, b.vertices.end()});
    Edgepath out =
        Edgepath::through({b.vertices.begin() + i, b.vertices.end()});
    if (u > lu) out.final_fraction = (ru - u) / (ru - lu);
    return out;
  }
  throw std::domain_error("u outside path range");
}

// Type I: choose per tangle a basic path (truncatable) or a constant path;
// solve for a common u with v-sum 0 piecewise-linearly, exactly.
std::vector<EdgepathSystem> enumerate_type1(const MontesinosKnot& knot) {
  std::size_t k = knot.tangles.size();
  std::vector<std::vector<std::optional<Edgepath>>> options;  // nullopt = constant
  for (const auto& t : knot.tangles) {
    std::vector<std::optional<Edgepath>> opts;
    for (const auto& b : basic_paths(t)) opts.push_back(b);
    opts.push_back(std::nullopt);
    options.push_back(std::move(opts));
  }
  std::vector<std::vector<std::optional<Edgepath>>> combos{{}};
  for (const auto& opts : options) {
    std::vector<std::vector<std::optional<Edgepath>>> next;
    for (const auto& partial : combos)
      for (const auto& o : opts) {
        auto c = partial;
        c.push_back(o);
        next.push_back(std::move(c));
      }
    combos = std::move(next);
  }

  std::vector<EdgepathSystem> out;
  for (const auto& combo : combos) {
    Rational lo(0), hi(1);
    std::set<Rational> breaks;
    for (std::size_t i = 0; i < k; ++i) {
      Rational start(den(knot.tangles[i]) - 1, den(knot.tangles[i]));
      if (combo[i]) {
        hi = std::min(hi, start);
        for (const auto& v : combo[i]->vertices) breaks.insert(v.uv().first);
      } else {
        lo = std::max(lo, start);
      }
    }
    if (lo > hi) continue;
    auto vsum = [&](const Rational& u) {
      Rational s(0);
      for (std::size_t i = 0; i < k; ++i)
        s += combo[i] ? path_v_at(*combo[i], u) : knot.tangles[i];
      return s;
    };
    std::vector<Rational> grid{lo};
    for (const auto& b : breaks)
      if (b > lo && b < hi) grid.push_back(b);
    if (hi > lo) grid.push_back(hi);
    std::set<Rational> solutions;
    for (std::size_t j = 0; j + 1 < grid.size() || j == 0; ++j) {
      Rational a = grid[j];
      Rational b = j + 1 < grid.size() ? grid[j + 1] : grid[j];
      Rational sa = vsum(a), sb = vsum(b);
      if (sa == 0) solutions.insert(a);
      if (sb == 0) solutions.insert(b);
      if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0))
        solutions.insert(a + (b - a) * sa / (sa - sb));
      if (j + 1 >= grid.size()) break;
    }
    for (const auto& u : solutions) {
      EdgepathSystem sys;
      sys.type = SystemType::I;
      for (std::size_t i = 0; i < k; ++i)
        sys.paths.push_back(combo[i]
                                ? truncate_at(*combo[i], u)
                                : Edgepath::constant_at(knot.tangles[i], u));
      sys.basic = sys.paths;
      sys.twist = system_twist(sys);
      bool dup = false;
      for (const auto& prev : out)
        if (prev.paths == sys.paths) dup = true;
      if (!dup) out.push_back(std::move(sys));
    }
  }
  return out;
}

}  // namespace

std::vector<EdgepathSystem> enumerate_systems(const MontesinosKnot& knot,
                                              SystemType type) {
  std::vector<EdgepathSystem> out;
  if (type == SystemType::I) return enumerate_type1(knot);
  for (const auto& combo : basic_combos(knot))
    out.push_back(type == SystemType::III ? make_type3(combo)
                                          : make_type2(combo));
  return out;
}

std::vector<EdgepathSystem> enumerate_all_systems(const MontesinosKnot& knot) {
  std::vector<EdgepathSystem> out = enumerate_systems(knot, SystemType::I);
  for (SystemType t : {SystemType::II, SystemType::III})
    for (auto& s : enumerate_systems(knot, t)) out.push_back(std::move(s));
  return out;
}

EdgepathSystem seifert_system(const MontesinosKnot& knot) {
  std::vector<Edgepath> basic;
  for (const auto& t : knot.tangles) {
    if (num(t) != 1)
      throw std::domain_error("reference twist must be supplied");
    std::vector<DiagramVertex> vs;
    for (Integer q = 1; q <= den(t); ++q)
      vs.push_back(DiagramVertex::tangle(Rational(1, q)));
    basic.push_back(Edgepath::through(std::move(vs)));
  }
  return make_type3(basic);
}

std::optional<Rational> reference_twist(const MontesinosKnot& knot) {
  for (const auto& t : knot.tangles)
    if (num(t) != 1) return std::nullopt;
  return seifert_system(knot).twist;
}

}  // namespace slopes
