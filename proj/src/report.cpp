#include "slopes/report.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace slopes {

namespace {

DiagramVertex T(long p, long q) { return DiagramVertex::tangle(Rational(p, q)); }

void line(Section2Report& rep, std::string name, bool ok,
          std::string detail = "") {
  rep.checks.push_back({std::move(name), ok, std::move(detail)});
}

// The unique system of the given type with twist 2, if there is exactly one.
std::optional<EdgepathSystem> unique_t2(
    const std::vector<EdgepathSystem>& systems) {
  std::optional<EdgepathSystem> found;
  int count = 0;
  for (const auto& s : systems)
    if (s.twist == Rational(2)) {
      found = s;
      ++count;
    }
  if (count != 1) found.reset();
  return found;
}

}  // namespace

Integer default_triangle_bound(const MontesinosKnot& knot) {
  Integer b = 0;
  for (const auto& t : knot.tangles) b = std::max(b, den(t));
  return b + 2;
}

MontesinosKnot kn_knot(int n) {
  auto k = MontesinosKnot::parse("1/3,1/5,1/" + std::to_string(2 * n + 1) +
                                 ",1/2");
  if (!k) throw std::invalid_argument("invalid n");
  return *k;
}

MontesinosKnot kn_mutant(int n) {
  auto k = MontesinosKnot::parse("1/5,1/3,1/" + std::to_string(2 * n + 1) +
                                 ",1/2");
  if (!k) throw std::invalid_argument("invalid n");
  return *k;
}

bool Section2Report::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

Section2Report verify_section2_claims(int n, const Integer& triangle_bound) {
  if (n < 2) throw std::invalid_argument("verify_section2_claims requires n >= 2");
  Section2Report rep;
  rep.n = n;
  MontesinosKnot knot = kn_knot(n), mutant = kn_mutant(n);
  Rational slope_target(4 * (n + 4));
  Rational seifert(-(14 + 4 * n));

  Rational ts = seifert_system(knot).twist;
  Rational ts_tau = seifert_system(mutant).twist;
  line(rep, "Seifert twists t(s) and t(s_tau) are both -(14+4n)",
       ts == seifert && ts_tau == seifert,
       "t(s) = " + rat_to_string(ts));

  // Slope table of K_n: 4(n+4) carried by one incompressible-extendable
  // type II class and one compressible type III system.
  auto table = slope_table(knot, ts, triangle_bound);
  const SlopeRecord* rec = nullptr;
  for (const auto& r : table)
    if (r.slope == slope_target) rec = &r;
  bool dichotomy = rec != nullptr && rec->systems.size() == 2;
  int incompressible_ii = 0, compressible_iii = 0;
  if (rec != nullptr)
    for (const auto& s : rec->systems) {
      if (s.system.type == SystemType::II &&
          s.verdict.status == Status::IncompressibleExtendable &&
          s.verdict.rule == RuleId::RC)
        ++incompressible_ii;
      if (s.system.type == SystemType::III &&
          s.verdict.status == Status::Compressible)
        ++compressible_iii;
    }
  line(rep, "slope 4(n+4) of K_n is carried by one incompressible-extendable type II class and one compressible type III system",
       dichotomy && incompressible_ii == 1 && compressible_iii == 1,
       "slope " + rat_to_string(slope_target));

  // The printed gamma: unique t = 2 type II class of K_n.
  std::optional<EdgepathSystem> gamma =
      unique_t2(enumerate_systems(knot, SystemType::II));
  bool gamma_ok = gamma.has_value() &&
                  boundary_slope(*gamma, ts) == slope_target &&
                  gamma->basic.size() == 4 &&
                  gamma->basic[0].vertices ==
                      std::vector<DiagramVertex>{T(1, 1), T(1, 2), T(1, 3)} &&
                  gamma->basic[1].vertices ==
                      std::vector<DiagramVertex>{T(0, 1), T(1, 5)} &&
                  gamma->basic[2].vertices ==
                      std::vector<DiagramVertex>{T(0, 1), T(1, 2 * n + 1)} &&
                  gamma->basic[3].vertices ==
                      std::vector<DiagramVertex>{T(1, 1), T(1, 2)};
  line(rep, "unique t=2 type II class of K_n is the printed gamma with slope 4(n+4)",
       gamma_ok, "");
  line(rep, "gamma has final r-cycle (1, -4, -2n, 1)",
       gamma.has_value() &&
           final_r_cycle(*gamma).cyclic_equal(RCycle{{1, -4, -2 * n, 1}}),
       "");

  // Claim 1: the unique t = 2 type III system of the mutant is delta and is
  // compressible by rule R-A.
  std::optional<EdgepathSystem> delta =
      unique_t2(enumerate_systems(mutant, SystemType::III));
  bool delta_shape =
      delta.has_value() && delta->paths.size() == 4 &&
      delta->paths[0].vertices == std::vector<DiagramVertex>{
                                      DiagramVertex::infinity(), T(0, 1),
                                      T(1, 5)} &&
      delta->paths[1].vertices ==
          std::vector<DiagramVertex>{DiagramVertex::infinity(), T(1, 1),
                                     T(1, 2), T(1, 3)} &&
      delta->paths[2].vertices ==
          std::vector<DiagramVertex>{DiagramVertex::infinity(), T(0, 1),
                                     T(1, 2 * n + 1)} &&
      delta->paths[3].vertices == std::vector<DiagramVertex>{
                                      DiagramVertex::infinity(), T(0, 1),
                                      T(1, 2)};
  Verdict vd;
  if (delta.has_value()) vd = classify_system(*delta, mutant, triangle_bound);
  line(rep, "Claim 1: unique t=2 type III system of the mutant is delta, compressible (rule R-A)",
       delta_shape && vd.status == Status::Compressible && vd.rule == RuleId::RA,
       "");

  // Claim 2: the unique t = 2 type II class of the mutant has the dead
  // r-cycle and is compressible by rule R-B.
  std::optional<EdgepathSystem> dead =
      unique_t2(enumerate_systems(mutant, SystemType::II));
  Verdict vb;
  if (dead.has_value()) vb = classify_system(*dead, mutant, triangle_bound);
  line(rep, "Claim 2: unique t=2 type II class of the mutant has r-cycle (-4, 1, -2n, 1), compressible (rule R-B)",
       dead.has_value() &&
           final_r_cycle(*dead).cyclic_equal(RCycle{{-4, 1, -2 * n, 1}}) &&
           vb.status == Status::Compressible && vb.rule == RuleId::RB,
       "");

  // Type I systems never reach t = 2: the unique candidate has t = 8.
  bool type1_ok = true;
  for (const auto& k : {knot, mutant}) {
    auto systems = enumerate_systems(k, SystemType::I);
    type1_ok = type1_ok && systems.size() == 1 &&
               systems.front().twist == Rational(8);
  }
  line(rep, "type I enumeration: unique system with t = 8, none with t = 2",
       type1_ok, "");

  // The printed 14-entry type III twist list for the mutant.
  {
    auto systems = enumerate_systems(mutant, SystemType::III);
    std::set<Rational> got, want;
    for (const auto& s : systems) got.insert(s.twist);
    for (long v : {-12L, -8L, -6L, -2L, 2L, 4L, 8L, 6 - 4L * n, 2 - 4L * n,
                   -4L * n, -4 - 4L * n, -8 - 4L * n, -10 - 4L * n,
                   -14 - 4L * n})
      want.insert(Rational(v));
    line(rep, "type III twist values of the mutant equal the printed 14-entry list",
         systems.size() == 16 && got == want, "");
  }

  // The mutant has no non-compressible carrier of 4(n+4).
  {
    auto mtable = slope_table(mutant, ts_tau, triangle_bound);
    bool all_compressible = true;
    for (const auto& r : mtable)
      if (r.slope == slope_target)
        for (const auto& s : r.systems)
          all_compressible =
              all_compressible && s.verdict.status == Status::Compressible;
    line(rep, "every carrier of 4(n+4) for the mutant is compressible",
         all_compressible, "");
  }
  return rep;
}

bool Section3Report::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

Section3Report verify_section3_claims(int n) {
  if (n < 2) throw std::invalid_argument("verify_section3_claims requires n >= 2");
  Section3Report rep;
  rep.n = n;
  rep.certificate = not_strongly_detected_report(n);
  for (const auto& c : rep.certificate.cases)
    for (const auto& id : c.identities)
      rep.checks.push_back({c.case_id + ": " + id.name, id.ok, id.detail});
  // Headline degree line for the elimination.
  bool deg_found = false;
  for (const auto& c : rep.certificate.cases)
    for (const auto& w : c.finiteness)
      if (w.source.find("Q(E, P_n(E))") != std::string::npos)
        deg_found = w.degree == 4 + 10 * n;
  rep.checks.push_back({"degree theorem for Q(E, P_n(E))", deg_found,
                        "deg = " + std::to_string(4 + 10 * n)});
  rep.checks.push_back({"certificate aggregate", rep.certificate.ok, ""});
  return rep;
}

}  // namespace slopes
