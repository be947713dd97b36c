#include "stolarsky/families.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "stolarsky/errors.hpp"
#include "stolarsky/rng.hpp"

namespace stolarsky {

Theorem parse_theorem(std::string_view name) {
  if (name == "S") return Theorem::S;
  if (name == "G") return Theorem::G;
  if (name == "CorS") return Theorem::CorS;
  if (name == "CorG") return Theorem::CorG;
  throw unknown_case("theorem '" + std::string(name) + "'");
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::S: return "S";
    case Theorem::G: return "G";
    case Theorem::CorS: return "CorS";
    case Theorem::CorG: return "CorG";
  }
  return "?";
}

MeanFamily theorem_mean_family(Theorem t) {
  return (t == Theorem::S || t == Theorem::CorS) ? MeanFamily::stolarsky : MeanFamily::gini;
}

const std::vector<FamilyCase>& family_cases(Theorem t) {
  static const std::vector<FamilyCase> s = {
      {"i", 3, "a+b=c+d=p+q=0; params [a, c, p]"},
      {"ii", 4, "{a,b}={c,d}={p,q}; params [a, b, c, d]"},
      {"iii", 2, "{a,b}={-c,-d}, p+q=0; params [a, b]"},
  };
  static const std::vector<FamilyCase> g = {
      {"i", 3, "a+b=c+d=p+q=0; params [a, c, p]"},
      {"ii", 4, "{a,b}={c,d}={p,q}; params [a, b, c, d]"},
      {"iii", 2, "{a,b}={-c,-d}, p+q=0; params [a, b]"},
      {"iv", 2, "{a,b}={u+v,v}, {c,d}={u-v,-v}, {p,q}={u,0}; params [u, v]"},
      {"v", 1, "{a,b}={3w,w}, c+d=0, {p,q}={2w,0}; params [w]"},
      {"vi", 1, "a+b=0, {c,d}={3w,w}, {p,q}={2w,0}; params [w]"},
  };
  static const std::vector<FamilyCase> cor_s = {
      {"only", 0, "{a,b}={c,d}={2,1}"},
  };
  static const std::vector<FamilyCase> cor_g = {
      {"i", 0, "{a,b}={c,d}={1,0}"},
      {"ii", 1, "{a,b}={1+v,v}, {c,d}={1-v,-v}; params [v]"},
      {"iii", 0, "{a,b}={3/2,1/2}, c+d=0"},
      {"iv", 0, "a+b=0, {c,d}={3/2,1/2}"},
  };
  switch (t) {
    case Theorem::S: return s;
    case Theorem::G: return g;
    case Theorem::CorS: return cor_s;
    case Theorem::CorG: return cor_g;
  }
  return s;
}

namespace {

bool same_pair(double a, double b, double c, double d) {
  return (a == c && b == d) || (a == d && b == c);
}

const FamilyCase& find_case(Theorem t, std::string_view case_id) {
  for (const auto& fc : family_cases(t))
    if (fc.id == case_id) return fc;
  throw unknown_case(theorem_name(t) + " case '" + std::string(case_id) + "'");
}

}  // namespace

SixTuple family_tuple(Theorem t, std::string_view case_id, std::span<const double> params) {
  const FamilyCase& fc = find_case(t, case_id);
  if (static_cast<int>(params.size()) != fc.arity)
    throw bad_input("case " + theorem_name(t) + " " + fc.id + " expects " +
                    std::to_string(fc.arity) + " parameter(s), got " +
                    std::to_string(params.size()));

  const bool sto = t == Theorem::S;
  if (t == Theorem::S || t == Theorem::G) {
    if (case_id == "i") return {params[0], -params[0], params[1], -params[1], params[2], -params[2]};
    if (case_id == "ii") {
      if (!same_pair(params[0], params[1], params[2], params[3]))
        throw bad_input("case ii requires {a,b} = {c,d}");
      return {params[0], params[1], params[2], params[3], params[0], params[1]};
    }
    if (case_id == "iii") return {params[0], params[1], -params[0], -params[1], 1, -1};
    if (!sto) {
      if (case_id == "iv") {
        const double u = params[0], v = params[1];
        return {u + v, v, u - v, -v, u, 0};
      }
      if (case_id == "v") {
        const double w = params[0];
        return {3 * w, w, 1, -1, 2 * w, 0};
      }
      // vi
      const double w = params[0];
      return {1, -1, 3 * w, w, 2 * w, 0};
    }
  }
  if (t == Theorem::CorS) return {2, 1, 2, 1, 2, 1};
  // CorG
  if (case_id == "i") return {1, 0, 1, 0, 1, 0};
  if (case_id == "ii") {
    const double v = params[0];
    return {1 + v, v, 1 - v, -v, 1, 0};
  }
  if (case_id == "iii") return {1.5, 0.5, 1, -1, 1, 0};
  return {1, -1, 1.5, 0.5, 1, 0};  // iv
}

ResidualSweep sweep_invariance(MeanFamily family, const SixTuple& t, int samples,
                               std::uint64_t seed) {
  if (samples < 1) throw bad_input("samples must be >= 1");
  const MeanParams outer{family, t.p, t.q};
  const MeanParams in1{family, t.a, t.b};
  const MeanParams in2{family, t.c, t.d};
  ResidualSweep out;
  out.samples = samples;
  constexpr int kShard = 1024;
  const int shards = (samples + kShard - 1) / kShard;
  int remaining = samples;
  for (int sh = 0; sh < shards; ++sh) {
    auto rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(sh));
    const int n = std::min(kShard, remaining);
    remaining -= n;
    for (int i = 0; i < n; ++i) {
      const double x = rng.log_uniform(1e-2, 1e2);
      const double y = rng.log_uniform(1e-2, 1e2);
      const double k = mean_value(outer, x, y);
      const double rel = std::fabs(invariance_residual(outer, in1, in2, x, y)) / std::fabs(k);
      if (rel > out.max_rel_residual) {
        out.max_rel_residual = rel;
        out.worst_x = x;
        out.worst_y = y;
      }
    }
  }
  return out;
}

}  // namespace stolarsky
