#include <doctest.h>

#include "stolarsky/errors.hpp"
#include "stolarsky/families.hpp"

using namespace stolarsky;

namespace {

void check_tuple(const SixTuple& t, double a, double b, double c, double d, double p, double q) {
  CHECK(t.a == a);
  CHECK(t.b == b);
  CHECK(t.c == c);
  CHECK(t.d == d);
  CHECK(t.p == p);
  CHECK(t.q == q);
}

}  // namespace

TEST_CASE("generator produces tuples lying exactly in the stated family") {
  check_tuple(family_tuple(Theorem::S, "iii", std::vector<double>{2, 5}), 2, 5, -2, -5, 1, -1);
  check_tuple(family_tuple(Theorem::G, "iv", std::vector<double>{2, 1}), 3, 1, 1, -1, 2, 0);
  check_tuple(family_tuple(Theorem::CorS, "only", {}), 2, 1, 2, 1, 2, 1);
  check_tuple(family_tuple(Theorem::S, "i", std::vector<double>{1, 2, 3}), 1, -1, 2, -2, 3, -3);
  check_tuple(family_tuple(Theorem::S, "ii", std::vector<double>{3, 1, 1, 3}), 3, 1, 1, 3, 3, 1);
  check_tuple(family_tuple(Theorem::G, "v", std::vector<double>{1}), 3, 1, 1, -1, 2, 0);
  check_tuple(family_tuple(Theorem::G, "vi", std::vector<double>{1}), 1, -1, 3, 1, 2, 0);
  check_tuple(family_tuple(Theorem::CorG, "ii", std::vector<double>{2}), 3, 2, -1, -2, 1, 0);
  check_tuple(family_tuple(Theorem::CorG, "iii", {}), 1.5, 0.5, 1, -1, 1, 0);
}

TEST_CASE("unknown cases and theorems are rejected") {
  CHECK_THROWS_AS((void)family_tuple(Theorem::S, "iv", std::vector<double>{1, 2}), unknown_case);
  CHECK_THROWS_AS((void)parse_theorem("T"), unknown_case);
  CHECK(parse_theorem("CorG") == Theorem::CorG);
}

TEST_CASE("arity is validated") {
  CHECK_THROWS_AS((void)family_tuple(Theorem::S, "iii", std::vector<double>{2}), bad_input);
  CHECK_THROWS_AS((void)family_tuple(Theorem::CorS, "only", std::vector<double>{1}), bad_input);
}

TEST_CASE("case ii validates the multiset equality of its pairs") {
  CHECK_THROWS_AS((void)family_tuple(Theorem::S, "ii", std::vector<double>{2, 5, 2, 4}), bad_input);
  check_tuple(family_tuple(Theorem::S, "ii", std::vector<double>{2, 5, 5, 2}), 2, 5, 5, 2, 2, 5);
}

TEST_CASE("every catalogued family satisfies the invariance equation") {
  struct Case {
    Theorem t;
    const char* id;
    std::vector<double> params;
  };
  const std::vector<Case> cases = {
      {Theorem::S, "i", {1, 2, 1}},      {Theorem::S, "ii", {3, 1, 1, 3}},
      {Theorem::S, "iii", {2, 5}},       {Theorem::CorS, "only", {}},
      {Theorem::G, "i", {1, 2, 1}},      {Theorem::G, "ii", {3, 1, 1, 3}},
      {Theorem::G, "iii", {2, 5}},       {Theorem::G, "iv", {2, 1}},
      {Theorem::G, "v", {1}},            {Theorem::G, "vi", {0.5}},
      {Theorem::CorG, "i", {}},          {Theorem::CorG, "ii", {2}},
      {Theorem::CorG, "iii", {}},        {Theorem::CorG, "iv", {}},
  };
  for (const auto& c : cases) {
    auto tuple = family_tuple(c.t, c.id, c.params);
    auto sweep = sweep_invariance(theorem_mean_family(c.t), tuple, 1500, 12345);
    INFO(theorem_name(c.t), " case ", c.id);
    CHECK(sweep.max_rel_residual <= 1e-12);
  }
}

TEST_CASE("matkowski-suto specializations really sum to x + y") {
  // outer arithmetic mean: residual of (M + N)/2 against (x+y)/2
  auto t = family_tuple(Theorem::CorG, "ii", std::vector<double>{0.75});
  auto sweep = sweep_invariance(MeanFamily::gini, t, 1000, 5);
  CHECK(sweep.max_rel_residual <= 1e-12);
}

TEST_CASE("sweep is deterministic for a fixed seed") {
  auto t = family_tuple(Theorem::S, "iii", std::vector<double>{2, 5});
  auto s1 = sweep_invariance(MeanFamily::stolarsky, t, 2000, 9);
  auto s2 = sweep_invariance(MeanFamily::stolarsky, t, 2000, 9);
  CHECK(s1.max_rel_residual == s2.max_rel_residual);
  CHECK(s1.worst_x == s2.worst_x);
  CHECK(s1.worst_y == s2.worst_y);
}

TEST_CASE("non-family tuples show a visible residual") {
  SixTuple bad{2, 5, -2, -4, 1, -1};
  auto sweep = sweep_invariance(MeanFamily::stolarsky, bad, 300, 3);
  CHECK(sweep.max_rel_residual > 1e-6);
}
