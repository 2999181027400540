#include <doctest.h>

#include <algorithm>
#include <random>

#include "ehzkit/deephole.hpp"
#include "ehzkit/oracle.hpp"
#include "support.hpp"

using namespace ehzkit;
using namespace ehzkit::test;

namespace {

CodeDescriptor example4_code() {
  auto F = f11();
  return ehz(EvalConfig(F, pv(*F, "3,4,5,6,7"), FqVec(5, 1)), 3);
}

CodeDescriptor example3_code() {
  auto F = f13();
  return ehz(EvalConfig(F, pv(*F, "1,2,3,4,5,6,7,8,9,10,11,12"), FqVec(12, 1)), 5);
}

// g(x) = 4x^3 + 3x^2 + 10x + 7 seen as g_2 = 3 on top of f = 4x^3 + 10x + 7
DeepHoleQuery example4_class1_query(const FieldPtr& F, u64 uv) {
  return DeepHoleQuery{0, 3, Polynomial(F, {7, 10, 0, 4}), uv, 1};
}

// g(x) = 2x^4 + 3x^3 + g_2 x^2 + 5x + 2 on top of f = 3x^3 + 5x + 2
DeepHoleQuery example4_class2_query(const FieldPtr& F, u64 g2, u64 uv) {
  return DeepHoleQuery{2, g2, Polynomial(F, {2, 5, 0, 3}), uv, 1};
}

}  // namespace

TEST_CASE("covering radius, exhaustive and closed form") {
  // [6,3] code over F_11: rho = n-k+1 = 3 (= N-K, the redundancy bound)
  auto code = example4_code();
  auto rep = covering_radius(code, RadiusMethod::Exhaustive);
  CHECK(rep.rho == 3);
  REQUIRE(rep.worst_coset_witness.has_value());
  CHECK(error_distance(code, *rep.worst_coset_witness) == 3);

  auto thm = covering_radius(code, RadiusMethod::TheoremValue);
  CHECK(thm.rho == 3);
  CHECK(thm.rho == rep.rho);

  // a code equal to the whole space covers everything
  auto F5 = Field::make(5);
  auto full = generic_code(FqMatrix::identity(F5, 3));
  CHECK(covering_radius(full, RadiusMethod::Exhaustive).rho == 0);
  CHECK_THROWS_WITH_AS(covering_radius(full, RadiusMethod::TheoremValue),
                       doctest::Contains("WrongKind"), Error);

  // random [5,2]_5 generic code: syndrome-table value equals the direct
  // max-min over all q^5 vectors
  std::mt19937_64 rng(30);
  for (int t = 0; t < 5; ++t) {
    FqMatrix G(F5, 2, 5);
    do {
      for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 5; ++j) G.set(i, j, rnd_elem(rng, *F5));
    } while (rank(G) != 2);
    auto code5 = generic_code(G);
    u32 direct = 0;
    FqVec v(5, 0);
    while (true) {
      direct = std::max(direct, error_distance(code5, v));
      size_t i = 0;
      while (i < 5 && ++v[i] == 5) v[i++] = 0;
      if (i == 5) break;
    }
    CHECK(covering_radius(code5, RadiusMethod::Exhaustive).rho == direct);
  }
}

TEST_CASE("covering radius matches n-k+1 across a small ehz grid") {
  struct I {
    FieldPtr F;
    size_t n;
    u32 k;
  };
  std::vector<I> grid = {{f11(), 5, 3}, {f11(), 6, 4}, {f11(), 7, 5},
                         {f13(), 5, 3}, {f13(), 6, 4}, {f17(), 5, 3}, {f16(), 5, 3}};
  for (const auto& inst : grid) {
    FqVec pts(inst.n);
    for (size_t i = 0; i < inst.n; ++i) pts[i] = i + 1;
    auto code = ehz(EvalConfig(inst.F, pts), inst.k);
    CHECK(covering_radius(code, RadiusMethod::Exhaustive).rho == inst.n - inst.k + 1);
  }
}

TEST_CASE("stack-based deep-hole predicate") {
  auto code = example4_code();
  const Field& F = code.field();

  auto rep = is_deep_hole(code, pv(F, "7,10,5,5,1,4"));
  CHECK(rep.verdict);
  CHECK(rep.method == DeepHoleMethod::StackMds);

  auto bad = is_deep_hole(code, code.G.row(1));
  CHECK_FALSE(bad.verdict);
  CHECK(bad.certificate == "vector lies in the code (stacked rank 3)");

  auto c3 = example3_code();
  const Field& F13 = c3.field();
  CHECK(is_deep_hole(c3, pv(F13, "2,10,3,5,8,3,11,10,5,7,12,6,6")).verdict);

  CHECK_THROWS_WITH_AS(is_deep_hole(code, FqVec{1, 2}),
                       doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("deep-hole vectors evaluate as printed") {
  auto code = example4_code();
  const Field& F = code.field();
  CHECK(evaluate_deep_hole_vector(code, example4_class1_query(code.field_ptr(), 4)) ==
        pv(F, "7,10,5,5,1,4"));
  CHECK(evaluate_deep_hole_vector(code, example4_class2_query(code.field_ptr(), 8, 0)) ==
        pv(F, "2,7,4,7,1,0"));

  auto c3 = example3_code();
  const Field& F13 = c3.field();
  DeepHoleQuery q3{0, 4, Polynomial(c3.field_ptr(), {9, 2, 4, 3, 0, 6}), 6, 1};
  CHECK(evaluate_deep_hole_vector(c3, q3) == pv(F13, "2,10,3,5,8,3,11,10,5,7,12,6,6"));

  DeepHoleQuery zero{0, 0, Polynomial::zero(code.field_ptr()), 0, 0};
  CHECK(evaluate_deep_hole_vector(code, zero) == FqVec(6, 0));
}

TEST_CASE("class-1 criterion on the odd worked example") {
  auto code = example4_code();
  auto F = code.field_ptr();

  auto eq = class1_is_deep_hole(code, example4_class1_query(F, 4));
  CHECK(eq.verdict);
  CHECK(eq.certificate == "u*v equals f_k");
  CHECK(eq.vector == pv(*F, "7,10,5,5,1,4"));

  // 3 (uv - 4)^{-1} = 8 picks uv = 3
  auto set = class1_is_deep_hole(code, example4_class1_query(F, 3));
  CHECK(set.verdict);
  CHECK(set.vector.back() == 3);

  // sweep all uv: the polynomial's deep holes are exactly uv in {1,3,4,8},
  // by the closed form and by the minor predicate alike
  for (u64 uv = 0; uv < 11; ++uv) {
    bool expect = uv == 1 || uv == 3 || uv == 4 || uv == 8;
    auto c1 = class1_is_deep_hole(code, example4_class1_query(F, uv));
    auto stack = is_deep_hole(code, c1.vector);
    CHECK(c1.verdict == expect);
    CHECK(stack.verdict == expect);
  }

  CHECK_THROWS_WITH_AS(class1_is_deep_hole(code, example4_class2_query(F, 1, 0)),
                       doctest::Contains("BadCoefficients"), Error);
  DeepHoleQuery no_gkm1{0, 0, Polynomial(F, {1}), 0, 1};
  CHECK_THROWS_WITH_AS(class1_is_deep_hole(code, no_gkm1),
                       doctest::Contains("BadCoefficients"), Error);
}

TEST_CASE("class-2 forbidden sets") {
  auto code = example4_code();
  auto F = code.field_ptr();

  // uv = 0: everything except 8 is forbidden
  FqVec fs = class2_forbidden_set(code, 2, 3, 0);
  CHECK(fs == FqVec{0, 1, 2, 3, 4, 5, 6, 7, 9, 10});

  auto hole = class2_is_deep_hole(code, example4_class2_query(F, 8, 0));
  CHECK(hole.verdict);
  CHECK(hole.vector == pv(code.field(), "2,7,4,7,1,0"));

  // full (g_2, uv) sweep: the closed form and the minor predicate agree
  // everywhere, and the family's complete deep-hole set comes out as below.
  // (Nonzero uv does NOT always forbid the whole field: e.g. uv = 1 leaves
  // {0, 1} allowed, all confirmed by exhaustive error distance elsewhere.)
  std::vector<std::pair<u64, u64>> holes;
  for (u64 g2 = 0; g2 < 11; ++g2)
    for (u64 uv = 0; uv < 11; ++uv) {
      auto q = example4_class2_query(F, g2, uv);
      auto cls = class2_is_deep_hole(code, q);
      auto stack = is_deep_hole(code, cls.vector);
      CHECK(cls.verdict == stack.verdict);
      if (cls.verdict) holes.emplace_back(g2, uv);
    }
  std::vector<std::pair<u64, u64>> expect = {
      {0, 1}, {0, 6}, {0, 9}, {1, 1}, {1, 8},  {2, 5},  {2, 7},  {2, 10}, {5, 2},
      {5, 10}, {8, 0}, {8, 3}, {8, 6}, {10, 3}, {10, 5}, {10, 8}, {10, 10}};
  CHECK(holes == expect);

  // one of the extra holes, triple-checked by exhaustive distance
  auto extra = class2_is_deep_hole(code, example4_class2_query(F, 0, 1));
  CHECK(extra.verdict);
  CHECK(error_distance(code, extra.vector) == 3);
}

TEST_CASE("class-2 emptiness for the full-multiplicative-group example") {
  // sigma_2 over 6-subsets of {1..12} already covers all of F_13, so any
  // nonzero leading coefficient forbids every g_4
  auto code = example3_code();
  const Field& F = code.field();
  FqVec sigmas;
  for_each_subset(12, 6, [&](const std::vector<size_t>& idx) {
    FqVec sub;
    for (size_t i : idx) sub.push_back(code.config->points[i]);
    sigmas.push_back(elementary_symmetric(F, sub)[2]);
    return true;
  });
  std::sort(sigmas.begin(), sigmas.end());
  sigmas.erase(std::unique(sigmas.begin(), sigmas.end()), sigmas.end());
  CHECK(sigmas.size() == 13);

  for (u64 g6 : {u64(1), u64(5), u64(12)})
    CHECK(class2_forbidden_set(code, g6, 6, 0).size() == 13);
}

TEST_CASE("class-2 with zero leading coefficient reduces to class 1") {
  auto code = example4_code();
  auto F = code.field_ptr();
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    DeepHoleQuery q;
    q.g_kp1 = 0;
    q.g_km1 = rnd_nonzero(rng, *F);
    q.f = rnd_vk_poly(rng, F, 3);
    q.u_last = rnd_elem(rng, *F);
    q.v_last = rnd_elem(rng, *F);
    CHECK(class2_is_deep_hole(code, q).verdict == class1_is_deep_hole(code, q).verdict);
  }
}

TEST_CASE("vectors from V_k are never deep holes") {
  auto code = example4_code();
  auto F = code.field_ptr();
  std::mt19937_64 rng(32);
  for (int t = 0; t < 50; ++t) {
    DeepHoleQuery q{0, 0, rnd_vk_poly(rng, F, 3), rnd_elem(rng, *F), rnd_elem(rng, *F)};
    CHECK_FALSE(is_deep_hole(code, evaluate_deep_hole_vector(code, q)).verdict);
  }
}

TEST_CASE("deep-hole predicate equals exhaustive error distance on a tiny code") {
  auto code = example4_code();
  const Field& F = code.field();
  std::mt19937_64 rng(33);
  for (int t = 0; t < 25; ++t) {
    FqVec v(code.length);
    for (auto& x : v) x = rnd_elem(rng, F);
    CHECK(is_deep_hole(code, v).verdict == (error_distance(code, v) == 3));
  }
  // both printed deep holes sit at exactly the covering radius
  CHECK(error_distance(code, pv(F, "7,10,5,5,1,4")) == 3);
  CHECK(error_distance(code, pv(F, "2,7,4,7,1,0")) == 3);
}

TEST_CASE("class-1 uniqueness sweep for the full-group example") {
  // S = {1..12} in F_13 is not a (12,5,delta)-set for any delta, so the only
  // deep hole of the printed degree-4 family has uv = f_5 = 6
  auto code = example3_code();
  auto F = code.field_ptr();
  for (u64 delta = 0; delta < 13; ++delta)
    CHECK_FALSE(is_nk_delta_set(*F, code.config->points, 5, delta).ok);
  for (u64 uv = 0; uv < 13; ++uv) {
    DeepHoleQuery q{0, 4, Polynomial(F, {9, 2, 4, 3, 0, 6}), uv, 1};
    CHECK(class1_is_deep_hole(code, q).verdict == (uv == 6));
  }
}
