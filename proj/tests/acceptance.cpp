// Acceptance gate: one check per shipped guarantee, each printed as a
// [PASS]/[FAIL] line with its runtime. Every expected value is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "ehzkit/ecp.hpp"
#include "ehzkit/mdsgen.hpp"
#include "ehzkit/oracle.hpp"
#include "support.hpp"

using namespace ehzkit;
using namespace ehzkit::test;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "    FAILED: " << what << "\n";
    }
  }
  void note(const std::string& what) { notes << "    note: " << what << "\n"; }
};

EvalConfig example1_cfg() {
  auto F = f17();
  return EvalConfig(F, pv(*F, "1,3,5,7,10,12,14,16"), FqVec(8, 1));
}

EvalConfig example2_cfg() {
  auto F = f16();
  return EvalConfig(F, pv(*F, "1,w,w^2,w^3,w^4,w^6,w^7,w^8,w^9,w^11,w^12,w^13,w^14"),
                    FqVec(13, 1));
}

CodeDescriptor example4_code() {
  auto F = f11();
  return ehz(EvalConfig(F, pv(*F, "3,4,5,6,7"), FqVec(5, 1)), 3);
}

bool parallel(const Field& f, const FqVec& a, const FqVec& b) {
  u64 c = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
    if (a[i] && !c) c = f.mul(a[i], f.inv(b[i]));
  }
  for (size_t i = 0; i < a.size(); ++i)
    if (f.mul(c, b[i]) != a[i]) return false;
  return true;
}

struct GridInstance {
  EcpCase tag;
  CodeDescriptor code;
  EcpPair pair;
};

// one admissible instance per (case, q) across q in {11, 13, 16, 17, 19}
std::vector<GridInstance>& property_grid() {
  static std::vector<GridInstance> grid = [] {
    struct Want {
      FieldPtr F;
      size_t n;
      u32 k;
      bool mds;
    };
    std::vector<Want> wants = {
        // odd MDS
        {f11(), 6, 3, true}, {f13(), 6, 3, true}, {f16(), 8, 3, true},
        {f17(), 8, 3, true}, {f19(), 8, 3, true},
        // even MDS
        {f11(), 6, 4, true}, {f13(), 6, 4, true}, {f16(), 7, 3, true},
        {f17(), 7, 3, true}, {f19(), 7, 3, true},
        // odd NMDS
        {f11(), 8, 3, false}, {f13(), 8, 3, false}, {f16(), 9, 4, false},
        {f17(), 9, 4, false}, {f19(), 10, 3, false},
        // even NMDS
        {f11(), 7, 3, false}, {f13(), 9, 5, false}, {f16(), 13, 7, false},
        {f17(), 10, 4, false}, {f19(), 9, 5, false},
    };
    std::mt19937_64 rng(0x5eed);
    std::vector<GridInstance> out;
    for (const auto& w : wants) {
      auto pts = find_eval_set(*w.F, w.n, w.k, w.mds);
      if (!pts) continue;
      auto code = ehz(EvalConfig(w.F, *pts, rnd_nonzero_mults(rng, *w.F, w.n)), w.k);
      auto pair = build_ecp(code);
      out.push_back({pair.case_tag, std::move(code), std::move(pair)});
    }
    return out;
  }();
  return grid;
}

// ---------------------------------------------------------------------------

void criterion1(Check& c) {
  auto code = ehz(example1_cfg(), 3);
  const Field& F = code.field();

  FqMatrix G_expect = FqMatrix::from_rows(code.field_ptr(),
                                          {pv(F, "1,1,1,1,1,1,1,1,0"),
                                           pv(F, "1,3,5,7,10,12,14,16,0"),
                                           pv(F, "1,10,6,3,14,11,7,16,1")});
  FqMatrix H_expect = FqMatrix::from_rows(code.field_ptr(),
                                          {pv(F, "4,1,11,13,4,6,16,13,0"),
                                           pv(F, "4,3,4,6,6,4,3,4,0"),
                                           pv(F, "4,9,3,8,9,14,8,13,0"),
                                           pv(F, "4,10,15,5,5,15,10,4,0"),
                                           pv(F, "4,13,7,1,16,10,4,13,16"),
                                           pv(F, "4,5,1,7,7,1,5,4,0")});
  c.expect(code.G == G_expect, "generator matrix deviates from the printed form");
  c.expect(code.H == H_expect, "parity-check matrix deviates from the printed form");

  auto pair = build_ecp(code);
  c.expect(pair.transform->gamma == 2, "default gamma is not 2");
  c.expect(pair.transform->s_prime == pv(F, "16,1,6,7,15,12,10,11,0"), "S' mismatch");
  c.expect(pair.transform->u_prime == pv(F, "12,14,11,1,7,12,4,4,3"), "u' mismatch");
  FqMatrix ga = FqMatrix::from_rows(code.field_ptr(),
                                    {pv(F, "1,1,1,1,1,1,1,1,1"),
                                     pv(F, "16,1,6,7,15,12,10,11,0"),
                                     pv(F, "1,1,2,15,4,8,15,2,0")});
  FqMatrix gb = FqMatrix::from_rows(code.field_ptr(),
                                    {pv(F, "5,14,13,3,12,13,5,3,3"),
                                     pv(F, "12,14,10,4,10,3,16,16,0")});
  c.expect(pair.G_A == ga, "G_A mismatch");
  c.expect(pair.G_B == gb, "G_B mismatch");

  FqVec y = pv(F, "4,6,1,14,5,7,12,15,2");
  auto out = ecp_decode(code, pair, y);
  c.expect(out.kind == DecodeOutcome::Corrected, "decode did not correct");
  c.expect(out.codeword == pv(F, "4,7,1,14,5,1,12,15,2"), "decoded codeword mismatch");
  c.expect(out.error == pv(F, "0,16,0,0,0,6,0,0,0"), "error vector mismatch");
  c.expect(out.trace.syndrome == pv(F, "1,4,7,12,13,1"), "syndrome mismatch");
  c.expect(out.trace.s_basis.rows() == 1 &&
               parallel(F, out.trace.s_basis.row(0), pv(F, "1,6,10")),
           "s-space is not span{(1,6,10)}");
  c.expect(out.trace.zeros == std::vector<size_t>{1, 5}, "Z is not {2,6}");
}

void criterion2(Check& c) {
  auto cfg = example2_cfg();
  const Field& F = *cfg.field;
  c.expect(u_vector(F, cfg.points) ==
               pv(F, "1,w^11,w^7,w^11,w^14,w^7,w^11,w^13,w^13,w^13,w^14,w^14,w^7"),
           "u vector mismatch");

  auto code = ehz(cfg, 7);
  FqMatrix H_expect = FqMatrix::from_rows(
      code.field_ptr(),
      {pv(F, "1,w^11,w^7,w^11,w^14,w^7,w^11,w^13,w^13,w^13,w^14,w^14,w^7,0"),
       pv(F, "1,w^12,w^9,w^14,w^3,w^13,w^3,w^6,w^7,w^9,w^11,w^12,w^6,0"),
       pv(F, "1,w^13,w^11,w^2,w^7,w^4,w^10,w^14,w,w^5,w^8,w^10,w^5,0"),
       pv(F, "1,w^14,w^13,w^5,w^11,w^10,w^2,w^7,w^10,w,w^5,w^8,w^4,0"),
       pv(F, "1,1,1,w^8,1,w,w^9,1,w^4,w^12,w^2,w^6,w^3,0"),
       pv(F, "1,w,w^2,w^11,w^4,w^7,w,w^8,w^13,w^8,w^14,w^4,w^2,1"),
       pv(F, "1,w^2,w^4,w^14,w^8,w^13,w^8,w,w^7,w^4,w^11,w^2,w,1")});
  c.expect(code.H == H_expect, "parity-check matrix deviates from the printed form");

  auto cls = classify_ehz(code);
  c.expect(!cls.mds, "classification should be NMDS");
  u64 s = 0;
  for (u64 v : cls.witness) s = F.add(s, v);
  c.expect(cls.witness.size() == 7 && s == 0, "witness is not a zero-sum 7-subset");

  auto pair = build_ecp(code);
  FqVec y = pv(F, "w^12,w,w^13,w^7,1,w^3,w^9,w,w^2,w,w^7,w^6,w^12,w^11");
  auto out = ecp_decode(code, pair, y);
  c.expect(out.kind == DecodeOutcome::TooManyErrors, "decode should fail beyond the radius");
  c.expect(out.reason == "more than 3 errors", "failure message mismatch");
}

void criterion3(Check& c) {
  std::mt19937_64 rng(0xC0DE);
  size_t per_case[4] = {0, 0, 0, 0};
  size_t failures = 0;
  const auto& grid = property_grid();
  c.expect(grid.size() == 20, "property grid incomplete");
  for (const auto& inst : grid) {
    u32 k = inst.code.k_param;
    for (int t = 0; t < 125; ++t) {
      FqVec cw = encode_ehz(inst.code, rnd_vk_poly(rng, inst.code.field_ptr(), k));
      size_t w = rnd_below(rng, inst.pair.ell + 1);
      FqVec e = rnd_error(rng, inst.code.field(), inst.code.length, w);
      FqVec y = vec_add(inst.code.field(), cw, e);
      auto out = ecp_decode(inst.code, inst.pair, y);
      bool good = vec_is_zero(e)
                      ? out.kind == DecodeOutcome::AlreadyCodeword
                      : out.kind == DecodeOutcome::Corrected && out.codeword == cw &&
                            out.error == e;
      failures += !good;
      ++per_case[size_t(inst.pair.case_tag)];
    }
  }
  for (size_t i = 0; i < 4; ++i)
    c.expect(per_case[i] >= 500, "fewer than 500 trials for a case tag");
  c.expect(failures == 0, std::to_string(failures) + " round-trip failures");
}

void criterion4(Check& c) {
  std::mt19937_64 rng(0x0AC1E);
  size_t compared = 0;
  for (const auto& inst : property_grid()) {
    if (inst.code.field().q() > 17 || inst.code.k_param > 4) continue;
    OracleBudget budget;
    for (int t = 0; t < 40; ++t) {
      FqVec cw = encode_ehz(inst.code, rnd_vk_poly(rng, inst.code.field_ptr(),
                                                   inst.code.k_param));
      FqVec e = rnd_error(rng, inst.code.field(), inst.code.length,
                          rnd_below(rng, inst.pair.ell + 1));
      FqVec y = vec_add(inst.code.field(), cw, e);
      auto fast = ecp_decode(inst.code, inst.pair, y);
      auto slow = nearest_codeword(inst.code, y, budget);
      FqVec fast_word = fast.kind == DecodeOutcome::Corrected ? fast.codeword : y;
      if (slow.unique) {
        c.expect(fast_word == slow.codeword, "structured decode deviates from the oracle");
        ++compared;
      }
    }
  }
  c.expect(compared > 300, "too few oracle comparisons");

  auto code = ehz(example1_cfg(), 3);
  auto near = nearest_codeword(code, pv(code.field(), "4,6,1,14,5,7,12,15,2"));
  c.expect(near.codeword == pv(code.field(), "4,7,1,14,5,1,12,15,2") && near.distance == 2 &&
               near.unique,
           "oracle deviates on the pinned received word");
}

void criterion5(Check& c) {
  for (const auto& inst : property_grid()) {
    auto rep = verify_ecp(inst.pair, inst.code);
    c.expect(rep.all(), std::string("pair verification failed for case ") +
                            ecp_case_name(inst.pair.case_tag));
  }
  auto c1 = ehz(example1_cfg(), 3);
  c.expect(verify_ecp(build_ecp(c1), c1).all(), "worked example 1 pair fails verification");
  auto c2 = ehz(example2_cfg(), 7);
  c.expect(verify_ecp(build_ecp(c2), c2).all(), "worked example 2 pair fails verification");
}

void criterion6(Check& c) {
  auto code = example4_code();
  auto exh = covering_radius(code, RadiusMethod::Exhaustive);
  auto thm = covering_radius(code, RadiusMethod::TheoremValue);
  c.expect(exh.rho == 3 && thm.rho == 3, "covering radius of the [6,3]_11 code is n-k+1 = 3");
  c.note("worked-example prose prints rho = 4 for this [6,3] code; that exceeds the");
  c.note("redundancy bound N-K = 3 and contradicts the covering-radius theorem, whose");
  c.note("value n-k+1 = 3 the exhaustive syndrome table reproduces exactly.");

  struct I {
    FieldPtr F;
    size_t n;
    u32 k;
  };
  std::vector<I> grid = {{f11(), 6, 4}, {f11(), 7, 5}, {f13(), 5, 3},
                         {f13(), 6, 4}, {f17(), 5, 3}, {f16(), 5, 3}};
  for (const auto& inst : grid) {
    FqVec pts(inst.n);
    for (size_t i = 0; i < inst.n; ++i) pts[i] = i + 1;
    auto cc = ehz(EvalConfig(inst.F, pts), inst.k);
    auto rep = covering_radius(cc, RadiusMethod::Exhaustive);
    c.expect(rep.rho == inst.n - inst.k + 1,
             "covering radius deviates from n-k+1 on a grid instance");
  }
}

void criterion7(Check& c) {
  auto code = example4_code();
  auto F = code.field_ptr();

  // the five printed vectors, each by the minor predicate AND its closed form
  for (u64 uv : {u64(4), u64(3), u64(8), u64(1)}) {
    DeepHoleQuery q{0, 3, Polynomial(F, {7, 10, 0, 4}), uv, 1};
    auto cls = class1_is_deep_hole(code, q);
    auto stk = is_deep_hole(code, cls.vector);
    c.expect(cls.verdict && stk.verdict,
             "printed class-1 vector fails a predicate (uv=" + std::to_string(uv) + ")");
  }
  DeepHoleQuery q2{2, 8, Polynomial(F, {2, 5, 0, 3}), 0, 1};
  auto cls2 = class2_is_deep_hole(code, q2);
  c.expect(cls2.verdict && cls2.vector == pv(*F, "2,7,4,7,1,0") &&
               is_deep_hole(code, cls2.vector).verdict,
           "printed class-2 vector fails a predicate");

  auto c3 = ehz(EvalConfig(f13(), pv(*f13(), "1,2,3,4,5,6,7,8,9,10,11,12")), 5);
  DeepHoleQuery q3{0, 4, Polynomial(f13(), {9, 2, 4, 3, 0, 6}), 6, 1};
  auto cls3 = class1_is_deep_hole(c3, q3);
  c.expect(cls3.verdict && cls3.vector == pv(c3.field(), "2,10,3,5,8,3,11,10,5,7,12,6,6") &&
               is_deep_hole(c3, cls3.vector).verdict,
           "printed full-group vector fails a predicate");

  // uniqueness sweeps over the free last-coordinate product
  for (u64 uv = 0; uv < 11; ++uv) {
    DeepHoleQuery q{0, 3, Polynomial(F, {7, 10, 0, 4}), uv, 1};
    bool expect = uv == 1 || uv == 3 || uv == 4 || uv == 8;
    auto cls = class1_is_deep_hole(code, q);
    c.expect(cls.verdict == expect && is_deep_hole(code, cls.vector).verdict == expect,
             "class-1 family sweep deviates at uv=" + std::to_string(uv));
  }
  for (u64 uv = 0; uv < 13; ++uv) {
    DeepHoleQuery q{0, 4, Polynomial(f13(), {9, 2, 4, 3, 0, 6}), uv, 1};
    c.expect(class1_is_deep_hole(c3, q).verdict == (uv == 6),
             "full-group family sweep deviates at uv=" + std::to_string(uv));
  }

  // the degree-4 family of the printed class-2 vector: enumeration finds deep
  // holes at uv in {0, 3, 6}, each triple-confirmed
  FqVec found;
  for (u64 uv = 0; uv < 11; ++uv) {
    DeepHoleQuery q{2, 8, Polynomial(F, {2, 5, 0, 3}), uv, 1};
    auto cls = class2_is_deep_hole(code, q);
    auto stk = is_deep_hole(code, cls.vector);
    c.expect(cls.verdict == stk.verdict, "class-2 routes disagree at uv=" + std::to_string(uv));
    if (cls.verdict) {
      c.expect(error_distance(code, cls.vector) == 3, "claimed hole not at the radius");
      found.push_back(uv);
    }
  }
  c.expect(found == FqVec{0, 3, 6}, "computed class-2 uv set changed");
  c.note("the worked example claims no class-2 deep holes beyond uv = 0 for this");
  c.note("family; the enumeration refutes that (uv = 3 and uv = 6 qualify, confirmed by");
  c.note("the closed form, the minor predicate, and exhaustive error distance = rho = 3).");

  // class-2 emptiness over the full multiplicative group of F_13
  for (u64 g6 = 1; g6 < 13; ++g6)
    c.expect(class2_forbidden_set(c3, g6, 6, 0).size() == 13,
             "forbidden set should be all of F_13 for g6=" + std::to_string(g6));
}

void criterion8(Check& c) {
  auto parent = example4_code();
  auto F = parent.field_ptr();

  Algorithm2Limits fam1;
  fam1.g_kp1_values = FqVec{0};
  fam1.g_km1_values = FqVec{3};
  fam1.f_values = std::vector<Polynomial>{Polynomial(F, {7, 10, 0, 4})};
  auto certs = algorithm2_collect(parent, fam1);
  c.expect(certs.size() == 4, "class-1 family should yield exactly four children");
  for (const auto& cert : certs) {
    c.expect(cert.mds_proof && is_mds_minors(cert.child), "child fails the minor check");
    c.expect(min_distance_bruteforce(cert.child) == 4, "child distance is not 4");
  }

  auto rl = [&](u64 delta) { return roth_lempel(F, pv(*F, "3,4,5,6,7"), 4, delta); };
  auto eq_child = certs[2].child;  // uv = 4 in ascending order 1,3,4,8
  c.expect(certs[2].branch == "class1-eq", "third child is not the equal-case one");
  c.expect(monomial_equivalent(eq_child, rl(0)).kind == EquivalenceResult::Equivalent,
           "equal-case child is not equivalent to the delta=0 Roth-Lempel code");

  auto c1 = certs[0].child, c2 = certs[1].child, c3 = certs[3].child;
  DeepHoleQuery q2{2, 8, Polynomial(F, {2, 5, 0, 3}), 0, 1};
  auto cls2 = extend_with_deep_hole(parent, q2);
  c.expect(cls2.mds_proof && min_distance_bruteforce(cls2.child) == 4,
           "class-2 child fails certification");

  for (u64 delta = 0; delta < 11; ++delta) {
    bool e3 = delta == 9 || delta == 10;
    c.expect(monomial_equivalent(c3, rl(delta)).kind ==
                 (e3 ? EquivalenceResult::Equivalent : EquivalenceResult::NotEquivalent),
             "C'_3 equivalence deviates at delta=" + std::to_string(delta));
    c.expect(monomial_equivalent(c1, rl(delta)).kind == EquivalenceResult::NotEquivalent,
             "C'_1 should match no Roth-Lempel code");
    c.expect(monomial_equivalent(c2, rl(delta)).kind == EquivalenceResult::NotEquivalent,
             "C'_2 should match no Roth-Lempel code");
    c.expect(monomial_equivalent(cls2.child, rl(delta)).kind ==
                 EquivalenceResult::NotEquivalent,
             "class-2 child should match no Roth-Lempel code");
  }
}

void criterion9(Check& c) {
  auto F = f11();
  size_t checked = 0;
  for_each_subset(8, 5, [&](const std::vector<size_t>& idx) {
    FqVec pts;
    for (size_t i : idx) pts.push_back(u64(i) + 1);
    auto code = ehz(EvalConfig(F, pts), 3);
    bool zsf = is_zero_sum_free(*F, pts, 3).ok;
    u32 d = min_distance_bruteforce(code);
    if (d != (zsf ? 4u : 3u)) {
      c.expect(false, "dichotomy fails on a 5-subset");
      return false;
    }
    ++checked;
    return true;
  });
  c.expect(checked == 56, "expected all 56 subsets");
}

void criterion10(Check& c) {
  std::mt19937_64 rng(0x1DE17);

  // Lagrange identity for the u-vector
  for (int t = 0; t < 50; ++t) {
    const auto& F = t % 2 ? f13() : f17();
    size_t n = 3 + rnd_below(rng, 6);
    FqVec pts = rnd_distinct_points(rng, *F, n);
    FqVec u = u_vector(*F, pts);
    for (size_t j = 0; j < n; ++j) {
      u64 s = 0;
      for (size_t i = 0; i < n; ++i) s = F->add(s, F->mul(u[i], F->pow(pts[i], i64(j))));
      if (s != (j + 1 == n ? 1u : 0u)) {
        c.expect(false, "Lagrange identity fails");
        return;
      }
    }
  }

  // generalized Vandermonde factorization
  for (int t = 0; t < 50; ++t) {
    const auto& F = t % 2 ? f11() : f13();
    u32 m = 3 + u32(rnd_below(rng, 4));
    std::vector<u32> kept{0, m - 1}, rest;
    for (u32 e = 1; e + 1 < m; ++e) (rnd_below(rng, 2) ? kept : rest).push_back(e);
    std::sort(kept.begin(), kept.end());
    size_t s = kept.size(), s2 = rest.size();
    FqVec pts = rnd_distinct_points(rng, *F, s);
    FqMatrix lhs(F, s, s);
    for (size_t i = 0; i < s; ++i)
      for (size_t j = 0; j < s; ++j) lhs.set(i, j, F->pow(pts[j], i64(kept[i])));
    u64 vdm = 1;
    for (size_t i = 0; i < s; ++i)
      for (size_t j = i + 1; j < s; ++j) vdm = F->mul(vdm, F->sub(pts[j], pts[i]));
    u64 rhs = vdm;
    if (s2 > 0) {
      FqMatrix sig(F, s2, s2);
      for (size_t r = 0; r < s2; ++r)
        for (size_t cc = 0; cc < s2; ++cc) {
          int idx = int(s) - int(rest[cc]) + int(r);
          sig.set(r, cc, idx < 0 ? 0 : sigma(*F, pts, idx));
        }
      rhs = F->mul(vdm, det(sig).value());
    }
    if (det(lhs).value() != rhs) {
      c.expect(false, "generalized Vandermonde identity fails");
      return;
    }
  }

  // duality of the evaluation codes
  for (int t = 0; t < 50; ++t) {
    const auto& F = t % 2 ? f11() : f17();
    size_t n = 4 + rnd_below(rng, 4);
    u32 k = 1 + u32(rnd_below(rng, n - 1));
    EvalConfig cfg(F, rnd_distinct_points(rng, *F, n), rnd_nonzero_mults(rng, *F, n));
    FqVec u = u_vector(*F, cfg.points);
    FqVec w(n);
    for (size_t i = 0; i < n; ++i) w[i] = F->mul(F->inv(cfg.mults[i]), u[i]);
    if (!same_row_space(dual(grs(cfg, k)).G, grs(EvalConfig(F, cfg.points, w), u32(n - k)).G)) {
      c.expect(false, "duality row-space equality fails");
      return;
    }
  }

  // nesting inside the larger evaluation codes, through the point transform
  for (int t = 0; t < 50; ++t) {
    const auto& F = t % 2 ? f13() : f17();
    size_t n = 5 + rnd_below(rng, 3);
    u32 k = 3;
    FqVec pts = rnd_distinct_points(rng, *F, n);
    EvalConfig cfg(F, pts, rnd_nonzero_mults(rng, *F, n));
    auto code = ehz(cfg, k);
    auto big = egrs(cfg, k + 1);
    if (!row_space_contains(big.G, code.G)) {
      c.expect(false, "containment in the extended code fails");
      return;
    }
    u64 gamma = 0;
    for (u64 g = 1; g < F->q(); ++g)
      if (std::find(pts.begin(), pts.end(), g) == pts.end()) {
        gamma = g;
        break;
      }
    auto tc = gamma_transform(cfg, k, gamma);
    EvalConfig tcfg(F, tc.s_prime, tc.v_prime);
    auto flat = grs(tcfg, k + 1);
    if (!same_row_space(big.G, flat.G) || !row_space_contains(grs(tcfg, k + 2).G, code.G)) {
      c.expect(false, "transform nesting fails");
      return;
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    double budget_s;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "odd MDS worked example end-to-end", 1.0, criterion1},
      {2, "even NMDS worked example end-to-end", 1.0, criterion2},
      {3, "round-trip decoding, 500+ trials per case", 60.0, criterion3},
      {4, "oracle agreement on the small-parameter grid", 120.0, criterion4},
      {5, "pair verification for every constructed pair", 60.0, criterion5},
      {6, "covering radius by exhaustive syndrome tables", 30.0, criterion6},
      {7, "deep holes: printed vectors and uniqueness sweeps", 30.0, criterion7},
      {8, "extension generator and Roth-Lempel equivalences", 300.0, criterion8},
      {9, "distance dichotomy over all 56 5-subsets", 60.0, criterion9},
      {10, "numerical identity suite", 30.0, criterion10},
  };

  int failures = 0;
  for (auto& crit : criteria) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    crit.run(c);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > crit.budget_s) {
      c.ok = false;
      c.notes << "    FAILED: runtime " << secs << "s over budget " << crit.budget_s << "s\n";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)\n", c.ok ? "PASS" : "FAIL", crit.id, crit.label,
                secs);
    std::fputs(c.notes.str().c_str(), stdout);
    failures += !c.ok;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
