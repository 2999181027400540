#include "ehzkit/deephole.hpp"

#include <algorithm>
#include <set>

namespace ehzkit {

const char* deep_hole_method_name(DeepHoleMethod m) {
  switch (m) {
    case DeepHoleMethod::StackMds: return "stack-mds";
    case DeepHoleMethod::Class1: return "class1";
    case DeepHoleMethod::Class2: return "class2";
    case DeepHoleMethod::Exhaustive: return "exhaustive";
  }
  return "stack-mds";
}

namespace {

u64 pow_u64_guarded(u64 base, u64 exp, u64 guard) {
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) {
    if (r > guard / base) return guard + 1;
    r *= base;
  }
  return r;
}

u64 pack_syndrome(const FqVec& s, u64 q) {
  u64 idx = 0;
  for (size_t i = s.size(); i-- > 0;) idx = idx * q + s[i];
  return idx;
}

void query_checks(const CodeDescriptor& code, const DeepHoleQuery& q) {
  if (code.kind != CodeKind::Ehz) fail(Err::WrongKind, "deep-hole queries apply to ehz codes");
  if (!q.f.field().same_as(code.field())) fail(Err::FieldMismatch, "query field differs");
  if (!q.f.in_vk(code.k_param)) fail(Err::NotInVk, "f must lie in V_k");
  const Field& f = code.field();
  if (q.g_kp1 >= f.q() || q.g_km1 >= f.q() || q.u_last >= f.q() || q.v_last >= f.q())
    fail(Err::ParseError, "query coefficient out of range");
}

std::string join_positions(const std::vector<size_t>& idx) {
  std::string s;
  for (size_t i : idx) {
    if (!s.empty()) s += ',';
    s += std::to_string(i + 1);
  }
  return s;
}

}  // namespace

CoveringRadiusReport covering_radius(const CodeDescriptor& code, RadiusMethod method,
                                     u64 guard) {
  if (method == RadiusMethod::TheoremValue) {
    if (code.kind != CodeKind::Ehz)
      fail(Err::WrongKind, "closed-form covering radius applies to ehz codes");
    size_t n = code.length - 1;
    return {u32(n - code.k_param + 1), RadiusMethod::TheoremValue, std::nullopt};
  }

  const Field& f = code.field();
  size_t N = code.length;
  size_t r = N - code.dim;
  u64 cosets = pow_u64_guarded(f.q(), r, guard);
  if (cosets > guard) fail(Err::GuardExceeded, "q^(N-K) syndrome table over guard");

  std::vector<u32> leader(cosets, UINT32_MAX);
  u64 seen = 0;
  leader[0] = 0;
  ++seen;
  CoveringRadiusReport rep;
  rep.method = RadiusMethod::Exhaustive;

  for (u32 w = 1; w <= u32(N) && seen < cosets; ++w) {
    bool found_new = false;
    FqVec first_new;
    for_each_subset(N, w, [&](const std::vector<size_t>& pos) {
      // odometer over nonzero values on the chosen support
      FqVec vals(w, 1);
      while (true) {
        FqVec syn(r, 0);
        for (size_t t = 0; t < w; ++t) {
          for (size_t i = 0; i < r; ++i)
            syn[i] = f.add(syn[i], f.mul(vals[t], code.H.get(i, pos[t])));
        }
        u64 idx = pack_syndrome(syn, f.q());
        if (leader[idx] == UINT32_MAX) {
          leader[idx] = w;
          ++seen;
          if (!found_new) {
            found_new = true;
            first_new.assign(N, 0);
            for (size_t t = 0; t < w; ++t) first_new[pos[t]] = vals[t];
          }
          if (seen == cosets) return false;
        }
        size_t t = 0;
        while (t < w && ++vals[t] == f.q()) vals[t++] = 1;
        if (t == w) break;
      }
      return seen < cosets;
    });
    if (found_new) {
      rep.rho = w;
      rep.worst_coset_witness = first_new;
    }
  }
  return rep;
}

std::optional<u32> coset_leader_weight(const CodeDescriptor& code, const FqVec& syn,
                                       u32 max_weight, u64 guard) {
  const Field& f = code.field();
  size_t N = code.length;
  size_t r = N - code.dim;
  if (syn.size() != r) fail(Err::DimensionMismatch, "syndrome length != N-K");
  if (vec_is_zero(syn)) return 0;
  u64 work = 0;
  for (u32 w = 1; w <= max_weight; ++w) {
    std::optional<u32> hit;
    for_each_subset(N, w, [&](const std::vector<size_t>& pos) {
      FqVec vals(w, 1);
      while (true) {
        if (++work > guard) fail(Err::GuardExceeded, "coset search over guard");
        bool match = true;
        for (size_t i = 0; i < r && match; ++i) {
          u64 acc = 0;
          for (size_t t = 0; t < w; ++t) acc = f.add(acc, f.mul(vals[t], code.H.get(i, pos[t])));
          match = acc == syn[i];
        }
        if (match) {
          hit = w;
          return false;
        }
        size_t t = 0;
        while (t < w && ++vals[t] == f.q()) vals[t++] = 1;
        if (t == w) break;
      }
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

DeepHoleReport is_deep_hole(const CodeDescriptor& code, const FqVec& w, u64 guard) {
  if (w.size() != code.length) fail(Err::DimensionMismatch, "vector length != N");
  DeepHoleReport rep;
  rep.vector = w;
  rep.method = DeepHoleMethod::StackMds;
  FqMatrix stacked = vstack(code.G, FqMatrix::from_rows(code.field_ptr(), {w}));
  if (rank(stacked) == code.dim) {
    rep.verdict = false;
    rep.certificate = "vector lies in the code (stacked rank " + std::to_string(code.dim) + ")";
    return rep;
  }
  auto bad = first_dependent_columns(stacked, code.dim + 1, guard);
  rep.verdict = !bad.has_value();
  rep.certificate = rep.verdict
                        ? "all " + std::to_string(code.dim + 1) + "-column minors nonzero"
                        : "singular columns {" + join_positions(*bad) + "}";
  return rep;
}

FqVec evaluate_deep_hole_vector(const CodeDescriptor& code, const DeepHoleQuery& q) {
  query_checks(code, q);
  const Field& f = code.field();
  const EvalConfig& cfg = *code.config;
  u32 k = code.k_param;
  FqVec out(code.length);
  for (size_t i = 0; i < cfg.n(); ++i) {
    u64 a = cfg.points[i];
    u64 g = f.add(f.mul(q.g_kp1, f.pow(a, i64(k) + 1)),
                  f.add(f.mul(q.g_km1, f.pow(a, i64(k) - 1)), q.f.eval(a)));
    out[i] = f.mul(cfg.mults[i], g);
  }
  out[cfg.n()] = f.mul(q.u_last, q.v_last);
  return out;
}

DeepHoleReport class1_is_deep_hole(const CodeDescriptor& code, const DeepHoleQuery& q,
                                   u64 guard) {
  query_checks(code, q);
  if (q.g_kp1 != 0) fail(Err::BadCoefficients, "class-1 criterion needs g_{k+1} = 0");
  if (q.g_km1 == 0) fail(Err::BadCoefficients, "class-1 criterion needs g_{k-1} != 0");
  const Field& f = code.field();
  const EvalConfig& cfg = *code.config;
  u32 k = code.k_param;

  DeepHoleReport rep;
  rep.method = DeepHoleMethod::Class1;
  rep.vector = evaluate_deep_hole_vector(code, q);
  u64 uv = f.mul(q.u_last, q.v_last);
  u64 fk = q.f.coeff(k);
  if (uv == fk) {
    rep.verdict = true;
    rep.certificate = "u*v equals f_k";
    return rep;
  }
  u64 delta = f.mul(q.g_km1, f.inv(f.sub(uv, fk)));
  auto verdict = is_nk_delta_set(f, cfg.points, k, delta, guard);
  rep.verdict = verdict.ok;
  std::string ds = std::to_string(delta);
  if (verdict.ok) {
    rep.certificate = "S is an (n," + std::to_string(k) + "," + ds + ")-set";
  } else {
    std::string w;
    for (u64 v : verdict.witness) {
      if (!w.empty()) w += ',';
      w += std::to_string(v);
    }
    rep.certificate = "k-subset {" + w + "} sums to " + ds;
  }
  return rep;
}

FqVec class2_forbidden_set(const CodeDescriptor& code, u64 g_kp1, u64 f_k, u64 uv,
                           u64 guard) {
  if (code.kind != CodeKind::Ehz) fail(Err::WrongKind, "class-2 set applies to ehz codes");
  const Field& f = code.field();
  const EvalConfig& cfg = *code.config;
  u32 k = code.k_param;
  size_t n = cfg.n();
  if (binomial_guarded(n, k, guard) > guard || binomial_guarded(n, k + 1, guard) > guard)
    fail(Err::GuardExceeded, "too many subsets for the forbidden set");

  u64 dv = f.sub(uv, f_k);
  std::set<u64> forbidden;
  for_each_subset(n, k, [&](const std::vector<size_t>& idx) {
    FqVec sub(k);
    for (size_t t = 0; t < k; ++t) sub[t] = cfg.points[idx[t]];
    FqVec e = elementary_symmetric(f, sub);
    u64 s1 = e[1], s2 = e[2];
    u64 val = f.add(f.mul(g_kp1, f.sub(s2, f.mul(s1, s1))), f.mul(dv, s1));
    forbidden.insert(val);
    return true;
  });
  for_each_subset(n, k + 1, [&](const std::vector<size_t>& idx) {
    FqVec sub(k + 1);
    for (size_t t = 0; t < k + 1; ++t) sub[t] = cfg.points[idx[t]];
    forbidden.insert(f.mul(g_kp1, elementary_symmetric(f, sub)[2]));
    return true;
  });
  return FqVec(forbidden.begin(), forbidden.end());
}

DeepHoleReport class2_is_deep_hole(const CodeDescriptor& code, const DeepHoleQuery& q,
                                   u64 guard) {
  query_checks(code, q);
  const Field& f = code.field();
  DeepHoleReport rep;
  rep.method = DeepHoleMethod::Class2;
  rep.vector = evaluate_deep_hole_vector(code, q);
  u64 uv = f.mul(q.u_last, q.v_last);
  FqVec forbidden = class2_forbidden_set(code, q.g_kp1, q.f.coeff(code.k_param), uv, guard);
  bool hit = std::binary_search(forbidden.begin(), forbidden.end(), q.g_km1);
  rep.verdict = !hit;
  rep.certificate = std::string("g_{k-1} ") + (hit ? "in" : "outside") + " a forbidden set of size " +
                    std::to_string(forbidden.size());
  return rep;
}

}  // namespace ehzkit
