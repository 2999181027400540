#include "ehzkit/mdsgen.hpp"

#include <algorithm>

namespace ehzkit {

namespace {

CodeDescriptor build_child(const CodeDescriptor& parent, const FqVec& row) {
  FqMatrix stacked = vstack(parent.G, FqMatrix::from_rows(parent.field_ptr(), {row}));
  FqMatrix inf_col(parent.field_ptr(), stacked.rows(), 1);
  inf_col.set(stacked.rows() - 1, 0, 1);
  FqMatrix G = hstack(stacked, inf_col);
  CodeDescriptor child;
  child.kind = CodeKind::Extension;
  child.length = parent.length + 1;
  child.dim = parent.dim + 1;
  child.G = G;
  child.H = null_space(G);
  child.config = parent.config;
  child.k_param = parent.k_param + 1;
  return child;
}

}  // namespace

ExtensionCertificate extend_with_deep_hole(const CodeDescriptor& code, const DeepHoleQuery& q,
                                           u64 guard) {
  if (code.kind != CodeKind::Ehz) fail(Err::WrongKind, "extension applies to ehz codes");
  auto cls = classify_ehz(code, guard);
  if (!cls.mds) fail(Err::NotMds, "parent code is NMDS; no deep-hole extension available");

  const Field& f = code.field();
  ExtensionCertificate cert;
  cert.parent = code;
  cert.query = q;

  DeepHoleReport rep;
  if (q.g_kp1 != 0) {
    rep = class2_is_deep_hole(code, q, guard);
    cert.branch = "class2";
  } else if (q.g_km1 != 0) {
    rep = class1_is_deep_hole(code, q, guard);
    u64 uv = f.mul(q.u_last, q.v_last);
    cert.branch = uv == q.f.coeff(code.k_param) ? "class1-eq" : "class1-set";
  } else {
    fail(Err::NotDeepHole, "g lies in V_k; such vectors are never deep holes");
  }
  if (!rep.verdict) fail(Err::NotDeepHole, rep.certificate);

  cert.deep_hole_row = rep.vector;
  cert.child = build_child(code, rep.vector);
  cert.mds_proof = is_mds_minors(cert.child, guard);
  size_t n = code.length - 1;
  cert.child.d = DistanceInfo{u32(n - code.k_param + 2), DistanceInfo::Analytic};
  cert.child.extras["branch"] = cert.branch;

  auto ng = nongrs_certificate(cert.child, guard);
  cert.nongrs.schur_dim = ng.schur_dim;
  if (ng.kind == NonGrsCertificate::NonGrs) {
    cert.nongrs.kind = NonGrsProof::SchurSquareDim;
    cert.nongrs.tag.clear();
  } else {
    cert.nongrs.kind = NonGrsProof::Asserted;
    cert.nongrs.tag = "deep-hole extension of a non-GRS MDS code";
  }
  cert.rl.kind = RlEquivalence::Unknown;
  cert.rl.note = "not tested";
  if (cert.branch == "class1-eq") {
    cert.rl.note = "equivalent to the delta=0 Roth-Lempel code by construction";
  }
  return cert;
}

void algorithm2_enumerate(const CodeDescriptor& code, const Algorithm2Limits& limits,
                          const std::function<bool(ExtensionCertificate)>& sink) {
  if (code.kind != CodeKind::Ehz) fail(Err::WrongKind, "enumeration applies to ehz codes");
  if (!classify_ehz(code, limits.guard).mds)
    fail(Err::NotMds, "parent code is NMDS; no deep-hole extension available");
  const Field& f = code.field();
  u32 k = code.k_param;

  FqVec all(f.q());
  for (u64 v = 0; v < f.q(); ++v) all[v] = v;
  const FqVec& g_kp1s = limits.g_kp1_values ? *limits.g_kp1_values : all;
  const FqVec& g_km1s = limits.g_km1_values ? *limits.g_km1_values : all;
  const FqVec& uvs = limits.uv_values ? *limits.uv_values : all;

  std::vector<Polynomial> fs;
  if (limits.f_values) {
    fs = *limits.f_values;
  } else {
    const FqVec& fks = limits.f_k_values ? *limits.f_k_values : all;
    for (u64 fk : fks) {
      FqVec c(k + 1, 0);
      c[k] = fk;
      fs.emplace_back(code.field_ptr(), c);
    }
  }

  u64 emitted = 0;
  for (u64 g_kp1 : g_kp1s) {
    for (u64 g_km1 : g_km1s) {
      if (g_kp1 == 0 && g_km1 == 0) continue;  // g in V_k: never a deep hole
      for (const Polynomial& fp : fs) {
        for (u64 uv : uvs) {
          DeepHoleQuery q{g_kp1, g_km1, fp, uv, 1};
          std::string branch;
          DeepHoleReport rep;
          if (g_kp1 == 0) {
            rep = class1_is_deep_hole(code, q, limits.guard);
            branch = uv == fp.coeff(k) ? "class1-eq" : "class1-set";
          } else {
            rep = class2_is_deep_hole(code, q, limits.guard);
            branch = "class2";
          }
          if (!rep.verdict) continue;
          if (limits.only_branch && branch != *limits.only_branch) continue;
          ExtensionCertificate cert = extend_with_deep_hole(code, q, limits.guard);
          if (!sink(std::move(cert))) return;
          if (++emitted >= limits.max_outputs) return;
        }
      }
    }
  }
}

std::vector<ExtensionCertificate> algorithm2_collect(const CodeDescriptor& code,
                                                     const Algorithm2Limits& limits) {
  std::vector<ExtensionCertificate> out;
  algorithm2_enumerate(code, limits, [&](ExtensionCertificate cert) {
    out.push_back(std::move(cert));
    return true;
  });
  return out;
}

std::vector<u64> weight_enumerator(const CodeDescriptor& code, u64 guard) {
  const Field& f = code.field();
  u64 total = 1;
  for (size_t i = 0; i < code.dim; ++i) {
    if (total > guard / f.q()) fail(Err::GuardExceeded, "q^K enumeration over guard");
    total *= f.q();
  }
  std::vector<u64> acc(code.length + 1, 0);
  acc[0] = 1;
  FqVec msg(code.dim, 0);
  while (true) {
    size_t i = 0;
    while (i < code.dim && ++msg[i] == f.q()) msg[i++] = 0;
    if (i == code.dim) break;
    ++acc[vec_weight(vec_matmul(f, msg, code.G))];
  }
  return acc;
}

namespace {

// first K independent columns plus one more whose coordinates in that basis
// are all nonzero: a projective frame pinning any change of basis
struct Frame {
  std::vector<size_t> base;  // K column indices
  size_t extra = 0;
  FqVec extra_coords;        // all nonzero
  FqMatrix base_inv;         // inverse of the K x K base block
};

std::optional<FqMatrix> invert(const FqMatrix& M) {
  size_t n = M.rows();
  RrefResult rr = rref(hstack(M, FqMatrix::identity(M.field_ptr(), n)));
  if (rr.rank < n) return std::nullopt;
  FqMatrix inv(M.field_ptr(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.set(i, j, rr.R.get(i, n + j));
  return inv;
}

std::optional<Frame> find_frame(const FqMatrix& G) {
  size_t K = G.rows();
  std::vector<size_t> base;
  for (size_t c = 0; c < G.cols() && base.size() < K; ++c) {
    std::vector<size_t> trial = base;
    trial.push_back(c);
    if (rank(G.columns(trial)) == trial.size()) base = trial;
  }
  if (base.size() < K) return std::nullopt;
  auto inv = invert(G.columns(base));
  if (!inv) return std::nullopt;
  for (size_t c = 0; c < G.cols(); ++c) {
    if (std::find(base.begin(), base.end(), c) != base.end()) continue;
    FqVec coords = mat_vecmul(*inv, G.col(c));
    if (vec_weight(coords) == K) return Frame{base, c, coords, *inv};
  }
  return std::nullopt;
}

// scalar c with w = c * v, or nullopt
std::optional<u64> parallel_scalar(const Field& f, const FqVec& w, const FqVec& v) {
  u64 c = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if ((w[i] == 0) != (v[i] == 0)) return std::nullopt;
    if (w[i] != 0 && c == 0) c = f.mul(w[i], f.inv(v[i]));
  }
  if (c == 0) return std::nullopt;  // both zero vectors: caller handles
  for (size_t i = 0; i < w.size(); ++i)
    if (f.mul(c, v[i]) != w[i]) return std::nullopt;
  return c;
}

EquivalenceResult frame_search(const CodeDescriptor& c1, const CodeDescriptor& c2,
                               const Frame& frame, u64 max_candidates, bool swapped) {
  const Field& f = c1.field();
  size_t K = c1.dim, N = c1.length;
  const FqMatrix& G1 = c1.G;
  const FqMatrix& G2 = c2.G;

  std::vector<size_t> zeros2;  // zero columns of G2, matched separately
  for (size_t c = 0; c < N; ++c)
    if (vec_is_zero(G2.col(c))) zeros2.push_back(c);

  u64 tried = 0;
  std::vector<size_t> J(K + 1);
  std::vector<bool> in_use(N, false);

  // ordered tuples of K+1 distinct column positions of G2
  std::function<std::optional<EquivalenceResult>(size_t)> descend =
      [&](size_t depth) -> std::optional<EquivalenceResult> {
    if (depth == K + 1) {
      if (++tried > max_candidates)
        return EquivalenceResult{EquivalenceResult::Unknown, std::nullopt,
                                 "frame-search budget exhausted"};
      std::vector<size_t> base2(J.begin(), J.begin() + K);
      FqMatrix B2 = G2.columns(base2);
      auto B2inv = invert(B2);
      if (!B2inv) return std::nullopt;
      FqVec d = mat_vecmul(*B2inv, G2.col(J[K]));
      if (vec_weight(d) != K) return std::nullopt;
      // T maps frame column t of G1 onto mu_t * (G2 column J_t) with
      // mu_t = d_t / c_t, forcing the extra frame column to line up too
      FqMatrix scaled(c1.field_ptr(), K, K);
      for (size_t t = 0; t < K; ++t) {
        u64 mu = f.mul(d[t], f.inv(frame.extra_coords[t]));
        for (size_t r = 0; r < K; ++r) scaled.set(r, t, f.mul(mu, B2.get(r, t)));
      }
      FqMatrix T = matmul(scaled, frame.base_inv);
      // match every column of T G1 to an unused parallel column of G2
      std::vector<size_t> perm(N, SIZE_MAX);
      FqVec lambda(N, 1);
      std::vector<bool> used(N, false);
      for (size_t i = 0; i < N; ++i) {
        FqVec w = mat_vecmul(T, G1.col(i));
        if (vec_is_zero(w)) {
          bool placed = false;
          for (size_t z : zeros2)
            if (!used[z]) {
              used[z] = true;
              perm[i] = z;
              placed = true;
              break;
            }
          if (!placed) return std::nullopt;
          continue;
        }
        bool placed = false;
        for (size_t j = 0; j < N && !placed; ++j) {
          if (used[j]) continue;
          auto c = parallel_scalar(f, G2.col(j), w);
          if (c) {
            used[j] = true;
            perm[i] = j;
            lambda[i] = *c;
            placed = true;
          }
        }
        if (!placed) return std::nullopt;
      }
      MonomialTransform mt{perm, lambda};
      if (swapped) {
        // invert the transform so it still maps c1-as-passed onto c2
        MonomialTransform inv_mt;
        inv_mt.perm.assign(N, 0);
        inv_mt.scale.assign(N, 1);
        for (size_t i = 0; i < N; ++i) {
          inv_mt.perm[perm[i]] = i;
          inv_mt.scale[perm[i]] = f.inv(lambda[i]);
        }
        mt = inv_mt;
      }
      return EquivalenceResult{EquivalenceResult::Equivalent, mt, "frame search"};
    }
    for (size_t j = 0; j < N; ++j) {
      if (in_use[j]) continue;
      J[depth] = j;
      in_use[j] = true;
      auto r = descend(depth + 1);
      in_use[j] = false;
      if (r) return r;
    }
    return std::nullopt;
  };

  auto result = descend(0);
  if (result) return *result;
  return EquivalenceResult{EquivalenceResult::NotEquivalent, std::nullopt,
                           "exhaustive frame search found no monomial map"};
}

}  // namespace

EquivalenceResult monomial_equivalent(const CodeDescriptor& c1, const CodeDescriptor& c2,
                                      const EquivalenceBudget& budget) {
  if (c1.length != c2.length || c1.dim != c2.dim)
    fail(Err::ShapeMismatch, "codes differ in length or dimension");
  if (!c1.field().same_as(c2.field())) fail(Err::ShapeMismatch, "codes live in different fields");

  try {
    if (weight_enumerator(c1, budget.max_codewords) !=
        weight_enumerator(c2, budget.max_codewords))
      return {EquivalenceResult::NotEquivalent, std::nullopt, "weight enumerators differ"};
  } catch (const Error& e) {
    if (e.kind() != Err::GuardExceeded) throw;  // enumerator stage skipped past guard
  }

  if (auto frame = find_frame(c1.G))
    return frame_search(c1, c2, *frame, budget.max_candidates, false);
  if (auto frame = find_frame(c2.G))
    return frame_search(c2, c1, *frame, budget.max_candidates, true);
  return {EquivalenceResult::Unknown, std::nullopt, "no projective frame in either code"};
}

NonGrsCertificate nongrs_certificate(const CodeDescriptor& code, u64 budget) {
  NonGrsCertificate out;
  if (code.dim < 2 || 2 * code.dim - 1 > code.length) {
    out.kind = NonGrsCertificate::Inconclusive;
    return out;
  }
  u64 pairs = u64(code.dim) * (code.dim + 1) / 2;
  if (pairs * code.length > budget) fail(Err::GuardExceeded, "Schur-square rank over budget");
  out.schur_dim = schur_square_dim(code);
  out.kind = out.schur_dim > 2 * code.dim - 1 ? NonGrsCertificate::NonGrs
                                              : NonGrsCertificate::Inconclusive;
  return out;
}

}  // namespace ehzkit
