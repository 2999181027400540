#include "ehzkit/ecp.hpp"

#include <algorithm>

namespace ehzkit {

const char* ecp_case_name(EcpCase c) {
  switch (c) {
    case EcpCase::MdsOdd: return "mds-odd";
    case EcpCase::MdsEven: return "mds-even";
    case EcpCase::NmdsOdd: return "nmds-odd";
    case EcpCase::NmdsEven: return "nmds-even";
  }
  return "mds-even";
}

EcpCase ecp_case_from_name(const std::string& s) {
  if (s == "mds-odd") return EcpCase::MdsOdd;
  if (s == "mds-even") return EcpCase::MdsEven;
  if (s == "nmds-odd") return EcpCase::NmdsOdd;
  if (s == "nmds-even") return EcpCase::NmdsEven;
  fail(Err::ParseError, "unknown ecp case '" + s + "'");
}

TransformedConfig gamma_transform(const EvalConfig& cfg, u32 k, u64 gamma,
                                  VPrimeExponent exponent) {
  const Field& f = *cfg.field;
  size_t n = cfg.n();
  for (u64 a : cfg.points)
    if (a == gamma) fail(Err::GammaInS, "gamma must avoid the evaluation set");

  TransformedConfig tc;
  tc.field = cfg.field;
  tc.gamma = gamma;
  tc.exponent = exponent;
  tc.s_prime.resize(n + 1);
  tc.v_prime.resize(n + 1);
  tc.u_prime.resize(n + 1);

  i64 e = exponent == VPrimeExponent::K ? i64(k) : i64(k) - 1;
  for (size_t i = 0; i < n; ++i) {
    u64 shifted = f.sub(cfg.points[i], gamma);
    tc.s_prime[i] = f.inv(shifted);
    tc.v_prime[i] = f.mul(cfg.mults[i], f.pow(shifted, e));
  }
  tc.s_prime[n] = 0;
  tc.v_prime[n] = 1;

  // u'_i = (a_i - g)^n prod_{j != i} (a_j - g)(a_j - a_i)^{-1};
  // u'_{n+1} = (-1)^n prod_j (a_j - g)
  for (size_t i = 0; i < n; ++i) {
    u64 acc = f.pow(f.sub(cfg.points[i], gamma), i64(n));
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      acc = f.mul(acc, f.sub(cfg.points[j], gamma));
      acc = f.mul(acc, f.inv(f.sub(cfg.points[j], cfg.points[i])));
    }
    tc.u_prime[i] = acc;
  }
  u64 prod = 1;
  for (size_t j = 0; j < n; ++j) prod = f.mul(prod, f.sub(cfg.points[j], gamma));
  if (n % 2 == 1) prod = f.neg(prod);
  tc.u_prime[n] = prod;
  return tc;
}

std::pair<u32, EcpCase> decoding_radius(const CodeDescriptor& code) {
  if (code.kind != CodeKind::Ehz) fail(Err::WrongKind, "decoding radius applies to ehz codes");
  size_t n = code.length - 1;
  u32 k = code.k_param;
  bool mds = classify_ehz(code).mds;
  bool even = (n - k) % 2 == 0;
  u32 ell = even ? u32((n - k) / 2) : u32((n - k - 1) / 2);
  EcpCase tag = mds ? (even ? EcpCase::MdsEven : EcpCase::MdsOdd)
                    : (even ? EcpCase::NmdsEven : EcpCase::NmdsOdd);
  return {ell, tag};
}

namespace {

u64 default_gamma(const EvalConfig& cfg) {
  const Field& f = *cfg.field;
  // first nonzero element outside S in canonical order; 0 only as a last resort
  for (u64 g = 1; g < f.q(); ++g)
    if (std::find(cfg.points.begin(), cfg.points.end(), g) == cfg.points.end()) return g;
  if (std::find(cfg.points.begin(), cfg.points.end(), u64(0)) == cfg.points.end()) return 0;
  fail(Err::BadDimension, "evaluation set exhausts the field; no gamma available");
}

FqVec ratio(const Field& f, const FqVec& num, const FqVec& den) {
  FqVec out(num.size());
  for (size_t i = 0; i < num.size(); ++i) out[i] = f.mul(num[i], f.inv(den[i]));
  return out;
}

EcpPair assemble(const CodeDescriptor& code, EcpCase tag, u32 ell,
                 std::optional<u64> gamma, VPrimeExponent exponent) {
  const EvalConfig& cfg = *code.config;
  const Field& f = code.field();
  size_t n = cfg.n();
  EcpPair pair;
  pair.case_tag = tag;
  pair.ell = ell;

  switch (tag) {
    case EcpCase::MdsOdd: {
      u64 g = gamma ? *gamma : default_gamma(cfg);
      TransformedConfig tc = gamma_transform(cfg, code.k_param, g, exponent);
      EvalConfig cfg_a(cfg.field, tc.s_prime);
      EvalConfig cfg_b(cfg.field, tc.s_prime, ratio(f, tc.u_prime, tc.v_prime));
      pair.G_A = grs(cfg_a, ell + 1).G;
      pair.G_B = grs(cfg_b, ell).G;
      pair.transform = std::move(tc);
      break;
    }
    case EcpCase::MdsEven:
    case EcpCase::NmdsEven: {
      EvalConfig cfg_a(cfg.field, cfg.points);
      pair.G_A = egrs(cfg_a, ell + 1).G;
      FqVec w = ratio(f, u_vector(f, cfg.points), cfg.mults);
      EvalConfig cfg_b(cfg.field, cfg.points, w);
      FqMatrix gb = egrs(cfg_b, ell).G;
      for (size_t r = 0; r < gb.rows(); ++r) gb.set(r, n, f.neg(gb.get(r, n)));
      pair.G_B = gb;
      break;
    }
    case EcpCase::NmdsOdd: {
      EvalConfig cfg_a(cfg.field, cfg.points);
      pair.G_A = hstack(grs(cfg_a, ell + 1).G, FqMatrix(cfg.field, ell + 1, 1));
      FqVec w = ratio(f, u_vector(f, cfg.points), cfg.mults);
      EvalConfig cfg_b(cfg.field, cfg.points, w);
      pair.G_B = egrs(cfg_b, ell).G;
      break;
    }
  }
  return pair;
}

}  // namespace

EcpPair build_ecp(const CodeDescriptor& code, std::optional<u64> gamma) {
  auto [ell, tag] = decoding_radius(code);
  EcpPair pair = assemble(code, tag, ell, gamma, VPrimeExponent::K);
  if (verify_ecp(pair, code).all()) return pair;
  if (tag == EcpCase::MdsOdd) {
    // the two multiplier-exponent conventions disagree in the literature;
    // keep whichever the verifier accepts
    EcpPair alt = assemble(code, tag, ell, gamma, VPrimeExponent::KMinus1);
    if (verify_ecp(alt, code).all()) return alt;
  }
  fail(Err::NoValidPair, "constructed pair failed Definition-style verification");
}

namespace {

// d(code spanned by rows of G) by message enumeration; G must have full row rank
u32 brute_distance(const FqMatrix& G, u64 guard) {
  CodeDescriptor tmp;
  tmp.kind = CodeKind::Generic;
  tmp.length = G.cols();
  tmp.dim = G.rows();
  tmp.G = G;
  tmp.H = FqMatrix(G.field_ptr(), 0, G.cols());
  return min_distance_bruteforce(tmp, guard);
}

}  // namespace

EcpReport verify_ecp(const EcpPair& pair, const CodeDescriptor& code, u64 guard) {
  const Field& f = code.field();
  size_t N = code.length;
  if (pair.G_A.cols() != N || pair.G_B.cols() != N)
    fail(Err::DimensionMismatch, "pair length differs from code length");
  EcpReport rep;

  // iii) dim A > ell
  rep.cond_iii = rank(pair.G_A) > pair.ell;

  // i) every pairwise Schur product of generator rows lies in C-dual
  {
    std::vector<FqVec> prods;
    for (size_t i = 0; i < pair.G_A.rows(); ++i)
      for (size_t j = 0; j < pair.G_B.rows(); ++j)
        prods.push_back(vec_schur(f, pair.G_A.row(i), pair.G_B.row(j)));
    rep.cond_i = row_space_contains(code.H, FqMatrix::from_rows(code.field_ptr(), prods));
  }

  // ii) d(B-dual) > ell, i.e. no ell columns of G_B are linearly dependent
  {
    rep.cond_ii = true;
    if (pair.ell > 0) {
      if (binomial_guarded(N, pair.ell, guard) > guard)
        fail(Err::GuardExceeded, "too many column subsets for condition ii");
      for_each_subset(N, pair.ell, [&](const std::vector<size_t>& idx) {
        if (rank(pair.G_B.columns(idx)) < idx.size()) {
          rep.cond_ii = false;
          return false;
        }
        return true;
      });
    }
  }

  // iv) d(A) + d(C) > N; brute force within the guard, else the analytic
  // value of the case's constituent (all are MDS evaluation codes except the
  // zero-extended odd-NMDS A, which loses one)
  {
    u32 dA;
    try {
      dA = brute_distance(pair.G_A, guard);
    } catch (const Error& e) {
      if (e.kind() != Err::GuardExceeded) throw;
      dA = u32(N - pair.ell - (pair.case_tag == EcpCase::NmdsOdd ? 1 : 0));
    }
    u32 dC = code.d ? code.d->value : min_distance_bruteforce(code, guard);
    rep.cond_iv = size_t(dA) + size_t(dC) > N;
  }
  return rep;
}

DecodeOutcome ecp_decode(const CodeDescriptor& code, const EcpPair& pair, const FqVec& y) {
  if (y.size() != code.length) fail(Err::DimensionMismatch, "received word length != N");
  const Field& f = code.field();
  DecodeOutcome out;
  out.reason = "more than " + std::to_string(pair.ell) + " errors";
  out.trace.syndrome = syndrome(code, y);

  if (vec_is_zero(out.trace.syndrome)) {
    out.kind = DecodeOutcome::AlreadyCodeword;
    out.codeword = y;
    out.error.assign(code.length, 0);
    out.reason.clear();
    return out;
  }

  // kernel of G_B diag(y) G_A^T
  FqMatrix M = matmul(matmul(pair.G_B, diag(code.field_ptr(), y)), transpose(pair.G_A));
  out.trace.s_basis = null_space(M);
  if (out.trace.s_basis.rows() == 0) {
    out.kind = DecodeOutcome::TooManyErrors;
    return out;
  }
  out.trace.s0 = out.trace.s_basis.row(0);
  out.trace.locator = vec_matmul(f, out.trace.s0, pair.G_A);
  for (size_t i = 0; i < out.trace.locator.size(); ++i)
    if (out.trace.locator[i] == 0) out.trace.zeros.push_back(i);
  const auto& Z = out.trace.zeros;

  // more zero positions than parity checks can never pin a unique error
  if (Z.size() > code.length - code.dim) {
    out.kind = DecodeOutcome::TooManyErrors;
    return out;
  }

  SolveResult sol = solve(code.H.columns(Z), out.trace.syndrome);
  if (sol.kind != SolveResult::Unique) {
    out.kind = DecodeOutcome::TooManyErrors;
    return out;
  }
  FqVec x(code.length, 0);
  for (size_t i = 0; i < Z.size(); ++i) x[Z[i]] = sol.x0[i];
  if (vec_weight(x) > pair.ell) {
    out.kind = DecodeOutcome::TooManyErrors;
    return out;
  }
  out.kind = DecodeOutcome::Corrected;
  out.error = x;
  out.codeword = vec_sub(f, y, x);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) out.error_positions.push_back(i);
  out.reason.clear();
  return out;
}

}  // namespace ehzkit
