#include "ehzkit/codes.hpp"

#include <algorithm>
#include <set>

namespace ehzkit {

const char* kind_name(CodeKind k) {
  switch (k) {
    case CodeKind::Grs: return "grs";
    case CodeKind::Egrs: return "egrs";
    case CodeKind::Ehz: return "ehz";
    case CodeKind::RothLempel: return "roth-lempel";
    case CodeKind::Extension: return "extension";
    case CodeKind::Generic: return "generic";
  }
  return "generic";
}

CodeKind kind_from_name(const std::string& s) {
  if (s == "grs") return CodeKind::Grs;
  if (s == "egrs") return CodeKind::Egrs;
  if (s == "ehz") return CodeKind::Ehz;
  if (s == "roth-lempel" || s == "rl") return CodeKind::RothLempel;
  if (s == "extension") return CodeKind::Extension;
  if (s == "generic") return CodeKind::Generic;
  fail(Err::ParseError, "unknown code kind '" + s + "'");
}

EvalConfig::EvalConfig(FieldPtr f, FqVec pts, FqVec ms)
    : field(std::move(f)), points(std::move(pts)), mults(std::move(ms)) {
  if (points.size() != mults.size())
    fail(Err::DimensionMismatch, "points and multipliers differ in length");
  if (points.size() > field->q()) fail(Err::BadDimension, "more points than field elements");
  std::set<u64> seen;
  for (u64 a : points) {
    if (a >= field->q()) fail(Err::ParseError, "evaluation point out of range");
    if (!seen.insert(a).second) fail(Err::DuplicatePoints, "evaluation points must be distinct");
  }
  for (u64 v : mults) {
    if (v == 0) fail(Err::BadCoefficients, "multipliers must be nonzero");
    if (v >= field->q()) fail(Err::ParseError, "multiplier out of range");
  }
}

EvalConfig::EvalConfig(FieldPtr f, FqVec pts)
    : EvalConfig(std::move(f), FqVec(pts), FqVec(pts.size(), 1)) {}

Polynomial::Polynomial(FieldPtr f, FqVec coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  for (u64& v : c_) {
    if (v >= f_->q()) fail(Err::ParseError, "coefficient out of range");
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 Polynomial::eval(u64 x) const {
  u64 acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
  return acc;
}

bool Polynomial::in_fqx(u32 k) const { return degree() < int(k); }

bool Polynomial::in_vk(u32 k) const {
  return degree() <= int(k) && (k == 0 || coeff(k - 1) == 0);
}

FqVec u_vector(const Field& f, const FqVec& points) {
  size_t n = points.size();
  if (n < 2) fail(Err::BadDimension, "u-vector needs at least two points");
  std::set<u64> seen(points.begin(), points.end());
  if (seen.size() != n) fail(Err::DuplicatePoints, "evaluation points must be distinct");
  FqVec u(n);
  for (size_t i = 0; i < n; ++i) {
    u64 prod = 1;
    for (size_t j = 0; j < n; ++j)
      if (j != i) prod = f.mul(prod, f.sub(points[i], points[j]));
    u[i] = f.inv(prod);
  }
  return u;
}

namespace {

// rows w_i a_i^j for j = 0..k-1
FqMatrix power_rows(const EvalConfig& cfg, const FqVec& w, u32 k) {
  const Field& f = *cfg.field;
  FqMatrix G(cfg.field, k, cfg.n());
  for (size_t i = 0; i < cfg.n(); ++i) {
    u64 acc = w[i];
    for (u32 j = 0; j < k; ++j) {
      G.set(j, i, acc);
      acc = f.mul(acc, cfg.points[i]);
    }
  }
  return G;
}

// power rows with one extra coordinate; tail[j] goes in the last column
FqMatrix power_rows_tail(const EvalConfig& cfg, const FqVec& w, u32 k, const FqVec& tail) {
  FqMatrix core = power_rows(cfg, w, k);
  FqMatrix out(cfg.field, k, cfg.n() + 1);
  for (u32 j = 0; j < k; ++j) {
    for (size_t i = 0; i < cfg.n(); ++i) out.set(j, i, core.get(j, i));
    out.set(j, cfg.n(), tail[j]);
  }
  return out;
}

FqVec inverse_mults(const Field& f, const FqVec& v) {
  FqVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = f.inv(v[i]);
  return out;
}

void check_parity(const CodeDescriptor& code) {
  if (code.H.rows() > 0) {
    FqMatrix prod = matmul(code.G, transpose(code.H));
    for (size_t i = 0; i < prod.rows(); ++i)
      for (size_t j = 0; j < prod.cols(); ++j)
        if (prod.get(i, j) != 0)
          fail(Err::BadCoefficients, "construction drift: G H^T != 0");
  }
  if (rank(code.G) != code.dim) fail(Err::BadCoefficients, "generator rank != K");
  if (rank(code.H) != code.length - code.dim)
    fail(Err::BadCoefficients, "parity-check rank != N-K");
}

}  // namespace

CodeDescriptor generic_code(const FqMatrix& G) {
  CodeDescriptor c;
  c.kind = CodeKind::Generic;
  c.length = G.cols();
  RrefResult rr = rref(G);
  c.dim = rr.rank;
  c.G = G;
  c.H = null_space(G);
  if (rr.rank != G.rows()) {
    // keep a full-rank generator so K = rows(G) holds everywhere downstream
    FqMatrix basis(G.field_ptr(), rr.rank, G.cols());
    for (size_t i = 0; i < rr.rank; ++i)
      for (size_t j = 0; j < G.cols(); ++j) basis.set(i, j, rr.R.get(i, j));
    c.G = basis;
  }
  check_parity(c);
  return c;
}

CodeDescriptor grs(const EvalConfig& cfg, u32 k) {
  size_t n = cfg.n();
  if (k < 1 || k > n) fail(Err::BadDimension, "grs needs 1 <= k <= n");
  const Field& f = *cfg.field;
  CodeDescriptor c;
  c.kind = CodeKind::Grs;
  c.length = n;
  c.dim = k;
  c.k_param = k;
  c.config = cfg;
  c.G = power_rows(cfg, cfg.mults, k);
  if (n > k) {
    FqVec w = vec_schur(f, inverse_mults(f, cfg.mults), u_vector(f, cfg.points));
    c.H = power_rows(cfg, w, u32(n - k));
  } else {
    c.H = FqMatrix(cfg.field, 0, n);
  }
  c.d = DistanceInfo{u32(n - k + 1), DistanceInfo::Analytic};
  check_parity(c);
  return c;
}

CodeDescriptor egrs(const EvalConfig& cfg, u32 k) {
  size_t n = cfg.n();
  if (k < 1 || k > n) fail(Err::BadDimension, "egrs needs 1 <= k <= n");
  const Field& f = *cfg.field;
  CodeDescriptor c;
  c.kind = CodeKind::Egrs;
  c.length = n + 1;
  c.dim = k;
  c.k_param = k;
  c.config = cfg;
  FqVec tail_g(k, 0);
  tail_g[k - 1] = 1;
  c.G = power_rows_tail(cfg, cfg.mults, k, tail_g);
  // dual of an extended code is the extended dual with the last column negated
  FqVec w = vec_schur(f, inverse_mults(f, cfg.mults), u_vector(f, cfg.points));
  u32 hk = u32(n - k + 1);
  FqVec tail_h(hk, 0);
  tail_h[hk - 1] = f.neg(1);
  c.H = power_rows_tail(cfg, w, hk, tail_h);
  c.d = DistanceInfo{u32(n - k + 2), DistanceInfo::Analytic};
  check_parity(c);
  return c;
}

CodeDescriptor ehz(const EvalConfig& cfg, u32 k) {
  size_t n = cfg.n();
  const Field& f = *cfg.field;
  if (!(3 <= k && k + 2 <= n && n <= f.q()))
    fail(Err::BadDimension, "extended Han-Zhang code needs 3 <= k <= n-2 <= q-2");
  CodeDescriptor c;
  c.kind = CodeKind::Ehz;
  c.length = n + 1;
  c.dim = k;
  c.k_param = k;
  c.config = cfg;

  // generator: rows a^0..a^{k-2} with zero tail, then row a^k with tail 1
  FqMatrix low = power_rows_tail(cfg, cfg.mults, k - 1, FqVec(k - 1, 0));
  FqMatrix top(cfg.field, 1, n + 1);
  for (size_t i = 0; i < n; ++i)
    top.set(0, i, f.mul(cfg.mults[i], f.pow(cfg.points[i], i64(k))));
  top.set(0, n, 1);
  c.G = vstack(low, top);

  // parity check: rows (u_i/v_i) a^j, j = 0..n-k, tail (0,..,0,-1,-sum a_i)
  FqVec w = vec_schur(f, inverse_mults(f, cfg.mults), u_vector(f, cfg.points));
  u32 hk = u32(n - k + 1);
  FqVec tail(hk, 0);
  tail[hk - 2] = f.neg(1);
  u64 s = 0;
  for (u64 a : cfg.points) s = f.add(s, a);
  tail[hk - 1] = f.neg(s);
  c.H = power_rows_tail(cfg, w, hk, tail);
  check_parity(c);

  try {
    auto cls = classify_ehz(c);
    c.d = DistanceInfo{u32(cls.mds ? n - k + 2 : n - k + 1), DistanceInfo::Analytic};
  } catch (const Error& e) {
    if (e.kind() != Err::GuardExceeded) throw;  // d stays unset past the subset guard
  }
  return c;
}

CodeDescriptor roth_lempel(FieldPtr f, const FqVec& points, u32 k, u64 delta) {
  size_t n = points.size();
  if (!(3 <= k && k <= n && n <= f->q()))
    fail(Err::BadDimension, "Roth-Lempel code needs 3 <= k <= n <= q");
  if (delta >= f->q()) fail(Err::ParseError, "delta out of range");
  EvalConfig cfg(f, points, FqVec(n, 1));
  CodeDescriptor c;
  c.kind = CodeKind::RothLempel;
  c.length = n + 2;
  c.dim = k;
  c.k_param = k;
  c.config = cfg;
  c.extras["delta"] = std::to_string(delta);

  FqMatrix core = power_rows(cfg, cfg.mults, k);
  FqMatrix G(f, k, n + 2);
  for (u32 j = 0; j < k; ++j)
    for (size_t i = 0; i < n; ++i) G.set(j, i, core.get(j, i));
  if (k >= 2) G.set(k - 2, n + 1, 1);
  G.set(k - 1, n, 1);
  G.set(k - 1, n + 1, delta);
  c.G = G;
  c.H = null_space(G);
  check_parity(c);
  return c;
}

FqVec encode_ehz(const CodeDescriptor& code, const Polynomial& poly) {
  if (code.kind != CodeKind::Ehz) fail(Err::WrongKind, "encode_ehz needs an ehz descriptor");
  if (!poly.field().same_as(code.field())) fail(Err::FieldMismatch, "message field differs");
  u32 k = code.k_param;
  if (!poly.in_vk(k)) fail(Err::NotInVk, "message polynomial must lie in V_k");
  const EvalConfig& cfg = *code.config;
  const Field& f = code.field();
  FqVec cw(code.length);
  for (size_t i = 0; i < cfg.n(); ++i) cw[i] = f.mul(cfg.mults[i], poly.eval(cfg.points[i]));
  cw[cfg.n()] = poly.coeff(k);
  return cw;
}

FqVec syndrome(const CodeDescriptor& code, const FqVec& y) {
  if (y.size() != code.length) fail(Err::DimensionMismatch, "received word length != N");
  return mat_vecmul(code.H, y);
}

u32 min_distance_bruteforce(const CodeDescriptor& code, u64 guard) {
  const Field& f = code.field();
  size_t kdim = code.dim;
  u64 total = 1;
  for (size_t i = 0; i < kdim; ++i) {
    if (total > guard / f.q()) fail(Err::GuardExceeded, "q^K message enumeration over guard");
    total *= f.q();
  }
  if (total > guard) fail(Err::GuardExceeded, "q^K message enumeration over guard");

  FqVec msg(kdim, 0);
  size_t best = code.length + 1;
  // odometer over the message space, canonical field order
  while (true) {
    size_t i = 0;
    while (i < kdim && ++msg[i] == f.q()) msg[i++] = 0;
    if (i == kdim) break;
    FqVec cw = vec_matmul(f, msg, code.G);
    best = std::min(best, vec_weight(cw));
    if (best == 1) break;
  }
  return u32(best);
}

u64 binomial_guarded(u64 n, u64 k, u64 guard) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u64 r = 1;
  for (u64 i = 1; i <= k; ++i) {
    if (r > guard) return guard + 1;
    r = r * (n - k + i) / i;
  }
  return r;
}

void for_each_subset(size_t n, size_t k,
                     const std::function<bool(const std::vector<size_t>&)>& fn) {
  if (k > n) return;
  if (k == 0) {
    fn({});
    return;
  }
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    size_t i = k;
    while (i-- > 0) {
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

std::optional<std::vector<size_t>> first_dependent_columns(const FqMatrix& M, size_t k,
                                                           u64 guard) {
  if (k > M.cols() || k != M.rows())
    fail(Err::DimensionMismatch, "minor test wants k = rows <= cols");
  if (binomial_guarded(M.cols(), k, guard) > guard)
    fail(Err::GuardExceeded, "too many column subsets");
  std::optional<std::vector<size_t>> hit;
  for_each_subset(M.cols(), k, [&](const std::vector<size_t>& idx) {
    if (det(M.columns(idx)).is_zero()) {
      hit = idx;
      return false;
    }
    return true;
  });
  return hit;
}

bool is_mds_minors(const CodeDescriptor& code, u64 guard) {
  return !first_dependent_columns(code.G, code.dim, guard).has_value();
}

EhzClass classify_ehz(const CodeDescriptor& code, u64 guard) {
  if (code.kind != CodeKind::Ehz) fail(Err::WrongKind, "classification applies to ehz codes");
  const EvalConfig& cfg = *code.config;
  auto zs = is_zero_sum_free(code.field(), cfg.points, code.k_param, guard);
  EhzClass out;
  out.mds = zs.ok;
  out.witness = zs.witness;
  return out;
}

CodeDescriptor dual(const CodeDescriptor& code) {
  CodeDescriptor c;
  c.kind = CodeKind::Generic;
  c.length = code.length;
  c.dim = code.length - code.dim;
  c.G = null_space(code.G);
  c.H = code.G;
  check_parity(c);
  return c;
}

CodeDescriptor schur_product(const CodeDescriptor& a, const CodeDescriptor& b) {
  if (a.length != b.length) fail(Err::DimensionMismatch, "Schur product lengths differ");
  if (!a.field().same_as(b.field())) fail(Err::FieldMismatch, "Schur product fields differ");
  const Field& f = a.field();
  std::vector<FqVec> prods;
  prods.reserve(a.G.rows() * b.G.rows());
  for (size_t i = 0; i < a.G.rows(); ++i)
    for (size_t j = 0; j < b.G.rows(); ++j)
      prods.push_back(vec_schur(f, a.G.row(i), b.G.row(j)));
  FqMatrix span = FqMatrix::from_rows(a.field_ptr(), prods);
  RrefResult rr = rref(span);
  FqMatrix basis(a.field_ptr(), rr.rank, a.length);
  for (size_t i = 0; i < rr.rank; ++i)
    for (size_t j = 0; j < a.length; ++j) basis.set(i, j, rr.R.get(i, j));
  CodeDescriptor c;
  c.kind = CodeKind::Generic;
  c.length = a.length;
  c.dim = rr.rank;
  c.G = basis;
  c.H = null_space(basis);
  check_parity(c);
  return c;
}

size_t schur_square_dim(const CodeDescriptor& code) {
  const Field& f = code.field();
  std::vector<FqVec> prods;
  for (size_t i = 0; i < code.G.rows(); ++i)
    for (size_t j = i; j < code.G.rows(); ++j)
      prods.push_back(vec_schur(f, code.G.row(i), code.G.row(j)));
  return rank(FqMatrix::from_rows(code.field_ptr(), prods));
}

SubsetVerdict is_nk_delta_set(const Field& f, const FqVec& points, u32 k, u64 delta,
                              u64 guard) {
  if (binomial_guarded(points.size(), k, guard) > guard)
    fail(Err::GuardExceeded, "too many k-subsets");
  SubsetVerdict out;
  out.ok = true;
  for_each_subset(points.size(), k, [&](const std::vector<size_t>& idx) {
    u64 s = 0;
    for (size_t i : idx) s = f.add(s, points[i]);
    if (s == delta) {
      out.ok = false;
      out.witness.clear();
      for (size_t i : idx) out.witness.push_back(points[i]);
      return false;
    }
    return true;
  });
  return out;
}

SubsetVerdict is_zero_sum_free(const Field& f, const FqVec& points, u32 k, u64 guard) {
  return is_nk_delta_set(f, points, k, 0, guard);
}

FqVec elementary_symmetric(const Field& f, const FqVec& t) {
  // coefficients of prod (x + t_i): e[i] holds sigma_i
  FqVec e(t.size() + 1, 0);
  e[0] = 1;
  size_t used = 0;
  for (u64 ti : t) {
    ++used;
    for (size_t i = used; i > 0; --i) e[i] = f.add(e[i], f.mul(ti, e[i - 1]));
  }
  return e;
}

u64 sigma(const Field& f, const FqVec& t, int i) {
  if (i < 0 || i > int(t.size())) return 0;
  return elementary_symmetric(f, t)[size_t(i)];
}

}  // namespace ehzkit
