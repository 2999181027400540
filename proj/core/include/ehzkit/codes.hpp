#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "ehzkit/fqmat.hpp"

namespace ehzkit {

enum class CodeKind { Grs, Egrs, Ehz, RothLempel, Extension, Generic };

const char* kind_name(CodeKind k);
CodeKind kind_from_name(const std::string& s);

/// Evaluation data (S, v): distinct points a_1..a_n and nonzero multipliers.
struct EvalConfig {
  FieldPtr field;
  FqVec points;
  FqVec mults;

  EvalConfig() = default;
  EvalConfig(FieldPtr f, FqVec points, FqVec mults);
  /// all-ones multipliers
  EvalConfig(FieldPtr f, FqVec points);
  size_t n() const { return points.size(); }
};

/// Polynomial over F_q, ascending coefficients, trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(FieldPtr f, FqVec coeffs);
  static Polynomial zero(FieldPtr f) { return Polynomial(std::move(f), {}); }

  const FieldPtr& field_ptr() const { return f_; }
  const Field& field() const { return *f_; }
  const FqVec& coeffs() const { return c_; }
  int degree() const { return int(c_.size()) - 1; }
  u64 coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 eval(u64 x) const;

  /// degree < k
  bool in_fqx(u32 k) const;
  /// degree <= k with the x^{k-1} coefficient zero
  bool in_vk(u32 k) const;

 private:
  FieldPtr f_;
  FqVec c_;
};

struct DistanceInfo {
  u32 value = 0;
  enum Method { Analytic, BruteForce } method = Analytic;
};

/// A linear [N,K]_q code: generator, parity-check, construction metadata.
/// Constructors guarantee rank(G) = K, rank(H) = N-K and G H^T = 0.
struct CodeDescriptor {
  CodeKind kind = CodeKind::Generic;
  size_t length = 0;  // N
  size_t dim = 0;     // K
  FqMatrix G;
  FqMatrix H;
  std::optional<EvalConfig> config;
  u32 k_param = 0;  // polynomial-space parameter k of the construction
  std::map<std::string, std::string> extras;
  std::optional<DistanceInfo> d;

  const Field& field() const { return G.field(); }
  const FieldPtr& field_ptr() const { return G.field_ptr(); }
};

/// Wraps a raw generator matrix; H is computed as the kernel.
CodeDescriptor generic_code(const FqMatrix& G);

/// Lagrange multipliers u_i = prod_{j != i} (a_i - a_j)^{-1}.
FqVec u_vector(const Field& f, const FqVec& points);

constexpr u64 kDefaultGuard = 10'000'000;

CodeDescriptor grs(const EvalConfig& cfg, u32 k);
CodeDescriptor egrs(const EvalConfig& cfg, u32 k);
/// Length n+1, dimension k, 3 <= k <= n-2 <= q-2; messages live in V_k and
/// the x^k coefficient rides in the extra coordinate.
CodeDescriptor ehz(const EvalConfig& cfg, u32 k);
CodeDescriptor roth_lempel(FieldPtr f, const FqVec& points, u32 k, u64 delta);

FqVec encode_ehz(const CodeDescriptor& code, const Polynomial& f);
FqVec syndrome(const CodeDescriptor& code, const FqVec& y);

u32 min_distance_bruteforce(const CodeDescriptor& code, u64 guard = kDefaultGuard);

/// First size-k column subset of M with singular square submatrix, if any.
std::optional<std::vector<size_t>> first_dependent_columns(const FqMatrix& M, size_t k,
                                                           u64 guard = kDefaultGuard);
bool is_mds_minors(const CodeDescriptor& code, u64 guard = kDefaultGuard);

struct EhzClass {
  bool mds = false;
  FqVec witness;  // k-subset of S summing to zero when NMDS
};
EhzClass classify_ehz(const CodeDescriptor& code, u64 guard = kDefaultGuard);

CodeDescriptor dual(const CodeDescriptor& code);
CodeDescriptor schur_product(const CodeDescriptor& a, const CodeDescriptor& b);
size_t schur_square_dim(const CodeDescriptor& code);

struct SubsetVerdict {
  bool ok = false;
  FqVec witness;  // offending subset when !ok
};
SubsetVerdict is_zero_sum_free(const Field& f, const FqVec& points, u32 k,
                               u64 guard = kDefaultGuard);
SubsetVerdict is_nk_delta_set(const Field& f, const FqVec& points, u32 k, u64 delta,
                              u64 guard = kDefaultGuard);

/// sigma_0..sigma_{|T|} of the multiset T.
FqVec elementary_symmetric(const Field& f, const FqVec& t);
/// sigma_i with the out-of-range convention sigma_i = 0 for i < 0 or i > |T|.
u64 sigma(const Field& f, const FqVec& t, int i);

u64 binomial_guarded(u64 n, u64 k, u64 guard);

/// Visits k-subsets of 0..n-1 in lexicographic order until fn returns false.
void for_each_subset(size_t n, size_t k, const std::function<bool(const std::vector<size_t>&)>& fn);

}  // namespace ehzkit
