#pragma once

#include "ehzkit/deephole.hpp"

namespace ehzkit {

struct NonGrsProof {
  enum Kind { SchurSquareDim, Asserted } kind = Asserted;
  size_t schur_dim = 0;  // computed value in either case, when available
  std::string tag;       // construction the assertion rests on
};

struct RlEquivalence {
  enum Kind { EquivalentTo, NotEquivalent, Unknown } kind = Unknown;
  FqVec deltas_equivalent;
  FqVec deltas_tested;
  std::string note;
};

/// One lengthened non-GRS MDS code obtained by stacking a deep-hole row under
/// the parent generator and appending the unit column.
struct ExtensionCertificate {
  CodeDescriptor parent;
  DeepHoleQuery query;
  std::string branch;  // class1-eq | class1-set | class2
  FqVec deep_hole_row;
  CodeDescriptor child;  // [n+2, k+1, n-k+2]
  bool mds_proof = false;
  NonGrsProof nongrs;
  RlEquivalence rl;
};

/// Parent must be an MDS ehz code and the query must pass the applicable
/// closed-form deep-hole criterion; builds and minor-certifies the child.
ExtensionCertificate extend_with_deep_hole(const CodeDescriptor& code, const DeepHoleQuery& q,
                                           u64 guard = kDefaultGuard);

struct Algorithm2Limits {
  u64 max_outputs = UINT64_MAX;
  std::optional<FqVec> g_kp1_values;
  std::optional<FqVec> g_km1_values;
  std::optional<std::vector<Polynomial>> f_values;  // full polynomials; else f = f_k x^k reps
  std::optional<FqVec> f_k_values;
  std::optional<FqVec> uv_values;  // u_last * v_last products
  std::optional<std::string> only_branch;
  u64 guard = kDefaultGuard;
};

/// Sweeps coefficient space and emits one certificate per qualifying deep
/// hole; the branch conditions depend on f only through f_k and on
/// (u_last, v_last) only through their product, so the default loops run over
/// f_k representatives f_k x^k and the product. Returns false from the sink
/// to stop early.
void algorithm2_enumerate(const CodeDescriptor& code, const Algorithm2Limits& limits,
                          const std::function<bool(ExtensionCertificate)>& sink);
std::vector<ExtensionCertificate> algorithm2_collect(const CodeDescriptor& code,
                                                     const Algorithm2Limits& limits);

struct MonomialTransform {
  std::vector<size_t> perm;  // column i of c1 goes to position perm[i] of c2
  FqVec scale;               // scaled by scale[i]
};

struct EquivalenceResult {
  enum Kind { Equivalent, NotEquivalent, Unknown } kind = Unknown;
  std::optional<MonomialTransform> transform;
  std::string witness;
};

struct EquivalenceBudget {
  u64 max_codewords = kDefaultGuard;  // weight-enumerator stage
  u64 max_candidates = kDefaultGuard;   // frame images tried in the search stage
};

/// Two-stage check: weight enumerators first, then a complete backtracking
/// search over projective-frame images. NotEquivalent is only reported when
/// one of the two stages is conclusive; budget exhaustion yields Unknown.
EquivalenceResult monomial_equivalent(const CodeDescriptor& c1, const CodeDescriptor& c2,
                                      const EquivalenceBudget& budget = {});

struct NonGrsCertificate {
  enum Kind { NonGrs, Inconclusive } kind = Inconclusive;
  size_t schur_dim = 0;
};

/// Sufficient criterion only: a Schur square larger than 2K-1 rules out GRS;
/// anything else (including 2K-1 > N or K = 1) is Inconclusive.
NonGrsCertificate nongrs_certificate(const CodeDescriptor& code, u64 budget = kDefaultGuard);

/// Weight distribution A_0..A_N by message enumeration.
std::vector<u64> weight_enumerator(const CodeDescriptor& code, u64 guard = kDefaultGuard);

}  // namespace ehzkit
