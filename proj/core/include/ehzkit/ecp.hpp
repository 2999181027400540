#pragma once

#include "ehzkit/codes.hpp"

namespace ehzkit {

enum class EcpCase { MdsOdd, MdsEven, NmdsOdd, NmdsEven };
const char* ecp_case_name(EcpCase c);
EcpCase ecp_case_from_name(const std::string& s);

enum class VPrimeExponent { K, KMinus1 };

/// Point/multiplier data of the fractional substitution b = (a - gamma)^{-1}
/// that rewrites an extended code over S as a plain code over S'.
struct TransformedConfig {
  FieldPtr field;
  u64 gamma = 0;
  VPrimeExponent exponent = VPrimeExponent::K;
  FqVec s_prime;  // (a_i - gamma)^{-1} for i <= n, then 0
  FqVec v_prime;  // v_i (a_i - gamma)^e, then 1
  FqVec u_prime;  // Lagrange weights of s_prime in closed form
};

TransformedConfig gamma_transform(const EvalConfig& cfg, u32 k, u64 gamma,
                                  VPrimeExponent exponent = VPrimeExponent::K);

/// An error-correcting pair (A, B) for one extended Han-Zhang code:
/// generator matrices plus the decoding radius and which of the four
/// classification/parity cases produced it.
struct EcpPair {
  EcpCase case_tag = EcpCase::MdsEven;
  u32 ell = 0;
  FqMatrix G_A;
  FqMatrix G_B;
  std::optional<TransformedConfig> transform;  // MdsOdd only
};

/// Achievable decoding radius and case tag for an ehz code.
std::pair<u32, EcpCase> decoding_radius(const CodeDescriptor& code);

/// Constructs the pair for the code's case; the result always passes
/// verify_ecp (for the odd MDS case the multiplier exponent falls back from
/// k to k-1 if verification rejects the first variant).
EcpPair build_ecp(const CodeDescriptor& code, std::optional<u64> gamma = std::nullopt);

struct EcpReport {
  bool cond_i = false;    // A * B contained in the dual code
  bool cond_ii = false;   // d(B dual) > ell
  bool cond_iii = false;  // dim(A) > ell
  bool cond_iv = false;   // d(A) + d(C) > N
  bool all() const { return cond_i && cond_ii && cond_iii && cond_iv; }
};

EcpReport verify_ecp(const EcpPair& pair, const CodeDescriptor& code,
                     u64 guard = kDefaultGuard);

struct DecodeTrace {
  FqVec syndrome;
  FqMatrix s_basis;            // kernel of G_B diag(y) G_A^T
  FqVec s0;                    // chosen kernel vector
  FqVec locator;               // a = s0 G_A
  std::vector<size_t> zeros;   // Z = z(a), 0-based
};

struct DecodeOutcome {
  enum Kind { AlreadyCodeword, Corrected, TooManyErrors } kind = TooManyErrors;
  FqVec codeword;
  FqVec error;
  std::vector<size_t> error_positions;  // 0-based
  std::string reason;
  DecodeTrace trace;
};

/// Error-locating decode: find a in A vanishing on the error support via
/// G_B diag(y) G_A^T s^T = 0, then solve H x^T = H y^T restricted to z(a).
DecodeOutcome ecp_decode(const CodeDescriptor& code, const EcpPair& pair, const FqVec& y);

}  // namespace ehzkit
