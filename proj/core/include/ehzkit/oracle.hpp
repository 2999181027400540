#pragma once

#include "ehzkit/codes.hpp"

namespace ehzkit {

/// Caps on the deliberately naive reference searches.
struct OracleBudget {
  u64 max_codewords = kDefaultGuard;  // q^K sweeps
  u64 max_vectors = kDefaultGuard;    // q^N sweeps
  u64 max_subsets = kDefaultGuard;    // binomial sweeps
};

struct NearestResult {
  FqVec codeword;
  u32 distance = 0;
  bool unique = true;
};

/// Exact maximum-likelihood reference: scans every codeword in canonical
/// message order and keeps the first minimizer; unique=false on ties.
NearestResult nearest_codeword(const CodeDescriptor& code, const FqVec& y,
                               const OracleBudget& budget = {});

u32 error_distance(const CodeDescriptor& code, const FqVec& y, const OracleBudget& budget = {});

/// Every vector attaining the covering radius, in canonical order; tiny
/// instances only (q^N scan).
std::vector<FqVec> all_deep_holes(const CodeDescriptor& code, const OracleBudget& budget = {});

}  // namespace ehzkit
