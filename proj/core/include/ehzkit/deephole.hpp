#pragma once

#include "ehzkit/codes.hpp"

namespace ehzkit {

/// Candidate vector (v, v_last) * (g(a_1),..,g(a_n), u_last) with
/// g = g_kp1 x^{k+1} + g_km1 x^{k-1} + f and f in V_k.
struct DeepHoleQuery {
  u64 g_kp1 = 0;
  u64 g_km1 = 0;
  Polynomial f;
  u64 u_last = 0;
  u64 v_last = 0;
};

enum class DeepHoleMethod { StackMds, Class1, Class2, Exhaustive };
const char* deep_hole_method_name(DeepHoleMethod m);

struct DeepHoleReport {
  FqVec vector;
  bool verdict = false;
  DeepHoleMethod method = DeepHoleMethod::StackMds;
  std::string certificate;
};

enum class RadiusMethod { Exhaustive, TheoremValue };

struct CoveringRadiusReport {
  u32 rho = 0;
  RadiusMethod method = RadiusMethod::Exhaustive;
  std::optional<FqVec> worst_coset_witness;
};

/// Exhaustive: coset-leader weights over all q^{N-K} syndromes by
/// increasing-weight error enumeration. TheoremValue: n-k+1, ehz codes only.
CoveringRadiusReport covering_radius(const CodeDescriptor& code, RadiusMethod method,
                                     u64 guard = kDefaultGuard);

/// Stack w under G and test the (K+1)-column minors: for an ehz code this is
/// exactly the deep-hole predicate.
DeepHoleReport is_deep_hole(const CodeDescriptor& code, const FqVec& w,
                            u64 guard = kDefaultGuard);

/// Closed form for g_kp1 = 0, g_km1 != 0: deep hole iff u*v = f_k or S is an
/// (n, k, g_km1 (u*v - f_k)^{-1})-set.
DeepHoleReport class1_is_deep_hole(const CodeDescriptor& code, const DeepHoleQuery& q,
                                   u64 guard = kDefaultGuard);

/// Values of g_km1 that destroy some (k+1)-minor, from the degree-(k+1) class
/// criterion; the query is a deep hole iff g_km1 avoids the whole set.
FqVec class2_forbidden_set(const CodeDescriptor& code, u64 g_kp1, u64 f_k, u64 uv,
                           u64 guard = kDefaultGuard);

/// Accepts g_kp1 = 0 as well, in which case the verdict coincides with the
/// class-1 criterion.
DeepHoleReport class2_is_deep_hole(const CodeDescriptor& code, const DeepHoleQuery& q,
                                   u64 guard = kDefaultGuard);

FqVec evaluate_deep_hole_vector(const CodeDescriptor& code, const DeepHoleQuery& q);

/// Coset-leader weight of the given syndrome, searching error patterns of
/// weight 0..max_weight; nullopt if nothing within range matches.
std::optional<u32> coset_leader_weight(const CodeDescriptor& code, const FqVec& syn,
                                       u32 max_weight, u64 guard = kDefaultGuard);

}  // namespace ehzkit
