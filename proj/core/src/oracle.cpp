#include "ehzkit/oracle.hpp"

#include "ehzkit/deephole.hpp"

namespace ehzkit {

namespace {
u64 checked_power(u64 base, u64 exp, u64 cap, const char* what) {
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) {
    if (r > cap / base) fail(Err::GuardExceeded, what);
    r *= base;
  }
  return r;
}
}  // namespace

NearestResult nearest_codeword(const CodeDescriptor& code, const FqVec& y,
                               const OracleBudget& budget) {
  if (y.size() != code.length) fail(Err::DimensionMismatch, "word length != N");
  const Field& f = code.field();
  checked_power(f.q(), code.dim, budget.max_codewords, "q^K codeword sweep over budget");

  NearestResult best;
  best.distance = u32(code.length) + 1;
  FqVec msg(code.dim, 0);
  while (true) {
    FqVec cw = vec_matmul(f, msg, code.G);
    u32 dist = 0;
    for (size_t i = 0; i < cw.size(); ++i) dist += (cw[i] != y[i]);
    if (dist < best.distance) {
      best.distance = dist;
      best.codeword = cw;
      best.unique = true;
    } else if (dist == best.distance) {
      best.unique = false;
    }
    size_t i = 0;
    while (i < code.dim && ++msg[i] == f.q()) msg[i++] = 0;
    if (i == code.dim) break;
  }
  return best;
}

u32 error_distance(const CodeDescriptor& code, const FqVec& y, const OracleBudget& budget) {
  return nearest_codeword(code, y, budget).distance;
}

std::vector<FqVec> all_deep_holes(const CodeDescriptor& code, const OracleBudget& budget) {
  const Field& f = code.field();
  checked_power(f.q(), code.length, budget.max_vectors, "q^N vector sweep over budget");
  u32 rho = covering_radius(code, RadiusMethod::Exhaustive, budget.max_vectors).rho;

  std::vector<FqVec> holes;
  FqVec v(code.length, 0);
  while (true) {
    if (error_distance(code, v, budget) == rho) holes.push_back(v);
    size_t i = 0;
    while (i < code.length && ++v[i] == f.q()) v[i++] = 0;
    if (i == code.length) break;
  }
  return holes;
}

}  // namespace ehzkit
