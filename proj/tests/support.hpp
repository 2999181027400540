#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ehzkit/codes.hpp"

namespace ehzkit::test {

inline FieldPtr f17() { return Field::make(17); }
inline FieldPtr f13() { return Field::make(13); }
inline FieldPtr f11() { return Field::make(11); }
inline FieldPtr f19() { return Field::make(19); }
inline FieldPtr f16() { return Field::make(2, 4, {1, 1, 0, 0, 1}); }  // X^4 + X + 1

/// comma-separated packed values ("w^e" allowed)
inline FqVec pv(const Field& f, const std::string& csv) {
  FqVec out;
  std::string tok;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(parse_packed(tok, f));
      tok.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      tok += c;
    }
  }
  if (!tok.empty()) out.push_back(parse_packed(tok, f));
  return out;
}

inline u64 w(const Field& f, i64 e) { return f.pow(*f.generator_value(), e); }

inline u64 rnd_below(std::mt19937_64& rng, u64 bound) {
  return std::uniform_int_distribution<u64>(0, bound - 1)(rng);
}

inline u64 rnd_elem(std::mt19937_64& rng, const Field& f) { return rnd_below(rng, f.q()); }

inline u64 rnd_nonzero(std::mt19937_64& rng, const Field& f) {
  return 1 + rnd_below(rng, f.q() - 1);
}

inline FqVec rnd_distinct_points(std::mt19937_64& rng, const Field& f, size_t n) {
  std::vector<u64> pool(f.q());
  for (u64 i = 0; i < f.q(); ++i) pool[i] = i;
  for (size_t i = 0; i < n; ++i) std::swap(pool[i], pool[i + rnd_below(rng, pool.size() - i)]);
  return FqVec(pool.begin(), pool.begin() + n);
}

inline FqVec rnd_nonzero_mults(std::mt19937_64& rng, const Field& f, size_t n) {
  FqVec v(n);
  for (auto& x : v) x = rnd_nonzero(rng, f);
  return v;
}

inline Polynomial rnd_vk_poly(std::mt19937_64& rng, const FieldPtr& f, u32 k) {
  FqVec c(k + 1, 0);
  for (u32 i = 0; i + 1 < k; ++i) c[i] = rnd_elem(rng, *f);
  c[k] = rnd_elem(rng, *f);
  return Polynomial(f, c);
}

inline FqVec rnd_error(std::mt19937_64& rng, const Field& f, size_t n, size_t weight) {
  FqVec e(n, 0);
  std::vector<size_t> pos(n);
  for (size_t i = 0; i < n; ++i) pos[i] = i;
  for (size_t i = 0; i < weight; ++i) std::swap(pos[i], pos[i + rnd_below(rng, n - i)]);
  for (size_t i = 0; i < weight; ++i) e[pos[i]] = rnd_nonzero(rng, f);
  return e;
}

/// first n-subset of the field (lexicographic) whose k-zero-sum structure
/// matches want_zero_sum_free
inline std::optional<FqVec> find_eval_set(const Field& f, size_t n, u32 k,
                                          bool want_zero_sum_free) {
  std::optional<FqVec> found;
  for_each_subset(size_t(f.q()), n, [&](const std::vector<size_t>& idx) {
    FqVec pts(idx.begin(), idx.end());
    if (is_zero_sum_free(f, pts, k).ok == want_zero_sum_free) {
      found = pts;
      return false;
    }
    return true;
  });
  return found;
}

/// exact minimum distance via dependent parity-check columns: d is the least
/// w such that some w columns of H are linearly dependent (independent of the
/// message-enumeration route)
inline u32 distance_via_parity_columns(const CodeDescriptor& code) {
  for (u32 wgt = 1; wgt <= u32(code.length); ++wgt) {
    bool dep = false;
    for_each_subset(code.length, wgt, [&](const std::vector<size_t>& idx) {
      if (rank(code.H.columns(idx)) < idx.size()) {
        dep = true;
        return false;
      }
      return true;
    });
    if (dep) return wgt;
  }
  return u32(code.length) + 1;
}

}  // namespace ehzkit::test
