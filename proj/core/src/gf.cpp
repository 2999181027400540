#include "ehzkit/gf.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

namespace ehzkit {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::NotIrreducible: return "NotIrreducible";
    case Err::NotMonic: return "NotMonic";
    case Err::FieldTooLarge: return "FieldTooLarge";
    case Err::BadGenerator: return "BadGenerator";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::ParseError: return "ParseError";
    case Err::NoGenerator: return "NoGenerator";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NotSquare: return "NotSquare";
    case Err::DuplicatePoints: return "DuplicatePoints";
    case Err::BadDimension: return "BadDimension";
    case Err::GuardExceeded: return "GuardExceeded";
    case Err::WrongKind: return "WrongKind";
    case Err::NotInVk: return "NotInVk";
    case Err::GammaInS: return "GammaInS";
    case Err::NoValidPair: return "NoValidPair";
    case Err::NotMds: return "NotMds";
    case Err::NotDeepHole: return "NotDeepHole";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::BadCoefficients: return "BadCoefficients";
  }
  return "Error";
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

constexpr u64 kMaxQ = u64(1) << 32;

// polynomial helpers over F_p, coefficients ascending, trailing zeros allowed
int poly_deg(const std::vector<u64>& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[size_t(i)] != 0) return i;
  return -1;
}

// remainder of a / b over F_p, b nonzero
std::vector<u64> poly_mod(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
  int db = poly_deg(b);
  u64 lead_inv = 1;
  {
    // modular inverse of b's leading coefficient
    u64 lead = b[size_t(db)] % p, t = lead, e = p - 2, r = 1;
    while (e) {
      if (e & 1) r = r * t % p;
      t = t * t % p;
      e >>= 1;
    }
    lead_inv = r;
  }
  for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
    u64 c = a[size_t(da)] * lead_inv % p;
    for (int j = 0; j <= db; ++j) {
      u64 sub = c * (b[size_t(j)] % p) % p;
      size_t idx = size_t(da - db + j);
      a[idx] = (a[idx] + p - sub) % p;
    }
  }
  return a;
}

bool poly_is_zero(const std::vector<u64>& a) { return poly_deg(a) < 0; }

// exhaustive trial division by all monic polynomials of degree <= m/2
bool poly_irreducible(const std::vector<u64>& mod, u64 p, u32 m) {
  if (m == 1) return true;
  for (u32 d = 1; 2 * d <= m; ++d) {
    // enumerate monic divisors of degree d by odometer over the low coefficients
    std::vector<u64> div(d + 1, 0);
    div[d] = 1;
    while (true) {
      if (poly_is_zero(poly_mod(mod, div, p))) return false;
      size_t i = 0;
      while (i < d && ++div[i] == p) div[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

}  // namespace

FieldPtr Field::make(u64 p, u32 m, const std::vector<u64>& modulus,
                     std::optional<u64> generator) {
  if (!is_prime_u64(p)) fail(Err::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) fail(Err::BadDimension, "extension degree must be >= 1");

  u64 q = 1;
  for (u32 i = 0; i < m; ++i) {
    if (q > kMaxQ / p) fail(Err::FieldTooLarge, "q = p^m exceeds 2^32");
    q *= p;
  }
  if (q > kMaxQ) fail(Err::FieldTooLarge, "q = p^m exceeds 2^32");

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = q;

  if (m == 1) {
    if (!modulus.empty()) fail(Err::NotMonic, "modulus only applies to extension fields");
  } else {
    if (modulus.size() != size_t(m) + 1)
      fail(Err::NotMonic, "modulus must list m+1 coefficients c0..cm");
    std::vector<u64> mod(modulus.size());
    for (size_t i = 0; i < modulus.size(); ++i) mod[i] = modulus[i] % p;
    if (mod[m] != 1) fail(Err::NotMonic, "modulus must be monic");
    if (!poly_irreducible(mod, p, m))
      fail(Err::NotIrreducible, "modulus is reducible over F_p");
    f->modulus_ = std::move(mod);
  }

  if (generator) {
    if (*generator == 0 || *generator >= q) fail(Err::BadGenerator, "generator out of range");
    if (f->order(*generator) != q - 1)
      fail(Err::BadGenerator, "designated generator does not have order q-1");
    f->generator_ = *generator;
  } else if (m > 1 && q > 2) {
    // X itself, packed as p
    if (f->order(p) == q - 1) f->generator_ = p;
  }
  return f;
}

bool Field::same_as(const Field& other) const {
  return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

u64 Field::add(u64 a, u64 b) const {
  if (m_ == 1) return (a + b) % p_;
  u64 r = 0, scale = 1;
  for (u32 j = 0; j < m_; ++j) {
    r += (a % p_ + b % p_) % p_ * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

u64 Field::neg(u64 a) const {
  if (m_ == 1) return (p_ - a % p_) % p_;
  u64 r = 0, scale = 1;
  for (u32 j = 0; j < m_; ++j) {
    r += (p_ - a % p_) % p_ * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

u64 Field::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 Field::mul(u64 a, u64 b) const {
  if (m_ == 1) return a % p_ * (b % p_) % p_;
  if (a == 0 || b == 0) return 0;
  // schoolbook product, then reduction by the monic modulus
  std::array<u64, 64> prod{};
  std::array<u64, 32> da{}, db{};
  for (u32 j = 0; j < m_; ++j) {
    da[j] = a % p_;
    a /= p_;
    db[j] = b % p_;
    b /= p_;
  }
  for (u32 i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (u32 j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (int i = int(2 * m_ - 2); i >= int(m_); --i) {
    u64 c = prod[size_t(i)];
    if (c == 0) continue;
    prod[size_t(i)] = 0;
    // X^m = -sum_{j<m} modulus_j X^j
    for (u32 j = 0; j < m_; ++j) {
      u64 sub = c * modulus_[j] % p_;
      size_t idx = size_t(i) - m_ + j;
      prod[idx] = (prod[idx] + p_ - sub) % p_;
    }
  }
  u64 r = 0, scale = 1;
  for (u32 j = 0; j < m_; ++j) {
    r += prod[j] * scale;
    scale *= p_;
  }
  return r;
}

u64 Field::inv(u64 a) const {
  if (a == 0) fail(Err::DivisionByZero, "inverse of zero");
  // Fermat: a^(q-2); q <= 2^32 keeps this cheap and branch-free
  u64 r = 1, base = a, e = q_ - 2;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

u64 Field::pow(u64 a, i64 e) const {
  if (e == 0) return 1;  // includes pow(0,0) = 1 by convention
  if (a == 0) {
    if (e < 0) fail(Err::DivisionByZero, "negative power of zero");
    return 0;
  }
  u64 base = a;
  u64 exp;
  if (e < 0) {
    base = inv(a);
    exp = u64(-e);
  } else {
    exp = u64(e);
  }
  // exponents of nonzero elements live mod q-1
  exp %= (q_ - 1);
  u64 r = 1;
  while (exp) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

std::vector<u64> Field::to_coeffs(u64 packed) const {
  std::vector<u64> c(m_);
  for (u32 j = 0; j < m_; ++j) {
    c[j] = packed % p_;
    packed /= p_;
  }
  return c;
}

u64 Field::from_coeffs(const std::vector<u64>& c) const {
  if (c.size() > m_) fail(Err::ParseError, "too many coefficients for this field");
  u64 r = 0, scale = 1;
  for (u32 j = 0; j < m_; ++j) {
    r += (j < c.size() ? c[j] % p_ : 0) * scale;
    scale *= p_;
  }
  return r;
}

FieldElement Field::element(u64 packed) const {
  if (packed >= q_) fail(Err::ParseError, "packed value out of range");
  return FieldElement(*this, packed);
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

u64 Field::order(u64 a) const {
  if (a == 0) fail(Err::DivisionByZero, "order of zero");
  u64 ord = q_ - 1;
  for (u64 pf : prime_factors(q_ - 1)) {
    while (ord % pf == 0 && pow(a, i64(ord / pf)) == 1) ord /= pf;
  }
  return ord;
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_as(b.field()))
    fail(Err::FieldMismatch, "operands belong to different fields");
  return a.field();
}
}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.add(a.value(), b.value()));
}
FieldElement operator-(FieldElement a, FieldElement b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.sub(a.value(), b.value()));
}
FieldElement operator*(FieldElement a, FieldElement b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.mul(a.value(), b.value()));
}
FieldElement operator/(FieldElement a, FieldElement b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.mul(a.value(), f.inv(b.value())));
}
bool operator==(FieldElement a, FieldElement b) {
  const Field& f = common_field(a, b);
  (void)f;
  return a.value() == b.value();
}

FieldElement inv(FieldElement a) { return FieldElement(a.field(), a.field().inv(a.value())); }
FieldElement pow(FieldElement a, i64 e) {
  return FieldElement(a.field(), a.field().pow(a.value(), e));
}

std::vector<FieldElement> enumerate_field(const Field& f) {
  std::vector<FieldElement> out;
  out.reserve(size_t(f.q()));
  for (u64 v = 0; v < f.q(); ++v) out.emplace_back(f, v);
  return out;
}

namespace {
std::string trimmed(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

u64 parse_u64(const std::string& s) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(Err::ParseError, "expected an unsigned integer, got '" + s + "'");
  return v;
}
}  // namespace

u64 parse_packed(const std::string& text, const Field& f) {
  std::string s = trimmed(text);
  if (s.empty()) fail(Err::ParseError, "empty element");
  if (s == "w" || s.rfind("w^", 0) == 0) {
    if (!f.generator_value()) fail(Err::NoGenerator, "field has no designated generator");
    u64 e = (s == "w") ? 1 : parse_u64(s.substr(2));
    return f.pow(*f.generator_value(), i64(e % (f.q() - 1)));
  }
  if (s.rfind("poly:[", 0) == 0) {
    if (s.back() != ']') fail(Err::ParseError, "unterminated coefficient list");
    std::string body = s.substr(6, s.size() - 7);
    std::vector<u64> coeffs;
    size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
      size_t comma = body.find(',', pos);
      std::string tok = trimmed(body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos));
      coeffs.push_back(parse_u64(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return f.from_coeffs(coeffs);
  }
  u64 v = parse_u64(s);
  if (v >= f.q()) fail(Err::ParseError, "value " + s + " out of range for this field");
  return v;
}

FieldElement parse_element(const std::string& text, const Field& f) {
  return FieldElement(f, parse_packed(text, f));
}

std::string format_packed(u64 v, const Field& f, ElemFormat mode) {
  switch (mode) {
    case ElemFormat::Int:
      return std::to_string(v);
    case ElemFormat::Poly: {
      auto c = f.to_coeffs(v);
      std::string out = "poly:[";
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
      }
      out += ']';
      return out;
    }
    case ElemFormat::Power: {
      if (v == 0) return "0";
      if (v == 1) return "1";
      auto g = f.generator_value();
      if (!g) fail(Err::NoGenerator, "field has no designated generator");
      u64 acc = *g;
      for (u64 e = 1; e < f.q() - 1; ++e) {
        if (acc == v) return e == 1 ? "w" : "w^" + std::to_string(e);
        acc = f.mul(acc, *g);
      }
      fail(Err::BadGenerator, "element not generated; generator invalid");
    }
  }
  return {};
}

std::string format_element(const FieldElement& a, ElemFormat mode) {
  return format_packed(a.value(), a.field(), mode);
}

}  // namespace ehzkit
