#include "ehzkit/serialize.hpp"

#include <cstdio>

#include <json.hpp>

namespace ehzkit {

using json = nlohmann::ordered_json;

namespace {

json field_json(const Field& f) {
  json j;
  j["p"] = f.p();
  j["m"] = f.m();
  j["modulus"] = f.modulus();
  if (f.generator_value()) j["generator"] = std::to_string(*f.generator_value());
  return j;
}

FieldPtr field_from(const json& j) {
  u64 p = j.at("p").get<u64>();
  u32 m = j.at("m").get<u32>();
  std::vector<u64> modulus;
  if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<u64>>();
  std::optional<u64> gen;
  if (j.contains("generator")) {
    // the generator string may use any grammar except "w^e" (circular)
    std::string s = j.at("generator").get<std::string>();
    FieldPtr plain = Field::make(p, m, modulus);
    gen = parse_packed(s, *plain);
  }
  return Field::make(p, m, modulus, gen);
}

json matrix_json(const FqMatrix& m, ElemFormat mode) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json data = json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (size_t c = 0; c < m.cols(); ++c)
      row.push_back(format_packed(m.get(r, c), m.field(), mode));
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return j;
}

FqMatrix matrix_from(const json& j, const FieldPtr& f) {
  size_t rows = j.at("rows").get<size_t>();
  size_t cols = j.at("cols").get<size_t>();
  FqMatrix m(f, rows, cols);
  const json& data = j.at("data");
  if (data.size() != rows) fail(Err::ParseError, "matrix row count mismatch");
  for (size_t r = 0; r < rows; ++r) {
    if (data[r].size() != cols) fail(Err::ParseError, "matrix column count mismatch");
    for (size_t c = 0; c < cols; ++c)
      m.set(r, c, parse_packed(data[r][c].get<std::string>(), *f));
  }
  return m;
}

json vec_json(const FqVec& v, const Field& f, ElemFormat mode) {
  json a = json::array();
  for (u64 x : v) a.push_back(format_packed(x, f, mode));
  return a;
}

FqVec vec_from(const json& a, const Field& f) {
  FqVec v;
  for (const auto& e : a) v.push_back(parse_packed(e.get<std::string>(), f));
  return v;
}

json descriptor_json(const CodeDescriptor& code, ElemFormat mode) {
  const Field& f = code.field();
  json j;
  j["field"] = field_json(f);
  j["kind"] = kind_name(code.kind);
  j["N"] = code.length;
  j["K"] = code.dim;
  j["k_param"] = code.k_param;
  j["G"] = matrix_json(code.G, mode);
  j["H"] = matrix_json(code.H, mode);
  if (code.config) {
    j["S"] = vec_json(code.config->points, f, mode);
    j["v"] = vec_json(code.config->mults, f, mode);
  }
  if (!code.extras.empty()) j["extras"] = code.extras;
  if (code.d) {
    j["d"] = json{{"value", code.d->value},
                  {"method", code.d->method == DistanceInfo::Analytic ? "analytic" : "brute-force"}};
  }
  return j;
}

CodeDescriptor descriptor_from(const json& j) {
  CodeDescriptor code;
  FieldPtr f = field_from(j.at("field"));
  code.kind = kind_from_name(j.at("kind").get<std::string>());
  code.length = j.at("N").get<size_t>();
  code.dim = j.at("K").get<size_t>();
  if (j.contains("k_param")) code.k_param = j.at("k_param").get<u32>();
  code.G = matrix_from(j.at("G"), f);
  code.H = matrix_from(j.at("H"), f);
  if (j.contains("S")) {
    FqVec pts = vec_from(j.at("S"), *f);
    FqVec mults = j.contains("v") ? vec_from(j.at("v"), *f) : FqVec(pts.size(), 1);
    code.config = EvalConfig(f, pts, mults);
  }
  if (j.contains("extras"))
    code.extras = j.at("extras").get<std::map<std::string, std::string>>();
  if (j.contains("d")) {
    DistanceInfo d;
    d.value = j.at("d").at("value").get<u32>();
    d.method = j.at("d").at("method").get<std::string>() == "analytic"
                   ? DistanceInfo::Analytic
                   : DistanceInfo::BruteForce;
    code.d = d;
  }
  if (code.G.cols() != code.length || code.G.rows() != code.dim)
    fail(Err::ParseError, "generator shape disagrees with N/K");
  if (code.H.cols() != code.length || code.H.rows() != code.length - code.dim)
    fail(Err::ParseError, "parity-check shape disagrees with N/K");
  FqMatrix prod = matmul(code.G, transpose(code.H));
  for (size_t i = 0; i < prod.rows(); ++i)
    for (size_t j = 0; j < prod.cols(); ++j)
      if (prod.get(i, j) != 0) fail(Err::ParseError, "G H^T != 0 in loaded descriptor");
  return code;
}

json query_json(const DeepHoleQuery& q, const Field& f, ElemFormat mode) {
  json j;
  j["g_kp1"] = format_packed(q.g_kp1, f, mode);
  j["g_km1"] = format_packed(q.g_km1, f, mode);
  j["f"] = vec_json(q.f.coeffs(), f, mode);
  j["u_last"] = format_packed(q.u_last, f, mode);
  j["v_last"] = format_packed(q.v_last, f, mode);
  return j;
}

DeepHoleQuery query_from(const json& j, const FieldPtr& f) {
  DeepHoleQuery q;
  q.g_kp1 = parse_packed(j.at("g_kp1").get<std::string>(), *f);
  q.g_km1 = parse_packed(j.at("g_km1").get<std::string>(), *f);
  q.f = Polynomial(f, vec_from(j.at("f"), *f));
  q.u_last = parse_packed(j.at("u_last").get<std::string>(), *f);
  q.v_last = parse_packed(j.at("v_last").get<std::string>(), *f);
  return q;
}

}  // namespace

std::string field_to_json(const Field& f) { return field_json(f).dump(); }

FieldPtr field_from_json(const std::string& text) {
  return field_from(json::parse(text));
}

std::string matrix_to_json(const FqMatrix& m, ElemFormat mode) {
  return matrix_json(m, mode).dump();
}

FqMatrix matrix_from_json(const std::string& text, FieldPtr f) {
  return matrix_from(json::parse(text), f);
}

std::string descriptor_to_json(const CodeDescriptor& code, ElemFormat mode) {
  return descriptor_json(code, mode).dump(2);
}

CodeDescriptor descriptor_from_json(const std::string& text) {
  return descriptor_from(json::parse(text));
}

std::string pair_to_json(const EcpPair& pair, const Field& f, ElemFormat mode) {
  json j;
  j["case"] = ecp_case_name(pair.case_tag);
  j["ell"] = pair.ell;
  j["G_A"] = matrix_json(pair.G_A, mode);
  j["G_B"] = matrix_json(pair.G_B, mode);
  if (pair.transform) {
    j["gamma"] = format_packed(pair.transform->gamma, f, mode);
    j["v_prime_exponent"] = pair.transform->exponent == VPrimeExponent::K ? "k" : "k-1";
    j["S_prime"] = vec_json(pair.transform->s_prime, f, mode);
    j["v_prime"] = vec_json(pair.transform->v_prime, f, mode);
    j["u_prime"] = vec_json(pair.transform->u_prime, f, mode);
  }
  j["field"] = field_json(f);
  return j.dump(2);
}

EcpPair pair_from_json(const std::string& text, FieldPtr f) {
  json j = json::parse(text);
  if (!f) f = field_from(j.at("field"));
  EcpPair pair;
  pair.case_tag = ecp_case_from_name(j.at("case").get<std::string>());
  pair.ell = j.at("ell").get<u32>();
  pair.G_A = matrix_from(j.at("G_A"), f);
  pair.G_B = matrix_from(j.at("G_B"), f);
  if (j.contains("gamma")) {
    TransformedConfig tc;
    tc.field = f;
    tc.gamma = parse_packed(j.at("gamma").get<std::string>(), *f);
    tc.exponent = j.value("v_prime_exponent", "k") == std::string("k") ? VPrimeExponent::K
                                                                       : VPrimeExponent::KMinus1;
    if (j.contains("S_prime")) tc.s_prime = vec_from(j.at("S_prime"), *f);
    if (j.contains("v_prime")) tc.v_prime = vec_from(j.at("v_prime"), *f);
    if (j.contains("u_prime")) tc.u_prime = vec_from(j.at("u_prime"), *f);
    pair.transform = std::move(tc);
  }
  return pair;
}

std::string query_to_json(const DeepHoleQuery& q, const Field& f, ElemFormat mode) {
  return query_json(q, f, mode).dump();
}

DeepHoleQuery query_from_json(const std::string& text, FieldPtr f) {
  return query_from(json::parse(text), f);
}

std::string descriptor_hash(const CodeDescriptor& code) {
  std::string canon = descriptor_json(code, ElemFormat::Int).dump();
  u64 h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string certificate_to_json(const ExtensionCertificate& cert, ElemFormat mode) {
  const Field& f = cert.parent.field();
  json j;
  j["parent_hash"] = descriptor_hash(cert.parent);
  j["branch"] = cert.branch;
  j["query"] = json::parse(query_to_json(cert.query, f, mode));
  j["row"] = vec_json(cert.deep_hole_row, f, mode);
  j["parent"] = json::parse(descriptor_to_json(cert.parent, mode));
  j["child"] = json::parse(descriptor_to_json(cert.child, mode));
  j["mds_minors"] = cert.mds_proof;
  json ng;
  ng["kind"] = cert.nongrs.kind == NonGrsProof::SchurSquareDim ? "schur-square-dim" : "asserted";
  ng["schur_dim"] = cert.nongrs.schur_dim;
  if (!cert.nongrs.tag.empty()) ng["tag"] = cert.nongrs.tag;
  j["nongrs"] = std::move(ng);
  json rl;
  rl["status"] = cert.rl.kind == RlEquivalence::EquivalentTo
                     ? "equivalent"
                     : cert.rl.kind == RlEquivalence::NotEquivalent ? "not-equivalent" : "unknown";
  rl["deltas"] = vec_json(cert.rl.deltas_equivalent, f, mode);
  rl["tested"] = vec_json(cert.rl.deltas_tested, f, mode);
  if (!cert.rl.note.empty()) rl["note"] = cert.rl.note;
  j["rl_equiv"] = std::move(rl);
  return j.dump();
}

}  // namespace ehzkit
