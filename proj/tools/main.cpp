// ehz: build GRS/EGRS/extended Han-Zhang/Roth-Lempel codes, decode with
// error-correcting pairs, analyze covering radius and deep holes, and
// generate lengthened non-GRS MDS codes. File formats are JSON; certificate
// streams are NDJSON.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ehzkit/oracle.hpp"
#include "ehzkit/serialize.hpp"

using namespace ehzkit;

namespace {

struct GlobalOpts {
  std::string format = "int";
  u64 seed = 0;
  u64 guard_codewords = kDefaultGuard;
  u64 guard_subsets = kDefaultGuard;
  u64 guard_vectors = kDefaultGuard;

  ElemFormat mode() const {
    if (format == "int") return ElemFormat::Int;
    if (format == "power") return ElemFormat::Power;
    if (format == "poly") return ElemFormat::Poly;
    fail(Err::ParseError, "unknown element format '" + format + "'");
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(Err::ParseError, "cannot write " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

// comma-separated element list; commas inside poly:[...] don't split
std::vector<std::string> split_elements(const std::string& csv) {
  std::vector<std::string> out;
  std::string tok;
  int depth = 0;
  for (char c : csv) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(tok);
      tok.clear();
    } else {
      tok += c;
    }
  }
  out.push_back(tok);
  return out;
}

FqVec parse_vec(const std::string& csv, const Field& f) {
  FqVec out;
  for (const auto& tok : split_elements(csv)) out.push_back(parse_packed(tok, f));
  return out;
}

std::string format_vec(const FqVec& v, const Field& f, ElemFormat mode) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_packed(v[i], f, mode);
  }
  return s;
}

std::string one_based(const std::vector<size_t>& idx) {
  std::string s;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(idx[i] + 1);
  }
  return s;
}

struct FieldFlags {
  u64 p = 0;
  u32 m = 1;
  std::string modulus;
  std::string generator;

  FieldPtr make() const {
    std::vector<u64> mod;
    for (const auto& tok : split_elements(modulus))
      if (!tok.empty()) mod.push_back(std::stoull(tok));
    FieldPtr plain = Field::make(p, m, mod);
    if (generator.empty()) return plain;
    return Field::make(p, m, mod, parse_packed(generator, *plain));
  }
};

void add_field_flags(CLI::App* cmd, FieldFlags& ff) {
  cmd->add_option("--p", ff.p, "prime characteristic")->required();
  cmd->add_option("--m", ff.m, "extension degree (default 1)");
  cmd->add_option("--modulus", ff.modulus,
                  "comma-separated modulus coefficients c0..cm (extension fields)");
  cmd->add_option("--generator", ff.generator, "designated primitive element");
}

std::string describe_parameters(const CodeDescriptor& code) {
  std::ostringstream os;
  os << "parameters: [" << code.length << "," << code.dim;
  if (code.d) os << "," << code.d->value;
  os << "]_" << code.field().q();
  if (code.d)
    os << " (d " << (code.d->method == DistanceInfo::Analytic ? "analytic" : "brute-force")
       << ")";
  return os.str();
}

std::string describe_classification(const CodeDescriptor& code, ElemFormat mode, u64 guard) {
  auto cls = classify_ehz(code, guard);
  if (cls.mds)
    return "classification: MDS (S is " + std::to_string(code.k_param) + "-zero-sum free)";
  return "classification: NMDS (zero-sum " + std::to_string(code.k_param) +
         "-subset: " + format_vec(cls.witness, code.field(), mode) + ")";
}

int cmd_build(const GlobalOpts& g, const std::string& kind, const FieldFlags& ff,
              const std::string& points, const std::string& mults, u32 k,
              const std::string& delta, const std::string& out_path) {
  FieldPtr F = ff.make();
  FqVec pts = parse_vec(points, *F);
  FqVec ms = mults.empty() ? FqVec(pts.size(), 1) : parse_vec(mults, *F);

  CodeDescriptor code;
  if (kind == "grs") {
    code = grs(EvalConfig(F, pts, ms), k);
  } else if (kind == "egrs") {
    code = egrs(EvalConfig(F, pts, ms), k);
  } else if (kind == "ehz") {
    code = ehz(EvalConfig(F, pts, ms), k);
  } else {
    code = roth_lempel(F, pts, k, delta.empty() ? 0 : parse_packed(delta, *F));
  }
  if (!code.d) {
    try {
      code.d = DistanceInfo{min_distance_bruteforce(code, g.guard_codewords),
                            DistanceInfo::BruteForce};
    } catch (const Error& e) {
      if (e.kind() != Err::GuardExceeded) throw;
    }
  }

  std::cout << "kind: " << kind_name(code.kind) << "\n";
  std::cout << describe_parameters(code) << "\n";
  if (code.kind == CodeKind::Ehz)
    std::cout << describe_classification(code, g.mode(), g.guard_subsets) << "\n";
  if (code.kind == CodeKind::RothLempel)
    std::cout << "delta: " << format_packed(parse_packed(code.extras.at("delta"), *F), *F,
                                            g.mode())
              << "\n";
  spill(out_path, descriptor_to_json(code, g.mode()));
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_ecp(const GlobalOpts& g, const std::string& code_path, const std::string& gamma,
            const std::string& out_path) {
  auto code = descriptor_from_json(slurp(code_path));
  std::optional<u64> gm;
  if (!gamma.empty()) gm = parse_packed(gamma, code.field());
  auto pair = build_ecp(code, gm);
  auto rep = verify_ecp(pair, code, g.guard_codewords);

  std::cout << "case: " << ecp_case_name(pair.case_tag) << "\n";
  std::cout << "ell: " << pair.ell << "\n";
  if (pair.transform) {
    std::cout << "gamma: " << format_packed(pair.transform->gamma, code.field(), g.mode())
              << "\n";
    std::cout << "v-prime-exponent: "
              << (pair.transform->exponent == VPrimeExponent::K ? "k" : "k-1") << "\n";
  }
  std::cout << "dim A: " << pair.G_A.rows() << "\n";
  std::cout << "dim B: " << pair.G_B.rows() << "\n";
  std::cout << "conditions: i=" << (rep.cond_i ? "pass" : "fail")
            << " ii=" << (rep.cond_ii ? "pass" : "fail")
            << " iii=" << (rep.cond_iii ? "pass" : "fail")
            << " iv=" << (rep.cond_iv ? "pass" : "fail") << "\n";
  spill(out_path, pair_to_json(pair, code.field(), g.mode()));
  std::cout << "wrote " << out_path << "\n";
  return rep.all() ? 0 : 3;
}

int cmd_decode(const GlobalOpts& g, const std::string& code_path, const std::string& pair_path,
               const std::string& word, bool trace) {
  auto code = descriptor_from_json(slurp(code_path));
  auto pair = pair_from_json(slurp(pair_path), code.field_ptr());
  FqVec y = parse_vec(word, code.field());
  auto out = ecp_decode(code, pair, y);
  const Field& F = code.field();

  std::cout << "syndrome: " << format_vec(out.trace.syndrome, F, g.mode()) << "\n";
  if (trace && out.kind != DecodeOutcome::AlreadyCodeword) {
    std::cout << "ell: " << pair.ell << " (case " << ecp_case_name(pair.case_tag) << ")\n";
    if (out.trace.s_basis.rows() > 0) {
      std::cout << "s0: " << format_vec(out.trace.s0, F, g.mode()) << "\n";
      std::cout << "a: " << format_vec(out.trace.locator, F, g.mode()) << "\n";
      std::cout << "Z: " << one_based(out.trace.zeros) << "\n";
    }
  }
  switch (out.kind) {
    case DecodeOutcome::AlreadyCodeword:
      std::cout << "outcome: already a codeword\n";
      return 0;
    case DecodeOutcome::Corrected:
      if (trace)
        std::cout << "restricted solve: unique, weight " << vec_weight(out.error) << "\n";
      std::cout << "outcome: corrected\n";
      std::cout << "codeword: " << format_vec(out.codeword, F, g.mode()) << "\n";
      std::cout << "error: " << format_vec(out.error, F, g.mode()) << "\n";
      std::cout << "positions: " << one_based(out.error_positions) << "\n";
      return 0;
    case DecodeOutcome::TooManyErrors:
    default:
      std::cout << "outcome: failure: " << out.reason << "\n";
      return 3;
  }
}

int cmd_deephole_check(const GlobalOpts& g, const std::string& code_path,
                       const std::string& vector) {
  auto code = descriptor_from_json(slurp(code_path));
  auto rep = is_deep_hole(code, parse_vec(vector, code.field()), g.guard_subsets);
  std::cout << "deep hole: " << (rep.verdict ? "yes" : "no") << "\n";
  std::cout << "method: " << deep_hole_method_name(rep.method) << "\n";
  std::cout << "certificate: " << rep.certificate << "\n";
  return 0;
}

DeepHoleQuery query_from_flags(const CodeDescriptor& code, const std::string& g_kp1,
                               const std::string& g_km1, const std::string& f_csv,
                               const std::string& u_last, const std::string& v_last) {
  const Field& F = code.field();
  DeepHoleQuery q;
  q.g_kp1 = g_kp1.empty() ? 0 : parse_packed(g_kp1, F);
  q.g_km1 = g_km1.empty() ? 0 : parse_packed(g_km1, F);
  q.f = Polynomial(code.field_ptr(), f_csv.empty() ? FqVec{} : parse_vec(f_csv, F));
  q.u_last = parse_packed(u_last, F);
  q.v_last = parse_packed(v_last, F);
  return q;
}

int report_deephole(const GlobalOpts& g, const CodeDescriptor& code, const DeepHoleReport& rep) {
  std::cout << "deep hole: " << (rep.verdict ? "yes" : "no") << "\n";
  std::cout << "method: " << deep_hole_method_name(rep.method) << "\n";
  std::cout << "certificate: " << rep.certificate << "\n";
  std::cout << "vector: " << format_vec(rep.vector, code.field(), g.mode()) << "\n";
  return 0;
}

int cmd_deephole_radius(const GlobalOpts& g, const std::string& code_path,
                        const std::string& method) {
  auto code = descriptor_from_json(slurp(code_path));
  auto rep = covering_radius(code,
                             method == "theorem" ? RadiusMethod::TheoremValue
                                                 : RadiusMethod::Exhaustive,
                             g.guard_vectors);
  std::cout << "covering radius: " << rep.rho << " ("
            << (rep.method == RadiusMethod::Exhaustive ? "exhaustive" : "theorem") << ")\n";
  if (rep.worst_coset_witness)
    std::cout << "witness: " << format_vec(*rep.worst_coset_witness, code.field(), g.mode())
              << "\n";
  return 0;
}

int cmd_generate(const GlobalOpts& g, const std::string& code_path, const std::string& out_path,
                 u64 max_outputs, const std::string& only_branch, const std::string& g_kp1,
                 const std::string& g_km1, const std::string& f_csv, const std::string& uv,
                 bool rl_equiv) {
  auto code = descriptor_from_json(slurp(code_path));
  const Field& F = code.field();

  Algorithm2Limits limits;
  limits.max_outputs = max_outputs;
  limits.guard = g.guard_subsets;
  if (!only_branch.empty()) limits.only_branch = only_branch;
  if (!g_kp1.empty()) limits.g_kp1_values = parse_vec(g_kp1, F);
  if (!g_km1.empty()) limits.g_km1_values = parse_vec(g_km1, F);
  if (!f_csv.empty())
    limits.f_values = std::vector<Polynomial>{Polynomial(code.field_ptr(), parse_vec(f_csv, F))};
  if (!uv.empty()) limits.uv_values = parse_vec(uv, F);

  std::ostringstream stream;
  u64 count = 0;
  algorithm2_enumerate(code, limits, [&](ExtensionCertificate cert) {
    if (rl_equiv) {
      cert.rl.kind = RlEquivalence::NotEquivalent;
      cert.rl.note.clear();
      for (u64 d = 0; d < F.q(); ++d) {
        auto rl = roth_lempel(code.field_ptr(), code.config->points, u32(cert.child.dim), d);
        cert.rl.deltas_tested.push_back(d);
        if (monomial_equivalent(cert.child, rl).kind == EquivalenceResult::Equivalent) {
          cert.rl.kind = RlEquivalence::EquivalentTo;
          cert.rl.deltas_equivalent.push_back(d);
        }
      }
    }
    stream << certificate_to_json(cert, g.mode()) << "\n";
    ++count;
    return true;
  });
  spill(out_path, stream.str());
  std::cout << "certificates: " << count << "\n";
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_analyze(const GlobalOpts& g, const std::string& code_path) {
  auto code = descriptor_from_json(slurp(code_path));
  if (!code.d) {
    try {
      code.d = DistanceInfo{min_distance_bruteforce(code, g.guard_codewords),
                            DistanceInfo::BruteForce};
    } catch (const Error& e) {
      if (e.kind() != Err::GuardExceeded) throw;
    }
  }
  std::cout << "kind: " << kind_name(code.kind) << "\n";
  std::cout << describe_parameters(code) << "\n";
  if (code.kind == CodeKind::Ehz)
    std::cout << describe_classification(code, g.mode(), g.guard_subsets) << "\n";
  auto ng = nongrs_certificate(code, g.guard_codewords);
  std::cout << "schur-square dim: " << ng.schur_dim << "\n";
  if (ng.kind == NonGrsCertificate::NonGrs)
    std::cout << "non-GRS: certified (" << ng.schur_dim << " > " << 2 * code.dim - 1 << ")\n";
  else
    std::cout << "non-GRS: inconclusive\n";
  return 0;
}

int cmd_equiv(const GlobalOpts& g, const std::string& path1, const std::string& path2,
              u64 budget) {
  auto c1 = descriptor_from_json(slurp(path1));
  auto c2 = descriptor_from_json(slurp(path2));
  EquivalenceBudget b;
  b.max_codewords = g.guard_codewords;
  b.max_candidates = budget;
  auto res = monomial_equivalent(c1, c2, b);
  switch (res.kind) {
    case EquivalenceResult::Equivalent:
      std::cout << "equivalent: yes\n";
      std::cout << "permutation: " << one_based(res.transform->perm) << "\n";
      std::cout << "scalings: " << format_vec(res.transform->scale, c1.field(), g.mode())
                << "\n";
      return 0;
    case EquivalenceResult::NotEquivalent:
      std::cout << "equivalent: no (" << res.witness << ")\n";
      return 0;
    case EquivalenceResult::Unknown:
    default:
      std::cout << "equivalent: unknown (" << res.witness << ")\n";
      return 0;
  }
}

int cmd_oracle_nearest(const GlobalOpts& g, const std::string& code_path,
                       const std::string& word, bool distance_only) {
  auto code = descriptor_from_json(slurp(code_path));
  OracleBudget b;
  b.max_codewords = g.guard_codewords;
  b.max_vectors = g.guard_vectors;
  auto res = nearest_codeword(code, parse_vec(word, code.field()), b);
  if (!distance_only) {
    std::cout << "nearest: " << format_vec(res.codeword, code.field(), g.mode()) << "\n";
    std::cout << "unique: " << (res.unique ? "yes" : "no") << "\n";
  }
  std::cout << "distance: " << res.distance << "\n";
  return 0;
}

int cmd_oracle_holes(const GlobalOpts& g, const std::string& code_path) {
  auto code = descriptor_from_json(slurp(code_path));
  OracleBudget b;
  b.max_codewords = g.guard_codewords;
  b.max_vectors = g.guard_vectors;
  // one JSON array of element strings per line
  for (const auto& v : all_deep_holes(code, b)) {
    std::cout << "[";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << "\"" << format_packed(v[i], code.field(), g.mode()) << "\"";
    }
    std::cout << "]\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coding toolkit for extended Han-Zhang codes"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "element display format: int|power|poly");
  app.add_option("--seed", g.seed, "seed for randomized commands");
  app.add_option("--guard-codewords", g.guard_codewords, "cap on q^K enumerations");
  app.add_option("--guard-subsets", g.guard_subsets, "cap on subset enumerations");
  app.add_option("--guard-vectors", g.guard_vectors, "cap on q^(N-K)/q^N enumerations");

  // build
  auto* build = app.add_subcommand("build", "construct a code and write its descriptor");
  build->require_subcommand(1);
  struct BuildArgs {
    FieldFlags ff;
    std::string points, mults, delta, out;
    u32 k = 0;
  } ba;
  for (const char* kind : {"grs", "egrs", "ehz", "rl"}) {
    auto* sub = build->add_subcommand(kind);
    add_field_flags(sub, ba.ff);
    sub->add_option("--points", ba.points, "evaluation points a_1..a_n")->required();
    sub->add_option("--mults", ba.mults, "multipliers v_1..v_n (default all ones)");
    sub->add_option("--k", ba.k, "dimension parameter k")->required();
    if (std::string(kind) == "rl") sub->add_option("--delta", ba.delta, "delta coefficient");
    sub->add_option("--out", ba.out, "output descriptor path")->required();
  }

  // ecp
  auto* ecp = app.add_subcommand("ecp", "build and verify an error-correcting pair");
  std::string ecp_code, ecp_gamma, ecp_out;
  ecp->add_option("--code", ecp_code)->required();
  ecp->add_option("--gamma", ecp_gamma, "transform point (odd MDS case only)");
  ecp->add_option("--out", ecp_out)->required();

  // decode
  auto* dec = app.add_subcommand("decode", "decode a received word with a pair");
  std::string dec_code, dec_pair, dec_word;
  bool dec_trace = false;
  dec->add_option("--code", dec_code)->required();
  dec->add_option("--pair", dec_pair)->required();
  dec->add_option("--word", dec_word)->required();
  dec->add_flag("--trace", dec_trace, "print the intermediate decoding data");

  // deephole
  auto* dh = app.add_subcommand("deephole", "covering radius and deep-hole analysis");
  dh->require_subcommand(1);
  std::string dh_code, dh_vector, dh_method = "exhaustive";
  std::string dh_gkp1, dh_gkm1, dh_f, dh_ulast, dh_vlast;
  auto* dh_check = dh->add_subcommand("check", "minor-based deep-hole test");
  dh_check->add_option("--code", dh_code)->required();
  dh_check->add_option("--vector", dh_vector)->required();
  auto* dh_c1 = dh->add_subcommand("class1", "closed form for g = g_{k-1}x^{k-1} + f");
  auto* dh_c2 = dh->add_subcommand("class2", "closed form for g with a degree-(k+1) term");
  for (auto* sub : {dh_c1, dh_c2}) {
    sub->add_option("--code", dh_code)->required();
    sub->add_option("--g-kp1", dh_gkp1, "coefficient of x^{k+1}");
    sub->add_option("--g-km1", dh_gkm1, "coefficient of x^{k-1}");
    sub->add_option("--f", dh_f, "coefficients of f in V_k, ascending");
    sub->add_option("--u-last", dh_ulast)->required();
    sub->add_option("--v-last", dh_vlast)->required();
  }
  auto* dh_rad = dh->add_subcommand("radius", "covering radius");
  dh_rad->add_option("--code", dh_code)->required();
  dh_rad->add_option("--method", dh_method, "exhaustive|theorem");

  // generate
  auto* gen = app.add_subcommand("generate", "enumerate deep-hole extension certificates");
  std::string gen_code, gen_out, gen_branch, gen_gkp1, gen_gkm1, gen_f, gen_uv;
  u64 gen_max = UINT64_MAX;
  bool gen_rl = false;
  gen->add_option("--code", gen_code)->required();
  gen->add_option("--out", gen_out)->required();
  gen->add_option("--max-outputs", gen_max);
  gen->add_option("--only-branch", gen_branch, "class1-eq|class1-set|class2");
  gen->add_option("--g-kp1", gen_gkp1, "restrict g_{k+1} to these values");
  gen->add_option("--g-km1", gen_gkm1, "restrict g_{k-1} to these values");
  gen->add_option("--f", gen_f, "pin f to this coefficient list");
  gen->add_option("--uv", gen_uv, "restrict the product u_{n+1}v_{n+1}");
  gen->add_flag("--rl-equiv", gen_rl, "test each child against the Roth-Lempel family");

  // analyze
  auto* ana = app.add_subcommand("analyze", "parameters, classification, Schur square");
  std::string ana_code;
  ana->add_option("--code", ana_code)->required();

  // equiv
  auto* eq = app.add_subcommand("equiv", "monomial equivalence of two codes");
  std::string eq_c1, eq_c2;
  u64 eq_budget = kDefaultGuard;
  eq->add_option("--code1", eq_c1)->required();
  eq->add_option("--code2", eq_c2)->required();
  eq->add_option("--budget", eq_budget, "search-candidate budget");

  // oracle
  auto* ora = app.add_subcommand("oracle", "brute-force reference computations");
  ora->require_subcommand(1);
  std::string ora_code, ora_word;
  auto* ora_near = ora->add_subcommand("nearest", "nearest codeword by full enumeration");
  ora_near->add_option("--code", ora_code)->required();
  ora_near->add_option("--word", ora_word)->required();
  auto* ora_dist = ora->add_subcommand("distance", "error distance by full enumeration");
  ora_dist->add_option("--code", ora_code)->required();
  ora_dist->add_option("--word", ora_word)->required();
  auto* ora_holes = ora->add_subcommand("holes", "stream all deep holes (tiny codes)");
  ora_holes->add_option("--code", ora_code)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      for (const char* kind : {"grs", "egrs", "ehz", "rl"})
        if (build->get_subcommand(kind)->parsed())
          return cmd_build(g, kind, ba.ff, ba.points, ba.mults, ba.k, ba.delta, ba.out);
    }
    if (ecp->parsed()) return cmd_ecp(g, ecp_code, ecp_gamma, ecp_out);
    if (dec->parsed()) return cmd_decode(g, dec_code, dec_pair, dec_word, dec_trace);
    if (dh->parsed()) {
      if (dh_check->parsed()) return cmd_deephole_check(g, dh_code, dh_vector);
      if (dh_rad->parsed()) return cmd_deephole_radius(g, dh_code, dh_method);
      auto code = descriptor_from_json(slurp(dh_code));
      auto q = query_from_flags(code, dh_gkp1, dh_gkm1, dh_f, dh_ulast, dh_vlast);
      if (dh_c1->parsed())
        return report_deephole(g, code, class1_is_deep_hole(code, q, g.guard_subsets));
      return report_deephole(g, code, class2_is_deep_hole(code, q, g.guard_subsets));
    }
    if (gen->parsed())
      return cmd_generate(g, gen_code, gen_out, gen_max, gen_branch, gen_gkp1, gen_gkm1, gen_f,
                          gen_uv, gen_rl);
    if (ana->parsed()) return cmd_analyze(g, ana_code);
    if (eq->parsed()) return cmd_equiv(g, eq_c1, eq_c2, eq_budget);
    if (ora->parsed()) {
      if (ora_holes->parsed()) return cmd_oracle_holes(g, ora_code);
      return cmd_oracle_nearest(g, ora_code, ora_word, ora_dist->parsed());
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == Err::GuardExceeded ? 4 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
