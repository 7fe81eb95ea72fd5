// zsq: exact zero-square matrix diagnostics and similarity certificates
// over the integers, prime fields, and Z_2[X,Y]/(X^2,Y^2).
//
// Exit codes: 0 success, 1 mathematically negative result (not zero-square,
// obstruction, failed verification), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zerosquare/io.hpp"
#include "zerosquare/normalform.hpp"
#include "zerosquare/oracle.hpp"

namespace {

using nlohmann::json;
using namespace zsq;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct IoOptions {
  std::string ring = "int";
  bool ring_explicit = false;
  std::string format = "json";
  std::string in_path = "-";
  std::string out_path = "-";
};

void add_io_options(CLI::App* cmd, IoOptions& io, bool with_input = true) {
  cmd->add_option("--ring", io.ring, "Ring selector: int, fp:<p>, nil16")
      ->default_val("int");
  cmd->add_option("--format", io.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("json");
  if (with_input)
    cmd->add_option("--in", io.in_path, "Input path ('-' = stdin)")
        ->default_val("-");
  cmd->add_option("--out", io.out_path, "Output path ('-' = stdout)")
      ->default_val("-");
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(Errc::ParseError, "cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void emit(const IoOptions& io, const std::string& text) {
  if (io.out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(io.out_path, std::ios::binary);
  if (!f) fail(Errc::ParseError, "cannot open output file '" + io.out_path + "'");
  f << text;
}

Matrix read_matrix(const IoOptions& io) {
  std::optional<Ring> hint;
  if (io.ring_explicit || io.ring != "int")
    hint = Ring::parse_selector(io.ring);
  std::string src = slurp(io.in_path);
  // default the plain-text path to int when --ring was not given
  if (!hint) {
    auto pos = src.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos || src[pos] != '{')
      hint = Ring::parse_selector(io.ring);
  }
  return parse_matrix(src, hint);
}

json witness_json(const Ring& ring, const ObstructionWitness& w) {
  return json{{"rows", {w.minor.row_a, w.minor.row_b}},
              {"cols", {w.minor.col_c, w.minor.col_d}},
              {"value", ring.to_string(w.value)}};
}

int cmd_check(const IoOptions& io) {
  Matrix t = read_matrix(io);
  if (!t.is_square())
    fail(Errc::ContractViolation, "check needs a square matrix");
  if (t.rows() > 8)
    fail(Errc::ContractViolation, "check supports n <= 8");
  const Ring& ring = t.ring();

  bool zero_square = is_zero_square(t);
  bool trace_zero = ring.is_zero(t.trace());
  bool det_zero = ring.is_zero(t.det());
  std::optional<MinorIndex> minor = t.first_nonzero_minor();

  json report{{"ring", ring.selector()},
              {"n", t.rows()},
              {"zero_square", zero_square},
              {"trace_zero", trace_zero},
              {"det_zero", det_zero},
              {"minors_all_zero", !minor.has_value()}};
  if (minor)
    report["minor_witness"] = witness_json(ring, ObstructionWitness{*minor, t.minor2(*minor)});

  if (io.format == "text") {
    std::ostringstream os;
    os << matrix_to_bracket_text(t);
    os << "zero_square: " << (zero_square ? "yes" : "no")
       << "   trace_zero: " << (trace_zero ? "yes" : "no")
       << "   det_zero: " << (det_zero ? "yes" : "no") << "\n";
    if (minor)
      os << "nonzero 2x2 minor at rows (" << minor->row_a << "," << minor->row_b
         << ") cols (" << minor->col_c << "," << minor->col_d
         << "), value " << ring.to_string(t.minor2(*minor)) << "\n";
    else
      os << "all 2x2 minors vanish\n";
    emit(io, os.str());
  } else {
    emit(io, report.dump(2) + "\n");
  }
  return zero_square ? kExitOk : kExitNegative;
}

int cmd_normalize(const IoOptions& io) {
  Matrix t = read_matrix(io);
  if (!t.is_square())
    fail(Errc::ContractViolation, "normalize needs a square matrix");
  const Ring& ring = t.ring();
  if (!ring.has_bezout() || !ring.is_domain())
    fail(Errc::CapabilityMissing,
         "normalize needs a Bezout domain; ring " + ring.selector() +
             " does not qualify");

  if (!is_zero_square(t)) {
    json err{{"error", "not-zero-square"}, {"n", t.rows()}, {"zero_square", false}};
    emit(io, err.dump(2) + "\n");
    return kExitNegative;
  }

  if (t.rows() >= 4) {
    json err{{"error", "obstruction"}, {"n", t.rows()}};
    if (auto w = obstruction_witness(t)) {
      err["witness"] = witness_json(ring, *w);
      err["note"] =
          "a nonzero 2x2 minor forces rank >= 2; no multiple of E_1n is similar to T";
    } else {
      err["error"] = "unsupported-size";
      err["note"] = "normalization is implemented for n in {2, 3}";
    }
    emit(io, err.dump(2) + "\n");
    return kExitNegative;
  }

  SimilarityCertificate cert = normalize(t);
  if (io.format == "text") {
    std::ostringstream os;
    os << "r = " << ring.to_string(cert.r) << "\nU =\n"
       << matrix_to_bracket_text(cert.U)
       << "det(U) = " << ring.to_string(cert.det_unit)
       << "\nverified: " << (verify_certificate(t, cert) ? "yes" : "no") << "\n";
    emit(io, os.str());
  } else {
    emit(io, certificate_to_json(t, cert).dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_verify(const IoOptions& io, const std::string& cert_path) {
  if (io.in_path == "-" && cert_path == "-")
    fail(Errc::ContractViolation, "--in and --cert cannot both read stdin");
  Matrix t = read_matrix(io);
  json cj;
  try {
    cj = json::parse(slurp(cert_path));
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, e.what());
  }
  SimilarityCertificate cert = certificate_from_json(cj);
  CertCheck result = check_certificate(t, cert);
  if (result == CertCheck::ShapeMismatch)
    fail(Errc::ContractViolation, "matrix and certificate shapes disagree");
  json report{{"verified", result == CertCheck::Ok},
              {"reason", cert_check_name(result)}};
  if (io.format == "text")
    emit(io, std::string(result == CertCheck::Ok ? "verified" : "failed: ") +
                 (result == CertCheck::Ok ? "" : cert_check_name(result)) + "\n");
  else
    emit(io, report.dump(2) + "\n");
  return result == CertCheck::Ok ? kExitOk : kExitNegative;
}

int cmd_gen(const IoOptions& io, const GenConfig& cfg, long long count) {
  if (count < 1) fail(Errc::ContractViolation, "--count must be >= 1");
  std::ostringstream os;
  if (io.format == "text") {
    os << "# n=" << cfg.n << " bound=" << cfg.entry_bound << " seed=" << cfg.seed
       << " shears=" << cfg.conjugation_steps << " count=" << count << "\n";
  } else {
    json header{{"n", cfg.n},
                {"bound", cfg.entry_bound},
                {"seed", cfg.seed},
                {"conjugation_steps", cfg.conjugation_steps},
                {"count", count}};
    os << header.dump() << "\n";
  }
  for (long long i = 0; i < count; ++i) {
    GenConfig one = cfg;
    one.seed = cfg.seed + static_cast<std::uint64_t>(i);
    Matrix t = random_zero_square(one);
    if (io.format == "text")
      os << matrix_to_bracket_text(t) << "\n";
    else
      os << matrix_to_json(t).dump() << "\n";
  }
  emit(io, os.str());
  return kExitOk;
}

int cmd_counterexample(const IoOptions& io, int n) {
  Ring ring = Ring::parse_selector(io.ring);
  Matrix c = counterexample(ring, n);
  if (io.format == "text")
    emit(io, matrix_to_bracket_text(c));
  else
    emit(io, matrix_to_json(c).dump(2) + "\n");
  return kExitOk;
}

int cmd_oracle(const IoOptions& io, std::uint32_t p, int n) {
  if (n != 3)
    fail(Errc::ContractViolation, "oracle covers the 3x3 case only; --n must be 3");
  if (p != 2 && p != 3)
    fail(Errc::ContractViolation, "oracle supports p in {2, 3}");

  std::vector<Matrix> all = enumerate_zero_square_fp(n, p);
  long long verified = 0, brute_found = 0, mismatches = 0;
  for (const Matrix& t : all) {
    bool ok_cert = false, ok_brute = false;
    try {
      ok_cert = verify_certificate(t, normalize_3x3(t));
    } catch (const Error&) {
      ok_cert = false;
    }
    ok_brute = brute_force_similarity_fp(t, p).has_value();
    if (ok_cert) ++verified;
    if (ok_brute) ++brute_found;
    if (!ok_cert || !ok_brute) ++mismatches;
  }
  json report{{"p", p},
              {"n", n},
              {"gl_size", gl3_size(p)},
              {"zero_square_count", all.size()},
              {"verified", verified},
              {"brute_force_found", brute_found},
              {"mismatches", mismatches}};
  if (io.format == "text") {
    std::ostringstream os;
    os << "zero-square 3x3 over fp:" << p << ": " << all.size()
       << "\ncertificates verified: " << verified
       << "\nbrute-force witnesses: " << brute_found
       << "\nmismatches: " << mismatches << "\n";
    emit(io, os.str());
  } else {
    emit(io, report.dump(2) + "\n");
  }
  return mismatches == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "zsq: decide T^2 = 0, build similarity certificates (r, U) with "
      "T*U = U*(r*E_1n) for n in {2, 3} over Bezout domains, and exhibit "
      "rank obstructions for n >= 4"};
  app.require_subcommand(1);

  IoOptions io_check, io_norm, io_verify, io_gen, io_cx, io_oracle;

  CLI::App* c_check = app.add_subcommand(
      "check", "Diagnose a matrix: zero-square, trace, det, 2x2 minors");
  add_io_options(c_check, io_check);

  CLI::App* c_norm = app.add_subcommand(
      "normalize", "Produce a similarity certificate (2x2 and 3x3)");
  add_io_options(c_norm, io_norm);

  CLI::App* c_verify =
      app.add_subcommand("verify", "Verify a certificate against a matrix");
  add_io_options(c_verify, io_verify);
  std::string cert_path;
  c_verify->add_option("--cert", cert_path, "Certificate JSON path ('-' = stdin)")
      ->required();

  CLI::App* c_gen = app.add_subcommand(
      "gen", "Generate random integer zero-square instances (JSON lines)");
  add_io_options(c_gen, io_gen, /*with_input=*/false);
  GenConfig gen_cfg;
  long long gen_count = 1;
  c_gen->add_option("--n", gen_cfg.n, "Matrix size (2 or 3)")->default_val(3);
  c_gen->add_option("--bound", gen_cfg.entry_bound, "Draw magnitude bound")
      ->default_val(10);
  c_gen->add_option("--seed", gen_cfg.seed, "Deterministic seed")->default_val(0);
  c_gen->add_option("--shears", gen_cfg.conjugation_steps,
                    "Shear conjugations per instance")
      ->default_val(0);
  c_gen->add_option("--count", gen_count, "Number of instances")->default_val(1);

  CLI::App* c_cx = app.add_subcommand(
      "counterexample",
      "Emit the rank-2 zero-square matrix (4x4, zero-padded for n > 4)");
  add_io_options(c_cx, io_cx, /*with_input=*/false);
  int cx_n = 4;
  c_cx->add_option("--n", cx_n, "Size (>= 4)")->default_val(4);

  CLI::App* c_oracle = app.add_subcommand(
      "oracle",
      "Enumerate zero-square 3x3 over F_p and cross-check certificates "
      "against the brute-force similarity search");
  add_io_options(c_oracle, io_oracle, /*with_input=*/false);
  std::uint32_t oracle_p = 2;
  int oracle_n = 3;
  c_oracle->add_option("--p", oracle_p, "Field characteristic (2 or 3)")
      ->default_val(2);
  c_oracle->add_option("--n", oracle_n, "Matrix size (3)")->default_val(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  io_check.ring_explicit = c_check->count("--ring") > 0;
  io_norm.ring_explicit = c_norm->count("--ring") > 0;
  io_verify.ring_explicit = c_verify->count("--ring") > 0;

  try {
    if (c_check->parsed()) return cmd_check(io_check);
    if (c_norm->parsed()) return cmd_normalize(io_norm);
    if (c_verify->parsed()) return cmd_verify(io_verify, cert_path);
    if (c_gen->parsed()) return cmd_gen(io_gen, gen_cfg, gen_count);
    if (c_cx->parsed()) return cmd_counterexample(io_cx, cx_n);
    if (c_oracle->parsed()) return cmd_oracle(io_oracle, oracle_p, oracle_n);
  } catch (const zsq::Error& e) {
    std::cerr << "zsq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "zsq: unexpected error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
