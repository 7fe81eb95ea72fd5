// End-to-end checks of the zsq binary: exit codes, JSON shapes, pipe
// composition, determinism.

#include "doctest.h"
#include "testutil.hpp"
#include "zerosquare/io.hpp"

using namespace zsq;
using nlohmann::json;
using zsqtest::run_cli;

namespace {

const char* kT6Text = "-180 -300 -450\n90 150 225\n12 20 30\n";

std::string t6_json() { return matrix_to_json(zsqtest::t6_matrix()).dump(); }

}  // namespace

TEST_CASE("cli check") {
  auto ok = run_cli("check", kT6Text);
  CHECK(ok.exit_code == 0);
  json report = json::parse(ok.out);
  CHECK(report["zero_square"] == true);
  CHECK(report["trace_zero"] == true);
  CHECK(report["det_zero"] == true);
  CHECK(report["minors_all_zero"] == true);

  auto c4 = run_cli("counterexample --n 4");
  CHECK(c4.exit_code == 0);
  auto checked = run_cli("check", c4.out);
  CHECK(checked.exit_code == 0);
  json c4_report = json::parse(checked.out);
  CHECK(c4_report["zero_square"] == true);
  CHECK(c4_report["minors_all_zero"] == false);
  CHECK(c4_report["minor_witness"].contains("value"));

  CHECK(run_cli("check", "{ not json").exit_code == 2);
  CHECK(run_cli("check", "1 0\n0 1\n").exit_code == 1);  // not zero-square
  CHECK(run_cli("check", "1 2 3\n4 5 6\n").exit_code == 2);  // not square
}

TEST_CASE("cli normalize and verify compose") {
  auto norm = run_cli("normalize", kT6Text);
  CHECK(norm.exit_code == 0);
  json cert = json::parse(norm.out);
  CHECK(cert["r"] == "1");
  CHECK(cert["verified"] == true);

  std::string cert_path = "/tmp/zsq_cli_cert.json";
  {
    std::ofstream f(cert_path);
    f << norm.out;
  }
  auto verified = run_cli("verify --cert " + cert_path, kT6Text);
  CHECK(verified.exit_code == 0);
  CHECK(json::parse(verified.out)["verified"] == true);

  // tamper with U: flip one row's signs so det stays a unit (and record
  // the flipped determinant so only the product check can fail)
  json bad = cert;
  for (auto& cell : bad["U"]["entries"][1])
    cell = (cell.get<std::string>()[0] == '-')
               ? cell.get<std::string>().substr(1)
               : "-" + cell.get<std::string>();
  bad["det_unit"] = "-1";
  {
    std::ofstream f(cert_path);
    f << bad.dump();
  }
  auto failed = run_cli("verify --cert " + cert_path, kT6Text);
  CHECK(failed.exit_code == 1);
  CHECK(json::parse(failed.out)["reason"] == "product-mismatch");

  // wrong-size certificate is a usage error
  json wrong = cert;
  wrong["n"] = 2;
  {
    std::ofstream f(cert_path);
    f << wrong.dump();
  }
  CHECK(run_cli("verify --cert " + cert_path, kT6Text).exit_code == 2);
  std::remove(cert_path.c_str());
}

TEST_CASE("cli normalize negative paths") {
  auto not_zs = run_cli("normalize", "1 0\n0 1\n");
  CHECK(not_zs.exit_code == 1);
  CHECK(json::parse(not_zs.out)["error"] == "not-zero-square");

  auto cx = run_cli("counterexample --n 4");
  auto obstructed = run_cli("normalize", cx.out);
  CHECK(obstructed.exit_code == 1);
  json err = json::parse(obstructed.out);
  CHECK(err["error"] == "obstruction");
  CHECK(err["witness"]["value"] == "1");

  // nil16 has no Bezout structure: usage error
  json nil_diag{{"ring", "nil16"}, {"rows", 2}, {"cols", 2}};
  nil_diag["entries"] = json::array({json::array({"X", "0"}),
                                     json::array({"0", "X"})});
  CHECK(run_cli("normalize --ring nil16", nil_diag.dump()).exit_code == 2);
}

TEST_CASE("cli normalize over a prime field") {
  json m{{"ring", "fp:5"}, {"rows", 2}, {"cols", 2}};
  m["entries"] = json::array({json::array({"0", "3"}), json::array({"0", "0"})});
  auto norm = run_cli("normalize", m.dump());
  CHECK(norm.exit_code == 0);
  json cert = json::parse(norm.out);
  CHECK(cert["verified"] == true);
  CHECK(cert["r"] == "1");  // gcd over a field canonicalizes to 1
}

TEST_CASE("cli gen is deterministic and sound") {
  auto a = run_cli("gen --n 3 --bound 100 --seed 42 --count 10 --shears 2");
  auto b = run_cli("gen --n 3 --bound 100 --seed 42 --count 10 --shears 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  std::istringstream lines(a.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  json header = json::parse(line);
  CHECK(header["seed"] == 42);
  CHECK(header["count"] == 10);
  int rows_seen = 0;
  while (std::getline(lines, line)) {
    ++rows_seen;
    Matrix m = matrix_from_json(json::parse(line));
    CHECK(is_zero_square(m));
    auto checked = run_cli("check", line);
    CHECK(checked.exit_code == 0);
  }
  CHECK(rows_seen == 10);

  CHECK(run_cli("gen --n 5 --count 1").exit_code == 2);
  CHECK(run_cli("gen --count 0").exit_code == 2);
}

TEST_CASE("cli counterexample") {
  auto four = run_cli("counterexample --n 4");
  CHECK(four.exit_code == 0);
  Matrix c4 = matrix_from_json(json::parse(four.out));
  CHECK(c4 == counterexample(Ring::integers(), 4));

  auto padded = run_cli("counterexample --n 6 --ring fp:3");
  CHECK(padded.exit_code == 0);
  Matrix c6 = matrix_from_json(json::parse(padded.out));
  CHECK(c6.ring() == Ring::prime_field(3));
  CHECK(is_zero_square(c6));

  CHECK(run_cli("counterexample --n 3").exit_code == 2);
}

TEST_CASE("cli oracle") {
  auto res = run_cli("oracle --p 2 --n 3");
  CHECK(res.exit_code == 0);
  json report = json::parse(res.out);
  CHECK(report["zero_square_count"] == 22);
  CHECK(report["verified"] == 22);
  CHECK(report["brute_force_found"] == 22);
  CHECK(report["mismatches"] == 0);

  CHECK(run_cli("oracle --p 5").exit_code == 2);
  CHECK(run_cli("oracle --p 2 --n 2").exit_code == 2);
}

TEST_CASE("cli text format") {
  auto norm = run_cli("normalize --format text", kT6Text);
  CHECK(norm.exit_code == 0);
  CHECK(norm.out.find("r = 1") != std::string::npos);
  CHECK(norm.out.find("verified: yes") != std::string::npos);
  CHECK(norm.out.find("[") != std::string::npos);

  auto cx = run_cli("counterexample --n 4 --format text");
  CHECK(cx.out.find("[   0   0   1   1  ]") != std::string::npos);
}

TEST_CASE("cli json input path and ring mismatch") {
  auto ok = run_cli("check", t6_json());
  CHECK(ok.exit_code == 0);
  CHECK(run_cli("check --ring fp:5", t6_json()).exit_code == 2);
}
