#include "doctest.h"
#include "testutil.hpp"
#include "zerosquare/io.hpp"

using namespace zsq;
using nlohmann::json;
using zsqtest::random_matrix;
using zsqtest::t6_matrix;

TEST_CASE("matrix JSON round-trips across rings") {
  SplitMix64 rng(0x10);
  for (const Ring& ring :
       {Ring::integers(), Ring::prime_field(13), Ring::nil16()}) {
    for (int i = 0; i < 60; ++i) {
      int r = 1 + static_cast<int>(rng.next() % 4);
      int c = 1 + static_cast<int>(rng.next() % 4);
      Matrix m = random_matrix(ring, rng, r, c, 1000000);
      CHECK(matrix_from_json(matrix_to_json(m)) == m);
    }
  }
}

TEST_CASE("matrix JSON accepts strings and integers, rejects floats") {
  json j{{"ring", "int"},
         {"rows", 2},
         {"cols", 2},
         {"entries", {{"-180", 300}, {12, "-7"}}}};
  Matrix m = matrix_from_json(j);
  CHECK(m.at(0, 1) == Ring::integers().from_int(300));

  j["entries"][0][0] = 1.5;
  CHECK_THROWS_AS(matrix_from_json(j), Error);
}

TEST_CASE("matrix JSON diagnostics") {
  CHECK_THROWS_WITH_AS(matrix_from_json(json::array()),
                       doctest::Contains("object"), Error);
  CHECK_THROWS_WITH_AS(matrix_from_json(json{{"rows", 2}}),
                       doctest::Contains("ring"), Error);

  json bad{{"ring", "int"}, {"rows", 2}, {"cols", 2},
           {"entries", {{"1", "2"}, {"3"}}}};
  CHECK_THROWS_WITH_AS(matrix_from_json(bad), doctest::Contains("entries[1]"),
                       Error);

  json bad_elem{{"ring", "int"}, {"rows", 1}, {"cols", 2}};
  bad_elem["entries"] = json::array({json::array({"1", "x"})});
  CHECK_THROWS_WITH_AS(matrix_from_json(bad_elem),
                       doctest::Contains("entries[0][1]"), Error);

  json bad_ring{{"ring", "fp:6"}, {"rows", 1}, {"cols", 1}, {"entries", {{"1"}}}};
  CHECK_THROWS_AS(matrix_from_json(bad_ring), Error);

  json bad_dims{{"ring", "int"}, {"rows", 0}, {"cols", 1}, {"entries", json::array()}};
  CHECK_THROWS_AS(matrix_from_json(bad_dims), Error);
}

TEST_CASE("plain text matrices, ring int only") {
  Matrix t6 = matrix_from_text("-180 -300 -450\n90 150 225\n12 20 30\n",
                               Ring::integers());
  CHECK(t6 == t6_matrix());

  // blank lines are skipped, sign prefixes parse
  Matrix m = matrix_from_text("\n1 +2\n\n-3 4\n", Ring::integers());
  CHECK(m == Matrix::from_ints(Ring::integers(), {{1, 2}, {-3, 4}}));

  CHECK_THROWS_AS(matrix_from_text("1 2\n3\n", Ring::integers()), Error);
  CHECK_THROWS_AS(matrix_from_text("1 a\n", Ring::integers()), Error);
  CHECK_THROWS_AS(matrix_from_text("", Ring::integers()), Error);
  CHECK_THROWS_AS(matrix_from_text("1 2\n", Ring::prime_field(5)), Error);
}

TEST_CASE("parse_matrix sniffs the format and honors the ring hint") {
  Matrix from_text = parse_matrix("  \n1 2\n3 4\n", std::nullopt);
  CHECK(from_text.ring() == Ring::integers());

  std::string j = matrix_to_json(t6_matrix()).dump();
  CHECK(parse_matrix(j, Ring::integers()) == t6_matrix());
  CHECK_THROWS_WITH_AS(parse_matrix(j, Ring::prime_field(5)),
                       doctest::Contains("declares ring"), Error);
  CHECK_THROWS_AS(parse_matrix("{ not json", std::nullopt), Error);
  CHECK_THROWS_AS(parse_matrix("   ", std::nullopt), Error);
}

TEST_CASE("bracket text layout") {
  CHECK(matrix_to_bracket_text(t6_matrix()) ==
        "[  -180  -300  -450  ]\n"
        "[    90   150   225  ]\n"
        "[    12    20    30  ]\n");
  Ring n16 = Ring::nil16();
  Matrix d(n16, 1, 2);
  d.set(0, 1, n16.parse_elem("X+Y"));
  CHECK(matrix_to_bracket_text(d) == "[    0  X+Y  ]\n");
}

TEST_CASE("certificate JSON round-trip and verified flag") {
  Ring z = Ring::integers();
  Matrix t6 = t6_matrix();
  SimilarityCertificate cert = normalize(t6);

  json cj = certificate_to_json(t6, cert);
  CHECK(cj["verified"] == true);
  CHECK(cj["r"] == "1");

  SimilarityCertificate back = certificate_from_json(cj);
  CHECK(back.n == cert.n);
  CHECK(back.r == cert.r);
  CHECK(back.U == cert.U);
  CHECK(back.det_unit == cert.det_unit);
  CHECK(verify_certificate(t6, back));

  // tampering shows up in the emitted flag
  SimilarityCertificate bad = cert;
  bad.r = z.from_int(2);
  CHECK(certificate_to_json(t6, bad)["verified"] == false);

  CHECK_THROWS_WITH_AS(certificate_from_json(json{{"n", 3}}),
                       doctest::Contains("lacks"), Error);
}
