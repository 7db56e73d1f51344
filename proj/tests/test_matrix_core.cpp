#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinfer/matrix.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

using namespace spinfer;

TEST_CASE("parse plain 2x2 matrix") {
  const BinaryMatrix m = parse_matrix("1,0\n0,1\n");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 2);
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 0);
  CHECK(m(1, 1) == 1);
}

TEST_CASE("parse the worked 3x6 example") {
  const BinaryMatrix m = parse_matrix("1,1,1,0,0,0\n1,1,1,1,1,1\n0,0,0,1,1,1\n");
  CHECK(m == oracles::worked_example().m);
  CHECK(count_ones(m) == 12);
}

TEST_CASE("parse errors carry position") {
  CHECK_THROWS_AS(parse_matrix(""), EmptyInputError);
  CHECK_THROWS_AS(parse_matrix("# only,labels\n"), EmptyInputError);

  try {
    parse_matrix("1,2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 2);
  }

  try {
    parse_matrix("1,0\n1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("labels parse and round-trip") {
  const std::string text = "# s1,s2,s3\n# r1,r2\n1,0,1\n0,0,1\n";
  const BinaryMatrix m = parse_matrix(text);
  REQUIRE(m.col_labels.size() == 3);
  REQUIRE(m.row_labels.size() == 2);
  CHECK(m.col_labels[2] == "s3");
  CHECK(m.row_labels[0] == "r1");
  CHECK(format_matrix(m) == text);
}

TEST_CASE("label count mismatch rejected") {
  CHECK_THROWS_AS(parse_matrix("# a,b\n1,0,1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("# a,b,c\n# r1\n1,0,1\n0,1,0\n"), ParseError);
}

TEST_CASE("save/load round-trip is exact") {
  testsupport::TempDir tmp("matrix_roundtrip");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    BinaryMatrix m = testsupport::random_matrix(5, 7, 0.4, seed);
    if (seed % 2 == 0) {
      m.row_labels = {"a", "b", "c", "d", "e"};
      m.col_labels = {"u1", "u2", "u3", "u4", "u5", "u6", "u7"};
    }
    const std::string path = tmp.str("m.csv");
    save_matrix(m, path);
    CHECK(load_matrix(path) == m);
  }
}

TEST_CASE("count_ones basics and complement identity") {
  CHECK(count_ones(BinaryMatrix(3, 3)) == 0);
  BinaryMatrix ones(2, 5);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t u = 0; u < 5; ++u) ones.set(i, u, true);
  CHECK(count_ones(ones) == 10);

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const BinaryMatrix m = testsupport::random_matrix(6, 4, 0.5, seed);
    BinaryMatrix complement(6, 4);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t u = 0; u < 4; ++u) complement.set(i, u, !m(i, u));
    CHECK(count_ones(m) + count_ones(complement) == 24);
  }
}

TEST_CASE("validate_sequence") {
  const BinaryMatrix m = testsupport::random_matrix(4, 3, 0.5, 7);

  ObservationSequence same{{m, m}};
  CHECK(!validate_sequence(same).has_value());

  ObservationSequence growing{{BinaryMatrix(4, 3), m}};
  CHECK(!validate_sequence(growing).has_value());

  BinaryMatrix first(2, 2), second(2, 2);
  first.set(0, 0, true);
  ObservationSequence shrinking{{first, second}};
  const auto v = validate_sequence(shrinking);
  REQUIRE(v.has_value());
  CHECK(v->t == 1);
  CHECK(v->i == 0);
  CHECK(v->u == 0);

  ObservationSequence mismatched{{BinaryMatrix(2, 2), BinaryMatrix(3, 2)}};
  CHECK_THROWS_AS(validate_sequence(mismatched), DimensionError);
}

TEST_CASE("real matrix round-trip keeps at least 10 significant digits") {
  RealMatrix m(2, 2);
  m.at(0, 0) = 0.123456789123;
  m.at(0, 1) = 1.0 / 3.0;
  m.at(1, 0) = -42.5;
  m.at(1, 1) = 1e-9;
  testsupport::TempDir tmp("real_roundtrip");
  const std::string path = tmp.str("r.csv");
  save_real_matrix(m, path);
  const RealMatrix back = load_real_matrix(path);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t u = 0; u < 2; ++u)
      CHECK(back(i, u) == doctest::Approx(m(i, u)).epsilon(1e-9));
}

TEST_CASE("parser never crashes on arbitrary byte soup") {
  std::mt19937_64 eng(2024);
  const char alphabet[] = "01,#\n\r ab.-";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    const std::size_t len = eng() % 64;
    for (std::size_t k = 0; k < len; ++k) text.push_back(alphabet[eng() % (sizeof alphabet - 1)]);
    try {
      const BinaryMatrix m = parse_matrix(text);
      CHECK(m.rows() > 0);  // success implies a well-formed matrix
      CHECK(m.cols() > 0);
      CHECK(parse_matrix(format_matrix(m)) == m);
    } catch (const Error&) {
      // typed rejection is the only acceptable failure mode
    }
  }
}

TEST_CASE("pgm rendering") {
  RealMatrix m(1, 3);
  m.at(0, 0) = 0.0;
  m.at(0, 1) = 0.5;
  m.at(0, 2) = 1.0;
  CHECK(format_pgm(m) == "P2\n3 1\n255\n0 128 255\n");
}
