#include "zetalab/zeros.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "zetalab/errors.hpp"

using namespace zetalab;

namespace {

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("count_zeros against the classical table") {
  const Family fam = Family::zeta_family();
  CHECK(count_zeros(10.0, fam).count == 0);
  CHECK(count_zeros(20.0, fam).count == 1);
  CHECK(count_zeros(31.0, fam).count == 4);
  const ZeroCount c = count_zeros(100.0, fam);
  CHECK(c.count == 29);
  CHECK(std::abs((double)c.count - c.main_term) <= 2.0 + 0.5 * std::log(100.0));
}

TEST_CASE("riemann-von mangoldt proximity through desk heights") {
  const Family fam = Family::zeta_family();
  for (double T : {250.0, 1000.0, 2500.0, 5000.0}) {
    const ZeroCount c = count_zeros(T, fam);
    CHECK(std::abs((double)c.count - c.main_term) <= 2.0 + 0.5 * std::log(T));
  }
}

TEST_CASE("count at a zero ordinate nudges off the singular height") {
  const Family fam = Family::zeta_family();
  // hardy_z vanishes here; the count must nudge T upward and include gamma_1
  const ZeroSet zs = find_zeros(15.0, fam);
  REQUIRE(zs.ordinates.size() == 1);
  CHECK(count_zeros(zs.ordinates[0], fam).count == 1);
}

TEST_CASE("loading a missing cache reports a format error") {
  CHECK_THROWS_AS((void)load_zeros("/nonexistent/zetalab-zeros.csv"), format_error);
}

TEST_CASE("argument principle resolves the tight pair near 7005") {
  // gamma = 7005.0629 and 7005.1006 sit 0.038 apart (|Z| barely lifts off
  // zero between them); the winding count must split them cleanly.
  const Family fam = Family::zeta_family();
  const auto below = count_zeros(7004.9, fam).count;
  CHECK(count_zeros(7005.08, fam).count == below + 1);
  CHECK(count_zeros(7005.3, fam).count == below + 2);
}

TEST_CASE("find_zeros reproduces the first four ordinates") {
  const Family fam = Family::zeta_family();
  const ZeroSet zs = find_zeros(35.0, fam);
  // gamma_5 = 32.935... also sits below 35, so the set has five members;
  // the classical table pins the first four.
  REQUIRE(zs.ordinates.size() == 5);
  CHECK(std::abs(zs.ordinates[0] - 14.134725) < 1e-5);
  CHECK(std::abs(zs.ordinates[1] - 21.022039) < 1e-5);
  CHECK(std::abs(zs.ordinates[2] - 25.01085) < 1e-5);
  CHECK(std::abs(zs.ordinates[3] - 30.42487) < 1e-5);
  CHECK(std::abs(zs.ordinates[4] - 32.935062) < 1e-5);
  CHECK(zs.count_below(31.0) == 4);
  // zero quality: a genuine sign change within 1e-7 of each ordinate
  for (double g : zs.ordinates)
    CHECK(hardy_z(g - 1e-7, fam) * hardy_z(g + 1e-7, fam) < 0.0);
  // empty below the first zero
  CHECK(find_zeros(10.0, fam).ordinates.empty());
}

TEST_CASE("chi3 family zeros") {
  const Family fam = Family::quadratic(chi3());
  const ZeroSet zs = find_zeros(14.0, fam);
  REQUIRE(!zs.ordinates.empty());
  CHECK(std::abs(zs.ordinates[0] - 8.0397) < 1e-3);
  // independent confirmation: |Lambda| has a genuine minimum there,
  // i.e. the L-value itself nearly vanishes.
  const Complex L = dirichlet_L(Complex(0.5, zs.ordinates[0]), chi3());
  CHECK(std::abs(L) < 1e-8);
  // completeness at the certified height and at half of it
  CHECK(zs.count_below(14.0) == count_zeros(14.0, fam).count);
  CHECK(zs.count_below(7.0) == count_zeros(7.0, fam).count);
  // the rotation has unit modulus for quadratic families as well
  for (double t : {5.0, 9.5}) {
    CHECK(std::abs(std::abs(hardy_z(t, fam)) -
                   std::abs(dirichlet_L(Complex(0.5, t), chi3()))) <=
          1e-10 * std::abs(dirichlet_L(Complex(0.5, t), chi3())));
  }
}

TEST_CASE("completeness certification at two heights") {
  const Family fam = Family::zeta_family();
  const ZeroSet zs = find_zeros(60.0, fam);
  CHECK(zs.count_below(60.0) == count_zeros(60.0, fam).count);
  CHECK(zs.count_below(30.0) == count_zeros(30.0, fam).count);
}

TEST_CASE("zero cache round trip") {
  const Family fam = Family::zeta_family();
  ZeroSet zs = find_zeros(35.0, fam);
  const auto path = temp_file("zetalab_zeros_roundtrip.csv");
  save_zeros(zs, path);
  const ZeroSet back = load_zeros(path);
  CHECK(back.family.label() == zs.family.label());
  CHECK(back.certified_height == zs.certified_height);
  CHECK(back.refinement_tolerance == zs.refinement_tolerance);
  REQUIRE(back.ordinates.size() == zs.ordinates.size());
  for (std::size_t i = 0; i < zs.ordinates.size(); ++i)
    CHECK(back.ordinates[i] == zs.ordinates[i]);  // bit-exact
  std::filesystem::remove(path);
}

TEST_CASE("empty zero set round trip preserves the height") {
  ZeroSet zs;
  zs.family = Family::zeta_family();
  zs.certified_height = 10.0;
  zs.refinement_tolerance = 1e-9;
  const auto path = temp_file("zetalab_zeros_empty.csv");
  save_zeros(zs, path);
  const ZeroSet back = load_zeros(path);
  CHECK(back.ordinates.empty());
  CHECK(back.certified_height == 10.0);
  std::filesystem::remove(path);
}

TEST_CASE("malformed rows are reported with their line number") {
  const auto path = temp_file("zetalab_zeros_bad.csv");
  {
    std::ofstream out(path);
    out << "family,ordinate,tolerance,certified_height,format=zetalab-zeros-v1\n";
    out << "zeta,,1e-9,35\n";
    out << "zeta,not-a-number,1e-9,35\n";
  }
  try {
    (void)load_zeros(path);
    FAIL("expected format_error");
  } catch (const format_error& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
  }
  std::filesystem::remove(path);

  // wrong header version
  {
    std::ofstream out(path);
    out << "family,ordinate,tolerance,certified_height,format=zetalab-zeros-v2\n";
  }
  CHECK_THROWS_AS((void)load_zeros(path), format_error);
  std::filesystem::remove(path);
}
