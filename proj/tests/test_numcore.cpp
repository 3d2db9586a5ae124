#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sici/approx.hpp"
#include "sici/constants.hpp"

using sici::Approx;

TEST_CASE("Approx basics") {
  Approx e = Approx::exact(2.5);
  CHECK(e.value == 2.5);
  CHECK(e.err == 0.0);

  Approx a(1.0, 1e-12), b(2.0, 3e-12);
  Approx s = a + b;
  CHECK(s.value == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(s.err >= 4e-12);
  CHECK(s.err < 5e-12);

  Approx d = a - b;
  CHECK(d.value == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(d.err >= 4e-12);

  Approx p = a * b;
  CHECK(p.value == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p.err >= 1e-12 * 2.0 + 3e-12 * 1.0);

  Approx sc = 3.0 * a;
  CHECK(sc.value == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(sc.err >= 3e-12);
  CHECK((a * 3.0).value == sc.value);

  CHECK((a + 1.0).value == doctest::Approx(2.0).epsilon(1e-15));
  CHECK((1.0 - a).value == doctest::Approx(0.0).epsilon(1e-15));
  CHECK((-a).value == -1.0);
  CHECK((-a).err == a.err);
}

TEST_CASE("Approx non-finite value forces infinite err") {
  Approx bad(std::numeric_limits<double>::quiet_NaN(), 1e-12);
  CHECK(std::isinf(bad.err));
  Approx inf(std::numeric_limits<double>::infinity(), 0.0);
  CHECK(std::isinf(inf.err));
}

TEST_CASE("constant table lookups") {
  CHECK(sici::constant_value("pi") ==
        doctest::Approx(3.14159265358979323846).epsilon(1e-16));
  CHECK(sici::constant_value("euler_gamma") ==
        doctest::Approx(0.57721566490153286061).epsilon(1e-15));
  CHECK(sici::constant_value("log_2pi") ==
        doctest::Approx(1.837877066409345).epsilon(1e-15));
  CHECK(sici::constant_value("zeta2") ==
        doctest::Approx(1.6449340668482264365).epsilon(1e-15));
  CHECK(sici::constant_value("zeta_prime_neg1") ==
        doctest::Approx(-0.1654211437004509).epsilon(1e-12));
  Approx c = sici::constant("catalan");
  CHECK(c.err > 0.0);
  CHECK(c.err < 1e-12);
  CHECK_THROWS_AS((void)sici::constant("no_such_constant"), std::out_of_range);
  CHECK(sici::constant_table().size() >= 10);
}

TEST_CASE("constant self-test passes") {
  for (const auto& check : sici::verify_constants()) {
    INFO(check.name, " discrepancy ", check.discrepancy);
    CHECK(check.pass);
  }
}
