#include <doctest.h>

#include "chdyn/errors.hpp"
#include "chdyn/lemmas.hpp"
#include "support/oracles.hpp"

using namespace chdyn;

namespace {

double detail(const LemmaCheckResult& r, std::string_view key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return v;
  FAIL("missing detail " << key);
  return 0.0;
}

}  // namespace

TEST_SUITE("symmetry check") {
  TEST_CASE("generic, a = 0 and the Halley map") {
    for (Complex a : {Complex{0.7, 0.2}, Complex{0.0, 0.0}, Complex{3.0, 0.0}}) {
      const LemmaCheckResult r = check_symmetry(a, 1000);
      CHECK(r.passed);
      CHECK(r.worst_value < 1e-12);
      CHECK_FALSE(r.witness.has_value());
      CHECK(r.samples == 1000);
    }
  }

  TEST_CASE("R_0 on the real axis") {
    for (double x : {0.3, 1.7, -2.5}) {
      const Complex z{x, 0.0};
      CHECK(std::abs(oracle::cubic_family(0.0, chdyn::kZeta * z) - chdyn::kZeta * oracle::cubic_family(0.0, z)) <
            1e-13 * (1.0 + std::abs(oracle::cubic_family(0.0, z))));
    }
  }

  TEST_CASE("seeded and deterministic") {
    const LemmaCheckResult a = check_symmetry({0.1, 0.1}, 200, 9);
    const LemmaCheckResult b = check_symmetry({0.1, 0.1}, 200, 9);
    CHECK(a.worst_value == b.worst_value);
    CHECK(a.seed == 9);
  }
}

TEST_SUITE("annulus bound") {
  TEST_CASE("C_1 from a dense grid over the closed annulus") {
    double best = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double r = 1.0 + 2.0 * i / 2000.0;
      for (int k = 0; k < 360; ++k) {
        const std::complex<double> b = std::polar(r, 2.0 * 3.14159265358979323846 * k / 360.0);
        best = std::max(best, std::abs((15.0 + 2.0 * b * b * b) / (3.0 * b * b)));
      }
    }
    CHECK(best == doctest::Approx(17.0 / 3.0).epsilon(1e-12));
    CHECK(kAnnulusConstant == doctest::Approx(1.0 + best));
  }

  TEST_CASE("passes at small a and all phases") {
    for (double mod : {1e-4, 1e-5, 1e-6})
      for (Complex phase : {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}}) {
        const LemmaCheckResult r = check_annulus_bound(mod * phase, 10000);
        CHECK(r.passed);
        CHECK(r.bound == doctest::Approx(kAnnulusConstant * std::pow(mod, 2.0 / 3.0)));
      }
  }

  TEST_CASE("leading-order error shrinks with a") {
    const double at_6 = detail(check_annulus_bound(1e-6, 10000), "max_leading_order_error");
    const double at_9 = detail(check_annulus_bound(1e-9, 10000), "max_leading_order_error");
    CHECK(at_6 < 0.05);
    CHECK(at_9 < 0.005);
  }

  TEST_CASE("rejects large or zero a") {
    CHECK_THROWS_AS(check_annulus_bound(1e-2), DomainError);
    CHECK_THROWS_AS(check_annulus_bound(0.0), DomainError);
  }
}

TEST_SUITE("small disk bound") {
  TEST_CASE("passes at small a and all phases") {
    for (double mod : {1e-4, 1e-5, 1e-6})
      for (Complex phase : {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}}) {
        const LemmaCheckResult r = check_small_disk_bound(mod * phase, 0.1, 10000);
        CHECK(r.passed);
      }
    CHECK(check_small_disk_bound(1e-4, 0.05, 10000).passed);
  }

  TEST_CASE("bound against direct evaluation at one sample") {
    const double a = 1e-6;
    const std::complex<double> z = std::polar(0.05 * std::pow(a, 2.0 / 3.0), 0.3);
    const auto once = oracle::cubic_family(a, z);
    CHECK(std::abs(oracle::cubic_family(a, once)) > std::pow(a, -1.0 / 3.0));
  }

  TEST_CASE("parameter range") {
    CHECK_THROWS_AS(check_small_disk_bound(1e-2, 0.1), DomainError);
    CHECK_THROWS_AS(check_small_disk_bound(1e-5, 0.5), DomainError);
  }
}

TEST_SUITE("uniform convergence") {
  TEST_CASE("a = 1e-4 passes") {
    const LemmaCheckResult r = check_uniform_convergence(1e-4);
    CHECK(r.passed);
    CHECK(r.worst_value <= r.bound);
  }

  TEST_CASE("a = 0 gives exactly 0") {
    const LemmaCheckResult r = check_uniform_convergence(0.0);
    CHECK(r.worst_value == 0.0);
  }

  TEST_CASE("linear rate") {
    const double big = check_uniform_convergence(1e-2).worst_value;
    const double small = check_uniform_convergence(1e-3).worst_value;
    CHECK(big / small == doctest::Approx(10.0).epsilon(0.3));
  }
}

TEST_SUITE("normalization") {
  TEST_CASE("examples") {
    CHECK(mcmullen_normalize({8.0, 0.0, 5.0}).lambda == Complex{40.0, 0.0});
    const Complex l{0.3, -0.1};
    CHECK(mcmullen_normalize({1.0, 0.0, l}).lambda == l);
    try {
      mcmullen_normalize({1.0, 1.0, 1.0});
      FAIL("expected NotMcMullenForm");
    } catch (const DomainError& e) {
      CHECK(e.kind() == ErrorKind::NotMcMullenForm);
    }
  }

  TEST_CASE("conjugate by the cube root of a6 matches z^4 + 40/z^2") {
    const double u = 2.0;  // cbrt(8)
    oracle::Rng rng(1);
    for (int k = 0; k < 100; ++k) {
      const std::complex<double> z = rng.complex_in_annulus(0.2, 3.0);
      const std::complex<double> w = z / u;
      const std::complex<double> q = (8.0 * std::pow(w, 6) + 5.0) / (w * w);
      CHECK(std::abs(u * q - oracle::mcmullen(4, 2, 40.0, z)) < 1e-10 * std::abs(u * q));
    }
  }

  TEST_CASE("critical-point identities") {
    const NormalizeResult r = mcmullen_normalize({1.0, 0.0, {0.2, 0.1}});
    CHECK(std::abs(r.w_plus * r.w_minus + r.lambda / 2.0) < 1e-15);
    CHECK(std::abs(r.delta * r.delta - 32.0 * r.lambda) < 1e-14);
  }

  TEST_CASE("degenerate delta") {
    // b^2 + 32 lambda = 0 needs b != 0, so the b check fires first unless b is tiny.
    CHECK_THROWS_AS(mcmullen_normalize({1.0, 0.0, 0.0}), DomainError);
  }

  TEST_CASE("random round trip") {
    const LemmaCheckResult r = check_normalize_roundtrip(100, 0);
    CHECK(r.passed);
    CHECK(r.worst_value <= 1e-12);
  }

  TEST_CASE("coincidence identity") {
    oracle::Rng rng(21);
    for (int k = 0; k < 50; ++k) {
      const Complex b = rng.complex_in_annulus(0.1, 3.0);
      const Complex lambda = rng.complex_in_annulus(0.1, 3.0);
      const Complex delta = std::sqrt(b * b + 32.0 * lambda);
      const Complex expected = 432.0 * delta * delta * delta * b / 4096.0;
      CHECK(std::abs(critical_value_coincidence(b, lambda) - expected) < 1e-10 * (1.0 + std::abs(expected)));
    }
    CHECK(std::abs(critical_value_coincidence(0.0, 0.7)) < 1e-14);
  }
}
