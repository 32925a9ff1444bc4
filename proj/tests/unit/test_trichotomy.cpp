#include <doctest.h>

#include "chdyn/errors.hpp"
#include "chdyn/families.hpp"
#include "chdyn/rational_map.hpp"
#include "chdyn/report.hpp"
#include "chdyn/trichotomy.hpp"
#include "support/oracles.hpp"

using namespace chdyn;

TEST_SUITE("orbit") {
  TEST_CASE("fixed point gives a constant orbit") {
    const OrbitRecord rec = orbit(chebyshev_halley_cubic(0.0), 1.0, 10, 1e6);
    CHECK(rec.points.size() == 11);
    CHECK(rec.truncated);
    CHECK(rec.events.empty());
    for (const auto& p : rec.points) CHECK(std::abs(p.value() - 1.0) < 1e-15);
  }

  TEST_CASE("near 0 the map throws points out like 1/(5 z^2)") {
    const OrbitRecord rec = orbit(chebyshev_halley_cubic(0.0), 0.011, 1, 1e12);
    REQUIRE(rec.points.size() >= 2);
    const double expected = std::abs(oracle::cubic_family(0.0, 0.011));
    CHECK(rec.points[1].modulus() > 1e3);
    CHECK(rec.points[1].modulus() == doctest::Approx(expected).epsilon(1e-13));
  }

  TEST_CASE("exact pole hit") {
    const OrbitRecord rec = orbit(chebyshev_halley_cubic(0.0), 0.0, 10, 1e6);
    REQUIRE(rec.events.size() == 1);
    CHECK(rec.events[0] == OrbitEvent{1, OrbitEventKind::PolePassage});
    CHECK(rec.points.back().is_infinite());
  }

  TEST_CASE("McMullen critical orbit escapes at index 2 for lambda = 0.005") {
    const McMullenParams p{4, 2, 0.005};
    const Complex c = mcmullen_critical_points(p)[0];
    const OrbitRecord rec = orbit(mcmullen_map(p), c, 200, escape_radius(p));
    REQUIRE(rec.events.size() == 1);
    CHECK(rec.events[0] == OrbitEvent{2, OrbitEventKind::Escape});
  }

  TEST_CASE("recorded points follow the map") {
    const RationalMap map = chebyshev_halley_cubic({-0.02, 0.01});
    const OrbitRecord rec = orbit(map, {0.3, 0.4}, 50, 1e9);
    for (std::size_t k = 0; k + 1 < rec.points.size(); ++k) {
      const Complex next = map(rec.points[k]).value();
      CHECK(std::abs(rec.points[k + 1].value() - next) <= 1e-12 * std::abs(next));
    }
  }
}

TEST_SUITE("McMullen trichotomy") {
  TEST_CASE("escape radius") {
    CHECK(escape_radius({4, 2, -0.28}) == doctest::Approx(std::cbrt(2.28)).epsilon(1e-15));
    CHECK(escape_radius({4, 2, -0.28}) == doctest::Approx(1.3161).epsilon(1e-4));
    CHECK(escape_radius({4, 2, 1.0}) == doctest::Approx(1.4422).epsilon(1e-4));
    for (double l : {0.001, 0.3, -0.7, 1.0}) CHECK(escape_radius({4, 2, l}) <= std::cbrt(3.0));
  }

  TEST_CASE("anchors") {
    CHECK(classify_mcmullen({4, 2, 0.005}).cls == TrichotomyClass::CantorCircles);
    CHECK(classify_mcmullen({4, 2, 0.005}).m == 2);
    const TrichotomyReport s = classify_mcmullen({4, 2, -0.28});
    CHECK(s.cls == TrichotomyClass::Sierpinski);
    REQUIRE(s.m.has_value());
    CHECK(*s.m >= 3);
    CHECK(classify_mcmullen({4, 2, -0.455}).cls == TrichotomyClass::Cantor);
  }

  TEST_CASE("large lambda escapes at once") {
    const TrichotomyReport r = classify_mcmullen({4, 2, 50.0});
    CHECK(r.cls == TrichotomyClass::Cantor);
    CHECK(r.evidence.events.back() == OrbitEvent{1, OrbitEventKind::Escape});
  }

  TEST_CASE("bounded critical orbit stays unresolved") {
    // lambda = 2/9 makes the critical point cbrt(1/3) a fixed point.
    const TrichotomyReport r = classify_mcmullen({4, 2, 2.0 / 9.0});
    CHECK(r.cls == TrichotomyClass::Unresolved);
    CHECK_FALSE(r.m.has_value());
    CHECK(r.evidence.truncated);
    CHECK(r.evidence.events.empty());
  }

  TEST_CASE("every critical point gives the same answer") {
    for (Complex lambda : {Complex{0.005, 0.0}, Complex{-0.28, 0.0}, Complex{-0.455, 0.0}, Complex{0.02, 0.03},
                           Complex{-0.1, 0.2}}) {
      const McMullenParams p{4, 2, lambda};
      const TrichotomyReport base = classify_mcmullen(p);
      for (std::size_t j = 1; j < 6; ++j) {
        const TrichotomyReport r = classify_mcmullen(p, 200, j);
        CHECK(r.cls == base.cls);
        CHECK(r.m == base.m);
      }
    }
  }

  TEST_CASE("escape is permanent") {
    for (Complex lambda : {Complex{0.005, 0.0}, Complex{-0.28, 0.0}, Complex{0.3, -0.2}}) {
      const McMullenParams p{4, 2, lambda};
      const double radius = escape_radius(p);
      const RationalMap map = mcmullen_map(p);
      const OrbitRecord rec = orbit(map, mcmullen_critical_points(p)[0], 30, 1e60);
      bool escaped = false;
      for (std::size_t k = 0; k + 1 < rec.points.size(); ++k) {
        if (rec.points[k].modulus() > radius) escaped = true;
        if (escaped) CHECK(rec.points[k + 1].modulus() >= 2.0 * rec.points[k].modulus());
      }
      CHECK(escaped);
    }
  }

  TEST_CASE("lambda = 0 is rejected") {
    CHECK_THROWS_AS(classify_mcmullen({4, 2, 0.0}), DomainError);
  }
}

TEST_SUITE("CH trichotomy") {
  TEST_CASE("anchors") {
    const TrichotomyReport circles = classify_ra(-0.0003);
    CHECK(circles.cls == TrichotomyClass::CantorCircles);
    CHECK(circles.m == 2);
    const TrichotomyReport carpet = classify_ra(-0.0164);
    CHECK(carpet.cls == TrichotomyClass::Sierpinski);
    REQUIRE(carpet.m.has_value());
    CHECK(*carpet.m >= 3);
    CHECK(classify_ra(-0.028).cls == TrichotomyClass::Cantor);
  }

  TEST_CASE("evidence holds the triggering event") {
    const TrichotomyReport carpet = classify_ra(-0.0164);
    REQUIRE_FALSE(carpet.evidence.events.empty());
    const OrbitEvent last = carpet.evidence.events.back();
    CHECK(last.kind == OrbitEventKind::PolePassage);
    CHECK(last.index + 1 == *carpet.m);
    // z_1 is v_{a,0} on the principal labelling of the critical points.
    const Complex v0 = ch_critical_values(-0.0164)[0];
    CHECK(std::abs(carpet.evidence.points[1].value() - v0) < 1e-12);
    CHECK(std::abs(v0) == doctest::Approx(ch_real_critical_value(-0.0164)).epsilon(1e-12));

    const TrichotomyReport cantor = classify_ra(-0.028);
    CHECK(cantor.evidence.events.back().kind == OrbitEventKind::RootProximity);
    CHECK_FALSE(cantor.m.has_value());
  }

  TEST_CASE("the three critical values agree") {
    for (Complex a : {Complex{-0.0003, 0.0}, Complex{-0.0164, 0.0}, Complex{-0.028, 0.0}, Complex{0.01, 0.02},
                      Complex{-0.004, -0.03}}) {
      const TrichotomyReport base = classify_ra(a);
      for (int j = 1; j < 3; ++j) {
        const TrichotomyReport r = classify_ra(a, 200, j);
        CHECK(r.cls == base.cls);
        CHECK(r.m == base.m);
      }
    }
  }

  TEST_CASE("paired anchors agree across families") {
    const std::pair<double, double> pairs[] = {{-0.0003, 0.005}, {-0.0164, -0.28}, {-0.028, -0.455}};
    for (auto [a, lambda] : pairs) CHECK(classify_ra(a).cls == classify_mcmullen({4, 2, lambda}).cls);
  }

  TEST_CASE("domain") {
    try {
      classify_ra(0.0);
      FAIL("expected DegenerateParameter");
    } catch (const DomainError& e) {
      CHECK(e.kind() == ErrorKind::DegenerateParameter);
    }
    try {
      classify_ra(0.2);
      FAIL("expected ParameterTooLarge");
    } catch (const DomainError& e) {
      CHECK(e.kind() == ErrorKind::ParameterTooLarge);
    }
  }

  TEST_CASE("thresholds") {
    const TrichotomyReport r = classify_ra(-1e-5);
    CHECK(r.thresholds.pole_threshold == doctest::Approx(std::pow(1e-5, -1.0 / 3.0)));
    CHECK(r.thresholds.root_radius == 0.2);
    CHECK(classify_ra(-0.028).thresholds.pole_threshold == 20.0);
  }
}

TEST_CASE("classification is deterministic") {
  CHECK(to_json(classify_ra(-0.0164)) == to_json(classify_ra(-0.0164)));
  CHECK(to_json(classify_mcmullen({4, 2, -0.28})) == to_json(classify_mcmullen({4, 2, -0.28})));
}
