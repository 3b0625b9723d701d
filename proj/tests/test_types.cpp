#include <doctest.h>

#include <cmath>
#include <limits>

#include "linerec/forward.hpp"
#include "linerec/types.hpp"

using namespace linerec;

namespace {

const double kNan = std::numeric_limits<double>::quiet_NaN();
const double kInf = std::numeric_limits<double>::infinity();

Scenario table1_scenario() {
  Scenario s;
  s.internal_conductors = {
      Conductor(Point2(-0.5, -0.5), Phasor(0.0, -1.0)),
      Conductor(Point2(0.0, -0.5), Phasor(2.0, 0.0)),
      Conductor(Point2(0.5, -0.5), Phasor(-1.0, 0.0)),
  };
  s.external_conductors = {
      Conductor(Point2(-1.5, -0.5), Phasor(-1.0, 0.0)),
      Conductor(Point2(1.0, 1.0), Phasor(0.0, 2.0)),
  };
  s.r_meas = 1.0;
  s.n_meas = 36;
  return s;
}

}  // namespace

TEST_SUITE("types") {

TEST_CASE("construction with NaN or Inf fails for every domain type") {
  CHECK_THROWS_AS(Point2(kNan, 0.0), InvalidArgument);
  CHECK_THROWS_AS(Point2(0.0, kInf), InvalidArgument);
  CHECK_THROWS_AS(Conductor(Point2(0, 0), Phasor(kNan, 0.0)), InvalidArgument);
  CHECK_THROWS_AS(FieldSample(Point2(0, 0), Phasor(0, kInf), Phasor{}),
                  InvalidArgument);
  CHECK_THROWS_AS(MomentVector({Phasor(1, 0), Phasor(kNan, 0)}),
                  InvalidArgument);
  CHECK_THROWS_AS(NoiseSpec(kNan, 1), InvalidArgument);
  CHECK_THROWS_AS(NoiseSpec(-0.1, 1), InvalidArgument);
}

TEST_CASE("measurement set construction guards") {
  std::vector<FieldSample> two = {
      FieldSample(Point2(1, 0), Phasor{}, Phasor{}),
      FieldSample(Point2(0, 1), Phasor{}, Phasor{})};
  CHECK_THROWS_AS(MeasurementSet(two, 1.0), InvalidArgument);

  std::vector<FieldSample> repeated = {
      FieldSample(Point2(1, 0), Phasor{}, Phasor{}),
      FieldSample(Point2(1, 0), Phasor{}, Phasor{}),
      FieldSample(Point2(0, 1), Phasor{}, Phasor{})};
  CHECK_THROWS_AS(MeasurementSet(repeated, 1.0), InvalidArgument);
}

TEST_CASE("reversing a valid set flips the signed area and fails validation") {
  const Scenario s = table1_scenario();
  const MeasurementSet ms = sample_circle(s);
  CHECK(ms.signed_area() > 0.0);
  CHECK(validate_measurement_set(ms).ok());

  const MeasurementSet rev = ms.reversed();
  CHECK(rev.signed_area() == doctest::Approx(-ms.signed_area()));
  CHECK_FALSE(validate_measurement_set(rev).ok());
}

TEST_CASE("validate_scenario: table 1 is valid") {
  const auto report = validate_scenario(table1_scenario());
  CHECK(report.ok());
}

TEST_CASE("samples off the declared circle fail validation") {
  const MeasurementSet ms = sample_circle(table1_scenario());
  std::vector<FieldSample> bumped = ms.samples();
  bumped[5] = FieldSample(Point2(bumped[5].position.x * 1.001,
                                 bumped[5].position.y * 1.001),
                          bumped[5].bx, bumped[5].by);
  const MeasurementSet off(bumped, ms.r_meas());
  CHECK_FALSE(validate_measurement_set(off).ok());
}

TEST_CASE("validate_scenario: internal conductor outside the contour") {
  Scenario s = table1_scenario();
  s.internal_conductors.push_back(
      Conductor(Point2(1.5, 0.0), Phasor(1.0, 0.0)));
  const auto report = validate_scenario(s);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.find("conductor outside contour") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("validate_scenario: kernel strip threshold arithmetic") {
  Scenario s;
  s.r_meas = 4.0;
  s.n_meas = 36;
  s.internal_conductors = {Conductor(Point2(3.5, 0.0), Phasor(1.0, 0.0))};
  CHECK(validate_scenario(s).ok());  // 3.5 < 4*pi, no violation

  s.internal_conductors = {Conductor(Point2(13.0, 0.0), Phasor(1.0, 0.0))};
  const auto report = validate_scenario(s);
  REQUIRE_FALSE(report.ok());
  bool strip = false;
  bool outside = false;
  for (const auto& v : report.violations) {
    if (v.find("kernel invertibility") != std::string::npos) strip = true;
    if (v.find("conductor outside contour") != std::string::npos)
      outside = true;
  }
  CHECK(strip);
  CHECK(outside);  // 13 > 4 as well
}

TEST_CASE("canonical ordering: ascending x, ties by ascending y") {
  std::vector<Conductor> list = {
      Conductor(Point2(0.5, 0.0), Phasor(1, 0)),
      Conductor(Point2(-0.5, 0.2), Phasor(2, 0)),
      Conductor(Point2(-0.5, -0.2), Phasor(3, 0)),
  };
  sort_canonical(list);
  CHECK(list[0].position.y == doctest::Approx(-0.2));
  CHECK(list[1].position.y == doctest::Approx(0.2));
  CHECK(list[2].position.x == doctest::Approx(0.5));
}

TEST_CASE("parity subsets interleave back to the full loop") {
  const MeasurementSet ms = sample_circle(table1_scenario());
  const MeasurementSet even = ms.parity_subset(0);
  const MeasurementSet odd = ms.parity_subset(1);
  REQUIRE(even.size() == 18);
  REQUIRE(odd.size() == 18);
  for (std::size_t i = 0; i < 18; ++i) {
    CHECK(even.samples()[i].position.x == ms.samples()[2 * i].position.x);
    CHECK(odd.samples()[i].position.x == ms.samples()[2 * i + 1].position.x);
  }
}

}  // TEST_SUITE
