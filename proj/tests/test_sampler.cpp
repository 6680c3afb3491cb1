#include "cotrop/sampler.h"

#include "support.h"

#include <doctest.h>

#include <cmath>

using namespace testing;

namespace {


SampleConfig small_config(int r = 256) {
  SampleConfig cfg;
  cfg.raster = r;
  cfg.moduli = r;
  cfg.arguments = r;
  return cfg;
}

ComplexPolynomial line_poly() { return cpoly({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}); }

ComplexPolynomial example3(double alpha) {
  return cpoly({{{0, 1}, std::polar(1.0, alpha)}, {{1, 0}, 1}, {{1, 2}, 1}, {{3, 1}, 1}});
}

// Closed line coamoeba in cell units: distance from a cell to the nearest marked predicate cell.
int cell_gap(const TorusRaster& exact, int i, int j) {
  const int R = exact.size();
  for (int d = 0; d < R / 2; ++d)
    for (int a = -d; a <= d; ++a)
      for (int b = -d; b <= d; ++b)
        if (exact.at((i + a + R) % R, (j + b + R) % R)) return d;
  return R;
}

}  // namespace

TEST_CASE("raster basics") {
  TorusRaster r(128);
  CHECK(r.count() == 0);
  r.mark(0.0, 2 * kPi - 1e-9);
  CHECK(r.at(0, 127));
  r.set(-1, 128);
  CHECK(r.at(127, 0));
  CHECK(r.count() == 2);
  CHECK(cell_of(cell_center(17, 128), 128) == 17);
}

TEST_CASE("config validation") {
  SampleConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.raster = 64;
  CHECK(error_of([&] { cfg.validate(); }) == ErrorCode::IllegalResolution);
  cfg = SampleConfig{};
  cfg.moduli = 8;
  CHECK(error_of([&] { cfg.validate(); }) == ErrorCode::IllegalResolution);
  cfg = SampleConfig{};
  cfg.root_tolerance = 1e-3;
  CHECK(error_of([&] { cfg.validate(); }) == ErrorCode::OutOfRange);
  cfg = SampleConfig{};
  cfg.ht_t = 0.5;
  CHECK(error_of([&] { cfg.validate(); }) == ErrorCode::OutOfRange);
}

TEST_CASE("polynomial roots") {
  auto roots = polynomial_roots({Complex(-1), 0, 0, 1}, 1e-12);
  REQUIRE(roots.size() == 3);
  for (const auto& z : roots) {
    CHECK(std::abs(z * z * z - 1.0) < 1e-9);
  }
  auto quad = polynomial_roots({Complex(2), Complex(-3), Complex(1)}, 1e-12);
  REQUIRE(quad.size() == 2);
  double lo = std::min(quad[0].real(), quad[1].real()), hi = std::max(quad[0].real(), quad[1].real());
  CHECK(lo == doctest::Approx(1));
  CHECK(hi == doctest::Approx(2));
}

TEST_CASE("sampled line coamoeba") {
  auto cfg = small_config();
  auto r = sample_coamoeba(line_poly(), cfg);
  CHECK(r.fraction() == doctest::Approx(0.25).epsilon(0.08));
  auto exact = predicate_raster([](double a, double b) { return line_coamoeba_membership({a, b}, true); }, r.size());
  int worst = 0;
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j)
      if (r.at(i, j)) worst = std::max(worst, cell_gap(exact, i, j));
  CHECK(worst <= 2);
  CHECK(complement_components(r) == 1);
}

TEST_CASE("degenerate inputs") {
  auto cfg = small_config();
  CHECK(error_of([&] { (void)sample_coamoeba(cpoly({{{1, 1}, 1}}), cfg); }) == ErrorCode::EmptyCurve);
}

TEST_CASE("a curve independent of w is a circle") {
  auto cfg = small_config();
  auto r = sample_coamoeba(cpoly({{{1, 0}, 1}, {{2, 0}, 1}}), cfg);
  // arg(-1) sits on a cell boundary, so marks land in one of two columns.
  const int R = r.size(), col = R / 2;
  int rows = 0;
  for (int j = 0; j < R; ++j) rows += r.at(col, j) || r.at(col - 1, j);
  CHECK(rows == R);
  std::size_t near = 0;
  for (int j = 0; j < R; ++j) near += r.at(col, j) + r.at(col - 1, j);
  CHECK(near == r.count());
}

TEST_CASE("rescaling maps") {
  const double t = std::exp(-2.0);
  auto p = ht_rescale({std::polar(std::exp(4.0), 0.3), std::polar(1.0, -1.0)}, t);
  CHECK(std::abs(p[0]) == doctest::Approx(std::exp(2.0)));
  CHECK(std::arg(p[0]) == doctest::Approx(0.3));
  CHECK(std::abs(p[1]) == doctest::Approx(1.0));
  CHECK(error_of([] { (void)ht_rescale({Complex(1)}, 0.5); }) == ErrorCode::OutOfRange);

  auto f = cpoly({{{0, 0}, 1}, {{1, 0}, std::polar(std::exp(1.0), 0.5)}, {{0, 1}, 1}});
  auto g = ft_family(f, std::exp(-1.0));
  CHECK(std::abs(g.coefficient({1, 0})) == doctest::Approx(std::exp(1.0)));
  CHECK(std::arg(g.coefficient({1, 0})) == doctest::Approx(0.5));
  auto h = ft_family(f, 0.05);
  CHECK(std::log(std::abs(h.coefficient({1, 0}))) == doctest::Approx(-std::log(0.05)));
  CHECK(error_of([&] { (void)ft_family(cpoly({{{0, 0}, 1}, {{1, 0}, 1}, {{2, 0}, 1}}), 0.1); }) ==
        ErrorCode::NotMaximallySparse);
}

TEST_CASE("closing and components") {
  TorusRaster empty(128);
  CHECK(complement_components(empty) == 1);
  TorusRaster cross(128);
  for (int k = 0; k < 128; ++k) {
    cross.set(k, 0);
    cross.set(0, k);
  }
  CHECK(complement_components(cross) == 1);
  TorusRaster grid(128);
  for (int k = 0; k < 128; ++k) {
    grid.set(k, 0);
    grid.set(k, 64);
    grid.set(0, k);
    grid.set(64, k);
  }
  CHECK(complement_components(grid) == 4);
  TorusRaster dot(128);
  dot.set(10, 10);
  dot.set(12, 10);
  CHECK(closing(dot).at(11, 10));
}

TEST_CASE("torus Hausdorff distance") {
  TorusRaster a(128), b(128);
  a.set(0, 5);
  b.set(127, 5);
  CHECK(raster_hausdorff(a, b) == doctest::Approx(2 * kPi / 128));
  TorusRaster c(128);
  c.set(0, 5);
  c.set(64, 69);
  CHECK(raster_hausdorff(a, c) == doctest::Approx(std::hypot(64, 64) * 2 * kPi / 128));
  CHECK(raster_hausdorff(a, a) == 0);
  CHECK(error_of([&] { (void)raster_hausdorff(a, TorusRaster(256)); }) == ErrorCode::SizeMismatch);
  CHECK(error_of([&] { (void)raster_hausdorff(a, TorusRaster(128)); }) == ErrorCode::EmptyInput);
}

TEST_CASE("distance transform matches brute force") {
  TorusRaster r(128);
  r.set(3, 7);
  r.set(90, 100);
  r.set(60, 2);
  auto d = squared_distance_transform(r);
  for (int i = 0; i < 128; i += 5)
    for (int j = 0; j < 128; j += 3) {
      double best = 1e300;
      for (auto [a, b] : {std::pair{3, 7}, {90, 100}, {60, 2}}) {
        double di = std::min(std::abs(i - a), 128 - std::abs(i - a));
        double dj = std::min(std::abs(j - b), 128 - std::abs(j - b));
        best = std::min(best, di * di + dj * dj);
      }
      CHECK(d[i * 128 + j] == doctest::Approx(best));
    }
}

TEST_CASE("sampling is invariant under rescaling a variable") {
  auto cfg = small_config();
  auto f = line_poly();
  auto g = cpoly({{{0, 0}, 1}, {{1, 0}, 3.0}, {{0, 1}, 0.25}});
  CHECK(agreement(sample_coamoeba(f, cfg), sample_coamoeba(g, cfg)) > 0.98);
}

TEST_CASE("phase on a coefficient rotates the raster") {
  auto cfg = small_config();
  const int R = cfg.raster;
  auto f = line_poly();
  auto g = cpoly({{{0, 0}, 1}, {{1, 0}, std::polar(1.0, 2 * kPi * 64 / R)}, {{0, 1}, 1}});
  auto rf = sample_coamoeba(f, cfg), rg = sample_coamoeba(g, cfg);
  const double cell = 2 * kPi / R;
  CHECK(agreement(rotate(rg, 64, 0), rf) > 0.97);
  CHECK(raster_hausdorff(rotate(rg, 64, 0), rf) <= 2 * cell);
}

TEST_CASE("phase gauge on the four-term example") {
  auto cfg = small_config();
  const int R = cfg.raster;
  auto real = sample_coamoeba(example3(0), cfg);
  auto turned = sample_coamoeba(example3(kPi / 2), cfg);
  const double cell = 2 * kPi / R;
  CHECK(agreement(rotate(real, -R / 4, -R / 2), turned) > 0.97);
  CHECK(raster_hausdorff(rotate(real, -R / 4, -R / 2), turned) <= 2 * cell);
  CHECK(complement_components(real) == complement_components(turned));
}

TEST_CASE("thread count does not change the raster") {
  auto cfg = small_config();
  auto one = sample_coamoeba(example3(0.8), cfg);
  cfg.threads = 7;
  CHECK(sample_coamoeba(example3(0.8), cfg) == one);
}

TEST_CASE("reflection helpers") {
  TorusRaster r(128);
  r.set(5, 10);
  auto s = reflect_second(r);
  CHECK(s.count() == 1);
  CHECK(reflect_second(s) == r);
}
