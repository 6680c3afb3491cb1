#include "cotrop/sampler.h"

#include "cotrop/error.h"
#include "cotrop/newton.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <thread>

namespace cotrop {

TorusRaster::TorusRaster(int size) : size_(size) {
  if (size < 1) throw Error(ErrorCode::IllegalResolution, "raster size must be positive");
  cells_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
}

std::size_t TorusRaster::index(int i, int j) const {
  i %= size_;
  j %= size_;
  if (i < 0) i += size_;
  if (j < 0) j += size_;
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(j);
}

void TorusRaster::mark(double theta1, double theta2) { set(cell_of(theta1, size_), cell_of(theta2, size_)); }

std::size_t TorusRaster::count() const { return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1)); }

double TorusRaster::fraction() const { return static_cast<double>(count()) / static_cast<double>(cells_.size()); }

double cell_center(int index, int size) { return kTwoPi * (index + 0.5) / size; }

int cell_of(double theta, int size) {
  int c = static_cast<int>(std::floor(normalize_angle(theta) / kTwoPi * size));
  return std::clamp(c, 0, size - 1);
}

void SampleConfig::validate() const {
  if (moduli < 16 || arguments < 16) throw Error(ErrorCode::IllegalResolution, "grid counts must be at least 16");
  if (raster < 128) throw Error(ErrorCode::IllegalResolution, "raster size must be at least 128");
  if (!(log_modulus_min < log_modulus_max) || !std::isfinite(log_modulus_min) || !std::isfinite(log_modulus_max))
    throw Error(ErrorCode::OutOfRange, "log-modulus range must be a finite nonempty interval");
  if (!(root_tolerance > 0 && root_tolerance <= 1e-6)) throw Error(ErrorCode::OutOfRange, "root tolerance must lie in (0, 1e-6]");
  if (threads < 1) throw Error(ErrorCode::OutOfRange, "thread count must be positive");
  if (!(max_link >= 0 && max_link <= 64)) throw Error(ErrorCode::OutOfRange, "link length must lie in [0, 64] cells");
  if (ht_t != 0 && !(ht_t > 0 && ht_t <= std::exp(-1.0))) throw Error(ErrorCode::OutOfRange, "t must lie in (0, 1/e]");
}

// ---------------------------------------------------------------------------

std::vector<Complex> polynomial_roots(std::vector<Complex> c, double tol, double angle_offset) {
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
  std::size_t low = 0;
  while (low < c.size() && c[low] == Complex(0)) ++low;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  if (c.size() < 2) return {};
  const std::size_t d = c.size() - 1;

  auto eval = [&](Complex x, Complex& p, Complex& dp) {
    p = c[d];
    dp = 0;
    for (std::size_t k = d; k-- > 0;) {
      dp = dp * x + p;
      p = p * x + c[k];
    }
  };
  auto accept = [&](Complex x) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) || x == Complex(0)) return false;
    Complex p = c[d];
    double scale = std::abs(c[d]);
    double ax = std::abs(x);
    for (std::size_t k = d; k-- > 0;) {
      p = p * x + c[k];
      scale = scale * ax + std::abs(c[k]);
    }
    return std::isfinite(scale) && std::abs(p) <= tol * scale;
  };

  std::vector<Complex> z(d);
  if (d == 1) {
    z[0] = -c[0] / c[1];
  } else {
    double r = std::pow(std::abs(c[0]) / std::abs(c[d]), 1.0 / static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k) z[k] = std::polar(r, kTwoPi * static_cast<double>(k) / static_cast<double>(d) + angle_offset);
    for (int iter = 0; iter < 500; ++iter) {
      double worst = 0;
      for (std::size_t k = 0; k < d; ++k) {
        Complex p, dp;
        eval(z[k], p, dp);
        if (p == Complex(0)) continue;
        Complex ratio = dp == Complex(0) ? Complex(1e-8 * (1 + std::abs(z[k]))) : p / dp;
        Complex sum = 0;
        for (std::size_t j = 0; j < d; ++j)
          if (j != k && z[j] != z[k]) sum += 1.0 / (z[k] - z[j]);
        Complex step = ratio / (1.0 - ratio * sum);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
        z[k] -= step;
        worst = std::max(worst, std::abs(step) / std::max(std::abs(z[k]), 1e-300));
      }
      if (worst < 1e-15) break;
    }
  }
  std::vector<Complex> out;
  for (const auto& x : z)
    if (accept(x)) out.push_back(x);
  return out;
}

namespace {

// Coefficients of f as a polynomial in variable `solve` at a fixed value of the
// other variable, given in log-polar form.
struct Slice {
  std::int64_t min_power = 0;
  std::int64_t degree = 0;  // max - min
  std::vector<std::pair<std::int64_t, std::pair<std::int64_t, Complex>>> terms;  // (power - min, (other power, a))
};

Slice make_slice(const ComplexPolynomial& f, int solve) {
  Slice s;
  std::int64_t lo = std::numeric_limits<std::int64_t>::max(), hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& [alpha, a] : f.terms()) {
    lo = std::min(lo, alpha[solve]);
    hi = std::max(hi, alpha[solve]);
  }
  s.min_power = lo;
  s.degree = hi - lo;
  for (const auto& [alpha, a] : f.terms()) s.terms.push_back({alpha[solve] - lo, {alpha[1 - solve], a}});
  return s;
}

}  // namespace

TorusRaster sample_coamoeba(const ComplexPolynomial& f, const SampleConfig& cfg) {
  cfg.validate();
  if (f.dimension() != 2) throw Error(ErrorCode::UnsupportedDimension, "sampling needs a plane curve");
  if (f.terms().size() < 2) throw Error(ErrorCode::EmptyCurve, "a monomial has no zeros in the torus");
  const Slice slices[2] = {make_slice(f, 1), make_slice(f, 0)};  // solve for w, then for z
  if (slices[0].degree == 0 && slices[1].degree == 0) throw Error(ErrorCode::EmptyCurve, "no zeros in the torus");

  std::mt19937_64 rng(cfg.seed);
  const double offset = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
  const int M = cfg.moduli, K = cfg.arguments, R = cfg.raster;
  const double link = cfg.max_link * kTwoPi / R;
  const std::size_t units = 2 * static_cast<std::size_t>(K);
  std::vector<std::vector<std::uint32_t>> marks(units);

  // One unit walks the moduli at a fixed argument of the fixed variable.
  auto work = [&](std::size_t unit) {
    const int dir = static_cast<int>(unit / static_cast<std::size_t>(K));
    const int k = static_cast<int>(unit % static_cast<std::size_t>(K));
    const Slice& s = slices[dir];
    if (s.degree == 0) return;
    const double phi = kTwoPi * (k + 0.5) / K;
    std::vector<Complex> coeffs(static_cast<std::size_t>(s.degree) + 1);
    std::vector<std::uint32_t>& out = marks[unit];
    auto put = [&](double a, double b) {
      out.push_back(static_cast<std::uint32_t>(cell_of(a, R)) * static_cast<std::uint32_t>(R) +
                    static_cast<std::uint32_t>(cell_of(b, R)));
    };
    struct Sample {
      double log_modulus, a, b;
    };
    std::vector<Sample> previous, current;
    for (int i = 0; i < M; ++i) {
      const double m = cfg.log_modulus_min + (cfg.log_modulus_max - cfg.log_modulus_min) * i / (M - 1);
      std::fill(coeffs.begin(), coeffs.end(), Complex(0));
      for (const auto& [power, rest] : s.terms) {
        const double e = static_cast<double>(rest.first);
        coeffs[static_cast<std::size_t>(power)] += rest.second * std::polar(std::exp(e * m), e * phi);
      }
      const Complex fixed = std::polar(std::exp(m), phi);
      current.clear();
      for (const Complex& root : polynomial_roots(coeffs, cfg.root_tolerance, offset)) {
        std::vector<Complex> p = dir == 0 ? std::vector<Complex>{fixed, root} : std::vector<Complex>{root, fixed};
        if (cfg.ht_t > 0) p = ht_rescale(p, cfg.ht_t);
        current.push_back({std::log(std::abs(root)), std::arg(p[0]), std::arg(p[1])});
        put(current.back().a, current.back().b);
      }
      // Join each root to the nearest root of the previous modulus when the
      // step on the torus is short.
      if (link > 0) {
        for (const auto& c : current) {
          const Sample* best = nullptr;
          double best_d = 0;
          for (const auto& q : previous) {
            double d = std::abs(c.log_modulus - q.log_modulus) + std::abs(wrap_pi(c.a - q.a)) + std::abs(wrap_pi(c.b - q.b));
            if (!best || d < best_d) {
              best = &q;
              best_d = d;
            }
          }
          if (!best) continue;
          const double da = wrap_pi(c.a - best->a), db = wrap_pi(c.b - best->b);
          const double span = std::max(std::abs(da), std::abs(db));
          if (span > link) continue;
          const int steps = static_cast<int>(std::ceil(2 * span * R / kTwoPi));
          for (int t = 1; t < steps; ++t) put(best->a + da * t / steps, best->b + db * t / steps);
        }
      }
      std::swap(previous, current);
    }
  };

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(cfg.threads), units);
  if (workers <= 1) {
    for (std::size_t u = 0; u < units; ++u) work(u);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t u = next++; u < units; u = next++) work(u);
      });
    for (auto& th : pool) th.join();
  }

  TorusRaster raster(R);
  for (const auto& row : marks)
    for (auto idx : row) raster.cells()[idx] = 1;
  return raster;
}

std::vector<Complex> ht_rescale(const std::vector<Complex>& p, double t) {
  if (!(t > 0 && t <= std::exp(-1.0))) throw Error(ErrorCode::OutOfRange, "t must lie in (0, 1/e]");
  const double e = -1.0 / std::log(t);
  std::vector<Complex> out;
  for (const auto& z : p) {
    if (z == Complex(0)) throw Error(ErrorCode::InvalidArgument, "point has a zero coordinate");
    out.push_back(std::polar(std::pow(std::abs(z), e), std::arg(z)));
  }
  return out;
}

ComplexPolynomial ft_family(const ComplexPolynomial& f, double t) {
  if (!(t > 0 && t <= std::exp(-1.0))) throw Error(ErrorCode::OutOfRange, "t must lie in (0, 1/e]");
  NewtonPolytope poly = convex_hull(f.support());
  if (poly.vertices.size() != poly.support.size())
    throw Error(ErrorCode::NotMaximallySparse, "support has non-vertex points");
  const double base = std::log(t) + 1;  // log(e t)
  ComplexPolynomial out(f.dimension());
  for (const auto& [alpha, a] : f.terms()) out.set(alpha, a * std::exp(-std::log(std::abs(a)) * base));
  return out;
}

// ---------------------------------------------------------------------------

TorusRaster closing(const TorusRaster& r) {
  const int R = r.size();
  TorusRaster dil(R), out(R);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      bool any = false;
      for (int di = -1; di <= 1 && !any; ++di)
        for (int dj = -1; dj <= 1 && !any; ++dj) any = r.at(i + di, j + dj);
      dil.set(i, j, any);
    }
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      bool all = true;
      for (int di = -1; di <= 1 && all; ++di)
        for (int dj = -1; dj <= 1 && all; ++dj) all = dil.at(i + di, j + dj);
      out.set(i, j, all);
    }
  return out;
}

int complement_components(const TorusRaster& r) {
  const TorusRaster c = closing(r);
  const int R = c.size();
  std::vector<std::uint8_t> seen(c.cells().size(), 0);
  std::vector<std::pair<int, int>> stack;
  int comps = 0;
  auto idx = [R](int i, int j) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(R) + static_cast<std::size_t>(j); };
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      if (c.at(i, j) || seen[idx(i, j)]) continue;
      ++comps;
      seen[idx(i, j)] = 1;
      stack.push_back({i, j});
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        const int nb[4][2] = {{(a + 1) % R, b}, {(a + R - 1) % R, b}, {a, (b + 1) % R}, {a, (b + R - 1) % R}};
        for (const auto& n : nb) {
          if (c.at(n[0], n[1]) || seen[idx(n[0], n[1])]) continue;
          seen[idx(n[0], n[1])] = 1;
          stack.push_back({n[0], n[1]});
        }
      }
    }
  return comps;
}

namespace {

// Squared distance transform of a sampled function (Felzenszwalb-Huttenlocher).
void dt1d(const std::vector<double>& f, std::vector<double>& d) {
  const std::size_t n = f.size();
  std::vector<std::size_t> v(n);
  std::vector<double> z(n + 1);
  std::size_t k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::infinity();
  z[1] = std::numeric_limits<double>::infinity();
  auto sq = [](double x) { return x * x; };
  auto cut = [&](std::size_t q, std::size_t p) {
    const double dq = static_cast<double>(q), dp = static_cast<double>(p);
    return ((f[q] + sq(dq)) - (f[p] + sq(dp))) / (2 * (dq - dp));
  };
  for (std::size_t q = 1; q < n; ++q) {
    double s = cut(q, v[k]);
    while (s <= z[k]) {
      --k;
      s = cut(q, v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  k = 0;
  for (std::size_t q = 0; q < n; ++q) {
    while (z[k + 1] < static_cast<double>(q)) ++k;
    d[q] = sq(static_cast<double>(q) - static_cast<double>(v[k])) + f[v[k]];
  }
}

// Periodic version: tile three times and keep the middle copy.
void dt1d_periodic(std::vector<double>& line) {
  const std::size_t n = line.size();
  std::vector<double> f(3 * n), d(3 * n);
  for (std::size_t r = 0; r < 3; ++r) std::copy(line.begin(), line.end(), f.begin() + static_cast<std::ptrdiff_t>(r * n));
  dt1d(f, d);
  std::copy(d.begin() + static_cast<std::ptrdiff_t>(n), d.begin() + static_cast<std::ptrdiff_t>(2 * n), line.begin());
}

}  // namespace

std::vector<double> squared_distance_transform(const TorusRaster& r) {
  const int R = r.size();
  const double big = 1e18;
  std::vector<double> g(r.cells().size());
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = r.cells()[k] ? 0 : big;
  std::vector<double> line(static_cast<std::size_t>(R));
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < R; ++j) line[j] = g[static_cast<std::size_t>(i * R + j)];
    dt1d_periodic(line);
    for (int j = 0; j < R; ++j) g[static_cast<std::size_t>(i * R + j)] = line[j];
  }
  for (int j = 0; j < R; ++j) {
    for (int i = 0; i < R; ++i) line[i] = g[static_cast<std::size_t>(i * R + j)];
    dt1d_periodic(line);
    for (int i = 0; i < R; ++i) g[static_cast<std::size_t>(i * R + j)] = line[i];
  }
  return g;
}

double raster_hausdorff(const TorusRaster& a, const TorusRaster& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "rasters differ in size");
  if (a.count() == 0 || b.count() == 0) throw Error(ErrorCode::EmptyInput, "raster has no marked cells");
  auto directed = [](const TorusRaster& from, const TorusRaster& to) {
    std::vector<double> d = squared_distance_transform(to);
    double worst = 0;
    for (std::size_t k = 0; k < d.size(); ++k)
      if (from.cells()[k]) worst = std::max(worst, d[k]);
    return std::sqrt(worst);
  };
  return std::max(directed(a, b), directed(b, a)) * kTwoPi / a.size();
}

TorusRaster predicate_raster(const std::function<bool(double, double)>& pred, int size) {
  TorusRaster r(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) r.set(i, j, pred(cell_center(i, size), cell_center(j, size)));
  return r;
}

TorusRaster model_raster(const CoamoebaModel& model, int size) {
  const double h = kPi / size;
  return predicate_raster(
      [&](double x, double y) {
        if (model.contains({x, y}, false)) return true;
        for (const auto& line : model.codual_lines) {
          const double g = static_cast<double>(line.normal[0]) * x + static_cast<double>(line.normal[1]) * y - line.offset;
          const double span = h * static_cast<double>(std::abs(line.normal[0]) + std::abs(line.normal[1]));
          if (std::floor((g + span) / kTwoPi) >= std::ceil((g - span) / kTwoPi)) return true;
        }
        return false;
      },
      size);
}

TorusRaster reflect_second(const TorusRaster& r) {
  const int R = r.size();
  TorusRaster out(R);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) out.set(i, R - 1 - j, r.at(i, j));
  return out;
}

TorusRaster rotate(const TorusRaster& r, int di, int dj) {
  const int R = r.size();
  TorusRaster out(R);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) out.set(i + di, j + dj, r.at(i, j));
  return out;
}

double agreement(const TorusRaster& a, const TorusRaster& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "rasters differ in size");
  std::size_t same = 0;
  for (std::size_t k = 0; k < a.cells().size(); ++k) same += a.cells()[k] == b.cells()[k];
  return static_cast<double>(same) / static_cast<double>(a.cells().size());
}

}  // namespace cotrop
