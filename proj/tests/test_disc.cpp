#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle_values.hpp"
#include "support.hpp"
#include "thinseq/blaschke.hpp"
#include "thinseq/disc.hpp"
#include "thinseq/error.hpp"
#include "thinseq/separation.hpp"

using namespace thinseq;
using namespace thinseq::testing;

TEST_CASE("disc points reject the circle and the exterior") {
  CHECK_THROWS_AS(DiscPoint(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(DiscPoint(0.6, 0.8), DomainError);
  CHECK_THROWS_AS(DiscPoint(2.0, 0.0), DomainError);
  CHECK_THROWS_AS(DiscPoint(NAN, 0.0), DomainError);
  CHECK_NOTHROW(DiscPoint(0.6, 0.79));
  CHECK_THROWS_AS(DiscPoint::polar(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(DiscPoint::with_gap(0.5, 0.0, 0.4), DomainError);
}

TEST_CASE("gap survives where the Cartesian value rounds to the circle") {
  const auto p = DiscPoint::polar(std::ldexp(1.0, -100), 0.0);
  CHECK(p.re() == 1.0);
  CHECK(p.gap() == std::ldexp(1.0, -100));
  const auto q = DiscPoint::polar(std::ldexp(1.0, -81), 0.0);
  // rho between 1 - 2^-81 and 1 - 2^-100 is (2^-81 - 2^-100)/(2^-81 + 2^-100 - ...)
  const double s = std::ldexp(1.0, -81), t = std::ldexp(1.0, -100);
  CHECK(pseudo_distance(p, q) == doctest::Approx((s - t) / (s + t - s * t)).epsilon(1e-14));
  CHECK(one_minus_rho2(p, q) > 0.0);
}

TEST_CASE("pseudo_distance examples") {
  const DiscPoint o, h(0.5, 0.0), mh(-0.5, 0.0);
  CHECK(pseudo_distance(o, h) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(pseudo_distance(h, h) == 0.0);
  CHECK(std::abs(pseudo_distance(h, mh) - 0.8) < 1e-12);
}

TEST_CASE("rho is symmetric, Mobius invariant and obeys the strong triangle inequality") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto z = random_point(rng), w = random_point(rng), v = random_point(rng), c = random_point(rng);
    const double r = pseudo_distance(z, w);
    CHECK(std::abs(r - pseudo_distance(w, z)) < 1e-14);
    CHECK(std::abs(r - naive_rho(z.value(), w.value())) < 1e-12);
    CHECK(std::abs(pseudo_distance(mobius_apply(c, z), mobius_apply(c, w)) - r) < 1e-12);
    const double a = pseudo_distance(z, v), b = pseudo_distance(v, w);
    CHECK(r <= (a + b) / (1.0 + a * b) + 1e-12);
    const double den2 = std::norm(1.0 - std::conj(w.value()) * z.value());
    const double rhs = (1.0 - std::norm(z.value())) * (1.0 - std::norm(w.value())) / den2;
    CHECK(std::abs(one_minus_rho2(z, w) - rhs) < 1e-12);
  }
}

TEST_CASE("mobius_apply") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto z = random_point(rng), c = random_point(rng);
    CHECK(mobius_apply(DiscPoint{}, z) == z);
    CHECK(std::abs(mobius_apply(c, c).value()) < 1e-15);
    const cplx direct = (z.value() - c.value()) / (1.0 - std::conj(c.value()) * z.value());
    CHECK(std::abs(mobius_apply(c, z).value() - direct) < 1e-12);
    // phi_{-c} inverts phi_c.
    CHECK(std::abs(mobius_apply(negate(c), mobius_apply(c, z)).value() - z.value()) < 1e-12);
  }
}

namespace {
double bisect_delta_t(double t) {
  double lo = 0.0, hi = 1.0;  // rho(-1 + d, 1 - d) decreases in d
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double rho = naive_rho(cplx(-1.0 + mid), cplx(1.0 - mid));
    (rho > t ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}
}  // namespace

TEST_CASE("solve_delta_t closed form against bisection on rho") {
  CHECK(std::abs(solve_delta_t(0.6) - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(bisect_delta_t(0.6) - 2.0 / 3.0) < 1e-12);
  for (double t : {0.05, 0.3, 0.6, 0.9, 0.99, 0.999}) {
    const double d = solve_delta_t(t);
    CHECK(std::abs(d - bisect_delta_t(t)) < 1e-12);
    CHECK(std::abs(pseudo_distance(DiscPoint::polar(d, M_PI), DiscPoint::polar(d, 0.0)) - t) < 1e-12);
  }
  CHECK(solve_delta_t(0.9) > solve_delta_t(0.99));
  CHECK(solve_delta_t(0.99) > solve_delta_t(0.999));
  CHECK(solve_delta_t(1.0 - 1e-12) > 0.0);
  CHECK_THROWS_AS(solve_delta_t(0.0), DomainError);
  CHECK_THROWS_AS(solve_delta_t(1.0), DomainError);
}

TEST_CASE("blaschke factors") {
  std::mt19937_64 rng(3);
  const DiscPoint h(0.5, 0.0);
  for (int i = 0; i < 100; ++i) {
    const auto z = random_point(rng);
    CHECK(blaschke_factor(DiscPoint{}, z) == z.value());
    const auto w = random_point(rng);
    CHECK(std::abs(blaschke_factor(w, w)) == 0.0);
    CHECK(std::abs(blaschke_factor(w, z)) < 1.0);
    const auto edge = DiscPoint::polar(1e-15, std::uniform_real_distribution<double>(0, 6.28)(rng));
    CHECK(std::abs(std::abs(blaschke_factor(h, edge)) - 1.0) < 1e-12);
  }
  CHECK(std::abs(blaschke_factor(h, DiscPoint{}) - cplx(0.5)) < 1e-15);
  const DiscPoint w(0.3, -0.4);
  const DiscPoint z(-0.2, 0.7);
  const cplx expect = -std::conj(w.value()) / std::abs(w.value()) * (z.value() - w.value()) /
                      (1.0 - std::conj(w.value()) * z.value());
  CHECK(std::abs(blaschke_factor(w, z) - expect) < 1e-12);
}

TEST_CASE("blaschke products: modes, empty product, zeros") {
  std::vector<DiscPoint> none;
  CHECK(blaschke_eval(none, DiscPoint(0.3, 0.2)) == cplx(1.0));
  std::vector<DiscPoint> one{DiscPoint(0.5, 0.0)};
  CHECK(std::abs(blaschke_eval(one, DiscPoint{}) - cplx(0.5)) < 1e-15);

  const auto sg = supergeometric(16);
  const DiscPoint z(0.9, 0.0);
  const cplx d = blaschke_eval(sg.points(), z, ProductMode::direct);
  const cplx l = blaschke_eval(sg.points(), z, ProductMode::log_domain);
  CHECK(std::abs(d - l) <= 1e-10 * std::abs(d));
  for (std::size_t k = 0; k < sg.size(); ++k) {
    CHECK(blaschke_eval(sg.points(), sg[k], ProductMode::direct) == cplx(0.0));
    CHECK(blaschke_eval(sg.points(), sg[k], ProductMode::log_domain) == cplx(0.0));
  }

  // Real positive zeros, real z: |B(z)| = prod rho(z, z_k).
  double prod = 1.0;
  for (const auto& p : sg.points()) prod *= pseudo_distance(z, p);
  CHECK(std::abs(std::abs(d) - prod) < 1e-14);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) CHECK(std::abs(blaschke_eval(sg.points(), random_point(rng, 0.999))) < 1.0);
}

TEST_CASE("subproducts") {
  const PointSequence single({DiscPoint(0.4, 0.1)});
  const auto s = subproducts(single, 0, 0);
  CHECK(s.excluded(DiscPoint(0.2, 0.2)) == cplx(1.0));
  CHECK(s.head(DiscPoint(0.2, 0.2)) == cplx(1.0));
  CHECK_THROWS_AS(subproducts(single, 1, 0), DomainError);

  std::mt19937_64 rng(9);
  std::vector<DiscPoint> pts;
  for (int i = 0; i < 8; ++i) pts.push_back(random_point(rng));
  const PointSequence seq(pts);
  const BlaschkeProduct full(pts);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const auto sub = subproducts(seq, j, 3);
    const auto z = random_point(rng);
    CHECK(std::abs(sub.excluded(z) * blaschke_factor(seq[j], z) - full(z)) < 1e-12);
    std::vector<DiscPoint> head(pts.begin(), pts.begin() + 3);
    CHECK(std::abs(sub.head(z) - blaschke_eval(head, z)) < 1e-14);
    std::vector<DiscPoint> tail_ex;
    for (std::size_t k = 3; k < pts.size(); ++k)
      if (k != j) tail_ex.push_back(pts[k]);
    CHECK(std::abs(sub.tail_excluded(z) - blaschke_eval(tail_ex, z)) < 1e-14);
  }
}

TEST_CASE("separation constants: small cases") {
  const auto two = separation_constants(PointSequence({DiscPoint{}, DiscPoint(0.5, 0.0)}));
  CHECK(two.delta_j[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(two.delta_j[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(two.delta == doctest::Approx(0.5).epsilon(1e-15));
  const auto one = separation_constants(PointSequence({DiscPoint(0.3, 0.3)}));
  CHECK(one.delta_j[0] == 1.0);
  CHECK(one.delta == 1.0);
  CHECK_THROWS_WITH_AS(separation_constants(PointSequence({DiscPoint(0.2, 0.0), DiscPoint(0.2, 0.0)})),
                       "sequence not distinct", DomainError);
}

TEST_CASE("separation constants match the brute-force product") {
  const auto sg = supergeometric(12);
  const auto rep = separation_constants(sg);
  for (std::size_t j = 0; j < 12; ++j) {
    const double frozen = oracle::kSuperGeometric12OneMinusDelta[j];
    CHECK(std::abs(rep.one_minus_delta_j[j] - frozen) <= 1e-10 * frozen);
    CHECK(std::abs(rep.delta_j[j] - (1.0 - frozen)) <= 1e-10);
  }
  const auto geo = separation_constants(geometric(12));
  for (std::size_t j = 0; j < 12; ++j) {
    CHECK(std::abs(geo.one_minus_delta_j[j] - oracle::kGeometric12OneMinusDelta[j]) <= 1e-10);
  }
  for (std::size_t j = 2; j < 12; ++j) CHECK(rep.delta_j[j] > rep.delta_j[j - 1]);
  for (std::size_t j = 1; j < 12; ++j) CHECK(rep.tail_delta[j] >= rep.tail_delta[j - 1]);

  // Direct products on random sequences of length <= 32.
  std::mt19937_64 rng(13);
  for (std::size_t len : {2u, 9u, 32u}) {
    std::vector<DiscPoint> pts;
    for (std::size_t i = 0; i < len; ++i) pts.push_back(random_point(rng, 0.99));
    const auto r = separation_constants(PointSequence(pts));
    for (std::size_t j = 0; j < len; ++j) {
      double p = 1.0;
      for (std::size_t k = 0; k < len; ++k)
        if (k != j) p *= naive_rho(pts[j].value(), pts[k].value());
      CHECK(std::abs(r.delta_j[j] - p) <= 1e-10 * p);
    }
  }
}

TEST_CASE("dropping a point never lowers the other separation constants") {
  std::mt19937_64 rng(17);
  std::vector<DiscPoint> pts;
  for (int i = 0; i < 10; ++i) pts.push_back(random_point(rng));
  const auto full = separation_constants(PointSequence(pts));
  for (std::size_t drop = 0; drop < pts.size(); ++drop) {
    auto fewer = pts;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
    const auto r = separation_constants(PointSequence(fewer));
    for (std::size_t j = 0, k = 0; j < pts.size(); ++j) {
      if (j == drop) continue;
      CHECK(r.delta_j[k++] >= full.delta_j[j]);
    }
  }
}

TEST_CASE("thinness trend separates the two radial families") {
  FamilySpec sg;
  sg.kind = FamilyKind::supergeometric;
  FamilySpec geo;
  geo.kind = FamilyKind::geometric;
  const auto thin = thinness_trend([&](std::size_t n) { return family_point(sg, n + 1); }, 12);
  const auto thick = thinness_trend([&](std::size_t n) { return family_point(geo, n + 1); }, 12);
  CHECK(thin.thin_consistent);
  CHECK_FALSE(thick.thin_consistent);
  const auto& w = thick.window_one_minus_tail_delta;
  REQUIRE(w.size() >= 3);
  for (std::size_t i = w.size() - 3; i < w.size(); ++i) CHECK(w[i] > 0.9);
  const auto single = thinness_trend([](std::size_t) { return DiscPoint(0.5, 0.0); }, 1);
  CHECK(single.thin_consistent);
  CHECK(single.longest.delta == 1.0);
}
