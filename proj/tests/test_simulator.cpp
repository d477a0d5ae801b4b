#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "chromastate/simulator.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace chromastate;
namespace fx = chromastate::testing;

namespace {

Amp omega_pow(int d, long long e) {
  const double angle = 2.0 * std::numbers::pi * e / d;
  return Amp(std::cos(angle), std::sin(angle));
}

StateVector random_state(int n, PrimeDimension dim, std::mt19937& rng) {
  StateVector s(n, dim);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (Amp& a : s.amps) a = Amp(u(rng), u(rng));
  return normalized(std::move(s));
}

double max_diff(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.amps[i] - b.amps[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("plus states") {
  {
    const StateVector s = plus_state(1, PrimeDimension(2));
    CHECK(std::abs(s.amps[0] - Amp(1 / std::sqrt(2.0), 0)) < 1e-15);
    CHECK(std::abs(s.amps[1] - Amp(1 / std::sqrt(2.0), 0)) < 1e-15);
  }
  {
    const StateVector s = plus_state(2, PrimeDimension(2));
    for (const Amp& a : s.amps) CHECK(std::abs(a - Amp(0.5, 0)) < 1e-15);
  }
  {
    const StateVector s = plus_state(1, PrimeDimension(3));
    for (const Amp& a : s.amps) {
      CHECK(std::abs(a - Amp(1 / std::sqrt(3.0), 0)) < 1e-15);
    }
  }
}

TEST_CASE("gate actions on basis states") {
  PrimeDimension d2(2), d3(3);
  {
    const StateVector s = apply_x(basis_state(1, d2, {0}), 0, 1);
    CHECK(std::abs(s.amps[1] - Amp(1, 0)) < 1e-15);
  }
  {
    const StateVector s = apply_z(basis_state(1, d3, {1}), 0, 2);
    CHECK(std::abs(s.amps[1] - omega_pow(3, 2)) < 1e-15);
  }
  {
    // CX with gamma=1 on |1,1>: target becomes 1+1+1 = 0 mod 3
    const StateVector s = apply_cx(basis_state(2, d3, {1, 1}), 0, 1, 1);
    CHECK(std::abs(s.amps[amp_index({1, 0}, 3)] - Amp(1, 0)) < 1e-15);
  }
  CHECK_THROWS_AS(apply_x(basis_state(1, d2, {0}), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(apply_z(basis_state(1, d2, {0}), 0, 2), std::invalid_argument);
}

TEST_CASE("gate inverse pairs") {
  std::mt19937 rng(4242);
  for (int d : {2, 3, 5}) {
    PrimeDimension dim(d);
    const StateVector s = random_state(2, dim, rng);
    for (int a = 1; a < d; ++a) {
      CHECK(max_diff(apply_x(apply_x(s, 0, a), 0, d - a), s) < 1e-12);
      CHECK(max_diff(apply_z(apply_z(s, 1, a), 1, d - a), s) < 1e-12);
      CHECK(max_diff(apply_cz(apply_cz(s, 0, 1, a), 0, 1, d - a), s) < 1e-12);
    }
    CHECK(max_diff(apply_hdag(apply_h(s, 0), 0), s) < 1e-12);
    // each CX^gamma pass adds i+gamma to the target, so d passes cancel
    StateVector t = s;
    for (int rep = 0; rep < d; ++rep) t = apply_cx(std::move(t), 0, 1, 1);
    CHECK(max_diff(t, s) < 1e-12);
  }
}

TEST_CASE("graph state amplitudes") {
  {
    const StateVector s = build_graph_state(fx::k2(PrimeDimension(2)));
    CHECK(std::abs(s.amps[0] - Amp(0.5, 0)) < 1e-15);
    CHECK(std::abs(s.amps[1] - Amp(0.5, 0)) < 1e-15);
    CHECK(std::abs(s.amps[2] - Amp(0.5, 0)) < 1e-15);
    CHECK(std::abs(s.amps[3] - Amp(-0.5, 0)) < 1e-15);
  }
  {
    const StateVector s = build_graph_state(WeightedGraph(3, PrimeDimension(3)));
    CHECK(max_diff(s, plus_state(3, PrimeDimension(3))) < 1e-15);
  }
}

TEST_CASE("graph state amplitude formula on random indices") {
  std::mt19937 rng(31337);
  const auto check_graph = [&](const WeightedGraph& g) {
    const StateVector s = build_graph_state(g);
    const int d = g.dim.value();
    const double scale = std::pow(static_cast<double>(d), -0.5 * g.n);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> ket(static_cast<std::size_t>(g.n));
      for (int& x : ket) x = static_cast<int>(rng() % d);
      long long exponent = 0;
      for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
          exponent += static_cast<long long>(g.gamma.at(u, v)) * ket[u] * ket[v];
        }
      }
      const Amp want = scale * omega_pow(d, exponent % d);
      CHECK(std::abs(s.amps[amp_index(ket, d)] - want) < 1e-12);
    }
  };
  check_graph(fx::six_cycle(PrimeDimension(2)));
  check_graph(fx::fig3(PrimeDimension(3)));
  // random weighted graph at d=3
  std::vector<std::array<int, 3>> edges;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      if (rng() % 2 == 0) edges.push_back({u, v, 1 + static_cast<int>(rng() % 2)});
    }
  }
  check_graph(make_graph(5, PrimeDimension(3), edges));
}

TEST_CASE("edge application order does not matter") {
  std::mt19937 rng(5150);
  const WeightedGraph g = fx::fig3(PrimeDimension(3));
  const StateVector reference = build_graph_state(g);
  std::vector<std::array<int, 3>> edges;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.gamma.at(u, v) != 0) edges.push_back({u, v, g.gamma.at(u, v)});
    }
  }
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(edges.begin(), edges.end(), rng);
    StateVector s = plus_state(g.n, g.dim);
    for (const auto& e : edges) s = apply_cz(std::move(s), e[0], e[1], e[2]);
    CHECK(max_diff(s, reference) < 1e-12);
  }
}

TEST_CASE("fidelity up to phase") {
  std::mt19937 rng(17);
  const StateVector s = random_state(2, PrimeDimension(3), rng);
  CHECK(fidelity_up_to_phase(s, s) == doctest::Approx(1.0).epsilon(1e-12));
  StateVector rotated = s;
  const Amp phase = std::polar(1.0, 0.7331);
  for (Amp& a : rotated.amps) a *= phase;
  CHECK(fidelity_up_to_phase(s, rotated) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity_up_to_phase(basis_state(1, PrimeDimension(2), {0}),
                             basis_state(1, PrimeDimension(2), {1})) ==
        doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("partial trace on known states") {
  PrimeDimension d2(2);
  {
    // Bell pair
    StateVector bell(2, d2);
    bell.amps[0] = bell.amps[3] = 1 / std::sqrt(2.0);
    const DensityMatrix rho = partial_trace(bell, {0});
    CHECK(std::abs(rho.entries[0] - Amp(0.5, 0)) < 1e-12);
    CHECK(std::abs(rho.entries[1]) < 1e-12);
    CHECK(std::abs(rho.entries[2]) < 1e-12);
    CHECK(std::abs(rho.entries[3] - Amp(0.5, 0)) < 1e-12);
  }
  {
    // |0> x |+>
    StateVector prod(2, d2);
    prod.amps[0] = prod.amps[1] = 1 / std::sqrt(2.0);
    const DensityMatrix rho = partial_trace(prod, {0});
    CHECK(std::abs(rho.entries[0] - Amp(1, 0)) < 1e-12);
    CHECK(std::abs(rho.entries[3]) < 1e-12);
  }
  {
    const StateVector s = build_graph_state(fx::six_cycle(d2));
    const DensityMatrix rho = partial_trace(s, {1, 2});
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        const Amp want = r == c ? Amp(0.25, 0) : Amp(0, 0);
        CHECK(std::abs(rho.entries[r * 4 + c] - want) < 1e-9);
      }
    }
  }
}

TEST_CASE("partial trace agrees with the brute-force oracle") {
  std::mt19937 rng(808);
  for (int d : {2, 3}) {
    PrimeDimension dim(d);
    const StateVector s = random_state(3, dim, rng);
    for (const std::vector<int>& keep :
         {std::vector<int>{0}, std::vector<int>{2}, std::vector<int>{0, 2}}) {
      const DensityMatrix fast = partial_trace(s, keep);
      const DensityMatrix slow = fx::brute_partial_trace(s, keep);
      REQUIRE(fast.entries.size() == slow.entries.size());
      double trace = 0.0;
      for (std::size_t i = 0; i < fast.entries.size(); ++i) {
        CHECK(std::abs(fast.entries[i] - slow.entries[i]) < 1e-12);
      }
      const std::uint64_t side = pow_u64(d, static_cast<int>(keep.size()));
      for (std::uint64_t r = 0; r < side; ++r) {
        trace += fast.entries[r * side + r].real();
        for (std::uint64_t c = 0; c < side; ++c) {
          CHECK(std::abs(fast.entries[r * side + c] -
                         std::conj(fast.entries[c * side + r])) < 1e-10);
        }
      }
      CHECK(trace == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("k-uniformity levels") {
  for (int d : {2, 3}) {
    PrimeDimension dim(d);
    // GHZ-like star graph states are 1-uniform
    CHECK(k_uniformity(build_graph_state(fx::star(3, dim))) == 1);
    // product states are 0-uniform
    CHECK(k_uniformity(basis_state(3, dim, {0, 0, 0})) == 0);
  }
  CHECK(k_uniformity(build_graph_state(fx::six_cycle(PrimeDimension(2)))) == 2);
}

TEST_CASE("operator identity fixtures") {
  for (int d : {2, 3, 5}) {
    const IdentityFixtureReport r = identity_fixtures(PrimeDimension(d));
    CHECK(r.pass);
    CHECK(r.cz_commutation_err <= 1e-12);
    CHECK(r.x_from_z_err <= 1e-12);
    CHECK(r.delta_sum_err <= 1e-12);
  }
}

TEST_CASE("LC unitary check") {
  PrimeDimension d2(2);
  CHECK(lc_unitary_check(fx::triangle(d2), 0) >= 1 - 1e-9);
  CHECK(lc_unitary_check(fx::path3(d2), 1) >= 1 - 1e-9);
  CHECK(lc_unitary_check(fx::k2(d2), 0) >= 1 - 1e-9);
  CHECK_THROWS_AS(lc_unitary_check(fx::triangle(PrimeDimension(3)), 0),
                  std::domain_error);
}
