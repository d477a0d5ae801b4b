#include "chromastate/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace chromastate {

namespace {

std::uint64_t read_amp_cap() {
  if (const char* env = std::getenv("CHROMASTATE_AMP_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t(1) << 22;
}

// d-th roots of unity, roots[k] = exp(2 pi i k / d). Phase exponents are
// reduced mod d before lookup so equal exponents give bit-identical values.
std::vector<Amp> unit_roots(int d) {
  std::vector<Amp> roots(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / d;
    roots[k] = Amp(std::cos(angle), std::sin(angle));
  }
  return roots;
}

std::uint64_t checked_state_size(int n, PrimeDimension dim) {
  std::uint64_t size;
  try {
    size = pow_u64(dim.value(), n);
  } catch (const std::overflow_error&) {
    throw CapError("state of " + std::to_string(n) + " qudits exceeds the cap");
  }
  if (size > amplitude_cap()) {
    throw CapError("state needs " + std::to_string(size) +
                   " amplitudes, cap is " + std::to_string(amplitude_cap()));
  }
  return size;
}

void check_qudit(const StateVector& s, int q) {
  if (q < 0 || q >= s.n) {
    throw std::invalid_argument("qudit index out of range: " + std::to_string(q));
  }
}

void check_exponent(const StateVector& s, int a) {
  if (a < 0 || a >= s.dim.value()) {
    throw std::invalid_argument("gate exponent out of range: " + std::to_string(a));
  }
}

}  // namespace

std::uint64_t amplitude_cap() {
  static const std::uint64_t cap = read_amp_cap();
  return cap;
}

StateVector::StateVector(int qudits, PrimeDimension d)
    : n(qudits), dim(d), amps(checked_state_size(qudits, d), Amp(0.0, 0.0)) {}

std::uint64_t amp_index(const std::vector<int>& digits, int d) {
  std::uint64_t idx = 0;
  for (int digit : digits) idx = idx * d + static_cast<std::uint64_t>(digit);
  return idx;
}

std::vector<int> amp_digits(std::uint64_t index, int n, int d) {
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int k = n - 1; k >= 0; --k) {
    out[k] = static_cast<int>(index % d);
    index /= d;
  }
  return out;
}

StateVector plus_state(int n, PrimeDimension dim) {
  StateVector s(n, dim);
  const double amp = std::pow(static_cast<double>(dim.value()), -0.5 * n);
  std::fill(s.amps.begin(), s.amps.end(), Amp(amp, 0.0));
  return s;
}

StateVector basis_state(int n, PrimeDimension dim, const std::vector<int>& ket) {
  if (static_cast<int>(ket.size()) != n) {
    throw std::invalid_argument("basis ket length mismatch");
  }
  StateVector s(n, dim);
  s.amps[amp_index(ket, dim.value())] = Amp(1.0, 0.0);
  return s;
}

namespace {

// Applies `fn(block, digit, offset)` over the structure index = block-major,
// digit at qudit q, offset minor. stride = d^(n-1-q).
template <typename Fn>
void for_each_digit_slot(const StateVector& s, int q, Fn&& fn) {
  const int d = s.dim.value();
  std::uint64_t stride = 1;
  for (int i = 0; i < s.n - 1 - q; ++i) stride *= static_cast<std::uint64_t>(d);
  const std::uint64_t block_step = stride * static_cast<std::uint64_t>(d);
  for (std::uint64_t base = 0; base < s.size(); base += block_step) {
    for (std::uint64_t off = 0; off < stride; ++off) {
      fn(base, stride, off);
    }
  }
}

}  // namespace

StateVector apply_x(StateVector s, int q, int a) {
  check_qudit(s, q);
  check_exponent(s, a);
  if (a == 0) return s;
  const int d = s.dim.value();
  StateVector out = s;
  for_each_digit_slot(s, q, [&](std::uint64_t base, std::uint64_t stride,
                                std::uint64_t off) {
    for (int i = 0; i < d; ++i) {
      const int shifted = s.dim.add(i, a);
      out.amps[base + static_cast<std::uint64_t>(shifted) * stride + off] =
          s.amps[base + static_cast<std::uint64_t>(i) * stride + off];
    }
  });
  return out;
}

StateVector apply_z(StateVector s, int q, int a) {
  check_qudit(s, q);
  check_exponent(s, a);
  if (a == 0) return s;
  const int d = s.dim.value();
  const auto roots = unit_roots(d);
  for_each_digit_slot(s, q, [&](std::uint64_t base, std::uint64_t stride,
                                std::uint64_t off) {
    for (int i = 0; i < d; ++i) {
      s.amps[base + static_cast<std::uint64_t>(i) * stride + off] *=
          roots[s.dim.mul(i, a)];
    }
  });
  return s;
}

namespace {

StateVector apply_hadamard(StateVector s, int q, bool dagger) {
  check_qudit(s, q);
  const int d = s.dim.value();
  const auto roots = unit_roots(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  StateVector out(s.n, s.dim);
  for_each_digit_slot(s, q, [&](std::uint64_t base, std::uint64_t stride,
                                std::uint64_t off) {
    for (int l = 0; l < d; ++l) {
      Amp acc(0.0, 0.0);
      for (int i = 0; i < d; ++i) {
        const int e = s.dim.mul(i, l);
        const Amp w = dagger ? std::conj(roots[e]) : roots[e];
        acc += w * s.amps[base + static_cast<std::uint64_t>(i) * stride + off];
      }
      out.amps[base + static_cast<std::uint64_t>(l) * stride + off] = acc * scale;
    }
  });
  return out;
}

}  // namespace

StateVector apply_h(StateVector s, int q) { return apply_hadamard(std::move(s), q, false); }

StateVector apply_hdag(StateVector s, int q) { return apply_hadamard(std::move(s), q, true); }

StateVector apply_cz(StateVector s, int q1, int q2, int beta) {
  check_qudit(s, q1);
  check_qudit(s, q2);
  check_exponent(s, beta);
  if (q1 == q2) throw std::invalid_argument("CZ needs distinct qudits");
  if (beta == 0) return s;
  const int d = s.dim.value();
  const auto roots = unit_roots(d);
  for (std::uint64_t idx = 0; idx < s.size(); ++idx) {
    const auto digits = amp_digits(idx, s.n, d);
    const int e = s.dim.mul(s.dim.mul(digits[q1], digits[q2]), beta);
    if (e != 0) s.amps[idx] *= roots[e];
  }
  return s;
}

StateVector apply_cx(StateVector s, int control, int target, int gamma) {
  check_qudit(s, control);
  check_qudit(s, target);
  check_exponent(s, gamma);
  if (control == target) throw std::invalid_argument("CX needs distinct qudits");
  const int d = s.dim.value();
  StateVector out(s.n, s.dim);
  for (std::uint64_t idx = 0; idx < s.size(); ++idx) {
    auto digits = amp_digits(idx, s.n, d);
    digits[target] = s.dim.add(s.dim.add(digits[control], digits[target]), gamma);
    out.amps[amp_index(digits, d)] = s.amps[idx];
  }
  return out;
}

StateVector apply_single(StateVector s, int q, const std::vector<Amp>& op) {
  check_qudit(s, q);
  const int d = s.dim.value();
  if (static_cast<int>(op.size()) != d * d) {
    throw std::invalid_argument("single-qudit operator has wrong shape");
  }
  StateVector out(s.n, s.dim);
  for_each_digit_slot(s, q, [&](std::uint64_t base, std::uint64_t stride,
                                std::uint64_t off) {
    for (int l = 0; l < d; ++l) {
      Amp acc(0.0, 0.0);
      for (int i = 0; i < d; ++i) {
        acc += op[static_cast<std::size_t>(l) * d + i] *
               s.amps[base + static_cast<std::uint64_t>(i) * stride + off];
      }
      out.amps[base + static_cast<std::uint64_t>(l) * stride + off] = acc;
    }
  });
  return out;
}

StateVector build_graph_state(const WeightedGraph& g) {
  StateVector s = plus_state(g.n, g.dim);
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.gamma.at(u, v) != 0) {
        s = apply_cz(std::move(s), u, v, g.gamma.at(u, v));
      }
    }
  }
  return s;
}

double norm(const StateVector& s) {
  double acc = 0.0;
  for (const Amp& a : s.amps) acc += std::norm(a);
  return std::sqrt(acc);
}

StateVector normalized(StateVector s) {
  const double n = norm(s);
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  for (Amp& a : s.amps) a /= n;
  return s;
}

double fidelity_up_to_phase(const StateVector& a, const StateVector& b) {
  if (a.n != b.n || a.dim != b.dim) {
    throw std::invalid_argument("fidelity needs states of identical shape");
  }
  Amp overlap(0.0, 0.0);
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    overlap += std::conj(a.amps[i]) * b.amps[i];
  }
  return std::norm(overlap);
}

Amp DensityMatrix::at(std::uint64_t r, std::uint64_t c) const {
  std::uint64_t side = 1;
  for (int i = 0; i < k; ++i) side *= static_cast<std::uint64_t>(dim.value());
  return entries[r * side + c];
}

DensityMatrix partial_trace(const StateVector& s, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("keep set has duplicates");
  }
  if (kept.front() < 0 || kept.back() >= s.n) {
    throw std::invalid_argument("keep set out of range");
  }
  const int d = s.dim.value();
  const int k = static_cast<int>(kept.size());
  std::uint64_t side;
  try {
    side = pow_u64(d, k);
    const std::uint64_t entries = side * side;
    if (entries > amplitude_cap()) {
      throw CapError("reduced density matrix of " + std::to_string(entries) +
                     " entries exceeds the cap");
    }
  } catch (const std::overflow_error&) {
    throw CapError("reduced density matrix exceeds the cap");
  }
  std::vector<int> rest;
  for (int q = 0; q < s.n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) rest.push_back(q);
  }
  const std::uint64_t env_count = pow_u64(d, static_cast<int>(rest.size()));

  DensityMatrix rho{k, s.dim, std::vector<Amp>(side * side, Amp(0.0, 0.0))};
  std::vector<Amp> column(side);
  std::vector<int> full(static_cast<std::size_t>(s.n), 0);
  for (std::uint64_t env = 0; env < env_count; ++env) {
    const auto env_digits = amp_digits(env, static_cast<int>(rest.size()), d);
    for (std::size_t i = 0; i < rest.size(); ++i) full[rest[i]] = env_digits[i];
    for (std::uint64_t a = 0; a < side; ++a) {
      const auto kept_digits = amp_digits(a, k, d);
      for (int i = 0; i < k; ++i) full[kept[i]] = kept_digits[i];
      column[a] = s.amps[amp_index(full, d)];
    }
    for (std::uint64_t r = 0; r < side; ++r) {
      if (column[r] == Amp(0.0, 0.0)) continue;
      for (std::uint64_t c = 0; c < side; ++c) {
        rho.entries[r * side + c] += column[r] * std::conj(column[c]);
      }
    }
  }
  return rho;
}

namespace {

double mixed_deviation(const DensityMatrix& rho) {
  std::uint64_t side = 1;
  for (int i = 0; i < rho.k; ++i) side *= static_cast<std::uint64_t>(rho.dim.value());
  const double target = 1.0 / static_cast<double>(side);
  double worst = 0.0;
  for (std::uint64_t r = 0; r < side; ++r) {
    for (std::uint64_t c = 0; c < side; ++c) {
      const Amp want = (r == c) ? Amp(target, 0.0) : Amp(0.0, 0.0);
      worst = std::max(worst, std::abs(rho.entries[r * side + c] - want));
    }
  }
  return worst;
}

template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> sel(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) sel[i] = i;
  while (true) {
    fn(sel);
    int i = k - 1;
    while (i >= 0 && sel[i] == n - (k - i)) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
  }
}

}  // namespace

int k_uniformity(const StateVector& s) {
  int best = 0;
  for (int k = 1; k <= s.n / 2; ++k) {
    bool all_mixed = true;
    for_each_subset(s.n, k, [&](const std::vector<int>& keep) {
      if (!all_mixed) return;
      if (mixed_deviation(partial_trace(s, keep)) > 1e-9) all_mixed = false;
    });
    if (!all_mixed) break;
    best = k;
  }
  return best;
}

double max_mixed_residual(const StateVector& s, int k) {
  if (k < 1 || k > s.n) throw std::invalid_argument("subset size out of range");
  double worst = 0.0;
  for_each_subset(s.n, k, [&](const std::vector<int>& keep) {
    worst = std::max(worst, mixed_deviation(partial_trace(s, keep)));
  });
  return worst;
}

IdentityFixtureReport identity_fixtures(PrimeDimension dim) {
  const int d = dim.value();
  IdentityFixtureReport report{0.0, 0.0, 0.0, false};

  // Hdag_2 CZ |kj> vs CX Hdag_2 |kj> on every two-qudit basis ket.
  for (int k = 0; k < d; ++k) {
    for (int j = 0; j < d; ++j) {
      StateVector lhs = basis_state(2, dim, {k, j});
      lhs = apply_cz(std::move(lhs), 0, 1, 1);
      lhs = apply_hdag(std::move(lhs), 1);
      StateVector rhs = basis_state(2, dim, {k, j});
      rhs = apply_hdag(std::move(rhs), 1);
      rhs = apply_cx(std::move(rhs), 0, 1, 0);
      for (std::uint64_t i = 0; i < lhs.size(); ++i) {
        report.cz_commutation_err = std::max(
            report.cz_commutation_err, std::abs(lhs.amps[i] - rhs.amps[i]));
      }
    }
  }

  // X^a vs Hdag Z^a H on every basis ket, for every exponent a.
  for (int a = 0; a < d; ++a) {
    for (int i = 0; i < d; ++i) {
      StateVector lhs = apply_x(basis_state(1, dim, {i}), 0, a);
      StateVector rhs = basis_state(1, dim, {i});
      rhs = apply_h(std::move(rhs), 0);
      rhs = apply_z(std::move(rhs), 0, a);
      rhs = apply_hdag(std::move(rhs), 0);
      for (std::uint64_t idx = 0; idx < lhs.size(); ++idx) {
        report.x_from_z_err = std::max(report.x_from_z_err,
                                       std::abs(lhs.amps[idx] - rhs.amps[idx]));
      }
    }
  }

  // (1/d) sum_l exp(2 pi i (k-j) l / d) vs the Kronecker delta.
  for (int k = 0; k < d; ++k) {
    for (int j = 0; j < d; ++j) {
      Amp acc(0.0, 0.0);
      for (int l = 0; l < d; ++l) {
        const double angle = 2.0 * std::numbers::pi * (k - j) * l / d;
        acc += Amp(std::cos(angle), std::sin(angle));
      }
      acc /= static_cast<double>(d);
      const Amp want = (k == j) ? Amp(1.0, 0.0) : Amp(0.0, 0.0);
      report.delta_sum_err = std::max(report.delta_sum_err, std::abs(acc - want));
    }
  }

  report.pass = report.cz_commutation_err <= 1e-12 &&
                report.x_from_z_err <= 1e-12 && report.delta_sum_err <= 1e-12;
  return report;
}

double lc_unitary_check(const WeightedGraph& g, int a) {
  if (g.dim.value() != 2) {
    throw std::domain_error("LC unitary check is defined for d=2 only");
  }
  if (a < 0 || a >= g.n) throw std::invalid_argument("vertex out of range");
  // Principal square roots: sqrt(-iX) mixes with e^{-i pi/4}, e^{i pi/4}
  // eigenphases; sqrt(iZ) is the conjugate diagonal.
  const Amp p(std::cos(std::numbers::pi / 4), std::sin(std::numbers::pi / 4));
  const Amp m = std::conj(p);
  const std::vector<Amp> sqrt_minus_ix = {0.5 * (m + p), 0.5 * (m - p),
                                          0.5 * (m - p), 0.5 * (m + p)};
  const std::vector<Amp> sqrt_iz = {p, Amp(0.0, 0.0), Amp(0.0, 0.0), m};

  StateVector s = build_graph_state(g);
  s = apply_single(std::move(s), a, sqrt_minus_ix);
  for (int b : g.neighbors(a)) {
    s = apply_single(std::move(s), b, sqrt_iz);
  }
  const StateVector target = build_graph_state(local_complement(g, a, 1));
  return fidelity_up_to_phase(s, target);
}

}  // namespace chromastate
