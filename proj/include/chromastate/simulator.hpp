#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "chromastate/graph.hpp"

namespace chromastate {

using Amp = std::complex<double>;

/// Amplitude cap for dense expansion, d^n <= cap. Defaults to 2^22 and can
/// be overridden through the CHROMASTATE_AMP_CAP environment variable.
std::uint64_t amplitude_cap();

/// Dense state vector on n qudits. Basis ket |i_0,...,i_{n-1}> lives at
/// amplitude index sum_k i_k * d^(n-1-k), qudit 0 most significant.
struct StateVector {
  int n;
  PrimeDimension dim;
  std::vector<Amp> amps;

  StateVector(int qudits, PrimeDimension d);
  std::uint64_t size() const { return amps.size(); }
};

std::uint64_t amp_index(const std::vector<int>& digits, int d);
std::vector<int> amp_digits(std::uint64_t index, int n, int d);

StateVector plus_state(int n, PrimeDimension dim);
StateVector basis_state(int n, PrimeDimension dim, const std::vector<int>& ket);

StateVector apply_x(StateVector s, int q, int a);
StateVector apply_z(StateVector s, int q, int a);
StateVector apply_h(StateVector s, int q);
StateVector apply_hdag(StateVector s, int q);
StateVector apply_cz(StateVector s, int q1, int q2, int beta);
/// Target digit j becomes i + j + gamma with i the control digit.
StateVector apply_cx(StateVector s, int control, int target, int gamma);
/// General single-qudit operator, d x d row-major.
StateVector apply_single(StateVector s, int q, const std::vector<Amp>& op);

/// Graph state from the circuit definition: CZ^Gamma_uv on |+>^n for every
/// edge, in ascending (u, v) order.
StateVector build_graph_state(const WeightedGraph& g);

double norm(const StateVector& s);
StateVector normalized(StateVector s);

/// |<a|b>|^2 for normalized inputs; 1 means equal up to global phase.
double fidelity_up_to_phase(const StateVector& a, const StateVector& b);

struct DensityMatrix {
  int k;
  PrimeDimension dim;
  std::vector<Amp> entries;  // d^k x d^k row-major

  Amp at(std::uint64_t r, std::uint64_t c) const;
};

/// Reduced density matrix on `keep` (ascending), tracing out the rest.
DensityMatrix partial_trace(const StateVector& s, const std::vector<int>& keep);

/// Largest k <= n/2 with every size-k reduction maximally mixed
/// (entrywise within 1e-9); exhaustive over subsets.
int k_uniformity(const StateVector& s);

/// Max entrywise deviation from I/d^k over all size-k reductions.
double max_mixed_residual(const StateVector& s, int k);

struct IdentityFixtureReport {
  double cz_commutation_err;  // Hdag CZ = CX Hdag on all d^2 basis kets
  double x_from_z_err;        // X^a = Hdag Z^a H on all basis kets, all a
  double delta_sum_err;       // (1/d) sum_l w^{(k-j)l} = delta_kj
  bool pass;                  // every error <= 1e-12
};

IdentityFixtureReport identity_fixtures(PrimeDimension dim);

/// Builds |g>, applies sqrt(-iX) at a and sqrt(iZ) on each neighbor, and
/// returns the fidelity against the graph state of local_complement(g, a, 1).
/// Qubits only.
double lc_unitary_check(const WeightedGraph& g, int a);

}  // namespace chromastate
