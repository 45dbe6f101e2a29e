// Copyright 2026 The psr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSR_ENSEMBLES_H
#define PSR_ENSEMBLES_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "psr/qcore.h"
#include "psr/seed.h"

namespace psr {

/// K-subset phase state description: support S (strictly increasing n-bit
/// strings) with one sign bit per element.
struct SubsetPhaseSpec {
  int n = 0;
  std::vector<std::uint64_t> support;
  std::vector<std::uint8_t> signs;

  std::size_t K() const { return support.size(); }

  /// Throws std::invalid_argument on an empty, unsorted, duplicated or
  /// out-of-range support, or a sign list of the wrong length.
  void validate() const;

  /// Text form: line 1 "n K", then K lines "bitstring fbit".
  std::string to_text() const;
  static SubsetPhaseSpec from_text(const std::string& text);
};

/// Non-cryptographic keyed bit: a SplitMix64 counter-mode stream keyed by
/// (master, stream) and indexed by the input string. Deterministic and
/// empirically unbiased; it makes no hardness claim.
bool keyed_bit(const Seed& key, std::uint64_t input);

QuantumState sample_haar_state(int n, Rng& rng);
QuantumState sample_haar_state(int n, const Seed& seed);

/// Ginibre QR with the phases of diag(R) folded back into Q, which makes the
/// distribution exactly Haar.
UnitaryMatrix sample_haar_unitary(int n, Rng& rng);
UnitaryMatrix sample_haar_unitary(int n, const Seed& seed);

/// Haar measure on the real orthogonal group (real Ginibre QR, sign-fixed).
UnitaryMatrix sample_haar_orthogonal(int n, Rng& rng);

/// diag(e^{i theta_k}) with independent uniform phases.
UnitaryMatrix sample_diagonal_unitary(int n, Rng& rng);

/// Amplitude (-1)^{f(x)}/sqrt(K) on x in S.
QuantumState build_subset_phase_state(const SubsetPhaseSpec& spec);

/// Uniform size-K subset (Floyd's algorithm) with signs from keyed_bit under a
/// key drawn from the generator.
SubsetPhaseSpec sample_subset_phase(int n, std::size_t K, Rng& rng);
SubsetPhaseSpec sample_subset_phase(int n, std::size_t K, const Seed& seed);

enum class CliffordKind { H, S, CNOT };

struct CliffordGate {
  CliffordKind kind;
  int target;
  int control = -1;  // CNOT only
};

struct StabilizerCircuit {
  int n = 0;
  std::vector<CliffordGate> gates;

  /// Circuit applied to |0...0>.
  QuantumState prepare() const;
};

/// depth * n^2 gates drawn uniformly from {H, S, CNOT} on uniform qubits.
/// Depth 0 gives the empty circuit.
std::pair<StabilizerCircuit, QuantumState> sample_stabilizer_state(int n, int depth, Rng& rng);
std::pair<StabilizerCircuit, QuantumState> sample_stabilizer_state(int n, int depth,
                                                                   const Seed& seed);

/// (1-p) rho + p (I/2 on `qubit`) (x) tr_qubit(rho). Throws std::invalid_argument
/// unless 0 <= p <= 1.
DensityMatrix depolarize(const DensityMatrix& rho, int qubit, double p);

}  // namespace psr

#endif  // PSR_ENSEMBLES_H
