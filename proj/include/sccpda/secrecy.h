// Copyright 2026 The sccpda Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCCPDA_SECRECY_H_
#define SCCPDA_SECRECY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "sccpda/gf.h"
#include "sccpda/mds.h"
#include "sccpda/scheme.h"

namespace sccpda {

// Every observed symbol written as A w + B v, with w the file symbols of
// all N files and v all randomness (share randomness and keys). Every
// scheme operation is GF(2^l)-linear, so this is exact.
//
// The scheme treats each symbol position of a share the same way and
// independently of the others, so a model over P positions is P identical
// diagonal blocks; builders take the number of positions to include.
struct LinearObservationModel {
  SymbolMatrix files;       // A: obs_dim x file_dim
  SymbolMatrix randomness;  // B: obs_dim x rand_dim
  std::vector<int> file_of_column;  // owning file of each w coordinate
  std::vector<std::string> row_labels;

  std::size_t obs_dim() const { return files.rows(); }
  std::size_t file_dim() const { return files.cols(); }
  std::size_t rand_dim() const { return randomness.cols(); }
};

enum class ObservationScope { kCachesOnly, kCachesPlusDelivery };

// What user `observer` sees: its helper cache, its keys and (in delivery
// scope) every transmission.
LinearObservationModel BuildObservationModel(const Session& session,
                                             int observer,
                                             ObservationScope scope,
                                             std::size_t positions = 1);

// The contents of helper cache `cache` alone.
LinearObservationModel BuildHelperCacheModel(const Session& session,
                                             int cache,
                                             std::size_t positions = 1);

// The broadcast alone.
LinearObservationModel BuildEavesdropperModel(const Session& session,
                                              std::size_t positions = 1);

// A single file of `enc.rows() - num_randomness` subfiles shared with
// `enc`; the observer holds the shares listed in `rows`.
LinearObservationModel BuildShareSubsetModel(const SymbolMatrix& enc,
                                             int num_randomness,
                                             std::span<const int> rows,
                                             std::size_t positions = 1);

// The M = 0 baseline as seen by user `observer` (its pad plus the
// broadcast), or by an eavesdropper when observer < 0.
LinearObservationModel BuildBaselineModel(const BaselineSession& session,
                                          int observer,
                                          std::size_t positions = 1);

// obs = A w + B v.
std::vector<Symbol> Observe(const LinearObservationModel& model,
                            const GaloisField& field,
                            std::span<const Symbol> w,
                            std::span<const Symbol> v);

// A combination y of the observations with y^T [A_unprotected | B] = 0 but
// y^T A_protected != 0, so y^T obs is a nonconstant function of protected
// file symbols alone.
struct LinearWitness {
  std::vector<Symbol> combination;           // length obs_dim
  std::vector<Symbol> protected_functional;  // y^T A, length file_dim
};

// Two assignments of the protected symbols (in column order of the
// protected coordinates) that induce different observation distributions.
struct DistributionWitness {
  std::vector<int> protected_columns;
  std::vector<Symbol> first;
  std::vector<Symbol> second;
};

struct SecrecyVerdict {
  bool holds = true;
  // Present iff !holds.
  std::optional<std::variant<LinearWitness, DistributionWitness>> witness;

  std::string WitnessString() const;
};

// The witness in terms of the model's row labels, e.g.
// "8e*S[1,1]@0 + X(1,2)@0 depends only on protected file(s) 2".
std::string DescribeWitness(const LinearObservationModel& model,
                            const SecrecyVerdict& verdict);

// Exact test of I(W_protected; observations) = 0 with files and randomness
// uniform and independent: holds iff the protected columns of A lie in the
// column space of [A_unprotected | B].
SecrecyVerdict CheckZeroInformation(const LinearObservationModel& model,
                                    const GaloisField& field,
                                    std::span<const int> protected_files);

// Largest instance the brute-force oracle accepts: l * (file_dim +
// rand_dim) enumerated bits.
inline constexpr int kMaxBruteForceBits = 24;

// Enumerates every (w, v), tabulates the joint law of (protected symbols,
// observations) and tests exact independence. Rejects instances above
// kMaxBruteForceBits or with more than 128 observed bits.
absl::StatusOr<SecrecyVerdict> BruteForceSecrecy(
    const LinearObservationModel& model, const GaloisField& field,
    std::span<const int> protected_files);

// Transmissions alone reveal nothing about any file.
SecrecyVerdict CheckExternalEavesdropper(const Session& session,
                                         std::size_t positions = 1);

// [N] \ {d_k}.
std::vector<int> FilesOtherThan(int num_files, int file);
std::vector<int> AllFiles(int num_files);

}  // namespace sccpda

#endif  // SCCPDA_SECRECY_H_
