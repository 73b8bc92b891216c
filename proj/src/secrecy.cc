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

#include "sccpda/secrecy.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <tuple>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"

namespace sccpda {
namespace {

using Term = std::pair<std::size_t, Symbol>;

class ModelBuilder {
 public:
  ModelBuilder(std::size_t file_dim, std::size_t rand_dim)
      : file_dim_(file_dim), rand_dim_(rand_dim) {}

  void AddRow(std::string label, const std::vector<Term>& file_terms,
              const std::vector<Term>& rand_terms) {
    labels_.push_back(std::move(label));
    file_rows_.push_back(file_terms);
    rand_rows_.push_back(rand_terms);
  }

  LinearObservationModel Finish(std::vector<int> file_of_column) {
    LinearObservationModel m;
    m.files = SymbolMatrix(labels_.size(), file_dim_);
    m.randomness = SymbolMatrix(labels_.size(), rand_dim_);
    for (std::size_t r = 0; r < labels_.size(); ++r) {
      for (const auto& [c, a] : file_rows_[r]) m.files.at(r, c) ^= a;
      for (const auto& [c, a] : rand_rows_[r]) m.randomness.at(r, c) ^= a;
    }
    m.file_of_column = std::move(file_of_column);
    m.row_labels = std::move(labels_);
    return m;
  }

 private:
  std::size_t file_dim_;
  std::size_t rand_dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> file_rows_;
  std::vector<std::vector<Term>> rand_rows_;
};

// Coordinate layout for a Session model.
class SessionLayout {
 public:
  SessionLayout(const Session& s, std::size_t positions)
      : session_(s),
        positions_(std::min(positions, s.placement.symbols_per_share)),
        f_(s.pda.rows()),
        z_(s.pda.stars()),
        sub_(f_ - z_),
        n_(s.config.num_files) {
    std::size_t idx = 0;
    for (const auto& entry : s.keys.pool) key_index_[entry.first] = idx++;
  }

  std::size_t positions() const { return positions_; }
  std::size_t file_dim() const { return std::size_t(n_) * sub_ * positions_; }
  std::size_t rand_dim() const {
    return (std::size_t(n_) * z_ + key_index_.size()) * positions_;
  }
  std::vector<int> FileOfColumn() const {
    std::vector<int> out(file_dim());
    for (std::size_t c = 0; c < out.size(); ++c) {
      out[c] = static_cast<int>(c / (std::size_t(sub_) * positions_));
    }
    return out;
  }

  std::size_t FileCol(int n, int i, std::size_t pos) const {
    return (std::size_t(n) * sub_ + i) * positions_ + pos;
  }
  std::size_t RandCol(int n, int z, std::size_t pos) const {
    return (std::size_t(n) * z_ + z) * positions_ + pos;
  }
  std::size_t KeyCol(const Pair& p, std::size_t pos) const {
    return (std::size_t(n_) * z_ + key_index_.at(p)) * positions_ + pos;
  }

  // Share S_{n,j} at `pos` added into the term lists.
  void AddShare(int n, int j, std::size_t pos, std::vector<Term>& file_terms,
                std::vector<Term>& rand_terms) const {
    const SymbolMatrix& enc = session_.placement.encoder;
    for (int i = 0; i < f_; ++i) {
      if (i < sub_) {
        file_terms.emplace_back(FileCol(n, i, pos), enc.at(j, i));
      } else {
        rand_terms.emplace_back(RandCol(n, i - sub_, pos), enc.at(j, i));
      }
    }
  }

  void AddHelperCache(int cache, ModelBuilder& b) const {
    for (int n = 0; n < n_; ++n) {
      for (int j : session_.placement.cache_rows[cache]) {
        for (std::size_t pos = 0; pos < positions_; ++pos) {
          std::vector<Term> ft, rt;
          AddShare(n, j, pos, ft, rt);
          b.AddRow(absl::StrFormat("S[%d,%d]@%d", n + 1, j + 1, pos), ft, rt);
        }
      }
    }
  }

  void AddUserKeys(int user, ModelBuilder& b) const {
    for (const Pair& p : session_.keys.user_pairs[user]) {
      for (std::size_t pos = 0; pos < positions_; ++pos) {
        b.AddRow(absl::StrCat("K", ToString(p), "@", pos), {},
                 {{KeyCol(p, pos), 1}});
      }
    }
  }

  void AddTransmissions(ModelBuilder& b) const {
    for (const Transmission& t : session_.transmissions) {
      for (std::size_t pos = 0; pos < positions_; ++pos) {
        std::vector<Term> ft, rt;
        if (t.padded) rt.emplace_back(KeyCol(t.pair, pos), 1);
        for (const Participant& p : t.participants) {
          AddShare(session_.demands[p.user], p.row, pos, ft, rt);
        }
        b.AddRow(absl::StrCat("X", ToString(t.pair), "@", pos), ft, rt);
      }
    }
  }

 private:
  const Session& session_;
  std::size_t positions_;
  int f_, z_, sub_, n_;
  std::map<Pair, std::size_t> key_index_;
};

struct EliminationResult {
  bool holds = true;
  std::vector<Symbol> combination;  // filled when tracking and !holds
};

// Row-reduces [noise | target (| identity)] on the noise columns and
// reports whether some combination clears the noise but not the target.
EliminationResult Eliminate(const LinearObservationModel& model,
                            const GaloisField& field,
                            const std::vector<bool>& is_protected,
                            bool track) {
  std::vector<std::size_t> noise_file, target_file;
  for (std::size_t c = 0; c < model.file_dim(); ++c) {
    (is_protected[model.file_of_column[c]] ? target_file : noise_file)
        .push_back(c);
  }
  const std::size_t rows = model.obs_dim();
  const std::size_t noise = noise_file.size() + model.rand_dim();
  const std::size_t target = target_file.size();
  const std::size_t width = noise + target + (track ? rows : 0);

  SymbolMatrix m(rows, width);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t c = 0;
    for (std::size_t f : noise_file) m.at(r, c++) = model.files.at(r, f);
    for (std::size_t v = 0; v < model.rand_dim(); ++v) {
      m.at(r, c++) = model.randomness.at(r, v);
    }
    for (std::size_t f : target_file) m.at(r, c++) = model.files.at(r, f);
    if (track) m.at(r, noise + target + r) = 1;
  }

  std::size_t rank = 0;
  for (std::size_t c = 0; c < noise && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(m.row(pivot).begin() + c, m.row(pivot).end(),
                       m.row(rank).begin() + c);
    }
    const Symbol lead = m.at(rank, c);
    auto src = m.row(rank).subspan(c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Symbol x = m.at(r, c);
      if (x == 0) continue;
      field.MulAdd(m.row(r).subspan(c), src, field.Div(x, lead));
    }
    ++rank;
  }

  EliminationResult out;
  for (std::size_t r = rank; r < rows; ++r) {
    auto t = m.row(r).subspan(noise, target);
    if (std::any_of(t.begin(), t.end(), [](Symbol s) { return s != 0; })) {
      out.holds = false;
      if (track) {
        auto y = m.row(r).subspan(noise + target, rows);
        out.combination.assign(y.begin(), y.end());
      }
      return out;
    }
  }
  return out;
}

std::string HexList(std::span<const Symbol> v) {
  return absl::StrJoin(v, " ", [](std::string* out, Symbol s) {
    absl::StrAppendFormat(out, "%x", s);
  });
}

}  // namespace

LinearObservationModel BuildObservationModel(const Session& session,
                                             int observer,
                                             ObservationScope scope,
                                             std::size_t positions) {
  SessionLayout layout(session, positions);
  ModelBuilder b(layout.file_dim(), layout.rand_dim());
  layout.AddHelperCache(session.association.user_to_cache[observer], b);
  layout.AddUserKeys(observer, b);
  if (scope == ObservationScope::kCachesPlusDelivery) {
    layout.AddTransmissions(b);
  }
  return b.Finish(layout.FileOfColumn());
}

LinearObservationModel BuildHelperCacheModel(const Session& session,
                                             int cache,
                                             std::size_t positions) {
  SessionLayout layout(session, positions);
  ModelBuilder b(layout.file_dim(), layout.rand_dim());
  layout.AddHelperCache(cache, b);
  return b.Finish(layout.FileOfColumn());
}

LinearObservationModel BuildEavesdropperModel(const Session& session,
                                              std::size_t positions) {
  SessionLayout layout(session, positions);
  ModelBuilder b(layout.file_dim(), layout.rand_dim());
  layout.AddTransmissions(b);
  return b.Finish(layout.FileOfColumn());
}

LinearObservationModel BuildShareSubsetModel(const SymbolMatrix& enc,
                                             int num_randomness,
                                             std::span<const int> rows,
                                             std::size_t positions) {
  const int f = static_cast<int>(enc.rows());
  const int sub = f - num_randomness;
  ModelBuilder b(std::size_t(sub) * positions,
                 std::size_t(num_randomness) * positions);
  for (int j : rows) {
    for (std::size_t pos = 0; pos < positions; ++pos) {
      std::vector<Term> ft, rt;
      for (int i = 0; i < f; ++i) {
        if (i < sub) {
          ft.emplace_back(i * positions + pos, enc.at(j, i));
        } else {
          rt.emplace_back((i - sub) * positions + pos, enc.at(j, i));
        }
      }
      b.AddRow(absl::StrFormat("S[%d]@%d", j + 1, pos), ft, rt);
    }
  }
  return b.Finish(std::vector<int>(std::size_t(sub) * positions, 0));
}

LinearObservationModel BuildBaselineModel(const BaselineSession& session,
                                          int observer,
                                          std::size_t positions) {
  positions = std::min(positions, session.symbols_per_file);
  const std::size_t n = session.files.size();
  const std::size_t k = session.keys.size();
  ModelBuilder b(n * positions, k * positions);
  if (observer >= 0) {
    for (std::size_t pos = 0; pos < positions; ++pos) {
      b.AddRow(absl::StrCat("K", observer + 1, "@", pos), {},
               {{observer * positions + pos, 1}});
    }
  }
  for (std::size_t u = 0; u < k; ++u) {
    for (std::size_t pos = 0; pos < positions; ++pos) {
      b.AddRow(absl::StrCat("X", u + 1, "@", pos),
               {{session.demands[u] * positions + pos, 1}},
               {{u * positions + pos, 1}});
    }
  }
  std::vector<int> owner(n * positions);
  for (std::size_t c = 0; c < owner.size(); ++c) {
    owner[c] = static_cast<int>(c / positions);
  }
  return b.Finish(std::move(owner));
}

std::vector<Symbol> Observe(const LinearObservationModel& model,
                            const GaloisField& field,
                            std::span<const Symbol> w,
                            std::span<const Symbol> v) {
  std::vector<Symbol> obs(model.obs_dim(), 0);
  for (std::size_t r = 0; r < model.obs_dim(); ++r) {
    Symbol acc = 0;
    for (std::size_t c = 0; c < model.file_dim(); ++c) {
      acc ^= field.Mul(model.files.at(r, c), w[c]);
    }
    for (std::size_t c = 0; c < model.rand_dim(); ++c) {
      acc ^= field.Mul(model.randomness.at(r, c), v[c]);
    }
    obs[r] = acc;
  }
  return obs;
}

std::string SecrecyVerdict::WitnessString() const {
  if (!witness.has_value()) return "";
  if (const auto* lin = std::get_if<LinearWitness>(&*witness)) {
    return absl::StrCat("combination [", HexList(lin->combination),
                        "] yields protected functional [",
                        HexList(lin->protected_functional), "]");
  }
  const auto& dist = std::get<DistributionWitness>(*witness);
  return absl::StrCat("protected values [", HexList(dist.first), "] and [",
                      HexList(dist.second),
                      "] give different observation laws");
}

std::string DescribeWitness(const LinearObservationModel& model,
                            const SecrecyVerdict& verdict) {
  if (!verdict.witness.has_value()) return "";
  const auto* lin = std::get_if<LinearWitness>(&*verdict.witness);
  if (lin == nullptr) return verdict.WitnessString();
  std::vector<std::string> terms;
  for (std::size_t r = 0; r < lin->combination.size(); ++r) {
    const Symbol y = lin->combination[r];
    if (y == 0) continue;
    terms.push_back(y == 1 ? model.row_labels[r]
                           : absl::StrFormat("%x*%s", y, model.row_labels[r]));
  }
  std::vector<int> files;
  for (std::size_t c = 0; c < lin->protected_functional.size(); ++c) {
    if (lin->protected_functional[c] == 0) continue;
    const int f = model.file_of_column[c] + 1;
    if (std::find(files.begin(), files.end(), f) == files.end()) {
      files.push_back(f);
    }
  }
  return absl::StrCat(absl::StrJoin(terms, " + "),
                      " depends only on protected file(s) ",
                      absl::StrJoin(files, ","));
}

SecrecyVerdict CheckZeroInformation(const LinearObservationModel& model,
                                    const GaloisField& field,
                                    std::span<const int> protected_files) {
  int max_file = 0;
  for (int f : model.file_of_column) max_file = std::max(max_file, f);
  for (int f : protected_files) max_file = std::max(max_file, f);
  std::vector<bool> is_protected(max_file + 1, false);
  for (int f : protected_files) is_protected[f] = true;

  SecrecyVerdict verdict;
  if (Eliminate(model, field, is_protected, /*track=*/false).holds) {
    return verdict;
  }
  EliminationResult tracked = Eliminate(model, field, is_protected, true);
  verdict.holds = false;
  LinearWitness w;
  w.combination = std::move(tracked.combination);
  w.protected_functional.assign(model.file_dim(), 0);
  for (std::size_t r = 0; r < model.obs_dim(); ++r) {
    field.MulAdd(w.protected_functional, model.files.row(r),
                 w.combination[r]);
  }
  verdict.witness = std::move(w);
  return verdict;
}

absl::StatusOr<SecrecyVerdict> BruteForceSecrecy(
    const LinearObservationModel& model, const GaloisField& field,
    std::span<const int> protected_files) {
  const int bits = field.spec().bits();
  const std::size_t dim = model.file_dim() + model.rand_dim();
  if (bits * dim > kMaxBruteForceBits) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "brute force over %d symbols of %d bits exceeds %d bits", dim, bits,
        kMaxBruteForceBits));
  }
  if (bits * model.obs_dim() > 128) {
    return absl::ResourceExhaustedError("observation vector over 128 bits");
  }

  // Column j of [A | B], packed: observation r occupies bits
  // [r * bits, (r + 1) * bits) of a 128-bit word held as two halves.
  using Packed = std::array<std::uint64_t, 2>;
  auto pack = [&](std::span<const Symbol> obs) {
    Packed p{0, 0};
    for (std::size_t r = 0; r < obs.size(); ++r) {
      const std::size_t bit = r * bits;
      const unsigned __int128 v = static_cast<unsigned __int128>(obs[r])
                                  << bit;
      p[0] ^= static_cast<std::uint64_t>(v);
      p[1] ^= static_cast<std::uint64_t>(v >> 64);
    }
    return p;
  };

  std::vector<bool> is_protected_file;
  for (int f : protected_files) {
    if (f >= static_cast<int>(is_protected_file.size())) {
      is_protected_file.resize(f + 1, false);
    }
    is_protected_file[f] = true;
  }
  std::vector<int> protected_columns;
  for (std::size_t c = 0; c < model.file_dim(); ++c) {
    const int f = model.file_of_column[c];
    if (f < static_cast<int>(is_protected_file.size()) &&
        is_protected_file[f]) {
      protected_columns.push_back(static_cast<int>(c));
    }
  }

  // contribution[j][a] = column j scaled by a, packed.
  const std::uint32_t q = field.size();
  std::vector<std::vector<Packed>> contribution(dim, std::vector<Packed>(q));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::uint32_t a = 0; a < q; ++a) {
      std::vector<Symbol> col(model.obs_dim());
      for (std::size_t r = 0; r < model.obs_dim(); ++r) {
        const Symbol coef = j < model.file_dim()
                                ? model.files.at(r, j)
                                : model.randomness.at(r, j - model.file_dim());
        col[r] = field.Mul(coef, static_cast<Symbol>(a));
      }
      contribution[j][a] = pack(col);
    }
  }

  std::vector<std::uint32_t> digit(dim, 0);
  std::vector<int> protected_slot(dim, -1);
  for (std::size_t k = 0; k < protected_columns.size(); ++k) {
    protected_slot[protected_columns[k]] = static_cast<int>(k);
  }
  using JointKey = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;
  absl::flat_hash_map<JointKey, std::uint64_t> joint;
  absl::flat_hash_map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>
      marginal;

  Packed obs{0, 0};
  std::uint64_t pval = 0;
  while (true) {
    ++joint[{pval, obs[0], obs[1]}];
    ++marginal[{obs[0], obs[1]}];
    // Odometer step, updating obs and the packed protected value.
    std::size_t j = 0;
    for (; j < dim; ++j) {
      const std::uint32_t old = digit[j];
      const std::uint32_t next = (old + 1) % q;
      digit[j] = next;
      obs[0] ^= contribution[j][old][0] ^ contribution[j][next][0];
      obs[1] ^= contribution[j][old][1] ^ contribution[j][next][1];
      if (protected_slot[j] >= 0) {
        const int shift = protected_slot[j] * bits;
        pval ^= (std::uint64_t{old} ^ next) << shift;
      }
      if (next != 0) break;
    }
    if (j == dim) break;
  }

  const std::uint64_t protected_values = std::uint64_t{1}
                                         << (bits * protected_columns.size());
  SecrecyVerdict verdict;
  for (const auto& [key, count] : joint) {
    const auto& [p, o0, o1] = key;
    const std::uint64_t total = marginal.at({o0, o1});
    if (count * protected_values == total) continue;
    // Find a protected value with a different conditional count.
    verdict.holds = false;
    DistributionWitness w;
    w.protected_columns = protected_columns;
    auto unpack = [&](std::uint64_t v) {
      std::vector<Symbol> out;
      for (std::size_t k = 0; k < protected_columns.size(); ++k) {
        out.push_back(static_cast<Symbol>((v >> (k * bits)) & (q - 1)));
      }
      return out;
    };
    w.first = unpack(p);
    for (std::uint64_t other = 0; other < protected_values; ++other) {
      auto it = joint.find({other, o0, o1});
      const std::uint64_t c = it == joint.end() ? 0 : it->second;
      if (c != count) {
        w.second = unpack(other);
        break;
      }
    }
    verdict.witness = std::move(w);
    return verdict;
  }
  return verdict;
}

SecrecyVerdict CheckExternalEavesdropper(const Session& session,
                                         std::size_t positions) {
  const GaloisField field(session.config.field);
  return CheckZeroInformation(BuildEavesdropperModel(session, positions),
                              field, AllFiles(session.config.num_files));
}

std::vector<int> FilesOtherThan(int num_files, int file) {
  std::vector<int> out;
  for (int n = 0; n < num_files; ++n) {
    if (n != file) out.push_back(n);
  }
  return out;
}

std::vector<int> AllFiles(int num_files) { return FilesOtherThan(num_files, -1); }

}  // namespace sccpda
