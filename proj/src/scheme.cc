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

#include "sccpda/scheme.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace sccpda {
namespace {

ShareVector RandomVector(std::size_t len, const GaloisField& field, Rng& rng) {
  const std::uint64_t mask = field.size() - 1;
  ShareVector v(len);
  for (Symbol& x : v) x = static_cast<Symbol>(rng() & mask);
  return v;
}

void XorInto(ShareVector& dst, const ShareVector& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

}  // namespace

absl::Status SystemConfig::Validate() const {
  if (user_memory != Rational(1)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "user memory must be exactly 1 file, got ",
        ToFractionString(user_memory)));
  }
  if (num_caches < 1) {
    return absl::InvalidArgumentError("need at least one helper cache");
  }
  if (num_users < 1) return absl::InvalidArgumentError("need at least one user");
  if (num_files < 1) return absl::InvalidArgumentError("need at least one file");
  if (helper_memory < 0) {
    return absl::InvalidArgumentError("helper memory must be nonnegative");
  }
  if (file_bytes == 0) {
    return absl::InvalidArgumentError("files must be at least one byte");
  }
  return absl::OkStatus();
}

Rational MemoryForPda(const PdaParams& params, int num_files) {
  return Rational(num_files) * Rational(params.stars) /
         Rational(params.rows - params.stars);
}

absl::Status CheckMemoryRatio(const PdaParams& params,
                              const SystemConfig& config) {
  const Rational lhs = params.memory_ratio();
  const Rational rhs =
      config.helper_memory / (config.helper_memory + config.num_files);
  if (lhs != rhs) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "memory ratio mismatch: Z/F = %s but M/(M+N) = %s",
        ToFractionString(lhs), ToFractionString(rhs)));
  }
  return absl::OkStatus();
}

int Association::RankOf(int user) const {
  const auto& group = groups[user_to_cache[user]];
  return static_cast<int>(std::find(group.begin(), group.end(), user) -
                          group.begin()) +
         1;
}

absl::StatusOr<Association> Associate(int num_caches,
                                      std::span<const int> user_to_cache) {
  if (num_caches < 1) {
    return absl::InvalidArgumentError("need at least one cache");
  }
  if (user_to_cache.empty()) {
    return absl::InvalidArgumentError("need at least one user");
  }
  std::vector<int> load(num_caches, 0);
  for (std::size_t k = 0; k < user_to_cache.size(); ++k) {
    const int c = user_to_cache[k];
    if (c < 0 || c >= num_caches) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "user %d assigned to cache %d outside [1, %d]", k + 1, c + 1,
          num_caches));
    }
    ++load[c];
  }
  Association a;
  a.cache_order.resize(num_caches);
  std::iota(a.cache_order.begin(), a.cache_order.end(), 0);
  std::stable_sort(a.cache_order.begin(), a.cache_order.end(),
                   [&](int x, int y) { return load[x] > load[y]; });
  std::vector<int> relabel(num_caches);
  for (int c = 0; c < num_caches; ++c) relabel[a.cache_order[c]] = c;

  a.profile.resize(num_caches);
  a.groups.assign(num_caches, {});
  for (int c = 0; c < num_caches; ++c) a.profile[c] = load[a.cache_order[c]];
  a.user_to_cache.resize(user_to_cache.size());
  for (std::size_t k = 0; k < user_to_cache.size(); ++k) {
    const int c = relabel[user_to_cache[k]];
    a.user_to_cache[k] = c;
    a.groups[c].push_back(static_cast<int>(k));
  }
  return a;
}

absl::StatusOr<Association> AssociationFromLoads(std::span<const int> loads) {
  std::vector<int> user_to_cache;
  for (std::size_t c = 0; c < loads.size(); ++c) {
    if (loads[c] < 0) {
      return absl::InvalidArgumentError("cache loads must be nonnegative");
    }
    user_to_cache.insert(user_to_cache.end(), loads[c], static_cast<int>(c));
  }
  return Associate(static_cast<int>(loads.size()), user_to_cache);
}

std::string ToString(const Pair& p) {
  return absl::StrFormat("(%d,%d)", p.s, p.i);
}

std::vector<Pair> GArray::DistinctPairs() const {
  std::vector<Pair> out;
  for (const auto& cell : cells_) {
    if (cell.has_value()) out.push_back(*cell);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<int, int>> GArray::Occurrences(const Pair& p) const {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < users_; ++k) {
    for (int j = 0; j < rows_; ++j) {
      if (at(j, k) == p) out.emplace_back(j, k);
    }
  }
  return out;
}

std::string GArray::ToTransposeString() const {
  std::string out;
  for (int k = 0; k < users_; ++k) {
    for (int j = 0; j < rows_; ++j) {
      if (j > 0) out += ' ';
      out += at(j, k).has_value() ? ToString(*at(j, k)) : "*";
    }
    out += '\n';
  }
  return out;
}

absl::StatusOr<GArray> BuildGArray(const Pda& pda,
                                   const Association& association) {
  if (pda.num_caches() != association.num_caches()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "PDA has %d columns but the association has %d caches",
        pda.num_caches(), association.num_caches()));
  }
  GArray g(pda.rows(), association.num_users());
  for (int c = 0; c < association.num_caches(); ++c) {
    const auto& group = association.groups[c];
    for (std::size_t i = 0; i < group.size(); ++i) {
      const int user = group[i];
      for (int j = 0; j < pda.rows(); ++j) {
        const PdaEntry e = pda.at(j, c);
        if (!e.is_star()) {
          g.at(j, user) = Pair{e.value(), static_cast<int>(i) + 1};
        }
      }
    }
  }
  return g;
}

absl::StatusOr<Library> SyntheticLibrary(int num_files, std::size_t bytes,
                                         std::uint64_t seed) {
  if (num_files < 1 || bytes == 0) {
    return absl::InvalidArgumentError("library needs N >= 1 and B >= 1 byte");
  }
  Rng rng(seed);
  Library lib;
  lib.files.assign(num_files, std::vector<std::uint8_t>(bytes));
  for (auto& f : lib.files) {
    for (auto& b : f) b = static_cast<std::uint8_t>(rng() & 0xFF);
  }
  return lib;
}

absl::StatusOr<Library> LoadLibrary(const std::filesystem::path& dir) {
  std::error_code ec;
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) paths.push_back(entry.path());
  }
  if (ec) {
    return absl::NotFoundError(
        absl::StrCat("cannot read ", dir.string(), ": ", ec.message()));
  }
  if (paths.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("no files in ", dir.string()));
  }
  std::sort(paths.begin(), paths.end());
  Library lib;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    lib.files.emplace_back(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
    if (lib.files.back().size() != lib.files.front().size()) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "file %s has %d bytes, expected %d", p.string(),
          lib.files.back().size(), lib.files.front().size()));
    }
  }
  if (lib.file_bytes() == 0) {
    return absl::InvalidArgumentError("library files are empty");
  }
  return lib;
}

absl::StatusOr<HelperPlacement> PlaceHelperCaches(const Pda& pda,
                                                  const SystemConfig& config,
                                                  const Library& library,
                                                  const GaloisField& field,
                                                  Rng& rng) {
  if (absl::Status s = CheckMemoryRatio(pda.params(), config); !s.ok()) {
    return s;
  }
  if (static_cast<int>(library.files.size()) != config.num_files) {
    return absl::InvalidArgumentError(
        absl::StrFormat("library has %d files, config expects %d",
                        library.files.size(), config.num_files));
  }
  for (const auto& f : library.files) {
    if (f.size() != config.file_bytes) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "file length %d differs from %d", f.size(), config.file_bytes));
    }
  }
  const int f = pda.rows();
  const int z = pda.stars();
  HelperPlacement out;
  absl::StatusOr<SymbolMatrix> enc = CauchyMatrix(f, field);
  if (!enc.ok()) return enc.status();
  out.encoder = *std::move(enc);
  out.num_subfiles = f - z;

  for (const auto& file : library.files) {
    SplitFile split = SplitIntoSubfiles(file, out.num_subfiles,
                                        field.spec().bits());
    out.padding_bits = split.padding_bits;
    out.symbols_per_share = split.subfiles.front().size();
    std::vector<ShareVector> v;
    for (int i = 0; i < z; ++i) {
      v.push_back(RandomVector(out.symbols_per_share, field, rng));
    }
    absl::StatusOr<std::vector<ShareVector>> shares =
        EncodeShares(split.subfiles, v, out.encoder, field);
    if (!shares.ok()) return shares.status();
    out.shares.push_back(*std::move(shares));
    out.randomness.push_back(std::move(v));
  }

  out.cache_rows.assign(pda.num_caches(), {});
  for (int c = 0; c < pda.num_caches(); ++c) {
    for (int j = 0; j < f; ++j) {
      if (pda.at(j, c).is_star()) out.cache_rows[c].push_back(j);
    }
  }
  return out;
}

KeyPlacement PlaceUserKeys(const GArray& g, std::size_t symbols_per_share,
                           const GaloisField& field, Rng& rng) {
  KeyPlacement out;
  for (const Pair& p : g.DistinctPairs()) {
    out.pool.emplace(p, RandomVector(symbols_per_share, field, rng));
  }
  out.user_pairs.assign(g.users(), {});
  for (int k = 0; k < g.users(); ++k) {
    for (int j = 0; j < g.rows(); ++j) {
      if (g.at(j, k).has_value()) out.user_pairs[k].push_back(*g.at(j, k));
    }
  }
  return out;
}

absl::Status ValidateDemands(std::span<const int> demands, int num_users,
                             int num_files) {
  if (static_cast<int>(demands.size()) != num_users) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%d demands for %d users", demands.size(), num_users));
  }
  for (std::size_t k = 0; k < demands.size(); ++k) {
    if (demands[k] < 0 || demands[k] >= num_files) {
      return absl::OutOfRangeError(absl::StrFormat(
          "user %d demands file %d outside [1, %d]", k + 1, demands[k] + 1,
          num_files));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<int>> WorstCaseDemands(int num_users,
                                                  int num_files) {
  if (num_files < num_users) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "distinct demands need N >= K (N=%d, K=%d)", num_files, num_users));
  }
  std::vector<int> d(num_users);
  std::iota(d.begin(), d.end(), 0);
  return d;
}

absl::StatusOr<std::vector<Transmission>> Deliver(
    const GArray& g, const HelperPlacement& placement,
    const KeyPlacement& keys, std::span<const int> demands,
    DeliveryOptions options) {
  if (absl::Status s = ValidateDemands(demands, g.users(),
                                       static_cast<int>(placement.shares.size()));
      !s.ok()) {
    return s;
  }
  std::vector<Transmission> out;
  for (const auto& [pair, key] : keys.pool) {
    Transmission t;
    t.pair = pair;
    t.padded = !options.strip_pads;
    t.payload = t.padded ? key : ShareVector(key.size(), 0);
    for (const auto& [row, user] : g.Occurrences(pair)) {
      XorInto(t.payload, placement.shares[demands[user]][row]);
      t.participants.push_back(Participant{user, row});
    }
    out.push_back(std::move(t));
  }
  return out;
}

absl::StatusOr<Session> PlaceSession(const Pda& pda,
                                     const SystemConfig& config,
                                     const Association& association,
                                     const Library& library) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  if (association.num_caches() != config.num_caches ||
      pda.num_caches() != config.num_caches) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "cache count mismatch: config %d, PDA %d, association %d",
        config.num_caches, pda.num_caches(), association.num_caches()));
  }
  if (association.num_users() != config.num_users) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "association covers %d users, config has %d",
        association.num_users(), config.num_users));
  }
  const GaloisField field(config.field);
  Rng rng(config.seed);
  absl::StatusOr<HelperPlacement> placement =
      PlaceHelperCaches(pda, config, library, field, rng);
  if (!placement.ok()) return placement.status();
  absl::StatusOr<GArray> g = BuildGArray(pda, association);
  if (!g.ok()) return g.status();
  KeyPlacement keys =
      PlaceUserKeys(*g, placement->symbols_per_share, field, rng);
  return Session{.config = config,
                 .pda = pda,
                 .association = association,
                 .g = *std::move(g),
                 .placement = *std::move(placement),
                 .keys = std::move(keys)};
}

absl::Status DeliverSession(Session& session, std::span<const int> demands,
                            DeliveryOptions options) {
  absl::StatusOr<std::vector<Transmission>> x =
      Deliver(session.g, session.placement, session.keys, demands, options);
  if (!x.ok()) return x.status();
  session.demands.assign(demands.begin(), demands.end());
  session.transmissions = *std::move(x);
  session.delivered = true;
  return absl::OkStatus();
}

absl::StatusOr<std::vector<std::uint8_t>> Decode(int user,
                                                 const Session& session) {
  if (!session.delivered) {
    return absl::FailedPreconditionError("delivery has not run");
  }
  if (user < 0 || user >= session.association.num_users()) {
    return absl::OutOfRangeError(absl::StrFormat("no user %d", user + 1));
  }
  const int cache = session.association.user_to_cache[user];
  const auto& cached = session.placement.cache_rows[cache];
  auto in_cache = [&](int row) {
    return std::find(cached.begin(), cached.end(), row) != cached.end();
  };
  const auto& own_keys = session.keys.user_pairs[user];
  const int want = session.demands[user];
  const int f = session.pda.rows();

  std::vector<std::optional<ShareVector>> shares(f);
  for (int row : cached) shares[row] = session.placement.shares[want][row];

  for (const Transmission& t : session.transmissions) {
    int my_row = -1;
    for (const Participant& p : t.participants) {
      if (p.user == user) my_row = p.row;
    }
    if (my_row < 0) continue;
    if (std::find(own_keys.begin(), own_keys.end(), t.pair) ==
        own_keys.end()) {
      return absl::InternalError(absl::StrCat(
          "user ", user + 1, " lacks key ", ToString(t.pair)));
    }
    ShareVector s = t.payload;
    if (t.padded) XorInto(s, session.keys.pool.at(t.pair));
    for (const Participant& p : t.participants) {
      if (p.user == user) continue;
      if (!in_cache(p.row)) {
        return absl::InternalError(absl::StrFormat(
            "user %d cannot cancel share %d of user %d in %s", user + 1,
            p.row + 1, p.user + 1, ToString(t.pair)));
      }
      XorInto(s, session.placement.shares[session.demands[p.user]][p.row]);
    }
    shares[my_row] = std::move(s);
  }

  std::vector<ShareVector> all;
  for (int j = 0; j < f; ++j) {
    if (!shares[j].has_value()) {
      return absl::InternalError(absl::StrFormat(
          "user %d is missing share %d", user + 1, j + 1));
    }
    all.push_back(*shares[j]);
  }
  const GaloisField field(session.config.field);
  absl::StatusOr<std::vector<ShareVector>> subfiles = ReconstructFile(
      all, session.placement.encoder, session.placement.num_subfiles, field);
  if (!subfiles.ok()) return subfiles.status();
  return JoinSubfiles(*subfiles, session.placement.padding_bits,
                      field.spec().bits());
}

absl::StatusOr<RateReport> ComputeRate(const Pda& pda,
                                       std::span<const int> profile) {
  if (static_cast<int>(profile.size()) != pda.num_caches()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "profile has %d entries for %d caches", profile.size(),
        pda.num_caches()));
  }
  for (std::size_t c = 0; c < profile.size(); ++c) {
    if (profile[c] < 0 || (c > 0 && profile[c] > profile[c - 1])) {
      return absl::InvalidArgumentError(
          "profile must be nonnegative and nonincreasing");
    }
  }
  RateReport r;
  r.subpacketization = pda.rows();
  for (int s = 1; s <= pda.max_int(); ++s) {
    r.per_s_multiplicity.push_back(profile[pda.Tau(s)]);
    r.num_transmissions += profile[pda.Tau(s)];
  }
  r.rate = Rational(r.num_transmissions, pda.rows() - pda.stars());
  return r;
}

absl::StatusOr<BaselineSession> RunBaselineM0(const SystemConfig& config,
                                              const Library& library,
                                              std::span<const int> demands) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  if (config.helper_memory != Rational(0)) {
    return absl::InvalidArgumentError("the one-time-pad baseline needs M = 0");
  }
  if (static_cast<int>(library.files.size()) != config.num_files) {
    return absl::InvalidArgumentError("library size does not match N");
  }
  if (absl::Status s =
          ValidateDemands(demands, config.num_users, config.num_files);
      !s.ok()) {
    return s;
  }
  const GaloisField field(config.field);
  Rng rng(config.seed);
  BaselineSession out;
  out.config = config;
  for (const auto& file : library.files) {
    SplitFile split = SplitIntoSubfiles(file, 1, field.spec().bits());
    out.padding_bits = split.padding_bits;
    out.symbols_per_file = split.subfiles.front().size();
    out.files.push_back(std::move(split.subfiles.front()));
  }
  for (int k = 0; k < config.num_users; ++k) {
    out.keys.push_back(RandomVector(out.symbols_per_file, field, rng));
  }
  out.demands.assign(demands.begin(), demands.end());
  for (int k = 0; k < config.num_users; ++k) {
    ShareVector x = out.keys[k];
    XorInto(x, out.files[demands[k]]);
    out.transmissions.push_back(std::move(x));
  }
  out.rate = Rational(static_cast<std::int64_t>(out.transmissions.size()));
  return out;
}

absl::StatusOr<std::vector<std::uint8_t>> DecodeBaseline(
    int user, const BaselineSession& session) {
  if (user < 0 || user >= static_cast<int>(session.keys.size())) {
    return absl::OutOfRangeError(absl::StrFormat("no user %d", user + 1));
  }
  ShareVector w = session.transmissions[user];
  XorInto(w, session.keys[user]);
  std::vector<ShareVector> one = {std::move(w)};
  return JoinSubfiles(one, session.padding_bits, session.config.field.bits());
}

}  // namespace sccpda
