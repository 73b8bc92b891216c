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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "sccpda/bounds.h"
#include "sccpda/gf.h"
#include "sccpda/mds.h"
#include "sccpda/pda.h"
#include "sccpda/rational.h"
#include "sccpda/scheme.h"
#include "sccpda/secrecy.h"
#include "test_instances.h"
#include "witness_check.h"

namespace sccpda {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failure only.
  void Require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

long Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Sum over integers of the load of the first column holding them.
Rational RateOracle(const Pda& pda, const std::vector<int>& profile) {
  std::map<int, int> first;
  for (int c = 0; c < pda.num_caches(); ++c) {
    for (int j = 0; j < pda.rows(); ++j) {
      if (!pda.at(j, c).is_star()) first.try_emplace(pda.at(j, c).value(), c);
    }
  }
  long total = 0;
  for (const auto& [s, c] : first) total += profile[c];
  return Rational(total, pda.rows() - pda.stars());
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Instance {
  Library library;
  Session session;
};

absl::StatusOr<Instance> MakeInstance(const Pda& pda,
                                      const std::vector<int>& user_to_cache,
                                      int num_files, std::size_t bytes,
                                      FieldSpec field, std::uint64_t seed,
                                      const std::vector<int>& demands,
                                      DeliveryOptions options = {}) {
  SystemConfig config{
      .num_caches = pda.num_caches(),
      .num_users = static_cast<int>(user_to_cache.size()),
      .helper_memory = MemoryForPda(pda.params(), num_files),
      .num_files = num_files,
      .file_bytes = bytes,
      .field = field,
      .seed = seed};
  absl::StatusOr<Library> lib = SyntheticLibrary(num_files, bytes, ~seed);
  if (!lib.ok()) return lib.status();
  absl::StatusOr<Association> a = Associate(pda.num_caches(), user_to_cache);
  if (!a.ok()) return a.status();
  absl::StatusOr<Session> s = PlaceSession(pda, config, *a, *lib);
  if (!s.ok()) return s.status();
  if (absl::Status st = DeliverSession(*s, demands, options); !st.ok()) {
    return st;
  }
  return Instance{*std::move(lib), *std::move(s)};
}

std::vector<int> RandomAssignment(int users, int caches, std::mt19937_64& rng) {
  std::vector<int> out(users);
  for (int& c : out) c = static_cast<int>(rng() % caches);
  return out;
}

int AllDecode(const Instance& in) {
  int ok = 0;
  const Session& s = in.session;
  for (int k = 0; k < s.config.num_users; ++k) {
    absl::StatusOr<std::vector<std::uint8_t>> w = Decode(k, s);
    ok += w.ok() && *w == in.library.files[s.demands[k]];
  }
  return ok;
}

// ------------------------------------------------------------------ 1

Outcome WorkedExample() {
  Outcome o;
  const auto start = Clock::now();
  const std::string path =
      absl::StrCat(SCCPDA_SOURCE_DIR, "/data/example_6_4_2_4.pda");
  absl::StatusOr<Pda> pda = ParsePda(ReadText(path));
  o.Require(pda.ok(), absl::StrCat("cannot load ", path));
  if (!o.pass) return o;
  o.Require(FormatPda(*pda) == testing::kExamplePdaText,
            "data file differs from the worked example");
  std::vector<int> u2c;
  const std::vector<int> loads = testing::ExampleLoads();
  for (int c = 0; c < 6; ++c) u2c.insert(u2c.end(), loads[c], c);
  absl::StatusOr<std::vector<int>> demands = WorstCaseDemands(21, 21);
  absl::StatusOr<Instance> in = MakeInstance(*pda, u2c, 21, 64,
                                             FieldSpec::Default(), 1, *demands);
  o.Require(in.ok(), in.ok() ? "" : std::string(in.status().message()));
  if (!o.pass) return o;
  const Session& s = in->session;
  const int sent = static_cast<int>(s.transmissions.size());
  const Rational by_count(sent, pda->rows() - pda->stars());
  absl::StatusOr<RateReport> r = ComputeRate(s.pda, s.association.profile);
  o.Require(sent == 20, absl::StrCat(sent, " transmissions, expected 20"));
  o.Require(by_count == Rational(10), "count / (F - Z) is not 10");
  o.Require(r.ok() && r->rate == Rational(10), "rate formula is not 10");
  o.Require(pda->rows() == 4, "F is not 4");
  o.Require(s.g.ToTransposeString() == testing::kExampleGTranspose,
            "G array differs from the worked example");
  o.Require(AllDecode(*in) == 21, "a user failed to decode");
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  o.Require(ms < 1000, absl::StrFormat("took %.0f ms", ms));
  if (o.pass) {
    o.detail = absl::StrFormat(
        "20 transmissions, rate %s, F=4, G matches entry for entry, %.0f ms",
        ToFractionString(r->rate), ms);
  }
  return o;
}

// ---------------------------------------------------------- 2 and 5

std::vector<Instance> RandomInstances(int count, std::uint64_t seed,
                                      Outcome& o) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  while (static_cast<int>(out.size()) < count && o.pass) {
    const int caches = 2 + static_cast<int>(rng() % 5);
    const int t = 1 + static_cast<int>(rng() % (caches - 1));
    absl::StatusOr<Pda> pda = MnPda(caches, t);
    const int users = 1 + static_cast<int>(rng() % 24);
    const int files = 2 + static_cast<int>(rng() % 3);
    std::vector<int> demands(users);
    for (int& d : demands) d = static_cast<int>(rng() % files);
    absl::StatusOr<Instance> in =
        MakeInstance(*pda, RandomAssignment(users, caches, rng), files, 4,
                     FieldSpec::Default(), rng(), demands);
    o.Require(in.ok(), in.ok() ? "" : std::string(in.status().message()));
    if (in.ok()) out.push_back(*std::move(in));
  }
  return out;
}

Outcome RateEquivalence(const std::vector<Instance>& cases) {
  Outcome o;
  for (const Instance& in : cases) {
    const Session& s = in.session;
    const Rational simulated(static_cast<long>(s.transmissions.size()),
                             s.pda.rows() - s.pda.stars());
    absl::StatusOr<RateReport> r = ComputeRate(s.pda, s.association.profile);
    o.Require(r.ok() && r->rate == simulated &&
                  simulated == RateOracle(s.pda, s.association.profile),
              absl::StrFormat("mismatch on a %d-cache instance with K=%d",
                              s.config.num_caches, s.config.num_users));
  }
  if (o.pass) {
    o.detail = absl::StrFormat(
        "%d instances, transmissions/(F-Z) equals the rate formula exactly",
        cases.size());
  }
  return o;
}

Outcome SecrecySuite(const std::vector<Instance>& cases) {
  Outcome o;
  long checks = 0;
  for (const Instance& in : cases) {
    const Session& s = in.session;
    const GaloisField field(s.config.field);
    const int n = s.config.num_files;
    for (int c = 0; c < s.config.num_caches && o.pass; ++c) {
      o.Require(CheckZeroInformation(BuildHelperCacheModel(s, c), field,
                                     AllFiles(n))
                    .holds,
                "helper cache leaks");
      ++checks;
    }
    for (int k = 0; k < s.config.num_users && o.pass; ++k) {
      o.Require(
          CheckZeroInformation(
              BuildObservationModel(s, k, ObservationScope::kCachesOnly),
              field, AllFiles(n))
              .holds,
          "placement-phase user view leaks");
      o.Require(CheckZeroInformation(
                    BuildObservationModel(
                        s, k, ObservationScope::kCachesPlusDelivery),
                    field, FilesOtherThan(n, s.demands[k]))
                    .holds,
                "delivery-phase user view leaks an unrequested file");
      checks += 2;
    }
    o.Require(CheckExternalEavesdropper(s).holds, "eavesdropper learns");
    ++checks;
  }

  // Sabotage on the worked example: pads stripped.
  absl::StatusOr<Pda> pda = ParsePda(testing::kExamplePdaText);
  std::vector<int> u2c;
  const std::vector<int> loads = testing::ExampleLoads();
  for (int c = 0; c < 6; ++c) u2c.insert(u2c.end(), loads[c], c);
  absl::StatusOr<Instance> bad =
      MakeInstance(*pda, u2c, 21, 8, FieldSpec::Default(), 5,
                   *WorstCaseDemands(21, 21), {.strip_pads = true});
  int sabotage_failures = 0;
  if (bad.ok()) {
    const GaloisField field(FieldSpec::Default());
    for (int k = 0; k < 21; ++k) {
      LinearObservationModel m = BuildObservationModel(
          bad->session, k, ObservationScope::kCachesPlusDelivery);
      const std::vector<int> prot = FilesOtherThan(21, bad->session.demands[k]);
      SecrecyVerdict v = CheckZeroInformation(m, field, prot);
      if (v.holds) continue;
      std::string why;
      const auto* w = v.witness.has_value()
                          ? std::get_if<LinearWitness>(&*v.witness)
                          : nullptr;
      o.Require(w != nullptr && testing::IsValidLinearWitness(m, field, prot,
                                                              *w, &why),
                absl::StrCat("invalid sabotage witness: ", why));
      ++sabotage_failures;
    }
  }
  o.Require(bad.ok() && sabotage_failures > 0,
            "stripping pads did not break delivery secrecy");

  // Brute force against the rank test on tiny instances.
  int compared = 0, agreed = 0, leaks = 0;
  std::size_t max_symbols = 0;
  absl::StatusOr<Pda> tiny = MnPda(2, 1);
  for (FieldSpec spec : {*FieldSpec::Create(2, 0x7),
                         *FieldSpec::Create(3, 0xB)}) {
    const GaloisField field(spec);
    for (const std::vector<int>& users :
         {std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{0, 1},
          std::vector<int>{0, 0}, std::vector<int>{1, 0, 0}}) {
      for (int n = 1; n <= 2; ++n) {
        for (bool strip : {false, true}) {
          std::vector<int> d(users.size());
          for (std::size_t k = 0; k < d.size(); ++k) {
            d[k] = static_cast<int>((k * 7 + 1) % n);
          }
          absl::StatusOr<Instance> in =
              MakeInstance(*tiny, users, n, 1, spec, compared + 3, d,
                           {.strip_pads = strip});
          if (!in.ok()) continue;
          std::vector<std::pair<LinearObservationModel, std::vector<int>>> ms;
          ms.push_back({BuildEavesdropperModel(in->session), AllFiles(n)});
          for (int k = 0; k < static_cast<int>(users.size()); ++k) {
            ms.push_back({BuildObservationModel(
                              in->session, k,
                              ObservationScope::kCachesPlusDelivery),
                          FilesOtherThan(n, d[k])});
            ms.push_back({BuildObservationModel(
                              in->session, k, ObservationScope::kCachesOnly),
                          AllFiles(n)});
          }
          for (const auto& [m, prot] : ms) {
            if (prot.empty()) continue;
            max_symbols = std::max(max_symbols, m.file_dim() + m.rand_dim());
            absl::StatusOr<SecrecyVerdict> slow =
                BruteForceSecrecy(m, field, prot);
            if (!slow.ok()) continue;
            const bool fast = CheckZeroInformation(m, field, prot).holds;
            ++compared;
            agreed += fast == slow->holds;
            leaks += !fast;
          }
        }
      }
    }
  }
  o.Require(compared >= 20 && agreed == compared && leaks > 0,
            absl::StrFormat("oracle agreement %d/%d (%d leaking)", agreed,
                            compared, leaks));
  if (o.pass) {
    o.detail = absl::StrFormat(
        "%d checks pass on %d instances; stripped pads fail for %d/21 users "
        "with valid witnesses; brute force agrees on %d/%d tiny models "
        "(%d leaking, <= %d symbols)",
        checks, cases.size(), sabotage_failures, agreed, compared, leaks,
        max_symbols);
  }
  return o;
}

// ------------------------------------------------------------------ 3

Outcome UniformCorollary() {
  Outcome o;
  int tested = 0;
  std::vector<Pda> pdas;
  for (int caches = 2; caches <= 8; ++caches) {
    for (int t = 1; t < caches; ++t) pdas.push_back(*MnPda(caches, t));
  }
  pdas.push_back(*ParsePda(testing::kExamplePdaText));
  for (const Pda& pda : pdas) {
    for (int per = 1; per <= 5; ++per) {
      const std::vector<int> profile(pda.num_caches(), per);
      const long k = long(per) * pda.num_caches();
      const Rational closed(k * pda.max_int(),
                            long(pda.num_caches()) * (pda.rows() - pda.stars()));
      absl::StatusOr<RateReport> r = ComputeRate(pda, profile);
      o.Require(r.ok() && r->rate == closed && RateOracle(pda, profile) == closed,
                absl::StrFormat("L=%d F=%d per=%d", pda.num_caches(),
                                pda.rows(), per));
      ++tested;
    }
  }
  if (o.pass) {
    o.detail = absl::StrFormat("%d uniform profiles match K S/(L (F-Z))",
                               tested);
  }
  return o;
}

// ------------------------------------------------------------------ 4

Outcome Decodability() {
  Outcome o;
  std::mt19937_64 rng(4444);
  int runs = 0, users = 0, repeated = 0;
  const int bits_choices[] = {4, 8, 11, 16};
  while (runs < 50 && o.pass) {
    const int caches = 2 + static_cast<int>(rng() % 5);
    const int t = 1 + static_cast<int>(rng() % (caches - 1));
    Pda pda = *MnPda(caches, t);
    int bits = bits_choices[rng() % 4];
    if ((1 << bits) < 2 * pda.rows()) bits = 8;
    if ((1 << bits) < 2 * pda.rows()) bits = 16;
    const int k = 1 + static_cast<int>(rng() % 24);
    const int n = 1 + static_cast<int>(rng() % 30);
    std::vector<int> d(k);
    // Every third run repeats one file for everybody.
    for (int& x : d) x = runs % 3 == 0 ? 0 : static_cast<int>(rng() % n);
    std::vector<int> sorted = d;
    std::sort(sorted.begin(), sorted.end());
    repeated += std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    const std::size_t bytes = 1 + rng() % 97;
    absl::StatusOr<Instance> in =
        MakeInstance(pda, RandomAssignment(k, caches, rng), n, bytes,
                     *FieldSpec::ForBits(bits), rng(), d);
    o.Require(in.ok(), in.ok() ? "" : std::string(in.status().message()));
    if (!in.ok()) break;
    const int ok = AllDecode(*in);
    o.Require(ok == k, absl::StrFormat("run %d: %d/%d users decoded", runs, ok, k));
    users += k;
    ++runs;
  }
  o.Require(repeated > 0, "no run had repeated demands");
  if (o.pass) {
    o.detail = absl::StrFormat(
        "%d runs, %d users, all bit-exact (%d runs with repeated demands)",
        runs, users, repeated);
  }
  return o;
}

// ------------------------------------------------------------------ 6

Outcome SecretSharing() {
  Outcome o;
  const GaloisField field(FieldSpec::Default());
  std::mt19937_64 rng(66);
  int subsets = 0;
  for (const auto [z, f] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3},
                            std::pair{2, 4}, std::pair{3, 4}}) {
    absl::StatusOr<SymbolMatrix> enc = CauchyMatrix(f, field);
    o.Require(enc.ok(), "no encoder");
    if (!enc.ok()) break;
    for (int mask = 1; mask < (1 << f); ++mask) {
      std::vector<int> rows;
      for (int j = 0; j < f; ++j) {
        if (mask & (1 << j)) rows.push_back(j);
      }
      if (static_cast<int>(rows.size()) != z &&
          static_cast<int>(rows.size()) != f) {
        continue;
      }
      const bool holds = CheckZeroInformation(
                             BuildShareSubsetModel(*enc, z, rows), field,
                             std::vector<int>{0})
                             .holds;
      o.Require(holds == (static_cast<int>(rows.size()) == z),
                absl::StrFormat("(Z,F)=(%d,%d) subset mask %x", z, f, mask));
      ++subsets;
    }
    // The full set reconstructs.
    std::vector<ShareVector> w(f - z, ShareVector(5)), v(z, ShareVector(5));
    for (auto& x : w) for (Symbol& s : x) s = rng() & 0xFF;
    for (auto& x : v) for (Symbol& s : x) s = rng() & 0xFF;
    absl::StatusOr<std::vector<ShareVector>> shares =
        EncodeShares(w, v, *enc, field);
    absl::StatusOr<std::vector<ShareVector>> back =
        shares.ok() ? ReconstructFile(*shares, *enc, f - z, field)
                    : shares.status();
    o.Require(back.ok() && *back == w,
              absl::StrFormat("(Z,F)=(%d,%d) reconstruction", z, f));
  }
  if (o.pass) {
    o.detail = absl::StrFormat(
        "%d subsets: every Z-subset reveals nothing, every full set leaks and "
        "reconstructs",
        subsets);
  }
  return o;
}

// ------------------------------------------------------------------ 7

Outcome MnParameters() {
  Outcome o;
  int tested = 0;
  for (int caches = 2; caches <= 8; ++caches) {
    for (int t = 1; t < caches; ++t) {
      absl::StatusOr<Pda> pda = MnPda(caches, t);
      o.Require(pda.ok() && Validate(pda->grid()).ok(),
                absl::StrFormat("mn(%d,%d) invalid", caches, t));
      if (!pda.ok()) continue;
      o.Require(pda->rows() == Binomial(caches, t) &&
                    pda->stars() == Binomial(caches - 1, t - 1) &&
                    pda->max_int() == Binomial(caches, t + 1),
                absl::StrFormat("mn(%d,%d) parameters", caches, t));
      std::map<int, int> count;
      for (const auto& row : pda->grid()) {
        for (PdaEntry e : row) {
          if (!e.is_star()) ++count[e.value()];
        }
      }
      for (const auto& [s, c] : count) {
        o.Require(c == t + 1, absl::StrFormat("mn(%d,%d) integer %d appears %d "
                                              "times",
                                              caches, t, s, c));
      }
      ++tested;
    }
  }
  if (o.pass) {
    o.detail = absl::StrFormat(
        "%d (L,t) pairs: F, Z, S are binomials and every integer appears t+1 "
        "times",
        tested);
  }
  return o;
}

// ------------------------------------------------------------------ 8

Outcome Bounds() {
  Outcome o;
  std::mt19937_64 rng(88);
  int points = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int caches = 2 + static_cast<int>(rng() % 7);
    std::vector<int> profile(caches);
    for (int& l : profile) l = static_cast<int>(rng() % 6);
    std::sort(profile.rbegin(), profile.rend());
    if (profile[0] == 0) profile[0] = 1;
    int k = 0;
    for (int l : profile) k += l;
    const int n = 2 * k + static_cast<int>(rng() % 8);
    std::vector<NamedPda> pdas = *MnPdaFamily(caches);
    if (caches == 6) pdas.push_back({"example", *ParsePda(testing::kExamplePdaText)});
    absl::StatusOr<std::vector<SweepPoint>> sweep = Sweep(n, profile, pdas);
    o.Require(sweep.ok(), "sweep failed");
    if (!sweep.ok()) break;
    for (const SweepPoint& p : *sweep) {
      const Rational ratio = p.rate_achievable / p.rate_lower_bound;
      o.Require(p.rate_lower_bound >= Rational(profile[0]),
                absl::StrFormat("bound below L1 at %s", p.pda_id));
      o.Require(ratio >= Rational(1) && ratio <= Rational(caches) &&
                    ratio <= Rational(k, profile[0]),
                absl::StrFormat("ratio %s at %s", ToFractionString(ratio),
                                p.pda_id));
      ++points;
    }
  }
  // The general term at M_U = 1 against the simplified form, written out.
  int symbolic = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + static_cast<int>(rng() % 60);
    const int s = 1 + static_cast<int>(rng() % (n / 2));
    const int lambda = 1 + static_cast<int>(rng() % 8);
    const Rational m(static_cast<long>(rng() % 50), 1 + static_cast<long>(rng() % 7));
    const int q = n / s;
    const Rational simplified =
        Rational(s) - Rational(lambda - 1) * m / Rational(q - 1);
    o.Require(CutsetTerm(s, lambda, n, m, Rational(1)) == simplified &&
                  CutsetTermUnitUserMemory(s, lambda, n, m) == simplified,
              absl::StrFormat("term mismatch at N=%d s=%d", n, s));
    ++symbolic;
  }
  if (o.pass) {
    o.detail = absl::StrFormat(
        "%d sweep points with N >= 2K: bound >= L1, 1 <= ratio <= min(L, "
        "K/L1); general term equals the unit-user-memory form at %d points",
        points, symbolic);
  }
  return o;
}

// ------------------------------------------------------------------ 9

Outcome Baseline() {
  Outcome o;
  int tested = 0;
  for (int k : {1, 2, 5, 21}) {
    for (int n : {1, 3, 8}) {
      SystemConfig config{.num_caches = 3,
                          .num_users = k,
                          .helper_memory = 0,
                          .num_files = n,
                          .file_bytes = 13,
                          .seed = static_cast<std::uint64_t>(k * 100 + n)};
      absl::StatusOr<Library> lib = SyntheticLibrary(n, 13, k + n);
      std::vector<int> d(k);
      for (int u = 0; u < k; ++u) d[u] = (u * 5) % n;
      absl::StatusOr<BaselineSession> b = RunBaselineM0(config, *lib, d);
      o.Require(b.ok() && b->rate == Rational(k) &&
                    static_cast<int>(b->transmissions.size()) == k,
                absl::StrFormat("K=%d N=%d rate", k, n));
      if (!b.ok()) continue;
      const GaloisField field(config.field);
      for (int u = 0; u < k; ++u) {
        absl::StatusOr<std::vector<std::uint8_t>> w = DecodeBaseline(u, *b);
        o.Require(w.ok() && *w == lib->files[d[u]], "baseline decode");
        const std::vector<int> others = FilesOtherThan(n, d[u]);
        if (!others.empty()) {
          o.Require(CheckZeroInformation(BuildBaselineModel(*b, u), field,
                                         others)
                        .holds,
                    "baseline user secrecy");
        }
      }
      o.Require(CheckZeroInformation(BuildBaselineModel(*b, -1), field,
                                     AllFiles(n))
                    .holds,
                "baseline eavesdropper secrecy");
      ++tested;
    }
  }
  if (o.pass) {
    o.detail = absl::StrFormat(
        "%d configurations: rate = K, every user decodes, secrecy holds",
        tested);
  }
  return o;
}

// ----------------------------------------------------------------- 10

Outcome Subpacketization() {
  Outcome o;
  const std::vector<int> profile = testing::ExampleLoads();  // K = 21
  std::vector<NamedPda> pdas = *MnPdaFamily(6);
  pdas.push_back({"imported", *ParsePda(testing::kExamplePdaText)});
  absl::StatusOr<std::vector<SweepPoint>> sweep = Sweep(42, profile, pdas);
  o.Require(sweep.ok(), "sweep failed");
  if (!sweep.ok()) return o;
  std::vector<std::string> shared;
  for (const SweepPoint& p : *sweep) {
    o.Require(p.subpacketization >= 1, "missing F");
    o.Require(p.rate_achievable >= p.rate_lower_bound, "rate below bound");
    if (p.pda_id != "imported") continue;
    bool found = false;
    for (const SweepPoint& q : *sweep) {
      if (q.memory != p.memory || q.pda_id.rfind("mn:", 0) != 0) continue;
      found = true;
      o.Require(p.subpacketization < q.subpacketization,
                "imported F is not smaller");
      shared.push_back(absl::StrFormat(
          "M=%s imported F=%d rate %s vs %s F=%d rate %s",
          ToDecimalString(p.memory), p.subpacketization,
          ToDecimalString(p.rate_achievable), q.pda_id, q.subpacketization,
          ToDecimalString(q.rate_achievable)));
    }
    o.Require(found, "no M shared by the imported PDA and an MN PDA");
  }
  o.Require(!shared.empty(), "imported PDA missing from the sweep");
  if (o.pass) {
    o.detail = absl::StrFormat("%d sweep rows with F; %s", sweep->size(),
                               absl::StrJoin(shared, "; "));
  }
  return o;
}

int Main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  Outcome gen;
  std::vector<Instance> random_cases;
  auto cases = [&]() -> const std::vector<Instance>& {
    if (random_cases.empty()) random_cases = RandomInstances(200, 2222, gen);
    return random_cases;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked example regression", WorkedExample},
      {2, "rate formula equivalence",
       [&] {
         const auto& c = cases();
         return gen.pass ? RateEquivalence(c) : gen;
       }},
      {3, "uniform profile closed form", UniformCorollary},
      {4, "decodability", Decodability},
      {5, "secrecy suite",
       [&] {
         const auto& c = cases();
         return gen.pass ? SecrecySuite(c) : gen;
       }},
      {6, "secret sharing property", SecretSharing},
      {7, "MN PDA parameters", MnParameters},
      {8, "cut-set bound and optimality gap", Bounds},
      {9, "M = 0 baseline", Baseline},
      {10, "subpacketization comparison", Subpacketization},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    const Outcome o = c.run();
    const double s =
        std::chrono::duration<double>(Clock::now() - start).count();
    failed += !o.pass;
    std::cout << absl::StrFormat("%s  %2d  %s: %s [%.2fs]\n",
                                 o.pass ? "PASS" : "FAIL", c.id, c.name,
                                 o.detail, s);
  }
  std::cout << absl::StrFormat("%d/%d criteria passed\n",
                               criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace sccpda

int main() { return sccpda::Main(); }
