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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/escaping.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "sccpda/bounds.h"
#include "sccpda/gf.h"
#include "sccpda/mds.h"
#include "sccpda/rational.h"
#include "sccpda/secrecy.h"

#ifndef SCCPDA_VERSION
#define SCCPDA_VERSION "dev"
#endif

namespace sccpda::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr char kManifestFile[] = "manifest.json";
constexpr char kTransmissionsFile[] = "transmissions.log";
constexpr char kDecodeFile[] = "decode.txt";
constexpr char kRateFile[] = "rate.json";
constexpr char kGArrayFile[] = "g_array.txt";
constexpr std::size_t kLoggedPayloadBytes = 64;

// Runs fn(0..n-1) on a small worker pool. fn must only touch its own slot.
void ParallelFor(int n, const std::function<void(int)>& fn) {
  const int workers = std::clamp(
      static_cast<int>(std::thread::hardware_concurrency()), 1, std::max(n, 1));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

absl::StatusOr<std::string> ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot read ", path.string()));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

absl::Status WriteFile(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << data;
  out.close();
  if (!out) {
    return absl::InternalError(absl::StrCat("cannot write ", path.string()));
  }
  return absl::OkStatus();
}

std::string JoinOneBased(const std::vector<int>& v) {
  return absl::StrJoin(v, ",", [](std::string* out, int x) {
    absl::StrAppend(out, x + 1);
  });
}

std::string RateString(const Rational& r) {
  if (r.denominator() == 1) return ToFractionString(r);
  return absl::StrCat(ToFractionString(r), " (", ToDecimalString(r), ")");
}

int Fail(std::ostream& err, const absl::Status& s) {
  err << "error: " << s.message() << "\n";
  return kExitUsage;
}

// Users handed out from either per-cache loads or an explicit list.
absl::StatusOr<std::vector<int>> ResolveAssignment(
    const std::string& profile, const std::string& assignment,
    std::vector<int>* loads) {
  if (profile.empty() == assignment.empty()) {
    return absl::InvalidArgumentError(
        "give exactly one of --profile and --assignment");
  }
  if (!profile.empty()) {
    absl::StatusOr<std::vector<int>> l = ParseIntList(profile);
    if (!l.ok()) return l.status();
    std::vector<int> out;
    for (std::size_t c = 0; c < l->size(); ++c) {
      if ((*l)[c] < 0) {
        return absl::InvalidArgumentError("profile entries must be >= 0");
      }
      out.insert(out.end(), (*l)[c], static_cast<int>(c));
    }
    if (out.empty()) return absl::InvalidArgumentError("profile has no users");
    *loads = *std::move(l);
    return out;
  }
  absl::StatusOr<std::vector<int>> a = ParseIntList(assignment);
  if (!a.ok()) return a.status();
  for (int& c : *a) --c;
  return a;
}

absl::StatusOr<std::vector<int>> ResolveDemands(const std::string& spec,
                                                int num_users, int num_files) {
  if (spec == "worst-case") return WorstCaseDemands(num_users, num_files);
  absl::StatusOr<std::vector<int>> d = ParseIntList(spec);
  if (!d.ok()) return d.status();
  for (int& x : *d) --x;
  if (absl::Status s = ValidateDemands(*d, num_users, num_files); !s.ok()) {
    return s;
  }
  return d;
}

std::uint64_t LibrarySeed(std::uint64_t seed) {
  return seed ^ 0x6c69627261727921ULL;
}

// ---------------------------------------------------------------- pda

struct PdaArgs {
  std::string path;
  std::string source;
  std::string profile;
  int lambda = 0;
  int t = 0;
  std::string out;
};

int CmdPdaValidate(const PdaArgs& a, std::ostream& out, std::ostream& err) {
  absl::StatusOr<std::string> text = ReadFile(a.path);
  if (!text.ok()) return Fail(err, text.status());
  absl::StatusOr<Pda> pda = ParsePda(*text);
  if (!pda.ok()) {
    out << pda.status().message() << "\n";
    return kExitCheckFailed;
  }
  const PdaParams& p = pda->params();
  out << absl::StrFormat("valid: \xCE\x9B=%d F=%d Z=%d S=%d\n", p.num_caches,
                         p.rows, p.stars, p.max_int);
  return kExitOk;
}

int CmdPdaMn(const PdaArgs& a, std::ostream& out, std::ostream& err) {
  absl::StatusOr<Pda> pda = MnPda(a.lambda, a.t);
  if (!pda.ok()) return Fail(err, pda.status());
  const std::string text = FormatPda(*pda);
  if (a.out.empty()) {
    out << text;
    return kExitOk;
  }
  if (absl::Status s = WriteFile(a.out, text); !s.ok()) return Fail(err, s);
  return kExitOk;
}

int CmdPdaShow(const PdaArgs& a, std::ostream& out, std::ostream& err) {
  absl::StatusOr<Pda> pda = LoadPdaSource(a.source);
  if (!pda.ok()) return Fail(err, pda.status());
  const PdaParams& p = pda->params();
  out << absl::StrFormat("\xCE\x9B=%d F=%d Z=%d S=%d Z/F=%s\n", p.num_caches,
                         p.rows, p.stars, p.max_int,
                         ToFractionString(p.memory_ratio()));
  out << FormatPda(*pda);
  std::vector<std::string> tau;
  for (int s = 1; s <= p.max_int; ++s) {
    tau.push_back(absl::StrCat(s, "->", pda->Tau(s) + 1));
  }
  out << "first column of each integer: " << absl::StrJoin(tau, " ") << "\n";
  if (a.profile.empty()) return kExitOk;
  std::vector<int> loads;
  absl::StatusOr<std::vector<int>> users =
      ResolveAssignment(a.profile, "", &loads);
  if (!users.ok()) return Fail(err, users.status());
  absl::StatusOr<Association> assoc = Associate(p.num_caches, *users);
  if (!assoc.ok()) return Fail(err, assoc.status());
  absl::StatusOr<GArray> g =
      BuildGArray(*pda, *assoc);
  if (!g.ok()) return Fail(err, g.status());
  out << "G transpose (one line per user):\n" << g->ToTransposeString();
  return kExitOk;
}

// ----------------------------------------------------------- simulate

struct SimulateArgs {
  std::string pda;
  std::string profile;
  std::string assignment;
  int files = 0;
  std::size_t bytes = 1024;
  int field = 8;
  std::uint64_t seed = 1;
  std::string demands = "worst-case";
  std::string library;
  std::string out;
  bool strip_pads = false;
  bool full_payloads = false;
};

std::string RateJson(const RateReport& r, const Association& a) {
  Json j;
  j["transmissions"] = r.num_transmissions;
  j["rate"] = ToFractionString(r.rate);
  j["rate_decimal"] = ToDecimalString(r.rate);
  j["subpacketization"] = r.subpacketization;
  j["per_integer_multiplicity"] = r.per_s_multiplicity;
  j["profile"] = a.profile;
  std::vector<int> order;
  for (int c : a.cache_order) order.push_back(c + 1);
  j["cache_order"] = order;
  return j.dump(2) + "\n";
}

struct DecodeResult {
  bool ok = false;
  std::string detail;
};

std::vector<DecodeResult> DecodeAll(const BuiltRun& run) {
  const Session& s = run.session;
  std::vector<DecodeResult> results(s.config.num_users);
  ParallelFor(s.config.num_users, [&](int k) {
    absl::StatusOr<std::vector<std::uint8_t>> w = Decode(k, s);
    if (!w.ok()) {
      results[k] = {false, std::string(w.status().message())};
    } else if (*w != run.library.files[s.demands[k]]) {
      results[k] = {false, "recovered bytes differ from the requested file"};
    } else {
      results[k] = {true, ""};
    }
  });
  return results;
}

int CmdSimulate(const SimulateArgs& a, const std::string& command_line,
                std::ostream& out, std::ostream& err) {
  RunManifest m;
  m.version = SCCPDA_VERSION;
  m.command_line = command_line;
  m.seed = a.seed;
  m.pda_source = a.pda;
  absl::StatusOr<Pda> pda = LoadPdaSource(a.pda);
  if (!pda.ok()) return Fail(err, pda.status());
  m.pda_text = FormatPda(*pda);
  absl::StatusOr<std::vector<int>> users =
      ResolveAssignment(a.profile, a.assignment, &m.profile);
  if (!users.ok()) return Fail(err, users.status());
  m.assignment = *users;
  m.num_files = a.files;
  m.file_bytes = a.bytes;
  absl::StatusOr<FieldSpec> field = FieldSpec::ForBits(a.field);
  if (!field.ok()) return Fail(err, field.status());
  m.field_bits = field->bits();
  m.field_polynomial = field->polynomial();
  m.library_dir = a.library;
  if (!a.library.empty()) {
    absl::StatusOr<Library> lib = LoadLibrary(a.library);
    if (!lib.ok()) return Fail(err, lib.status());
    if (a.files != 0 && a.files != static_cast<int>(lib->files.size())) {
      return Fail(err, absl::InvalidArgumentError(absl::StrFormat(
                           "--files %d but the library holds %d files",
                           a.files, lib->files.size())));
    }
    m.num_files = static_cast<int>(lib->files.size());
    m.file_bytes = lib->file_bytes();
  }
  m.demand_spec = a.demands;
  absl::StatusOr<std::vector<int>> demands = ResolveDemands(
      a.demands, static_cast<int>(m.assignment.size()), m.num_files);
  if (!demands.ok()) return Fail(err, demands.status());
  m.demands = *demands;
  m.strip_pads = a.strip_pads;
  m.full_payloads = a.full_payloads;

  absl::StatusOr<BuiltRun> run = BuildRun(m, /*deliver=*/true);
  if (!run.ok()) return Fail(err, run.status());
  const Session& s = run->session;
  absl::StatusOr<RateReport> rate = ComputeRate(s.pda, s.association.profile);
  if (!rate.ok()) return Fail(err, rate.status());
  const std::vector<DecodeResult> decoded = DecodeAll(*run);

  std::string decode_text;
  int ok = 0;
  for (int k = 0; k < s.config.num_users; ++k) {
    ok += decoded[k].ok;
    absl::StrAppendFormat(&decode_text, "user %d cache %d file %d %s", k + 1,
                          s.association.user_to_cache[k] + 1,
                          s.demands[k] + 1, decoded[k].ok ? "PASS" : "FAIL");
    if (!decoded[k].ok) absl::StrAppend(&decode_text, " ", decoded[k].detail);
    decode_text += "\n";
  }

  std::error_code ec;
  fs::create_directories(a.out, ec);
  if (ec) {
    return Fail(err, absl::InternalError(
                         absl::StrCat("cannot create ", a.out, ": ",
                                      ec.message())));
  }
  const fs::path dir(a.out);
  for (const auto& [name, data] :
       std::vector<std::pair<std::string, std::string>>{
           {kManifestFile, ManifestToJson(m)},
           {kTransmissionsFile, TransmissionLog(s, m.full_payloads)},
           {kDecodeFile, decode_text},
           {kRateFile, RateJson(*rate, s.association)},
           {kGArrayFile, s.g.ToTransposeString()}}) {
    if (absl::Status st = WriteFile(dir / name, data); !st.ok()) {
      return Fail(err, st);
    }
  }

  out << absl::StrFormat("profile: %s (cache order %s)\n",
                         absl::StrJoin(s.association.profile, ","),
                         JoinOneBased(s.association.cache_order));
  out << "transmissions: " << s.transmissions.size() << "\n";
  out << "subpacketization: " << rate->subpacketization << "\n";
  out << "rate: " << RateString(rate->rate) << "\n";
  out << absl::StrFormat("decoded: %d/%d\n", ok, s.config.num_users);
  out << "run directory: " << a.out << "\n";
  return ok == s.config.num_users ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------- verify

struct VerifyArgs {
  std::string dir;
  bool strip_pads = false;
  std::string scope = "delivery";
  std::size_t positions = 1;
};

struct CheckLine {
  std::string label;
  bool pass = true;
  std::string detail;
};

CheckLine SecrecyLine(std::string label, const LinearObservationModel& model,
                      const GaloisField& field,
                      std::span<const int> protected_files) {
  const SecrecyVerdict v = CheckZeroInformation(model, field, protected_files);
  return CheckLine{std::move(label), v.holds,
                   v.holds ? "" : DescribeWitness(model, v)};
}

int CmdVerify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const fs::path dir(a.dir);
  const bool delivery = a.scope == "delivery";
  absl::StatusOr<std::string> manifest_text = ReadFile(dir / kManifestFile);
  if (!manifest_text.ok()) {
    return Fail(err, absl::NotFoundError(absl::StrCat(
                         "missing artifact ", kManifestFile, " in ", a.dir)));
  }
  std::optional<std::string> recorded_log;
  if (delivery) {
    for (const char* name : {kTransmissionsFile, kDecodeFile, kRateFile}) {
      if (!fs::exists(dir / name)) {
        return Fail(err, absl::NotFoundError(absl::StrCat(
                             "missing artifact ", name, " in ", a.dir)));
      }
    }
    absl::StatusOr<std::string> log = ReadFile(dir / kTransmissionsFile);
    if (!log.ok()) return Fail(err, log.status());
    recorded_log = *std::move(log);
  }
  absl::StatusOr<RunManifest> m = ManifestFromJson(*manifest_text);
  if (!m.ok()) return Fail(err, m.status());
  const bool sabotaged = a.strip_pads && !m->strip_pads;
  m->strip_pads = m->strip_pads || a.strip_pads;
  absl::StatusOr<BuiltRun> run = BuildRun(*m, delivery);
  if (!run.ok()) return Fail(err, run.status());
  const Session& s = run->session;
  const GaloisField field(s.config.field);
  const int n = s.config.num_files;
  const int k_users = s.config.num_users;
  const std::size_t pos = a.positions;

  std::vector<CheckLine> lines;
  if (delivery) {
    if (sabotaged) {
      lines.push_back({"transmission log replay", true,
                       "skipped: pads stripped for this check"});
    } else {
      const bool same = TransmissionLog(s, m->full_payloads) == *recorded_log;
      lines.push_back({"transmission log replay", same,
                       same ? "" : "rebuilt log differs from the recorded one"});
    }
  }
  std::vector<CheckLine> per_cache(s.config.num_caches);
  ParallelFor(s.config.num_caches, [&](int c) {
    per_cache[c] =
        SecrecyLine(absl::StrFormat("cache %d helper-cache secrecy", c + 1),
                    BuildHelperCacheModel(s, c, pos), field, AllFiles(n));
  });
  lines.insert(lines.end(), per_cache.begin(), per_cache.end());

  std::vector<std::vector<CheckLine>> per_user(k_users);
  ParallelFor(k_users, [&](int k) {
    auto& u = per_user[k];
    if (delivery) {
      absl::StatusOr<std::vector<std::uint8_t>> w = Decode(k, s);
      const bool ok = w.ok() && *w == run->library.files[s.demands[k]];
      u.push_back({absl::StrFormat("user %d decode", k + 1), ok,
                   ok ? ""
                   : w.ok() ? "recovered bytes differ from the requested file"
                            : std::string(w.status().message())});
    }
    u.push_back(SecrecyLine(
        absl::StrFormat("user %d placement secrecy", k + 1),
        BuildObservationModel(s, k, ObservationScope::kCachesOnly, pos), field,
        AllFiles(n)));
    if (delivery) {
      u.push_back(SecrecyLine(
          absl::StrFormat("user %d delivery secrecy", k + 1),
          BuildObservationModel(s, k, ObservationScope::kCachesPlusDelivery,
                                pos),
          field, FilesOtherThan(n, s.demands[k])));
    }
  });
  for (auto& u : per_user) lines.insert(lines.end(), u.begin(), u.end());
  if (delivery) {
    lines.push_back(SecrecyLine("eavesdropper secrecy",
                                BuildEavesdropperModel(s, pos), field,
                                AllFiles(n)));
  }

  int failed = 0;
  for (const CheckLine& l : lines) {
    failed += !l.pass;
    out << l.label << ": " << (l.pass ? "PASS" : "FAIL");
    if (!l.detail.empty()) out << " (" << l.detail << ")";
    out << "\n";
  }
  if (failed == 0) {
    out << absl::StrFormat("all %d checks passed\n", lines.size());
    return kExitOk;
  }
  out << absl::StrFormat("%d of %d checks failed\n", failed, lines.size());
  return kExitCheckFailed;
}

// ------------------------------------------------------ rate / bound

struct RateArgs {
  std::string pda;
  std::string profile;
  std::string assignment;
};

int CmdRate(const RateArgs& a, std::ostream& out, std::ostream& err) {
  absl::StatusOr<Pda> pda = LoadPdaSource(a.pda);
  if (!pda.ok()) return Fail(err, pda.status());
  std::vector<int> loads;
  absl::StatusOr<std::vector<int>> users =
      ResolveAssignment(a.profile, a.assignment, &loads);
  if (!users.ok()) return Fail(err, users.status());
  absl::StatusOr<Association> assoc = Associate(pda->num_caches(), *users);
  if (!assoc.ok()) return Fail(err, assoc.status());
  absl::StatusOr<RateReport> r =
      ComputeRate(*pda, assoc->profile);
  if (!r.ok()) return Fail(err, r.status());
  out << absl::StrFormat("profile: %s (cache order %s)\n",
                         absl::StrJoin(assoc->profile, ","),
                         JoinOneBased(assoc->cache_order));
  out << "transmissions: " << r->num_transmissions << "\n";
  out << "per-integer multiplicity: "
      << absl::StrJoin(r->per_s_multiplicity, ",") << "\n";
  out << "subpacketization: " << r->subpacketization << "\n";
  out << "rate: " << RateString(r->rate) << "\n";
  return kExitOk;
}

struct BoundArgs {
  std::string profile;
  int files = 0;
  std::string memory;
  std::string user_memory = "1";
  std::string pda;
};

absl::StatusOr<std::vector<int>> SortedProfile(const std::string& text) {
  absl::StatusOr<std::vector<int>> p = ParseIntList(text);
  if (!p.ok()) return p.status();
  std::sort(p->rbegin(), p->rend());
  return p;
}

int CmdBound(const BoundArgs& a, std::ostream& out, std::ostream& err) {
  absl::StatusOr<std::vector<int>> profile = SortedProfile(a.profile);
  if (!profile.ok()) return Fail(err, profile.status());
  if (a.memory.empty() == a.pda.empty()) {
    return Fail(err, absl::InvalidArgumentError(
                         "give exactly one of --memory and --pda"));
  }
  BoundQuery q{.num_files = a.files, .profile = *profile};
  if (!ParseRational(a.user_memory, &q.user_memory)) {
    return Fail(err, absl::InvalidArgumentError("bad --user-memory"));
  }
  std::optional<Pda> pda;
  if (!a.pda.empty()) {
    absl::StatusOr<Pda> p = LoadPdaSource(a.pda);
    if (!p.ok()) return Fail(err, p.status());
    pda = *std::move(p);
    q.helper_memory = MemoryForPda(pda->params(), a.files);
  } else if (!ParseRational(a.memory, &q.helper_memory)) {
    return Fail(err, absl::InvalidArgumentError("bad --memory"));
  }
  absl::StatusOr<BoundResult> b = CutsetBound(q);
  if (!b.ok()) return Fail(err, b.status());
  out << "M: " << RateString(q.helper_memory) << "\n";
  out << "lower bound: " << RateString(b->value);
  if (b->best_s > 0) out << " (attained at s=" << b->best_s << ")";
  out << "\n";
  if (!b->note.empty()) out << "note: " << b->note << "\n";
  if (!pda.has_value()) return kExitOk;
  if (q.user_memory != Rational(1)) {
    return Fail(err, absl::InvalidArgumentError(
                         "the rate comparison needs --user-memory 1"));
  }
  absl::StatusOr<OptimalityReport> r =
      OptimalityRatio(*pda, a.files, *profile);
  if (!r.ok()) return Fail(err, r.status());
  out << "achievable rate: " << RateString(r->rate) << "\n";
  out << "ratio: " << RateString(r->ratio) << "\n";
  int k = 0;
  for (int l : *profile) k += l;
  if (!r->in_regime) {
    out << "note: N < 2K, outside the regime with a guaranteed factor\n";
    return kExitOk;
  }
  const bool within = r->ratio >= Rational(1) &&
                      r->ratio <= Rational(pda->num_caches()) &&
                      r->ratio <= Rational(k, profile->front());
  out << "within factor: " << (within ? "PASS" : "FAIL") << "\n";
  return within ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------- sweep

struct SweepArgs {
  std::string profile;
  int lambda = 0;
  int users = 0;
  int files = 0;
  std::vector<std::string> pdas;
  int sharing = 0;
  std::string out;
};

// K users over L caches as evenly as possible, heavier caches first.
std::vector<int> EvenProfile(int caches, int users) {
  std::vector<int> p(caches, users / caches);
  for (int c = 0; c < users % caches; ++c) ++p[c];
  return p;
}

int CmdSweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<int> profile;
  if (!a.profile.empty()) {
    absl::StatusOr<std::vector<int>> p = SortedProfile(a.profile);
    if (!p.ok()) return Fail(err, p.status());
    profile = *std::move(p);
    if (a.lambda != 0 && a.lambda != static_cast<int>(profile.size())) {
      return Fail(err, absl::InvalidArgumentError(
                           "--lambda disagrees with the profile length"));
    }
  } else if (a.lambda > 0 && a.users > 0) {
    profile = EvenProfile(a.lambda, a.users);
  } else {
    return Fail(err, absl::InvalidArgumentError(
                         "give --profile, or --lambda with --users"));
  }
  absl::StatusOr<std::vector<NamedPda>> pdas =
      MnPdaFamily(static_cast<int>(profile.size()));
  if (!pdas.ok()) return Fail(err, pdas.status());
  for (const std::string& src : a.pdas) {
    absl::StatusOr<Pda> p = LoadPdaSource(src);
    if (!p.ok()) return Fail(err, p.status());
    pdas->push_back({src, *std::move(p)});
  }
  absl::StatusOr<std::vector<SweepPoint>> points =
      Sweep(a.files, profile, *pdas);
  if (!points.ok()) return Fail(err, points.status());
  if (a.sharing > 0) {
    absl::StatusOr<std::vector<SweepPoint>> extra = MemorySharingPoints(
        LowerConvexEnvelope(*points), a.sharing, a.files, profile);
    if (!extra.ok()) return Fail(err, extra.status());
    points->insert(points->end(), extra->begin(), extra->end());
    std::stable_sort(points->begin(), points->end(),
                     [](const SweepPoint& x, const SweepPoint& y) {
                       return x.memory < y.memory;
                     });
  }
  bool dominated = true;
  for (const SweepPoint& p : *points) {
    dominated = dominated && p.rate_achievable >= p.rate_lower_bound;
  }
  const std::string csv = FormatSweepCsv(*points);
  if (a.out.empty()) {
    out << csv;
  } else if (absl::Status s = WriteFile(a.out, csv); !s.ok()) {
    return Fail(err, s);
  }
  if (!dominated) {
    err << "a sweep point has rate below the lower bound\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

absl::StatusOr<Pda> LoadPdaSource(const std::string& source) {
  if (source.empty()) return absl::InvalidArgumentError("no PDA given");
  if (absl::StartsWith(source, "mn:")) {
    std::vector<std::string> parts =
        absl::StrSplit(absl::string_view(source).substr(3), ',');
    int lambda = 0, t = 0;
    if (parts.size() != 2 || !absl::SimpleAtoi(parts[0], &lambda) ||
        !absl::SimpleAtoi(parts[1], &t)) {
      return absl::InvalidArgumentError(
          absl::StrCat("expected mn:L,t, got '", source, "'"));
    }
    return MnPda(lambda, t);
  }
  absl::StatusOr<std::string> text = ReadFile(source);
  if (!text.ok()) return text.status();
  absl::StatusOr<Pda> pda = ParsePda(*text);
  if (!pda.ok()) {
    return absl::Status(pda.status().code(),
                        absl::StrCat(source, ": ", pda.status().message()));
  }
  return pda;
}

absl::StatusOr<std::vector<int>> ParseIntList(const std::string& text) {
  std::vector<int> out;
  for (absl::string_view part : absl::StrSplit(text, ',')) {
    int v = 0;
    if (!absl::SimpleAtoi(part, &v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("expected comma-separated integers, got '", text, "'"));
    }
    out.push_back(v);
  }
  return out;
}

std::string ManifestToJson(const RunManifest& m) {
  Json j;
  j["tool"] = "sccpda";
  j["version"] = m.version;
  j["command_line"] = m.command_line;
  j["seed"] = m.seed;
  j["pda"] = {{"source", m.pda_source}, {"text", m.pda_text}};
  j["profile"] = m.profile;
  std::vector<int> assignment;
  for (int c : m.assignment) assignment.push_back(c + 1);
  j["assignment"] = assignment;
  j["num_files"] = m.num_files;
  j["file_bytes"] = m.file_bytes;
  j["field"] = {{"bits", m.field_bits},
                {"polynomial", absl::StrFormat("0x%x", m.field_polynomial)}};
  std::vector<int> demands;
  for (int d : m.demands) demands.push_back(d + 1);
  j["demands"] = {{"spec", m.demand_spec}, {"resolved", demands}};
  if (m.library_dir.empty()) {
    j["library"] = {{"kind", "synthetic"}, {"seed", LibrarySeed(m.seed)}};
  } else {
    j["library"] = {{"kind", "directory"}, {"path", m.library_dir}};
  }
  j["strip_pads"] = m.strip_pads;
  j["full_payloads"] = m.full_payloads;
  j["outputs"] = {kManifestFile, kTransmissionsFile, kDecodeFile, kRateFile,
                  kGArrayFile};
  return j.dump(2) + "\n";
}

absl::StatusOr<RunManifest> ManifestFromJson(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    RunManifest m;
    m.version = j.at("version").get<std::string>();
    m.command_line = j.at("command_line").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.pda_source = j.at("pda").at("source").get<std::string>();
    m.pda_text = j.at("pda").at("text").get<std::string>();
    m.profile = j.at("profile").get<std::vector<int>>();
    m.assignment = j.at("assignment").get<std::vector<int>>();
    for (int& c : m.assignment) --c;
    m.num_files = j.at("num_files").get<int>();
    m.file_bytes = j.at("file_bytes").get<std::size_t>();
    m.field_bits = j.at("field").at("bits").get<int>();
    const std::string poly = j.at("field").at("polynomial").get<std::string>();
    std::size_t used = 0;
    m.field_polynomial = static_cast<std::uint32_t>(std::stoul(poly, &used, 16));
    if (used != poly.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("manifest: bad polynomial ", poly));
    }
    m.demand_spec = j.at("demands").at("spec").get<std::string>();
    m.demands = j.at("demands").at("resolved").get<std::vector<int>>();
    for (int& d : m.demands) --d;
    const Json& lib = j.at("library");
    if (lib.at("kind").get<std::string>() == "directory") {
      m.library_dir = lib.at("path").get<std::string>();
    }
    m.strip_pads = j.at("strip_pads").get<bool>();
    m.full_payloads = j.at("full_payloads").get<bool>();
    return m;
  } catch (const std::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("manifest: ", e.what()));
  }
}

absl::StatusOr<BuiltRun> BuildRun(const RunManifest& m, bool deliver) {
  absl::StatusOr<Pda> pda = ParsePda(m.pda_text);
  if (!pda.ok()) return pda.status();
  absl::StatusOr<FieldSpec> field =
      FieldSpec::Create(m.field_bits, m.field_polynomial);
  if (!field.ok()) return field.status();
  absl::StatusOr<Association> assoc =
      Associate(pda->num_caches(), m.assignment);
  if (!assoc.ok()) return assoc.status();
  absl::StatusOr<Library> lib =
      m.library_dir.empty()
          ? SyntheticLibrary(m.num_files, m.file_bytes, LibrarySeed(m.seed))
          : LoadLibrary(m.library_dir);
  if (!lib.ok()) return lib.status();
  SystemConfig config{.num_caches = pda->num_caches(),
                      .num_users = static_cast<int>(m.assignment.size()),
                      .helper_memory = MemoryForPda(pda->params(), m.num_files),
                      .num_files = m.num_files,
                      .file_bytes = m.file_bytes,
                      .field = *field,
                      .seed = m.seed};
  absl::StatusOr<Session> s = PlaceSession(*pda, config, *assoc, *lib);
  if (!s.ok()) return s.status();
  if (deliver) {
    if (absl::Status st = DeliverSession(
            *s, m.demands, DeliveryOptions{.strip_pads = m.strip_pads});
        !st.ok()) {
      return st;
    }
  } else {
    s->demands = m.demands;
  }
  return BuiltRun{*std::move(lib), *std::move(s)};
}

std::string TransmissionLog(const Session& session, bool full_payloads) {
  const int bits = session.config.field.bits();
  std::string out;
  for (const Transmission& t : session.transmissions) {
    std::vector<std::string> who;
    for (const Participant& p : t.participants) {
      who.push_back(absl::StrCat(p.user + 1, ":", p.row + 1));
    }
    const std::vector<std::uint8_t> bytes = PackSymbols(t.payload, bits);
    const std::size_t shown =
        full_payloads ? bytes.size() : std::min(bytes.size(), kLoggedPayloadBytes);
    absl::StrAppend(
        &out, ToString(t.pair), "\t", absl::StrJoin(who, " "), "\t",
        absl::BytesToHexString(absl::string_view(
            reinterpret_cast<const char*>(bytes.data()), shown)),
        shown < bytes.size() ? "..." : "", "\n");
  }
  return out;
}

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Secretive coded caching with shared caches"};
  app.set_version_flag("--version", SCCPDA_VERSION);
  app.require_subcommand(1);
  std::function<int()> action;

  PdaArgs pda_args;
  CLI::App* pda = app.add_subcommand("pda", "Validate, build or show a PDA");
  pda->require_subcommand(1);
  CLI::App* validate = pda->add_subcommand("validate", "Check C1 to C3");
  validate->add_option("path", pda_args.path, "PDA text file")->required();
  validate->callback([&] { action = [&] { return CmdPdaValidate(pda_args, out, err); }; });
  CLI::App* mn = pda->add_subcommand("mn", "Print the MN PDA for (L, t)");
  mn->add_option("--lambda", pda_args.lambda, "Number of caches")->required();
  mn->add_option("--t", pda_args.t, "Caches per placement subset")->required();
  mn->add_option("--out", pda_args.out, "Write here instead of stdout");
  mn->callback([&] { action = [&] { return CmdPdaMn(pda_args, out, err); }; });
  CLI::App* show = pda->add_subcommand("show", "Parameters, columns, G array");
  show->add_option("--pda", pda_args.source, "Path or mn:L,t")->required();
  show->add_option("--profile", pda_args.profile, "Users per cache, a,b,c");
  show->callback([&] { action = [&] { return CmdPdaShow(pda_args, out, err); }; });

  SimulateArgs sim;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Place, deliver and decode one run");
  simulate->add_option("--pda", sim.pda, "Path or mn:L,t")->required();
  simulate->add_option("--profile", sim.profile, "Users per cache, a,b,c");
  simulate->add_option("--assignment", sim.assignment,
                       "Cache of every user, 1-based, a,b,c");
  simulate->add_option("--files", sim.files, "Library size N");
  simulate->add_option("--bytes", sim.bytes, "Bytes per file")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--field", sim.field, "Symbol bits l of GF(2^l)")
      ->check(CLI::Range(2, 16));
  simulate->add_option("--seed", sim.seed, "Seed for all randomness");
  simulate->add_option("--demands", sim.demands,
                       "worst-case or 1-based file per user");
  simulate->add_option("--library", sim.library,
                       "Directory of equal-length files (overrides --bytes)");
  simulate->add_option("--out", sim.out, "Run directory")->required();
  simulate->add_flag("--strip-pads", sim.strip_pads,
                     "Send transmissions without one-time pads");
  simulate->add_flag("--full-payloads", sim.full_payloads,
                     "Log whole payloads instead of the first 64 bytes");
  std::string command_line;
  for (int i = 0; i < argc; ++i) {
    absl::StrAppend(&command_line, i ? " " : "", argv[i]);
  }
  simulate->callback([&] {
    action = [&] {
      if (sim.library.empty() && sim.files <= 0) {
        return Fail(err, absl::InvalidArgumentError(
                             "--files is required without --library"));
      }
      return CmdSimulate(sim, command_line, out, err);
    };
  });

  VerifyArgs ver;
  CLI::App* verify =
      app.add_subcommand("verify", "Rebuild a run and check decoding and secrecy");
  verify->add_option("dir", ver.dir, "Run directory")->required();
  verify->add_flag("--strip-pads", ver.strip_pads,
                   "Rebuild with unpadded transmissions");
  verify->add_option("--scope", ver.scope, "placement or delivery")
      ->check(CLI::IsMember({"placement", "delivery"}));
  verify->add_option("--positions", ver.positions,
                     "Symbol positions per share in the secrecy models")
      ->check(CLI::PositiveNumber);
  verify->callback([&] { action = [&] { return CmdVerify(ver, out, err); }; });

  RateArgs rate_args;
  CLI::App* rate = app.add_subcommand("rate", "Achievable secretive rate");
  rate->add_option("--pda", rate_args.pda, "Path or mn:L,t")->required();
  rate->add_option("--profile", rate_args.profile, "Users per cache, a,b,c");
  rate->add_option("--assignment", rate_args.assignment,
                   "Cache of every user, 1-based");
  rate->callback([&] { action = [&] { return CmdRate(rate_args, out, err); }; });

  BoundArgs bound_args;
  CLI::App* bound = app.add_subcommand("bound", "Cut-set lower bound");
  bound->add_option("--profile", bound_args.profile, "Users per cache")
      ->required();
  bound->add_option("--files", bound_args.files, "Library size N")->required();
  bound->add_option("--memory", bound_args.memory, "Helper cache size M");
  bound->add_option("--user-memory", bound_args.user_memory,
                    "User cache size M_U");
  bound->add_option("--pda", bound_args.pda,
                    "Take M from this PDA and compare its rate");
  bound->callback([&] { action = [&] { return CmdBound(bound_args, out, err); }; });

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Rate-memory CSV");
  sweep->add_option("--profile", sweep_args.profile, "Users per cache");
  sweep->add_option("--lambda", sweep_args.lambda, "Number of caches");
  sweep->add_option("--users", sweep_args.users,
                    "Users, spread evenly when no profile is given");
  sweep->add_option("--files", sweep_args.files, "Library size N")->required();
  sweep->add_option("--pda", sweep_args.pdas, "Extra PDA (path or mn:L,t)");
  sweep->add_option("--sharing", sweep_args.sharing,
                    "Memory-sharing points per hull segment");
  sweep->add_option("--out", sweep_args.out, "CSV path instead of stdout");
  sweep->callback([&] { action = [&] { return CmdSweep(sweep_args, out, err); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return action ? action() : kExitUsage;
}

}  // namespace sccpda::cli
