// Copyright 2026 The Authors.
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

#ifndef RAINBOW_SWEEP_H_
#define RAINBOW_SWEEP_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rainbow {

enum class SweepMode { kExhaustive, kRandom, kCycles };

enum class Verdict { kVerified, kCounterexample, kCapExhausted };

struct SweepSpec {
  std::string conjecture;
  std::map<std::string, std::string> params;
  SweepMode mode = SweepMode::kRandom;
  std::uint64_t seed = 1;
  std::int64_t instance_cap = 1000;
  double time_cap_seconds = 0;  // 0 means no limit
  int workers = 1;

  // Parameter lookups; throw InputError on malformed values.
  int Int(const std::string& key, int fallback) const;
  std::vector<int> IntList(const std::string& key, std::vector<int> fallback) const;
  std::string Str(const std::string& key, std::string fallback) const;

  // Throws InputError unless the caps are positive.
  void Validate() const;
};

// One checked instance. `instance` must be enough to replay the check.
struct SweepRecord {
  std::int64_t index = 0;
  bool counterexample = false;
  nlohmann::json instance;
  nlohmann::json witness;
};

struct SweepReport {
  std::string conjecture;
  std::uint64_t seed = 0;
  std::int64_t instances_tested = 0;
  Verdict verdict = Verdict::kVerified;
  std::string range;
  std::optional<SweepRecord> counterexample;
};

const char* VerdictName(Verdict verdict);
SweepMode ParseSweepMode(const std::string& name);
const char* SweepModeName(SweepMode mode);

// Runs check(i) for i = 0..count-1 on spec.workers threads, in rounds so
// that the counterexample with the smallest index wins regardless of
// scheduling. Stops at the first round containing a counterexample, at
// spec.instance_cap instances (which counts as a verified range only when
// the cap reaches `count`, or `count` is unknown), or at the time cap.
// `sink` sees every record in index order. A negative `count` means the
// instance space is unbounded, as in random sweeps.
using InstanceCheck = std::function<SweepRecord(std::int64_t index)>;
using RecordSink = std::function<void(const SweepRecord&)>;
SweepReport RunSweep(const SweepSpec& spec, std::int64_t count,
                     const InstanceCheck& check, const RecordSink& sink = {});

nlohmann::json ToJson(const SweepRecord& record);
nlohmann::json ToJson(const SweepReport& report);

}  // namespace rainbow

#endif  // RAINBOW_SWEEP_H_
