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

#include "rainbow/sweep.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "rainbow/errors.h"

namespace rainbow {
namespace {

int ToInt(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw InputError("parameter '" + key + "' expects an integer, got '" + text +
                     "'");
  }
}

}  // namespace

int SweepSpec::Int(const std::string& key, int fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : ToInt(key, it->second);
}

std::vector<int> SweepSpec::IntList(const std::string& key,
                                    std::vector<int> fallback) const {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  std::vector<int> values;
  std::stringstream stream(it->second);
  std::string token;
  while (std::getline(stream, token, ',')) values.push_back(ToInt(key, token));
  return values;
}

std::string SweepSpec::Str(const std::string& key, std::string fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void SweepSpec::Validate() const {
  if (instance_cap <= 0) throw InputError("instance cap must be positive");
  if (time_cap_seconds < 0) throw InputError("time cap must be positive");
  if (workers <= 0) throw InputError("worker count must be positive");
}

const char* VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kVerified:
      return "verified";
    case Verdict::kCounterexample:
      return "counterexample";
    case Verdict::kCapExhausted:
      return "cap-exhausted";
  }
  return "unknown";
}

SweepMode ParseSweepMode(const std::string& name) {
  if (name == "exhaustive") return SweepMode::kExhaustive;
  if (name == "random") return SweepMode::kRandom;
  if (name == "cycles") return SweepMode::kCycles;
  throw InputError("unknown sweep mode '" + name + "'");
}

const char* SweepModeName(SweepMode mode) {
  switch (mode) {
    case SweepMode::kExhaustive:
      return "exhaustive";
    case SweepMode::kRandom:
      return "random";
    case SweepMode::kCycles:
      return "cycles";
  }
  return "unknown";
}

SweepReport RunSweep(const SweepSpec& spec, std::int64_t count,
                     const InstanceCheck& check, const RecordSink& sink) {
  spec.Validate();
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::int64_t limit =
      count < 0 ? spec.instance_cap : std::min(count, spec.instance_cap);
  const std::int64_t round = std::max<std::int64_t>(1, 32 * spec.workers);

  SweepReport report;
  report.conjecture = spec.conjecture;
  report.seed = spec.seed;
  bool timed_out = false;

  std::vector<SweepRecord> batch;
  for (std::int64_t begin = 0; begin < limit; begin += round) {
    if (spec.time_cap_seconds > 0 &&
        std::chrono::duration<double>(Clock::now() - start).count() >
            spec.time_cap_seconds) {
      timed_out = true;
      break;
    }
    const std::int64_t end = std::min(limit, begin + round);
    batch.assign(end - begin, SweepRecord{});
    std::atomic<std::int64_t> next{begin};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
      for (std::int64_t i = next++; i < end && !failed; i = next++) {
        try {
          batch[i - begin] = check(i);
          batch[i - begin].index = i;
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    };
    const int threads =
        static_cast<int>(std::min<std::int64_t>(spec.workers, end - begin));
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work);
      for (auto& thread : pool) thread.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (auto& record : batch) {
      ++report.instances_tested;
      if (sink) sink(record);
      if (record.counterexample) {
        report.verdict = Verdict::kCounterexample;
        report.counterexample = std::move(record);
        report.range = "instances 0.." + std::to_string(report.instances_tested - 1);
        return report;
      }
    }
  }

  const bool complete = !timed_out && (count < 0 || limit == count);
  report.verdict = complete ? Verdict::kVerified : Verdict::kCapExhausted;
  report.range = report.instances_tested == 0
                     ? "none"
                     : "instances 0.." + std::to_string(report.instances_tested - 1);
  if (count >= 0) report.range += " of " + std::to_string(count);
  return report;
}

nlohmann::json ToJson(const SweepRecord& record) {
  nlohmann::json out = {
      {"instance_id", record.index},
      {"verdict", record.counterexample ? "counterexample" : "verified"},
  };
  if (!record.instance.is_null()) out["instance"] = record.instance;
  if (!record.witness.is_null()) out["witness"] = record.witness;
  return out;
}

nlohmann::json ToJson(const SweepReport& report) {
  nlohmann::json out = {
      {"conjecture", report.conjecture},
      {"seed", report.seed},
      {"instances_tested", report.instances_tested},
      {"verdict", VerdictName(report.verdict)},
      {"range", report.range},
  };
  if (report.counterexample) out["counterexample"] = ToJson(*report.counterexample);
  return out;
}

}  // namespace rainbow
