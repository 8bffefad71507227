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

#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.h"

namespace rainbow::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json Json() const { return nlohmann::json::parse(out); }
};

Result Call(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = Run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(CliTest, HallViolator) {
  const Result r = Call({"hall"}, R"({"ground_size":1,"colors":[[0],[0]]})");
  EXPECT_EQ(r.code, kNoWitness);
  EXPECT_EQ(r.Json()["status"], "violator");
  EXPECT_EQ(r.Json()["colors"], nlohmann::json({0, 1}));
  EXPECT_EQ(r.Json()["seed"], 1);
  EXPECT_TRUE(r.Json().contains("version"));
}

TEST(CliTest, HallAndRadoSuccess) {
  const Result hall = Call({"hall", "--seed", "42"}, R"({"colors":[[0,1],[1,2],[0,2]]})");
  EXPECT_EQ(hall.code, kOk);
  EXPECT_EQ(hall.Json()["status"], "rainbow");
  EXPECT_EQ(hall.Json()["assignment"].size(), 3u);
  EXPECT_EQ(hall.Json()["seed"], 42);
  const Result rado = Call({"rado"}, R"({"colors":[[0],[1]],
                                        "matroid":{"kind":"uniform","k":1,"ground_size":2}})");
  EXPECT_EQ(rado.code, kNoWitness);
  EXPECT_EQ(rado.Json()["colors"], nlohmann::json({0, 1}));
}

TEST(CliTest, LatinSquareOfOrderTwo) {
  const Result r = Call({"latin"}, R"({"latin":[[1,2],[2,1]]})");
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.Json()["size"], 1);
}

TEST(CliTest, WeightedRainbowPath) {
  const std::string instance = R"({"network":{"n":3,"sources":[0],"targets":[2],
      "edges":[[0,1],[1,2],[0,2]]},"weights":[1,1,3],"paths":[[0,1],[2]]})";
  const Result r = Call({"rainbow-path", "--weights", "--bound", "3"}, instance);
  EXPECT_EQ(r.code, kOk);
  EXPECT_LE(r.Json()["weight"].get<int>(), 3);
  EXPECT_FALSE(r.Json()["arcs"].empty());
  EXPECT_EQ(r.Json()["arcs"].size(), r.Json()["colors"].size());
}

TEST(CliTest, OtherSubcommands) {
  EXPECT_EQ(Call({"rainbow-matching"},
                 R"({"graph":{"n":4,"edges":[[0,1],[2,3]]},"colors":[[0],[1]]})")
                .Json()["size"],
            2);
  const Result arrow = Call({"arrow-check", "--a", "2", "--b", "1", "--c", "2"},
                            R"({"graph":{"n":3,"edges":[[0,1],[1,2]]},"colors":[[0],[1]]})");
  EXPECT_EQ(arrow.code, kCounterexample);
  const Result disjoint = Call({"rainbow-paths-disjoint", "--p", "1"},
                              R"({"network":{"n":3,"sources":[0],"targets":[2],
                                  "edges":[[0,1],[1,2],[0,2]]},"colors":[[0,1],[2]]})");
  EXPECT_EQ(disjoint.code, kOk);
  const Result scrambled = Call({"scrambled-path", "--n", "2"},
                                R"({"network":{"n":3,"sources":[0],"targets":[2],
                                    "edges":[[0,1],[1,2]]},"paths":[[0,1],[0,1]],
                                    "scrambling":[[0],[0,1],[1]]})");
  EXPECT_EQ(scrambled.code, kOk);
  const Result odd = Call({"odd-cycle"}, R"({"graph":{"n":3,"edges":[[0,1],[1,2],[2,0]]},
                                            "families":[[0,1,2],[0,1,2],[0,1,2]]})");
  EXPECT_EQ(odd.code, kOk);
  EXPECT_EQ(odd.Json()["length"], 3);
  const Result span = Call({"span-rainbow"}, R"({"matroid":{"kind":"free","ground_size":1},
                                               "families":[[0]],"target":[0]})");
  EXPECT_EQ(span.code, kOk);
}

TEST(CliTest, ErrorCodes) {
  EXPECT_EQ(Call({"hall"}, "{").code, kInputError);
  EXPECT_EQ(Call({"latin"}, R"({"latin":[[1,1],[2,2]]})").code, kInputError);
  EXPECT_EQ(Call({}).code, kInputError);
  EXPECT_EQ(Call({"hall", "--input", "/nonexistent/file.json"}).code, kInputError);
  EXPECT_EQ(Call({"odd-cycle"}, R"({"graph":{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]},
                                    "families":[[0,1,2,3,4],[0,1,2,3,4],[0,1,2,3,4],
                                                [0,1,2,3,4]]})")
                .code,
            kNoWitness);
  EXPECT_EQ(Call({"--help"}).code, kOk);
}

TEST(CliTest, SweepVerdictsAndDeterminism) {
  const std::vector<std::string> args{"sweep", "--conjecture", "drisko", "--param",
                                      "n=2",   "--cap",        "20",     "--seed", "5"};
  const Result first = Call(args);
  EXPECT_EQ(first.code, kOk);
  EXPECT_EQ(first.out, Call(args).out);
  std::istringstream lines(first.out);
  std::string line;
  int count = 0;
  nlohmann::json last;
  while (std::getline(lines, line)) {
    last = nlohmann::json::parse(line);
    ++count;
  }
  EXPECT_EQ(count, 22);
  EXPECT_EQ(last["verdict"], "verified");

  const Result broken = Call({"sweep", "--conjecture", "arrow", "--param", "a=2", "--param",
                              "b=2", "--param", "c=2", "--cap", "100"});
  EXPECT_EQ(broken.code, kCounterexample);

  const Result capped = Call({"sweep", "--conjecture", "brs", "--mode", "exhaustive",
                              "--param", "n=4", "--cap", "5"});
  EXPECT_EQ(capped.code, kCapExhausted);
}

}  // namespace
}  // namespace rainbow::cli
