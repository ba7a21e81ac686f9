// Copyright 2026 The verdict-bn Authors
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

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "verdict/error.hpp"
#include "verdict/model_json.hpp"

namespace verdict {
namespace {

ErrorCode parse_error(std::string_view text) {
  try {
    parse_model(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::kIo;
}

TEST(ModelJson, RoundTripPreservesEveryBit) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const bn::Network net = testing::random_binary_network(rng, 1 + trial % 9);
    const std::string text = dump_model(net);
    const bn::Network back = parse_model(text);
    EXPECT_EQ(back.variables(), net.variables());
    EXPECT_EQ(back.cpts().size(), net.cpts().size());
    for (std::size_t i = 0; i < net.size(); ++i) {
      EXPECT_EQ(back.cpt(i).rows, net.cpt(i).rows);  // exact doubles
    }
    EXPECT_EQ(dump_model(back), text);
  }
}

TEST(ModelJson, StructuralMaskIsOptionalAndPreserved) {
  const bn::Network net = parse_model(R"({
    "variables": [{"id": "A", "states": ["true", "false"]}],
    "cpts": [{"child": "A", "parents": [], "rows": [[1, 0]], "structural": [[true, true]]}]
  })");
  EXPECT_TRUE(net.cpt(0).is_structural(0, 0));
  const bn::Network plain = parse_model(R"({
    "variables": [{"id": "A", "states": ["true", "false"]}],
    "cpts": [{"child": "A", "parents": [], "rows": [[0.25, 0.75]]}]
  })");
  EXPECT_FALSE(plain.cpt(0).is_structural(0, 0));
  EXPECT_NE(dump_model(plain).find("\"structural\""), std::string::npos);
}

TEST(ModelJson, ShapeErrors) {
  EXPECT_EQ(parse_error("not json"), ErrorCode::kBadModelJson);
  EXPECT_EQ(parse_error("[]"), ErrorCode::kBadModelJson);
  EXPECT_EQ(parse_error(R"({"variables": []})"), ErrorCode::kBadModelJson);
  EXPECT_EQ(parse_error(R"({"variables": [{"id": 3, "states": []}], "cpts": []})"),
            ErrorCode::kBadModelJson);
  EXPECT_EQ(parse_error(R"({"variables": [{"id": "A", "states": ["t","f"]}],
                            "cpts": [{"child": "A", "parents": [], "rows": [["x", 1]]}]})"),
            ErrorCode::kBadModelJson);
}

TEST(ModelJson, SemanticErrorsComeFromValidation) {
  EXPECT_EQ(parse_error(R"({"variables": [{"id": "A", "states": ["t","f"]}],
                            "cpts": [{"child": "A", "parents": [], "rows": [[0.5, 0.6]]}]})"),
            ErrorCode::kBadRow);
  EXPECT_EQ(parse_error(R"({"variables": [{"id": "A", "states": ["t","f"]}, {"id": "B", "states": ["t","f"]}],
                            "cpts": [{"child": "A", "parents": ["B"], "rows": [[0.5, 0.5],[0.5, 0.5]]},
                                     {"child": "B", "parents": ["A"], "rows": [[0.5, 0.5],[0.5, 0.5]]}]})"),
            ErrorCode::kCycleDetected);
}

TEST(ModelJson, MissingFile) {
  try {
    load_model("/nonexistent/model.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace verdict
