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

#include <string>

#include <gtest/gtest.h>

#include "rphase/fixtures.hpp"
#include "rphase/io.hpp"

namespace rphase {
namespace {

using io::json;

std::string pointer_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const io::InputError& e) {
    return e.pointer();
  }
  return "<no error>";
}

TEST(Io, CatalogRoundTrips) {
  for (const auto& entry : fixtures::catalog()) {
    SCOPED_TRACE(entry.name);
    json doc = entry.document();
    if (entry.kind == "matroid") {
      auto m = io::matroid_from_json(doc);
      EXPECT_EQ(io::matroid_from_json(io::to_json(m)), m);
    } else if (entry.kind == "phase") {
      auto e = io::phase_from_json(doc);
      EXPECT_EQ(io::phase_from_json(io::to_json(e)), e);
    } else {
      auto om = io::om_from_json(doc);
      for (const char* by : {"covectors", "topes", "signed_circuits"})
        EXPECT_EQ(io::om_from_json(io::to_json(om, by)), om);
    }
  }
}

TEST(Io, MatroidDescriptionsAgree) {
  auto u34 = fixtures::u34();
  json by_matrix = {{"elements", {"1", "2", "3", "4"}},
                    {"by", "matrix"},
                    {"data", {{1, 0, 0, 1}, {0, 1, 0, "1/2"}, {0, 0, 1, 1}}}};
  EXPECT_EQ(io::matroid_from_json(by_matrix), u34);
  std::vector<int> table(16);
  for (Mask a = 0; a < 16; ++a) table[a] = std::min(popcount(a), 3);
  json by_table = {{"elements", {"1", "2", "3", "4"}}, {"by", "rank_table"}, {"data", table}};
  EXPECT_EQ(io::matroid_from_json(by_table), u34);
  json by_bases = {{"elements", {"1", "2", "3", "4"}},
                   {"by", "bases"},
                   {"data", {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}}}};
  EXPECT_EQ(io::matroid_from_json(by_bases), u34);
}

TEST(Io, InputErrorsCarryPointers) {
  EXPECT_EQ(pointer_of([] { io::matroid_from_json(json::parse(R"({"by": "uniform"})")); }), "");
  EXPECT_EQ(pointer_of([] {
              io::matroid_from_json(json::parse(R"({"elements": ["a", "a"], "by": "uniform", "data": {"rank": 1}})"));
            }),
            "/elements");
  EXPECT_EQ(pointer_of([] {
              io::matroid_from_json(json::parse(R"({"elements": ["a", "b"], "by": "circuits", "data": [["a", "c"]]})"));
            }),
            "/data/0/1");
  EXPECT_EQ(pointer_of([] {
              io::matroid_from_json(json::parse(R"({"elements": ["a"], "by": "spiral", "data": 0})"));
            }),
            "/by");

  json phase = fixtures::u24_phase_doc();
  phase["facets"][2]["space"]["basepoint"] = "00x0";
  EXPECT_EQ(pointer_of([&] { io::phase_from_json(phase); }), "/facets/2/space/basepoint");
  phase = fixtures::u24_phase_doc();
  phase["facets"][1]["chain"] = {{"1", "2"}};
  EXPECT_EQ(pointer_of([&] { io::phase_from_json(phase); }), "/facets/1/chain");
  phase = fixtures::u24_phase_doc();
  phase["facets"].erase(3);
  EXPECT_EQ(pointer_of([&] { io::phase_from_json(phase); }), "/facets");
  phase = fixtures::u24_phase_doc();
  phase["mode"] = "spherical";
  EXPECT_EQ(pointer_of([&] { io::phase_from_json(phase); }), "/mode");

  json om = fixtures::k4_oriented_doc();
  om["data"][0] = "+-0+0";
  EXPECT_EQ(pointer_of([&] { io::om_from_json(om); }), "/data/0");
}

TEST(Io, AxiomFailureIsNotAnInputError) {
  json om = fixtures::u34_oriented_doc();
  om = io::to_json(io::om_from_json(om), "topes");
  om["data"].erase(0);
  auto doc = io::om_document_from_json(om);
  EXPECT_THROW(io::build(doc), Error);
}

TEST(Io, SignedCircuitsAreCanonical) {
  auto k4 = io::om_from_json(fixtures::k4_oriented_doc());
  EXPECT_EQ(io::to_json(k4, "signed_circuits"), fixtures::k4_oriented_doc());
  EXPECT_EQ(io::to_json(signed_circuits_from_phase(to_phase(k4))), fixtures::k4_oriented_doc());
}

TEST(Io, ReportsNameFacesByLabels) {
  auto e = fixtures::u24_phase();
  auto j = io::to_json(verify_necklace(e), e.fan());
  EXPECT_TRUE(j["ok"].get<bool>());
  ASSERT_EQ(j["necklace_orderings"].size(), 1U);
  EXPECT_EQ(j["necklace_orderings"][0]["ordering"],
            json::parse(R"([[["1"]], [["3"]], [["2"]], [["4"]]])"));
}

}  // namespace
}  // namespace rphase
