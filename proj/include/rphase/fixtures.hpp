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

// Bundled example data. Every object is built by parsing its JSON document,
// so the documents themselves are exercised wherever a fixture is used.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rphase/io.hpp"

namespace rphase::fixtures {

using io::json;

inline json uniform_doc(int rank, int n) {
  return {{"elements", Matroid::default_labels(n)}, {"by", "uniform"}, {"data", {{"rank", rank}}}};
}

inline json k4_doc() {
  return json::parse(R"({
    "elements": ["e12", "e13", "e14", "e23", "e24", "e34"],
    "by": "graph",
    "data": {
      "vertices": ["1", "2", "3", "4"],
      "edges": [["1", "2"], ["1", "3"], ["1", "4"], ["2", "3"], ["2", "4"], ["3", "4"]]
    }
  })");
}

inline json fano_doc() {
  json circuits = json::array();
  const std::vector<std::vector<std::string>> lines = {
      {"1", "2", "3"}, {"1", "4", "5"}, {"1", "6", "7"}, {"2", "4", "6"},
      {"2", "5", "7"}, {"3", "4", "7"}, {"3", "5", "6"}};
  const auto all = Matroid::default_labels(7);
  for (const auto& l : lines) circuits.push_back(l);
  // Complements of lines are the four-element circuits.
  for (const auto& l : lines) {
    std::vector<std::string> rest;
    for (const auto& e : all)
      if (std::find(l.begin(), l.end(), e) == l.end()) rest.push_back(e);
    circuits.push_back(rest);
  }
  return {{"elements", all}, {"by", "circuits"}, {"data", circuits}};
}

/// Rank 2 on four elements with 1 parallel to 2 and 3 parallel to 4.
inline json parallel_pairs_doc() {
  return json::parse(R"({
    "elements": ["1", "2", "3", "4"],
    "by": "circuits",
    "data": [["1", "2"], ["3", "4"]]
  })");
}

/// Region labels of four lines through the origin in the plane.
inline json u24_oriented_doc() {
  return json::parse(R"({
    "elements": ["1", "2", "3", "4"],
    "by": "topes",
    "data": ["++++", "++-+", "-+-+", "-+--", "----", "--+-", "+-++", "+-+-"]
  })");
}

/// Four generic planes in R^3: columns e1, e2, e3, e1+e2+e3.
inline json u34_oriented_doc() {
  return json::parse(R"({
    "elements": ["1", "2", "3", "4"],
    "by": "matrix",
    "data": [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]]
  })");
}

inline json u35_oriented_doc() {
  return json::parse(R"({
    "elements": ["1", "2", "3", "4", "5"],
    "by": "matrix",
    "data": [[1, 0, 0, 1, 1], [0, 1, 0, 1, 2], [0, 0, 1, 1, 3]]
  })");
}

/// Directed K4 with edges i -> j for i < j; a cycle traversal gives + to
/// forward edges.
inline json k4_oriented_doc() {
  return json::parse(R"({
    "elements": ["e12", "e13", "e14", "e23", "e24", "e34"],
    "by": "signed_circuits",
    "data": ["+-0+00", "+0-0+0", "0+-00+", "000+-+", "+-00+-", "+0-+0+", "0+--+0"]
  })");
}

/// Linear forms x_j - x_i, one column per edge.
inline json k4_matrix_doc() {
  return json::parse(R"({
    "elements": ["e12", "e13", "e14", "e23", "e24", "e34"],
    "by": "matrix",
    "data": [[-1, -1, -1, 0, 0, 0], [1, 0, 0, -1, -1, 0], [0, 1, 0, 1, 0, -1], [0, 0, 1, 0, 1, 1]]
  })");
}

/// Projective lines on the four rays of the U_{2,4} fan, forming the
/// necklace sigma2, sigma3, sigma1, sigma4 at the vertex.
inline json u24_phase_doc() {
  json doc = json::parse(R"({
    "mode": "projective",
    "facets": [
      {"chain": [["1"]], "space": {"basepoint": "0010", "basis": ["0111"]}},
      {"chain": [["2"]], "space": {"basepoint": "0000", "basis": ["0100"]}},
      {"chain": [["3"]], "space": {"basepoint": "0000", "basis": ["0010"]}},
      {"chain": [["4"]], "space": {"basepoint": "0100", "basis": ["0001"]}}
    ]
  })");
  doc["matroid"] = uniform_doc(2, 4);
  return doc;
}

inline Matroid u23() { return io::matroid_from_json(uniform_doc(2, 3)); }
inline Matroid u24() { return io::matroid_from_json(uniform_doc(2, 4)); }
inline Matroid u34() { return io::matroid_from_json(uniform_doc(3, 4)); }
inline Matroid u35() { return io::matroid_from_json(uniform_doc(3, 5)); }
inline Matroid boolean(int n) { return io::matroid_from_json(uniform_doc(n, n)); }
inline Matroid k4() { return io::matroid_from_json(k4_doc()); }
inline Matroid fano() { return io::matroid_from_json(fano_doc()); }
inline Matroid parallel_pairs() { return io::matroid_from_json(parallel_pairs_doc()); }

inline OrientedMatroid u24_oriented() { return io::om_from_json(u24_oriented_doc()); }
inline OrientedMatroid u34_oriented() { return io::om_from_json(u34_oriented_doc()); }
inline OrientedMatroid u35_oriented() { return io::om_from_json(u35_oriented_doc()); }
inline OrientedMatroid k4_oriented() { return io::om_from_json(k4_oriented_doc()); }

inline RealPhaseStructure u24_phase() { return io::phase_from_json(u24_phase_doc()); }
inline RealPhaseStructure u34_phase() { return to_phase(u34_oriented()); }
inline RealPhaseStructure u35_phase() { return to_phase(u35_oriented()); }
inline RealPhaseStructure k4_phase() { return to_phase(k4_oriented()); }

struct Entry {
  std::string name;
  std::string kind;  // "matroid", "phase" or "oriented"
  std::function<json()> document;
};

inline std::vector<Entry> catalog() {
  std::vector<Entry> out = {
      {"u23", "matroid", [] { return uniform_doc(2, 3); }},
      {"u24", "matroid", [] { return uniform_doc(2, 4); }},
      {"u24_oriented", "oriented", u24_oriented_doc},
      {"u24_phase", "phase", u24_phase_doc},
      {"u34", "matroid", [] { return uniform_doc(3, 4); }},
      {"u34_oriented", "oriented", u34_oriented_doc},
      {"u34_phase", "phase", [] { return io::to_json(u34_phase()); }},
      {"u35", "matroid", [] { return uniform_doc(3, 5); }},
      {"u35_oriented", "oriented", u35_oriented_doc},
      {"u35_phase", "phase", [] { return io::to_json(u35_phase()); }},
      {"k4", "matroid", k4_doc},
      {"k4_oriented", "oriented", k4_oriented_doc},
      {"k4_matrix", "oriented", k4_matrix_doc},
      {"k4_phase", "phase", [] { return io::to_json(k4_phase()); }},
      {"fano", "matroid", fano_doc},
      {"parallel_pairs", "matroid", parallel_pairs_doc},
  };
  for (int n = 1; n <= 4; ++n)
    out.push_back({"boolean" + std::to_string(n), "matroid", [n] { return uniform_doc(n, n); }});
  return out;
}

}  // namespace rphase::fixtures
