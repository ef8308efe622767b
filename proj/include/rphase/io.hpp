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

// JSON documents for matroids, phase structures and oriented matroids.
//
// Matroid:   {"elements": [...], "by": "circuits"|"bases"|"graph"|"matrix"|
//             "rank_table"|"uniform", "data": ...}
// Phase:     {"matroid": <matroid>, "mode": "affine"|"projective",
//             "facets": [{"chain": [[labels], ...],
//                         "space": {"basepoint": "0110", "basis": [...]}}]}
// Oriented:  {"elements": [...], "by": "topes"|"signed_circuits"|"matrix"|
//             "covectors", "data": [...]}
//
// Bit strings and sign strings run over the elements in order; in a phase
// document they run over the loopfree carrier, i.e. loops are left out.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rphase/fan.hpp"
#include "rphase/gf2.hpp"
#include "rphase/matroid.hpp"
#include "rphase/oriented.hpp"
#include "rphase/phase.hpp"
#include "rphase/rational.hpp"

namespace rphase::io {

using json = nlohmann::json;

/// A malformed document; `pointer` locates the offending value.
class InputError : public Error {
 public:
  InputError(std::string pointer, const std::string& what)
      : Error((pointer.empty() ? std::string("/") : pointer) + ": " + what),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

namespace detail {

inline std::string child(const std::string& at, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~')
      escaped += "~0";
    else if (c == '/')
      escaped += "~1";
    else
      escaped += c;
  }
  return at + "/" + escaped;
}

inline std::string child(const std::string& at, std::size_t index) {
  return at + "/" + std::to_string(index);
}

inline const json& field(const json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) throw InputError(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(at, "missing field \"" + key + "\"");
  return *it;
}

inline const json& array_at(const json& j, const std::string& at) {
  if (!j.is_array()) throw InputError(at, "expected an array");
  return j;
}

inline std::string string_at(const json& j, const std::string& at) {
  if (!j.is_string()) throw InputError(at, "expected a string");
  return j.get<std::string>();
}

inline int int_at(const json& j, const std::string& at) {
  if (!j.is_number_integer()) throw InputError(at, "expected an integer");
  return j.get<int>();
}

inline std::vector<std::string> labels_at(const json& j, const std::string& at) {
  std::vector<std::string> out;
  const json& a = array_at(j, at);
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(string_at(a[k], child(at, k)));
  std::vector<std::string> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError(at, "duplicate element label");
  if (static_cast<int>(out.size()) > kMaxGround) throw InputError(at, "too many elements");
  return out;
}

inline Mask subset_at(const json& j, const std::vector<std::string>& labels,
                      const std::string& at) {
  Mask m = 0;
  const json& a = array_at(j, at);
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::string l = string_at(a[k], child(at, k));
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw InputError(child(at, k), "unknown element \"" + l + "\"");
    m |= bit(static_cast<int>(it - labels.begin()));
  }
  return m;
}

inline Rational rational_at(const json& j, const std::string& at) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw InputError(at, e.what());
  }
  throw InputError(at, "expected an integer or a rational string");
}

inline RationalMatrix matrix_at(const json& j, const std::string& at) {
  const json& rows = array_at(j, at);
  std::vector<std::vector<Rational>> data;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string rat = child(at, r);
    const json& row = array_at(rows[r], rat);
    std::vector<Rational> vals;
    for (std::size_t c = 0; c < row.size(); ++c) vals.push_back(rational_at(row[c], child(rat, c)));
    if (!data.empty() && vals.size() != data.front().size())
      throw InputError(rat, "ragged matrix row");
    data.push_back(std::move(vals));
  }
  return RationalMatrix::from_rows(data);
}

inline Mask bits_at(const json& j, int n, const std::string& at) {
  std::string s = string_at(j, at);
  if (static_cast<int>(s.size()) != n)
    throw InputError(at, "bit string must have length " + std::to_string(n));
  try {
    return gf2::BitVector::parse(s).bits();
  } catch (const Error& e) {
    throw InputError(at, e.what());
  }
}

inline SignVector signs_at(const json& j, int n, const std::string& at) {
  std::string s = string_at(j, at);
  if (static_cast<int>(s.size()) != n)
    throw InputError(at, "sign string must have length " + std::to_string(n));
  try {
    return SignVector::parse(s);
  } catch (const Error& e) {
    throw InputError(at, e.what());
  }
}

template <typename F>
auto wrap(const std::string& at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(at, e.what());
  }
}

inline std::string bits_string(Mask v, int n) { return gf2::BitVector(n, v).str(); }

}  // namespace detail

inline Matroid matroid_from_json(const json& j, const std::string& at = "") {
  using namespace detail;
  auto labels = labels_at(field(j, "elements", at), child(at, "elements"));
  const std::string by = string_at(field(j, "by", at), child(at, "by"));
  const std::string dat = child(at, "data");
  const json& data = field(j, "data", at);
  if (by == "circuits" || by == "bases") {
    std::vector<Mask> sets;
    const json& a = array_at(data, dat);
    for (std::size_t k = 0; k < a.size(); ++k) sets.push_back(subset_at(a[k], labels, child(dat, k)));
    return wrap(dat, [&] {
      return by == "circuits" ? Matroid::from_circuits(labels, sets)
                              : Matroid::from_bases(labels, sets);
    });
  }
  if (by == "graph") {
    auto vertices = labels_at(field(data, "vertices", dat), child(dat, "vertices"));
    const std::string eat = child(dat, "edges");
    const json& edges = array_at(field(data, "edges", dat), eat);
    if (edges.size() != labels.size()) throw InputError(eat, "need one edge per element");
    std::vector<std::pair<int, int>> ends;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::string kat = child(eat, k);
      const json& e = array_at(edges[k], kat);
      if (e.size() != 2) throw InputError(kat, "an edge has two endpoints");
      Mask u = subset_at(json::array({e[0]}), vertices, kat);
      Mask v = subset_at(json::array({e[1]}), vertices, kat);
      ends.emplace_back(lowest(u), lowest(v));
    }
    return wrap(dat, [&] {
      return Matroid::from_graph(labels, static_cast<int>(vertices.size()), ends);
    });
  }
  if (by == "matrix") {
    auto m = matrix_at(data, dat);
    return wrap(dat, [&] { return Matroid::from_matrix(labels, m); });
  }
  if (by == "rank_table") {
    std::vector<int> ranks;
    const json& a = array_at(data, dat);
    for (std::size_t k = 0; k < a.size(); ++k) ranks.push_back(int_at(a[k], child(dat, k)));
    return wrap(dat, [&] { return Matroid::from_rank_table(labels, ranks); });
  }
  if (by == "uniform") {
    int rank = int_at(field(data, "rank", dat), child(dat, "rank"));
    const int n = static_cast<int>(labels.size());
    if (rank < 0 || rank > n) throw InputError(child(dat, "rank"), "rank out of range");
    std::vector<int> ranks;
    for (Mask a = 0; a <= full_mask(n); ++a) ranks.push_back(std::min(popcount(a), rank));
    return wrap(dat, [&] { return Matroid::from_rank_table(labels, ranks); });
  }
  throw InputError(child(at, "by"), "unknown matroid description \"" + by + "\"");
}

/// Canonical descriptor: the circuit list.
inline json to_json(const Matroid& m) {
  json data = json::array();
  for (Mask c : circuits(m)) data.push_back(m.labels_of(c));
  return {{"elements", m.labels()}, {"by", "circuits"}, {"data", data}};
}

inline Mode mode_from_string(const std::string& s, const std::string& at) {
  if (s == "affine") return Mode::Affine;
  if (s == "projective") return Mode::Projective;
  throw InputError(at, "mode must be \"affine\" or \"projective\"");
}

inline json chain_to_json(const Matroid& carrier, const Chain& c) {
  json out = json::array();
  for (Mask f : c) out.push_back(carrier.labels_of(f));
  return out;
}

inline Chain chain_from_json(const json& j, const Matroid& carrier, const std::string& at) {
  Chain c;
  const json& a = detail::array_at(j, at);
  for (std::size_t k = 0; k < a.size(); ++k)
    c.push_back(detail::subset_at(a[k], carrier.labels(), detail::child(at, k)));
  return c;
}

inline json to_json(const AffineSubspace& a) {
  json basis = json::array();
  for (Mask r : a.tangent().rows()) basis.push_back(detail::bits_string(r, a.size()));
  return {{"basepoint", detail::bits_string(a.base_bits(), a.size())}, {"basis", basis}};
}

inline json to_json(const RealPhaseStructure& e) {
  json facets = json::array();
  const auto& fs = e.fan().facets();
  for (std::size_t f = 0; f < fs.size(); ++f)
    facets.push_back({{"chain", chain_to_json(e.carrier(), fs[f])},
                      {"space", to_json(e.at(static_cast<int>(f)))}});
  return {{"matroid", to_json(e.carrier())}, {"mode", to_string(e.mode())}, {"facets", facets}};
}

inline RealPhaseStructure phase_from_json(const json& j, const std::string& at = "") {
  using namespace detail;
  Matroid m = matroid_from_json(field(j, "matroid", at), child(at, "matroid"));
  Mode mode = mode_from_string(string_at(field(j, "mode", at), child(at, "mode")),
                               child(at, "mode"));
  auto fan = wrap(child(at, "matroid"), [&] { return make_fan(m, mode); });
  const Matroid& carrier = fan->carrier();
  const int n = carrier.size();
  const std::string fat = child(at, "facets");
  const json& facets = array_at(field(j, "facets", at), fat);
  std::map<Chain, AffineSubspace, ChainLess> assignment;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    const std::string kat = child(fat, k);
    Chain c = chain_from_json(field(facets[k], "chain", kat), carrier, child(kat, "chain"));
    if (fan->facet_index(c) < 0) throw InputError(child(kat, "chain"), "chain is not a facet");
    const std::string sat = child(kat, "space");
    const json& space = field(facets[k], "space", kat);
    Mask base = bits_at(field(space, "basepoint", sat), n, child(sat, "basepoint"));
    const std::string bat = child(sat, "basis");
    const json& basis = array_at(field(space, "basis", sat), bat);
    LinearSubspace t(n);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (!t.insert(bits_at(basis[b], n, child(bat, b))))
        throw InputError(child(bat, b), "basis vectors are linearly dependent");
    if (!assignment.emplace(c, AffineSubspace(base, std::move(t))).second)
      throw InputError(child(kat, "chain"), "facet assigned twice");
  }
  return wrap(fat, [&] { return RealPhaseStructure::from_map(fan, assignment); });
}

/// Raw oriented-matroid document; building it may fail the axioms.
struct OMDocument {
  std::vector<std::string> labels;
  std::string by;
  std::vector<SignVector> signs;
  RationalMatrix matrix;
};

inline OMDocument om_document_from_json(const json& j, const std::string& at = "") {
  using namespace detail;
  OMDocument doc;
  doc.labels = labels_at(field(j, "elements", at), child(at, "elements"));
  if (doc.labels.size() > 10) throw InputError(child(at, "elements"), "at most 10 elements");
  doc.by = string_at(field(j, "by", at), child(at, "by"));
  const std::string dat = child(at, "data");
  const json& data = field(j, "data", at);
  const int n = static_cast<int>(doc.labels.size());
  if (doc.by == "topes" || doc.by == "signed_circuits" || doc.by == "covectors") {
    const json& a = array_at(data, dat);
    for (std::size_t k = 0; k < a.size(); ++k) doc.signs.push_back(signs_at(a[k], n, child(dat, k)));
  } else if (doc.by == "matrix") {
    doc.matrix = matrix_at(data, dat);
    if (doc.matrix.rows() > 0 && doc.matrix.cols() != n)
      throw InputError(dat, "matrix must have one column per element");
    if (doc.matrix.rows() == 0) doc.matrix = RationalMatrix(0, n);
  } else {
    throw InputError(child(at, "by"), "unknown oriented matroid description \"" + doc.by + "\"");
  }
  return doc;
}

/// Throws Error (not InputError) when the data violates the axioms.
inline OrientedMatroid build(const OMDocument& doc) {
  if (doc.by == "topes") return OrientedMatroid::from_topes(doc.labels, doc.signs);
  if (doc.by == "signed_circuits")
    return OrientedMatroid::from_signed_circuits(doc.labels, doc.signs);
  if (doc.by == "covectors") return OrientedMatroid::from_covectors(doc.labels, doc.signs);
  return OrientedMatroid::from_matrix(doc.labels, doc.matrix);
}

inline OrientedMatroid om_from_json(const json& j, const std::string& at = "") {
  auto doc = om_document_from_json(j, at);
  return detail::wrap(detail::child(at, "data"), [&] { return build(doc); });
}

inline json sign_list(const std::vector<SignVector>& xs, int n) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str(n));
  return out;
}

/// by = "covectors", "topes" or "signed_circuits".
inline json to_json(const OrientedMatroid& om, const std::string& by = "covectors") {
  const int n = om.size();
  json data;
  if (by == "covectors")
    data = sign_list(om.covectors(), n);
  else if (by == "topes")
    data = sign_list(om.topes(), n);
  else if (by == "signed_circuits")
    data = sign_list(signed_circuits_of(om).circuits, n);
  else
    throw Error("unknown oriented matroid description \"" + by + "\"");
  return {{"elements", om.labels()}, {"by", by}, {"data", data}};
}

inline json to_json(const SignedCircuitSet& sc) {
  return {{"elements", sc.labels},
          {"by", "signed_circuits"},
          {"data", sign_list(sc.circuits, static_cast<int>(sc.labels.size()))}};
}

inline json to_json(const NecklaceOrdering& order, const Fan& fan) {
  json out = json::array();
  for (int f : order.cycle())
    out.push_back(chain_to_json(fan.carrier(), fan.facets()[static_cast<std::size_t>(f)]));
  return out;
}

inline json to_json(const VerifyReport& report, const Fan& fan) {
  json vs = json::array();
  for (const auto& v : report.violations) {
    json o = {{"kind", to_string(v.kind)}, {"detail", v.detail}};
    if (v.facet >= 0)
      o["facet"] = chain_to_json(fan.carrier(), fan.facets()[static_cast<std::size_t>(v.facet)]);
    if (v.ridge >= 0)
      o["face"] = chain_to_json(fan.carrier(), fan.ridges()[static_cast<std::size_t>(v.ridge)]);
    if (v.point) o["point"] = detail::bits_string(*v.point, fan.ground_size());
    vs.push_back(o);
  }
  return {{"ok", report.ok}, {"violations", vs}};
}

inline json to_json(const NecklaceReport& report, const Fan& fan) {
  VerifyReport plain{report.ok, report.violations};
  json out = to_json(plain, fan);
  json orders = json::array();
  for (std::size_t r = 0; r < report.orderings.size(); ++r) {
    json o = {{"face", chain_to_json(fan.carrier(), fan.ridges()[r])}};
    o["ordering"] = report.orderings[r] ? to_json(*report.orderings[r], fan) : json(nullptr);
    orders.push_back(o);
  }
  out["necklace_orderings"] = orders;
  return out;
}

}  // namespace rphase::io
