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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rphase/rphase.hpp"

namespace {

using namespace rphase;
using gf2::BitVector;

struct Failure {
  std::string why;
};

// Counts a criterion reports next to its verdict.
std::string note;

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

Mask bits(const char* s) { return BitVector::parse(s).bits(); }

AffineSubspace space(const char* base, std::vector<const char*> gens) {
  const int n = static_cast<int>(std::string(base).size());
  gf2::LinearSubspace t(n);
  for (const char* g : gens) t.insert(bits(g));
  return AffineSubspace(bits(base), t);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Every chain of proper nonempty flats above the loops, including the empty one.
std::vector<Chain> all_flags(const Matroid& m) {
  std::vector<Mask> proper;
  for (const auto& f : flats(m).flats)
    if (f.elements != m.loops() && f.elements != m.ground()) proper.push_back(f.elements);
  std::vector<Chain> out{{}};
  std::function<void(Chain&)> grow = [&](Chain& c) {
    for (Mask f : proper) {
      if (!c.empty() && (!is_subset(c.back(), f) || c.back() == f)) continue;
      c.push_back(f);
      out.push_back(c);
      grow(c);
      c.pop_back();
    }
  };
  Chain c;
  grow(c);
  return out;
}

// Feasibility of { y : row_k . y >= 1 } by Fourier-Motzkin elimination.
bool fm_feasible(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return true;
  const std::size_t vars = rows.front().size() - 1;  // last column is the bound
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<std::vector<Rational>> pos, neg, next;
    for (auto& r : rows) {
      if (r[v] > 0)
        pos.push_back(r);
      else if (r[v] < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        std::vector<Rational> r(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[k] * (-q[v]) + q[k] * p[v];
        next.push_back(r);
      }
    rows = std::move(next);
  }
  for (const auto& r : rows)
    if (r.back() > 0) return false;  // 0 >= positive
  return true;
}

// Sign patterns realised by open cells of the columns of `a`.
std::size_t count_regions(const RationalMatrix& a) {
  const int n = a.cols();
  std::size_t regions = 0;
  for (Mask eps = 0; eps < bit(n); ++eps) {
    std::vector<std::vector<Rational>> rows;
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> r;
      const int s = contains(eps, j) ? -1 : 1;
      for (int i = 0; i < a.rows(); ++i) r.push_back(a(i, j) * s);
      r.push_back(1);
      rows.push_back(r);
    }
    regions += fm_feasible(rows);
  }
  return regions;
}

long long abs_chi_minus_one(const Matroid& m) { return std::llabs(characteristic_polynomial(m)(-1)); }

void fano_two_routes() {
  const auto fano = fixtures::fano();
  auto t0 = std::chrono::steady_clock::now();
  auto found = search_phase_structures(fano);
  double search_s = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto count = count_orientations(fano);
  double count_s = seconds_since(t0);
  require(found.complete && found.structures.empty(), "search found a structure");
  require(count == 0, "orientation count is " + std::to_string(count));
  require(search_s < 30 && count_s < 30, "a route took 30 s or more");
  note = std::to_string(found.nodes) + " search nodes";
}

void tope_counts() {
  require(fixtures::u34_oriented().topes().size() == 14, "arrangement does not have 14 topes");
  for (const auto& om : {fixtures::u24_oriented(), fixtures::u34_oriented(), fixtures::k4_oriented()}) {
    auto m = underlying_matroid(om);
    require(static_cast<long long>(om.topes().size()) == abs_chi_minus_one(m), "tope count differs from chi");
  }
  require(abs_chi_minus_one(fixtures::u24()) == 8 && abs_chi_minus_one(fixtures::u34()) == 14,
          "chi(-1) of a uniform matroid");
  auto doc = fixtures::k4_matrix_doc();
  auto a = io::detail::matrix_at(doc["data"], "/data");
  require(count_regions(a) == static_cast<std::size_t>(abs_chi_minus_one(fixtures::k4())),
          "K4 region enumeration differs from chi");
  require(io::om_from_json(doc).topes().size() == count_regions(a), "K4 topes differ from regions");
}

void flag_tope_counts() {
  for (const auto& om : {fixtures::u34_oriented(), fixtures::k4_oriented()}) {
    auto m = underlying_matroid(om);
    for (const auto& flag : all_flags(m)) {
      auto n = static_cast<long long>(adjacent_topes(om, flag).size());
      require(n == abs_chi_minus_one(chain_minor_sum(m, flag)), "flag tope count differs from chi");
      if (static_cast<int>(flag.size()) == m.rank() - 1)
        require(n == (1LL << m.rank()), "maximal flag does not have 2^d topes");
    }
  }
}

void k4_values() {
  auto e = fixtures::k4_phase();
  const auto& m = e.carrier();
  Chain flag{m.mask_of(std::vector<std::string>{"e12"}),
             m.mask_of(std::vector<std::string>{"e12", "e13", "e23"})};
  auto want = space("000000", {"100000", "010100", "001011"});
  require(e.at(flag) == want, "K4 space at the flag");
  require(gf2::member(e.at(flag), BitVector(6, 0)), "zero vector missing");
  Mask c = m.mask_of(std::vector<std::string>{"e12", "e13", "e23"});
  require(gamma_from_phase(e, c, m.index_of("e13"), m.index_of("e23")) == -1, "gamma is not -1");
}

void uniform_counts() {
  auto lines = search_phase_structures(fixtures::u24(), {Mode::Projective, false, {}});
  require(lines.complete && lines.structures.size() == 24, "projective U24 count");
  auto big = fixtures::u34_phase();
  require(verify(big).ok, "U34 fixture does not verify");
  int subfans = 0;
  for (const auto& e : lines.structures) subfans += is_real_subfan(to_affine(e), big);
  require(subfans == 12, "real subfan count is " + std::to_string(subfans));
  require(search_phase_structures(fixtures::u34()).structures.size() == 8, "affine U34 count");
  require(count_orientations(fixtures::u34()) == 8, "U34 orientation count");
}

void hyperplane_uniqueness() {
  for (int n = 3; n <= 4; ++n) {
    auto found = search_phase_structures(Matroid::uniform(n - 1, n), {Mode::Projective, false, {}}).structures;
    require(!found.empty(), "no structure");
    for (const auto& a : found)
      for (const auto& b : found) require(equal_up_to_reorientation(a, b).has_value(), "two classes");
    for (const auto& e : found)
      require(extend_to_face(e, Chain{}).size() == (std::size_t{1} << (n - 1)) - 1, "vertex size");
  }
}

void round_trips() {
  for (const auto& om : {fixtures::u24_oriented(), fixtures::u34_oriented(), fixtures::u35_oriented(),
                         fixtures::k4_oriented()})
    require(phase_to_oriented(to_phase(om)) == om, "oriented matroid round trip");
  for (const auto& m : {fixtures::u24(), fixtures::u34(), fixtures::k4()})
    for (const auto& e : search_phase_structures(m).structures)
      require(to_phase(phase_to_oriented(e)) == e, "phase structure round trip");
}

void minor_compatibility() {
  for (const auto& om : {fixtures::u35_oriented(), fixtures::k4_oriented()}) {
    auto e = to_phase(om);
    for (int i = 0; i < om.size(); ++i) {
      require(to_phase(om_minor(om, bit(i), 0)) == phase_minor(e, bit(i), 0), "deletion");
      require(to_phase(om_minor(om, 0, bit(i))) == phase_minor(e, 0, bit(i)), "contraction");
    }
  }
  // Two elementary steps in either order.
  for (const auto& e : {fixtures::u34_phase(), fixtures::u35_phase(), fixtures::k4_phase()}) {
    const auto& m = e.carrier();
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j) {
        if (i == j) continue;
        std::vector<std::string> li{m.label(i)}, lj{m.label(j)};
        for (int kinds = 0; kinds < 4; ++kinds) {
          bool del_i = kinds & 1, del_j = kinds & 2;
          auto step = [](const RealPhaseStructure& x, const std::vector<std::string>& l, bool del) {
            return del ? phase_minor(x, l, {}) : phase_minor(x, {}, l);
          };
          auto a = step(step(e, li, del_i), lj, del_j);
          auto b = step(step(e, lj, del_j), li, del_i);
          require(a == b, "minor steps do not commute");
        }
      }
  }
}

void checker_equivalence() {
  std::mt19937 rng(2026);
  std::size_t candidates = 0, valid = 0;
  auto check = [&](const RealPhaseStructure& e) {
    bool a = verify(e).ok, b = verify_necklace(e).ok;
    require(a == b, "checkers disagree");
    ++candidates;
    valid += a;
  };
  struct Case {
    Matroid m;
    Mode mode;
  };
  std::vector<Case> cases{{fixtures::u23(), Mode::Affine},         {fixtures::u24(), Mode::Projective},
                          {fixtures::u24(), Mode::Affine},         {fixtures::u34(), Mode::Affine},
                          {fixtures::u35(), Mode::Affine},         {fixtures::k4(), Mode::Affine},
                          {fixtures::parallel_pairs(), Mode::Affine}};
  for (const auto& c : cases) {
    auto found = search_phase_structures(c.m, {c.mode, false, {}}).structures;
    auto fan = make_fan(c.m, c.mode);
    const int n = fan->ground_size();
    for (std::size_t k = 0; k < found.size(); ++k) {
      check(found[k]);
      if (k % 8 != 0) continue;
      // Move one or two facets to another coset of their tangent.
      for (int round = 0; round < 20; ++round) {
        auto spaces = found[k].spaces();
        const int moves = 1 + round % 2;
        for (int mv = 0; mv < moves; ++mv) {
          int f = static_cast<int>(rng() % spaces.size());
          spaces[static_cast<std::size_t>(f)] = spaces[static_cast<std::size_t>(f)].translate(rng() & full_mask(n));
        }
        check(RealPhaseStructure(fan, spaces));
      }
    }
    for (int round = 0; round < 200; ++round) {
      std::vector<AffineSubspace> spaces;
      for (std::size_t f = 0; f < fan->facets().size(); ++f)
        spaces.emplace_back(rng() & full_mask(n), fan->facet_tangent(static_cast<int>(f)));
      check(RealPhaseStructure(fan, spaces));
    }
  }
  require(valid > 0 && valid < candidates, "candidates are not mixed");
  note = std::to_string(candidates) + " candidates, " + std::to_string(valid) + " valid";

  std::vector<AffineSubspace> two_triangles{space("000", {"100"}), space("100", {"010"}), space("000", {"110"}),
                                            space("001", {"100"}), space("101", {"010"}), space("001", {"110"})};
  require(gf2::even_cover_check(two_triangles), "two triangles are not an even cover");
  require(!gf2::necklace_of_lines(two_triangles).has_value(), "two triangles form a necklace");
}

void reconstruction() {
  const auto u35 = fixtures::u35();
  auto all = search_phase_structures(u35).structures;

  // The U34 structure whose vertex misses 0000 and 1111.
  std::optional<RealPhaseStructure> deleted;
  for (const auto& d : search_phase_structures(fixtures::u34()).structures) {
    auto v = extend_to_face(d, Chain{});
    if (!std::binary_search(v.begin(), v.end(), Mask{0}) && !std::binary_search(v.begin(), v.end(), full_mask(4)))
      deleted = d;
  }
  require(deleted.has_value(), "no U34 structure avoids 0000 and 1111");

  const std::vector<std::string> five{"5"};
  auto contracted_value = space("0001", {"1000", "1111"});
  auto sigma = [&](int i) { return Chain{bit(0), bit(0) | bit(i - 1)}; };
  auto fixed = space("00010", {"10000", "01000", "11111"});

  std::vector<RealPhaseStructure> completions;
  for (const auto& e : all) {
    if (phase_minor(e, five, {}) != *deleted) continue;
    if (phase_minor(e, {}, five).at(Chain{bit(0)}) != contracted_value) continue;
    if (e.at(sigma(2)) != fixed) continue;
    completions.push_back(e);
  }
  require(!completions.empty(), "no completion");
  const auto& fan = completions.front().fan();
  NecklaceOrdering want({fan.facet_index(sigma(2)), fan.facet_index(sigma(5)), fan.facet_index(sigma(3)),
                         fan.facet_index(sigma(4))});
  for (const auto& e : completions) {
    require(necklace_ordering_at(e, Chain{bit(0)}) == want, "necklace ordering at tau");
    auto meet = gf2::intersect(e.at(sigma(5)), e.at(sigma(2)));
    require(meet.has_value() && *meet == space("00010", {"10000", "11111"}), "E(s5) meet E(s2)");
  }

  note = std::to_string(completions.size()) + " completions";

  // Same deletion and contraction by 5: related by 0 or e5.
  std::map<std::pair<std::vector<Mask>, std::vector<Mask>>, std::vector<std::size_t>> by_minors;
  for (std::size_t k = 0; k < all.size(); ++k)
    by_minors[{phase_minor(all[k], five, {}).key(), phase_minor(all[k], {}, five).key()}].push_back(k);
  for (const auto& [key, members] : by_minors)
    for (std::size_t a : members)
      for (std::size_t b : members) {
        const auto& e = all[a];
        const auto& f = all[b];
        require(equal_up_to_reorientation(e, f).has_value(), "same minors, different classes");
        require(reorient(e, 0) == f || reorient(e, bit(4)) == f, "reorientation outside the kernel");
      }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"fano_two_routes", fano_two_routes},
      {"tope_counts", tope_counts},
      {"flag_tope_counts", flag_tope_counts},
      {"k4_exact_values", k4_values},
      {"small_uniform_counts", uniform_counts},
      {"hyperplane_uniqueness", hyperplane_uniqueness},
      {"cryptomorphism_round_trips", round_trips},
      {"minor_compatibility", minor_compatibility},
      {"checker_equivalence", checker_equivalence},
      {"modification_reconstruction", reconstruction},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& [name, run] = criteria[k];
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    note.clear();
    try {
      run();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    std::ostringstream line;
    line << (why.empty() ? "PASS" : "FAIL") << " " << (k + 1) << " " << name;
    if (!why.empty()) line << ": " << why;
    if (why.empty() && !note.empty()) line << ", " << note;
    line << " (" << seconds_since(t0) << " s)";
    std::cout << line.str() << std::endl;
    failed += !why.empty();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
