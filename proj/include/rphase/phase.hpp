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

// Real phase structures on matroid fans: an affine subspace of Z2^E on every
// facet, parallel to the facet, forming even coverings around every
// codimension-one face.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rphase/fan.hpp"
#include "rphase/gf2.hpp"
#include "rphase/matroid.hpp"

namespace rphase {

using gf2::AffineSubspace;
using gf2::LinearSubspace;
using gf2::NecklaceOrdering;

class RealPhaseStructure {
 public:
  RealPhaseStructure(std::shared_ptr<const Fan> fan,
                     std::vector<AffineSubspace> spaces)
      : fan_(std::move(fan)), spaces_(std::move(spaces)) {
    if (spaces_.size() != fan_->facets().size())
      throw Error("partial assignment: " + std::to_string(spaces_.size()) +
                  " spaces for " + std::to_string(fan_->facets().size()) +
                  " facets");
    for (auto& s : spaces_) {
      if (s.size() != fan_->ground_size())
        throw Error("assigned space has the wrong ambient dimension");
      s = reduce_mode(s, fan_->mode());
    }
  }

  /// Builds from a chain-keyed assignment; every facet must be present.
  static RealPhaseStructure from_map(
      std::shared_ptr<const Fan> fan,
      const std::map<Chain, AffineSubspace, ChainLess>& assignment) {
    std::vector<AffineSubspace> spaces;
    for (const auto& f : fan->facets()) {
      auto it = assignment.find(f);
      if (it == assignment.end())
        throw Error("partial assignment: a facet has no space");
      spaces.push_back(it->second);
    }
    if (assignment.size() != spaces.size())
      throw Error("assignment names a chain that is not a facet");
    return RealPhaseStructure(std::move(fan), std::move(spaces));
  }

  const Fan& fan() const { return *fan_; }
  const std::shared_ptr<const Fan>& fan_ptr() const { return fan_; }
  const Matroid& carrier() const { return fan_->carrier(); }
  Mode mode() const { return fan_->mode(); }

  const std::vector<AffineSubspace>& spaces() const { return spaces_; }
  const AffineSubspace& at(int facet) const {
    return spaces_[static_cast<std::size_t>(facet)];
  }
  const AffineSubspace& at(const Chain& c) const {
    int f = fan_->facet_index(c);
    if (f < 0) throw Error("chain is not a facet");
    return at(f);
  }

  /// Basepoints in facet order; the canonical sort key.
  std::vector<Mask> key() const {
    std::vector<Mask> k;
    for (const auto& s : spaces_) k.push_back(s.base_bits());
    return k;
  }

  friend bool operator==(const RealPhaseStructure& a,
                         const RealPhaseStructure& b) {
    return a.mode() == b.mode() && a.carrier() == b.carrier() &&
           a.spaces_ == b.spaces_;
  }

 private:
  std::shared_ptr<const Fan> fan_;
  std::vector<AffineSubspace> spaces_;
};

inline std::shared_ptr<const Fan> make_fan(const Matroid& m, Mode mode) {
  return std::make_shared<const Fan>(m, mode);
}

struct Violation {
  enum class Kind { NotParallel, OddCover, NotNecklace };
  Kind kind = Kind::NotParallel;
  int facet = -1;
  int ridge = -1;
  std::optional<Mask> point;
  std::string detail;
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::NotParallel: return "not-parallel";
    case Violation::Kind::OddCover: return "odd-cover";
    case Violation::Kind::NotNecklace: return "not-necklace";
  }
  return "unknown";
}

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;
};

namespace detail {

inline void check_parallel(const RealPhaseStructure& e, VerifyReport& report) {
  const Fan& fan = e.fan();
  for (std::size_t f = 0; f < fan.facets().size(); ++f) {
    if (e.at(static_cast<int>(f)).tangent() == fan.facet_tangent(static_cast<int>(f)))
      continue;
    report.ok = false;
    report.violations.push_back({Violation::Kind::NotParallel, static_cast<int>(f),
                                 -1, std::nullopt,
                                 "space is not parallel to its facet"});
  }
}

inline std::vector<AffineSubspace> spaces_around(const RealPhaseStructure& e,
                                                 int ridge) {
  std::vector<AffineSubspace> out;
  for (int f : e.fan().ridge_facets(ridge)) out.push_back(e.at(f));
  return out;
}

}  // namespace detail

/// Checks parallelism at every facet and the even-cover condition at every
/// codimension-one face.
inline VerifyReport verify(const RealPhaseStructure& e) {
  VerifyReport report;
  detail::check_parallel(e, report);
  const Fan& fan = e.fan();
  for (std::size_t r = 0; r < fan.ridges().size(); ++r) {
    auto around = detail::spaces_around(e, static_cast<int>(r));
    auto odd = gf2::odd_points(around);
    if (odd.empty()) continue;
    report.ok = false;
    report.violations.push_back({Violation::Kind::OddCover, -1, static_cast<int>(r),
                                 odd.front(),
                                 "point covered an odd number of times"});
  }
  return report;
}

struct NecklaceReport {
  bool ok = true;
  std::vector<Violation> violations;
  /// Per codimension-one face: the cyclic order of adjacent facet ids.
  std::vector<std::optional<NecklaceOrdering>> orderings;
};

namespace detail {

/// Necklace ordering (in facet ids) at one codimension-one face, after
/// quotienting the adjacent spaces by the face's tangent space.
inline std::optional<NecklaceOrdering> necklace_at(const RealPhaseStructure& e,
                                                   int ridge) {
  const Fan& fan = e.fan();
  const auto& ids = fan.ridge_facets(ridge);
  const auto& w = fan.ridge_tangent(ridge);
  std::vector<AffineSubspace> lines;
  for (int f : ids) {
    const auto& s = e.at(f);
    if (!s.tangent().includes(w) || s.dim() != w.dim() + 1) return std::nullopt;
    lines.push_back(gf2::quotient(s, w));
  }
  auto local = gf2::necklace_of_lines(lines);
  if (!local) return std::nullopt;
  std::vector<int> cycle;
  for (int j : local->cycle()) cycle.push_back(ids[static_cast<std::size_t>(j)]);
  return NecklaceOrdering(std::move(cycle));
}

}  // namespace detail

/// Checks parallelism and the necklace condition at every codimension-one
/// face.
inline NecklaceReport verify_necklace(const RealPhaseStructure& e) {
  NecklaceReport report;
  VerifyReport parallel;
  detail::check_parallel(e, parallel);
  report.ok = parallel.ok;
  report.violations = std::move(parallel.violations);
  const Fan& fan = e.fan();
  for (std::size_t r = 0; r < fan.ridges().size(); ++r) {
    auto order = detail::necklace_at(e, static_cast<int>(r));
    if (!order) {
      report.ok = false;
      report.violations.push_back({Violation::Kind::NotNecklace, -1,
                                   static_cast<int>(r), std::nullopt,
                                   "adjacent spaces do not form a necklace"});
    }
    report.orderings.push_back(std::move(order));
  }
  return report;
}

/// The even-cover and necklace checkers agree on this structure.
inline bool equivalence_witness(const RealPhaseStructure& e) {
  return verify(e).ok == verify_necklace(e).ok;
}

inline NecklaceOrdering necklace_ordering_at(const RealPhaseStructure& e,
                                             const Chain& tau) {
  int r = e.fan().ridge_index(tau);
  if (r < 0) throw Error("chain is not a codimension-one face");
  auto order = detail::necklace_at(e, r);
  if (!order) throw Error("necklace condition fails at this face");
  return *order;
}

inline RealPhaseStructure reorient(const RealPhaseStructure& e, Mask eps) {
  if (!is_subset(eps, full_mask(e.fan().ground_size())))
    throw Error("reorientation vector outside the ground set");
  std::vector<AffineSubspace> spaces;
  for (const auto& s : e.spaces()) spaces.push_back(s.translate(eps));
  return RealPhaseStructure(e.fan_ptr(), std::move(spaces));
}

/// Union of the spaces on all facets containing the face `tau`; sorted.
inline std::vector<Mask> extend_to_face(const RealPhaseStructure& e,
                                        const Chain& tau) {
  check_chain(e.carrier(), tau);
  std::vector<Mask> pts;
  for (int f : e.fan().facets_containing(tau)) {
    auto p = e.at(f).points();
    pts.insert(pts.end(), p.begin(), p.end());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

inline RealPhaseStructure with_mode(const RealPhaseStructure& e, Mode mode) {
  if (e.mode() == mode) return e;
  auto fan = make_fan(e.carrier(), mode);
  std::vector<AffineSubspace> spaces;
  for (const auto& s : e.spaces())
    spaces.push_back(mode == Mode::Affine ? lift_to_affine(s) : s);
  return RealPhaseStructure(std::move(fan), std::move(spaces));
}

inline RealPhaseStructure to_affine(const RealPhaseStructure& e) {
  return with_mode(e, Mode::Affine);
}

inline RealPhaseStructure to_projective(const RealPhaseStructure& e) {
  return with_mode(e, Mode::Projective);
}

namespace detail {

inline AffineSubspace project_space(const AffineSubspace& s, Mask drop,
                                    Mode mode) {
  AffineSubspace a = mode == Mode::Projective ? lift_to_affine(s) : s;
  return reduce_mode(gf2::project(a, drop), mode);
}

}  // namespace detail

/// Elementary deletion of element i (an index into the carrier).
inline RealPhaseStructure delete_element(const RealPhaseStructure& e, int i) {
  const Matroid& m = e.carrier();
  if (i < 0 || i >= m.size()) throw Error("element outside the carrier");
  if (contains(m.coloops(), i)) {
    const Mask ci = m.closure(bit(i));
    auto fan = make_fan(minor(m, 0, ci), e.mode());
    std::vector<AffineSubspace> spaces;
    for (const auto& sigma : fan->facets()) {
      Chain lift = lift_facet(m, fan->carrier(), sigma, MinorKind::Deletion, i);
      spaces.push_back(detail::project_space(e.at(lift), ci, e.mode()));
    }
    return RealPhaseStructure(std::move(fan), std::move(spaces));
  }
  auto fan = make_fan(minor(m, bit(i), 0), e.mode());
  std::vector<AffineSubspace> spaces;
  for (const auto& sigma : fan->facets()) {
    Chain lift = lift_facet(m, fan->carrier(), sigma, MinorKind::Deletion, i);
    spaces.push_back(detail::project_space(e.at(lift), bit(i), e.mode()));
  }
  return RealPhaseStructure(std::move(fan), std::move(spaces));
}

/// Elementary contraction of element i; the new loops cl(i) \ i are removed
/// together with i.
inline RealPhaseStructure contract_element(const RealPhaseStructure& e, int i) {
  const Matroid& m = e.carrier();
  if (i < 0 || i >= m.size()) throw Error("element outside the carrier");
  const Mask ci = m.closure(bit(i));
  auto fan = make_fan(minor(m, 0, ci), e.mode());
  std::vector<AffineSubspace> spaces;
  for (const auto& sigma : fan->facets()) {
    Chain lift = lift_facet(m, fan->carrier(), sigma, MinorKind::Contraction, i);
    spaces.push_back(detail::project_space(e.at(lift), ci, e.mode()));
  }
  return RealPhaseStructure(std::move(fan), std::move(spaces));
}

/// Minor by labels: deletions first, then contractions, each in the given
/// order. Elements that already vanished as loops of an earlier contraction
/// are skipped.
inline RealPhaseStructure phase_minor(const RealPhaseStructure& e,
                                      const std::vector<std::string>& del,
                                      const std::vector<std::string>& con) {
  for (const auto& d : del)
    if (std::find(con.begin(), con.end(), d) != con.end())
      throw Error("deletion and contraction sets overlap");
  for (const auto& l : del) e.carrier().index_of(l);
  for (const auto& l : con) e.carrier().index_of(l);
  RealPhaseStructure cur = e;
  auto present = [&](const std::string& l) {
    const auto& ls = cur.carrier().labels();
    return std::find(ls.begin(), ls.end(), l) != ls.end();
  };
  for (const auto& l : del)
    if (present(l)) cur = delete_element(cur, cur.carrier().index_of(l));
  for (const auto& l : con)
    if (present(l)) cur = contract_element(cur, cur.carrier().index_of(l));
  return cur;
}

inline RealPhaseStructure phase_minor(const RealPhaseStructure& e, Mask del,
                                      Mask con) {
  return phase_minor(e, e.carrier().labels_of(del), e.carrier().labels_of(con));
}

/// (fan of e1, e1) is a real subfan of (fan of e2, e2): the fans nest and
/// e1(tau) is contained in e2(tau) for every face tau of the smaller fan.
inline bool is_real_subfan(const RealPhaseStructure& e1,
                           const RealPhaseStructure& e2) {
  if (e1.carrier().labels() != e2.carrier().labels())
    throw Error("real subfan test needs structures on the same ground set");
  if (e1.mode() != e2.mode())
    throw Error("real subfan test needs structures in the same mode");
  if (!fan_contains(e1.carrier(), e2.carrier())) return false;
  for (const auto& tau : e1.fan().faces()) {
    auto small = extend_to_face(e1, tau);
    auto big = extend_to_face(e2, tau);
    if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
      return false;
  }
  return true;
}

/// The translation carrying e1 onto e2, reduced modulo the stabilizer
/// (the intersection of all facet tangents), or nothing.
inline std::optional<Mask> equal_up_to_reorientation(const RealPhaseStructure& e1,
                                                     const RealPhaseStructure& e2) {
  if (e1.mode() != e2.mode() || !(e1.carrier() == e2.carrier()))
    throw Error("structures live on different fans");
  std::optional<AffineSubspace> solutions =
      AffineSubspace(0, LinearSubspace::whole(e1.fan().ground_size()));
  if (e1.mode() == Mode::Projective)
    solutions = reduce_mode(*solutions, Mode::Projective);
  for (std::size_t f = 0; f < e1.spaces().size() && solutions; ++f) {
    const auto& a = e1.spaces()[f];
    const auto& b = e2.spaces()[f];
    if (a.tangent() != b.tangent()) return std::nullopt;
    solutions = gf2::intersect(
        *solutions, AffineSubspace(a.base_bits() ^ b.base_bits(), a.tangent()));
  }
  if (!solutions) return std::nullopt;
  return solutions->base_bits();
}

struct SearchOptions {
  Mode mode = Mode::Affine;
  bool up_to_reorientation = false;
  std::optional<std::size_t> limit;
};

struct SearchResult {
  std::vector<RealPhaseStructure> structures;
  bool complete = true;
  std::size_t nodes = 0;
};

namespace detail {

/// Depth-first search over facet translates in breadth-first facet order,
/// pruning with the necklace condition on partially assigned faces.
class PhaseSearch {
 public:
  PhaseSearch(std::shared_ptr<const Fan> fan, SearchOptions opts)
      : fan_(std::move(fan)), opts_(opts) {
    const std::size_t nf = fan_->facets().size();
    const std::size_t nr = fan_->ridges().size();
    // Breadth-first facet order through codimension-one adjacency.
    std::vector<bool> seen(nf, false);
    for (std::size_t start = 0; start < nf; ++start) {
      if (seen[start]) continue;
      seen[start] = true;
      std::size_t head = order_.size();
      order_.push_back(static_cast<int>(start));
      while (head < order_.size()) {
        int f = order_[head++];
        std::vector<int> next;
        for (int r : fan_->facet_ridges(f))
          for (int g : fan_->ridge_facets(r)) next.push_back(g);
        std::sort(next.begin(), next.end());
        for (int g : next)
          if (!seen[static_cast<std::size_t>(g)]) {
            seen[static_cast<std::size_t>(g)] = true;
            order_.push_back(g);
          }
      }
    }
    // Direction of each adjacent facet's line in Z2^E / T(tau).
    direction_.resize(nr);
    for (std::size_t r = 0; r < nr; ++r) {
      const auto& w = fan_->ridge_tangent(static_cast<int>(r));
      for (int f : fan_->ridge_facets(static_cast<int>(r))) {
        Mask d = 0;
        for (Mask row : fan_->facet_tangent(f).rows())
          if ((d = w.reduce(row)) != 0) break;
        direction_[r].push_back(d);
      }
    }
    base_.assign(nf, 0);
    assigned_.assign(nf, false);
  }

  SearchResult run() {
    if (!order_.empty()) descend(0);
    SearchResult out;
    out.nodes = nodes_;
    out.complete = !stopped_;
    if (opts_.up_to_reorientation) {
      for (auto& [k, e] : classes_) out.structures.push_back(std::move(e));
    } else {
      std::sort(found_.begin(), found_.end(),
                [](const auto& a, const auto& b) { return a.key() < b.key(); });
      out.structures = std::move(found_);
    }
    if (opts_.limit && out.structures.size() > *opts_.limit) {
      out.structures.erase(out.structures.begin() + static_cast<std::ptrdiff_t>(*opts_.limit), out.structures.end());
      out.complete = false;
    }
    return out;
  }

 private:
  void descend(std::size_t depth) {
    if (stopped_) return;
    ++nodes_;
    if (depth == order_.size()) {
      record();
      return;
    }
    const int f = order_[depth];
    const auto& t = fan_->facet_tangent(f);
    Mask free = full_mask(fan_->ground_size()) & ~t.pivots();
    if (fan_->mode() == Mode::Projective) free &= ~bit(0);
    const bool pinned = depth == 0 && opts_.up_to_reorientation;
    const std::size_t count = pinned ? 1 : (std::size_t{1} << popcount(free));
    assigned_[static_cast<std::size_t>(f)] = true;
    for (std::size_t k = 0; k < count && !stopped_; ++k) {
      base_[static_cast<std::size_t>(f)] = expand_into(static_cast<Mask>(k), free);
      bool ok = true;
      for (int r : fan_->facet_ridges(f))
        if (!consistent(r)) {
          ok = false;
          break;
        }
      if (ok) descend(depth + 1);
    }
    assigned_[static_cast<std::size_t>(f)] = false;
  }

  static Mask expand_into(Mask bits, Mask positions) {
    Mask out = 0;
    int j = 0;
    for (int i : elements_of(positions)) {
      if (contains(bits, j)) out |= bit(i);
      ++j;
    }
    return out;
  }

  bool consistent(int r) const {
    const auto& ids = fan_->ridge_facets(r);
    const auto& w = fan_->ridge_tangent(r);
    const std::size_t k = ids.size();
    std::vector<std::pair<Mask, Mask>> lines;
    std::vector<int> slot;
    for (std::size_t j = 0; j < k; ++j) {
      int f = ids[j];
      if (!assigned_[static_cast<std::size_t>(f)]) continue;
      Mask a = w.reduce(base_[static_cast<std::size_t>(f)]);
      Mask b = a ^ direction_[static_cast<std::size_t>(r)][j];
      lines.emplace_back(std::min(a, b), std::max(a, b));
      slot.push_back(static_cast<int>(j));
    }
    if (k == 2) return lines.size() < 2 || lines[0] == lines[1];
    for (std::size_t x = 0; x < lines.size(); ++x)
      for (std::size_t y = x + 1; y < lines.size(); ++y)
        if (lines[x] == lines[y]) return false;
    std::vector<std::pair<Mask, int>> incidence;
    for (std::size_t x = 0; x < lines.size(); ++x) {
      incidence.emplace_back(lines[x].first, static_cast<int>(x));
      incidence.emplace_back(lines[x].second, static_cast<int>(x));
    }
    std::sort(incidence.begin(), incidence.end());
    std::vector<int> parent(lines.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
      return v;
    };
    const bool full = lines.size() == k;
    std::size_t edges = 0;
    bool cycle = false;
    for (std::size_t a = 0; a < incidence.size();) {
      std::size_t b = a;
      while (b < incidence.size() && incidence[b].first == incidence[a].first) ++b;
      if (b - a > 2) return false;
      if (b - a == 1 && full) return false;
      if (b - a == 2) {
        ++edges;
        int u = find(incidence[a].second), v = find(incidence[a + 1].second);
        if (u == v)
          cycle = true;
        else
          parent[static_cast<std::size_t>(u)] = v;
      }
      a = b;
    }
    // A cycle may only close through every adjacent facet.
    if (cycle && !(full && edges == k)) return false;
    if (full) {
      int root = find(0);
      for (std::size_t x = 1; x < lines.size(); ++x)
        if (find(static_cast<int>(x)) != root) return false;
    }
    return true;
  }

  void record() {
    std::vector<AffineSubspace> spaces;
    for (std::size_t f = 0; f < base_.size(); ++f)
      spaces.emplace_back(base_[f], fan_->facet_tangent(static_cast<int>(f)));
    RealPhaseStructure e(fan_, std::move(spaces));
    if (opts_.up_to_reorientation) {
      // Members of this class that pin the first facet differ by T(first).
      const auto& t = fan_->facet_tangent(order_.front());
      std::optional<RealPhaseStructure> best;
      for (Mask eps : AffineSubspace(0, t).points()) {
        auto cand = reorient(e, eps);
        if (!best || cand.key() < best->key()) best = std::move(cand);
      }
      auto k = best->key();
      classes_.try_emplace(std::move(k), std::move(*best));
      if (opts_.limit && classes_.size() > *opts_.limit) stopped_ = true;
    } else {
      found_.push_back(std::move(e));
      if (opts_.limit && found_.size() > *opts_.limit) stopped_ = true;
    }
  }

  std::shared_ptr<const Fan> fan_;
  SearchOptions opts_;
  std::vector<int> order_;
  std::vector<std::vector<Mask>> direction_;
  std::vector<Mask> base_;
  std::vector<bool> assigned_;
  std::vector<RealPhaseStructure> found_;
  std::map<std::vector<Mask>, RealPhaseStructure> classes_;
  std::size_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace detail

/// Enumerates every real phase structure on the fan of m (or one per
/// reorientation class), sorted by the tuple of basepoints in facet order.
inline SearchResult search_phase_structures(const Matroid& m,
                                            SearchOptions opts = {}) {
  if (m.loops() != 0) throw Error("phase search needs a loopfree matroid");
  detail::PhaseSearch search(make_fan(m, opts.mode), opts);
  return search.run();
}

}  // namespace rphase
