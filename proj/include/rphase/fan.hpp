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

// The fine subdivision of the fan of a matroid. Faces are chains of flats;
// only the mod-2 reduction of each cone's tangent space is ever built.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "rphase/gf2.hpp"
#include "rphase/matroid.hpp"

namespace rphase {

enum class Mode { Affine, Projective };

inline const char* to_string(Mode mode) {
  return mode == Mode::Affine ? "affine" : "projective";
}

/// Lexicographic order of chains, flats compared as sorted element lists.
struct ChainLess {
  bool operator()(const Chain& a, const Chain& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        subset_lex_less);
  }
};

struct FanFace {
  Chain chain;
  int dim = 0;
  friend bool operator==(const FanFace&, const FanFace&) = default;
};

/// In projective mode vectors live in Z2^E / <(1,...,1)>; the representative
/// has coordinate 0 at the first element.
inline Mask projective_reduce(Mask v, int n) {
  return (n > 0 && contains(v, 0)) ? v ^ full_mask(n) : v;
}

inline Mask reduce_mode(Mask v, int n, Mode mode) {
  return mode == Mode::Projective ? projective_reduce(v, n) : v;
}

inline gf2::LinearSubspace reduce_mode(const gf2::LinearSubspace& w, Mode mode) {
  if (mode == Mode::Affine) return w;
  gf2::LinearSubspace out(w.size());
  for (Mask r : w.rows()) out.insert(projective_reduce(r, w.size()));
  return out;
}

inline gf2::AffineSubspace reduce_mode(const gf2::AffineSubspace& a, Mode mode) {
  if (mode == Mode::Affine) return a;
  return gf2::AffineSubspace(projective_reduce(a.base_bits(), a.size()),
                             reduce_mode(a.tangent(), mode));
}

/// Preimage of a projective-mode space in Z2^E.
inline gf2::AffineSubspace lift_to_affine(const gf2::AffineSubspace& a) {
  gf2::LinearSubspace t = a.tangent();
  t.insert(full_mask(a.size()));
  return gf2::AffineSubspace(a.base_bits(), std::move(t));
}

/// Span of the reductions of v_{F_1}, ..., v_{F_k}, v_E.
inline gf2::LinearSubspace tangent_z2(const Matroid& m, const Chain& chain,
                                      Mode mode) {
  gf2::LinearSubspace t(m.size());
  for (Mask f : chain) t.insert(f);
  t.insert(m.ground());
  return reduce_mode(t, mode);
}

/// Maximal chains of proper nonempty flats of a loopfree matroid, sorted.
inline std::vector<Chain> facets(const Matroid& m) {
  if (m.loops() != 0) throw Error("fan facets need a loopfree matroid");
  auto lat = flats(m);
  std::vector<Chain> out;
  Chain cur;
  const int top = lat.index_of(m.ground());
  auto walk = [&](auto&& self, int at) -> void {
    if (at == top) {
      out.push_back(cur);
      return;
    }
    for (int next : lat.covers[static_cast<std::size_t>(at)]) {
      bool is_top = next == top;
      if (!is_top) cur.push_back(lat.flats[static_cast<std::size_t>(next)].elements);
      self(self, next);
      if (!is_top) cur.pop_back();
    }
  };
  walk(walk, 0);
  std::sort(out.begin(), out.end(), ChainLess{});
  return out;
}

/// Chains obtained by dropping one flat from a maximal chain: exactly one
/// rank jump of two.
inline std::vector<Chain> codim1_faces(const Matroid& m) {
  std::set<Chain, ChainLess> out;
  for (const auto& f : facets(m))
    for (std::size_t s = 0; s < f.size(); ++s) {
      Chain c = f;
      c.erase(c.begin() + static_cast<std::ptrdiff_t>(s));
      out.insert(std::move(c));
    }
  return {out.begin(), out.end()};
}

/// Facets adjacent to a codimension-one face: the chain with each flat of
/// the rank-two gap inserted.
inline std::vector<Chain> adjacent_facets(const Matroid& m, const Chain& tau) {
  check_chain(m, tau);
  std::vector<Mask> levels{m.loops()};
  levels.insert(levels.end(), tau.begin(), tau.end());
  levels.push_back(m.ground());
  int gap = -1;
  for (std::size_t s = 1; s < levels.size(); ++s) {
    int jump = m.rank(levels[s]) - m.rank(levels[s - 1]);
    if (jump == 1) continue;
    if (jump != 2 || gap != -1) throw Error("face is not of codimension one");
    gap = static_cast<int>(s);
  }
  if (gap == -1) throw Error("face is not of codimension one");
  const Mask lo = levels[static_cast<std::size_t>(gap - 1)];
  const Mask hi = levels[static_cast<std::size_t>(gap)];
  std::vector<Chain> out;
  for (const auto& f : flats(m).flats) {
    if (f.rank != m.rank(lo) + 1 || !is_subset(lo, f.elements) ||
        !is_subset(f.elements, hi))
      continue;
    Chain c = tau;
    c.insert(c.begin() + (gap - 1), f.elements);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), ChainLess{});
  return out;
}

/// Every flat of m1 is a flat of m2, i.e. the fan of m1 sits inside the fan
/// of m2.
inline bool fan_contains(const Matroid& m1, const Matroid& m2) {
  return is_quotient(m1, m2);
}

enum class MinorKind { Deletion, Contraction };

/// A facet of the fan of m projecting onto `sigma`, a facet of the fan of
/// the elementary minor of m by element i. `minor_carrier` is the loopfree
/// carrier of that minor.
inline Chain lift_facet(const Matroid& m, const Matroid& minor_carrier,
                        const Chain& sigma, MinorKind kind, int i) {
  if (m.loops() != 0) throw Error("lift needs a loopfree matroid");
  {
    auto fs = facets(minor_carrier);
    if (!std::binary_search(fs.begin(), fs.end(), sigma, ChainLess{}))
      throw Error("chain is not a facet of the minor fan");
  }
  Chain out;
  const bool coloop = contains(m.coloops(), i);
  if (kind == MinorKind::Deletion && !coloop) {
    for (Mask f : sigma) out.push_back(m.closure(minor_carrier.transfer(f, m)));
  } else {
    const Mask ci = m.closure(bit(i));
    out.push_back(ci);
    for (Mask f : sigma) out.push_back(minor_carrier.transfer(f, m) | ci);
  }
  auto fs = facets(m);
  if (!std::binary_search(fs.begin(), fs.end(), out, ChainLess{}))
    throw Error("lifted chain is not a facet");
  return out;
}

/// Facets, codimension-one faces and their incidences for one matroid fan.
class Fan {
 public:
  Fan(const Matroid& m, Mode mode) : carrier_(fan_matroid(m)), mode_(mode) {
    if (mode == Mode::Projective && carrier_.size() == 0)
      throw Error("projective fan needs a nonempty ground set");
    facets_ = rphase::facets(carrier_);
    ridges_ = codim1_faces(carrier_);
    facet_ridges_.resize(facets_.size());
    for (std::size_t r = 0; r < ridges_.size(); ++r) {
      std::vector<int> ids;
      for (const auto& c : adjacent_facets(carrier_, ridges_[r])) {
        int f = facet_index(c);
        ids.push_back(f);
        facet_ridges_[static_cast<std::size_t>(f)].push_back(static_cast<int>(r));
      }
      ridge_facets_.push_back(std::move(ids));
      ridge_tangents_.push_back(tangent_z2(carrier_, ridges_[r], mode_));
    }
    for (const auto& f : facets_)
      facet_tangents_.push_back(tangent_z2(carrier_, f, mode_));
  }

  const Matroid& carrier() const { return carrier_; }
  Mode mode() const { return mode_; }
  int ground_size() const { return carrier_.size(); }
  int dim() const { return carrier_.rank() - (mode_ == Mode::Projective ? 1 : 0); }

  const std::vector<Chain>& facets() const { return facets_; }
  const std::vector<Chain>& ridges() const { return ridges_; }
  const std::vector<int>& ridge_facets(int r) const {
    return ridge_facets_[static_cast<std::size_t>(r)];
  }
  const std::vector<int>& facet_ridges(int f) const {
    return facet_ridges_[static_cast<std::size_t>(f)];
  }
  const gf2::LinearSubspace& facet_tangent(int f) const {
    return facet_tangents_[static_cast<std::size_t>(f)];
  }
  const gf2::LinearSubspace& ridge_tangent(int r) const {
    return ridge_tangents_[static_cast<std::size_t>(r)];
  }

  int facet_index(const Chain& c) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), c, ChainLess{});
    if (it == facets_.end() || *it != c) return -1;
    return static_cast<int>(it - facets_.begin());
  }

  int ridge_index(const Chain& c) const {
    auto it = std::lower_bound(ridges_.begin(), ridges_.end(), c, ChainLess{});
    if (it == ridges_.end() || *it != c) return -1;
    return static_cast<int>(it - ridges_.begin());
  }

  FanFace face(const Chain& c) const {
    return {c, static_cast<int>(c.size()) + (mode_ == Mode::Affine ? 1 : 0)};
  }

  /// Facets whose chain contains every flat of `c`.
  std::vector<int> facets_containing(const Chain& c) const {
    std::vector<int> out;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      const auto& fc = facets_[f];
      if (std::all_of(c.begin(), c.end(), [&](Mask x) {
            return std::find(fc.begin(), fc.end(), x) != fc.end();
          }))
        out.push_back(static_cast<int>(f));
    }
    return out;
  }

  /// All faces: every subchain of a maximal chain, including the empty one.
  std::vector<Chain> faces() const {
    std::set<Chain, ChainLess> out;
    for (const auto& f : facets_) {
      const std::size_t k = f.size();
      for (Mask sel = 0; sel < (Mask{1} << k); ++sel) {
        Chain c;
        for (std::size_t j = 0; j < k; ++j)
          if (contains(sel, static_cast<int>(j))) c.push_back(f[j]);
        out.insert(std::move(c));
      }
    }
    return {out.begin(), out.end()};
  }

  Mask reduce(Mask v) const { return reduce_mode(v, ground_size(), mode_); }

 private:
  Matroid carrier_;
  Mode mode_;
  std::vector<Chain> facets_;
  std::vector<Chain> ridges_;
  std::vector<std::vector<int>> ridge_facets_;
  std::vector<std::vector<int>> facet_ridges_;
  std::vector<gf2::LinearSubspace> facet_tangents_;
  std::vector<gf2::LinearSubspace> ridge_tangents_;
};

}  // namespace rphase
