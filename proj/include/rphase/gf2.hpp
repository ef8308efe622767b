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

// Linear and affine algebra over Z/2 on coordinates indexed by a small
// ground set. Vectors are machine words; subspaces are kept in reduced
// row-echelon form so that equality of point sets is structural equality.

#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rphase/bits.hpp"

namespace rphase::gf2 {

class BitVector {
 public:
  BitVector() = default;
  BitVector(int size, Mask bits) : bits_(bits), size_(size) {
    check_ground_size(size);
    if (!is_subset(bits, full_mask(size)))
      throw Error("bit vector has bits outside its ground set");
  }

  /// Parses a 0/1 string; character k is coordinate k.
  static BitVector parse(std::string_view s) {
    Mask m = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == '1')
        m |= bit(static_cast<int>(k));
      else if (s[k] != '0')
        throw Error("bit vector string may only contain '0' and '1': \"" +
                    std::string(s) + "\"");
    }
    return BitVector(static_cast<int>(s.size()), m);
  }

  static BitVector unit(int size, int i) { return BitVector(size, bit(i)); }
  static BitVector ones(int size) { return BitVector(size, full_mask(size)); }

  Mask bits() const { return bits_; }
  int size() const { return size_; }
  bool test(int i) const { return contains(bits_, i); }

  std::string str() const {
    std::string s(static_cast<std::size_t>(size_), '0');
    for (int i = 0; i < size_; ++i)
      if (test(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  friend BitVector operator+(const BitVector& a, const BitVector& b) {
    if (a.size_ != b.size_) throw Error("ground-size mismatch in vector sum");
    return BitVector(a.size_, a.bits_ ^ b.bits_);
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  Mask bits_ = 0;
  int size_ = 0;
};

/// A linear subspace of Z2^n in reduced row-echelon form. The pivot of a row
/// is its lowest set coordinate; rows are sorted by pivot and every pivot
/// column is zero in all other rows.
class LinearSubspace {
 public:
  LinearSubspace() = default;
  explicit LinearSubspace(int size) : size_(size) { check_ground_size(size); }

  static LinearSubspace span(int size, std::span<const Mask> generators) {
    LinearSubspace w(size);
    for (Mask g : generators) w.insert(g);
    return w;
  }

  static LinearSubspace span(std::span<const BitVector> generators, int size) {
    LinearSubspace w(size);
    for (const auto& g : generators) {
      if (g.size() != size) throw Error("ground-size mismatch in span");
      w.insert(g.bits());
    }
    return w;
  }

  static LinearSubspace whole(int size) {
    LinearSubspace w(size);
    for (int i = 0; i < size; ++i) w.insert(bit(i));
    return w;
  }

  int size() const { return size_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Mask>& rows() const { return rows_; }

  std::vector<BitVector> basis() const {
    std::vector<BitVector> out;
    for (Mask r : rows_) out.emplace_back(size_, r);
    return out;
  }

  Mask pivots() const {
    Mask p = 0;
    for (Mask r : rows_) p |= bit(lowest(r));
    return p;
  }

  /// The canonical coset representative of v: zero on every pivot column.
  Mask reduce(Mask v) const {
    for (Mask r : rows_)
      if (contains(v, lowest(r))) v ^= r;
    return v;
  }

  bool contains_vector(Mask v) const { return reduce(v) == 0; }

  /// Adds a generator; returns false if it was already in the span.
  bool insert(Mask v) {
    if (!is_subset(v, full_mask(size_)))
      throw Error("generator has bits outside its ground set");
    v = reduce(v);
    if (v == 0) return false;
    int p = lowest(v);
    for (Mask& r : rows_)
      if (contains(r, p)) r ^= v;
    rows_.insert(std::upper_bound(rows_.begin(), rows_.end(), v,
                                  [](Mask a, Mask b) {
                                    return lowest(a) < lowest(b);
                                  }),
                 v);
    return true;
  }

  bool includes(const LinearSubspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [&](Mask r) { return contains_vector(r); });
  }

  friend LinearSubspace operator+(const LinearSubspace& a,
                                  const LinearSubspace& b) {
    if (a.size_ != b.size_) throw Error("ground-size mismatch in subspace sum");
    LinearSubspace s = a;
    for (Mask r : b.rows_) s.insert(r);
    return s;
  }

  friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;
  friend auto operator<=>(const LinearSubspace&, const LinearSubspace&) = default;

 private:
  std::vector<Mask> rows_;
  int size_ = 0;
};

/// Intersection of two linear subspaces (Zassenhaus-style elimination).
inline LinearSubspace intersect(const LinearSubspace& a,
                                const LinearSubspace& b) {
  if (a.size() != b.size())
    throw Error("ground-size mismatch in subspace intersection");
  // Rows carry (value, component in a); a row whose value cancels carries an
  // element of a that also lies in b.
  std::vector<std::pair<Mask, Mask>> rows;
  LinearSubspace out(a.size());
  auto push = [&](Mask value, Mask tag) {
    for (const auto& [rv, rt] : rows)
      if (contains(value, lowest(rv))) {
        value ^= rv;
        tag ^= rt;
      }
    if (value == 0) {
      out.insert(tag);
      return;
    }
    int p = lowest(value);
    for (auto& [rv, rt] : rows)
      if (contains(rv, p)) {
        rv ^= value;
        rt ^= tag;
      }
    rows.emplace_back(value, tag);
  };
  for (Mask r : a.rows()) push(r, r);
  for (Mask r : b.rows()) push(r, 0);
  return out;
}

class AffineSubspace {
 public:
  AffineSubspace() = default;
  AffineSubspace(Mask basepoint, LinearSubspace tangent)
      : base_(tangent.reduce(basepoint)), tangent_(std::move(tangent)) {
    if (!is_subset(basepoint, full_mask(tangent_.size())))
      throw Error("basepoint has bits outside its ground set");
  }

  int size() const { return tangent_.size(); }
  int dim() const { return tangent_.dim(); }
  BitVector basepoint() const { return BitVector(size(), base_); }
  Mask base_bits() const { return base_; }
  const LinearSubspace& tangent() const { return tangent_; }

  std::size_t cardinality() const { return std::size_t{1} << dim(); }

  bool contains_point(Mask v) const { return tangent_.reduce(v) == base_; }

  std::vector<Mask> points() const {
    std::vector<Mask> out;
    out.reserve(cardinality());
    const auto& rows = tangent_.rows();
    for (std::size_t k = 0; k < cardinality(); ++k) {
      Mask v = base_;
      for (std::size_t j = 0; j < rows.size(); ++j)
        if ((k >> j) & 1U) v ^= rows[j];
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  AffineSubspace translate(Mask eps) const {
    return AffineSubspace(base_ ^ eps, tangent_);
  }

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;
  friend auto operator<=>(const AffineSubspace&, const AffineSubspace&) = default;

 private:
  Mask base_ = 0;
  LinearSubspace tangent_;
};

inline AffineSubspace canonicalize(const BitVector& basepoint,
                                   std::span<const BitVector> generators) {
  for (const auto& g : generators)
    if (g.size() != basepoint.size())
      throw Error("ground-size mismatch between basepoint and generators");
  return AffineSubspace(basepoint.bits(),
                        LinearSubspace::span(generators, basepoint.size()));
}

inline bool member(const AffineSubspace& a, const BitVector& v) {
  if (a.size() != v.size()) throw Error("ground-size mismatch in membership");
  return a.contains_point(v.bits());
}

inline std::optional<AffineSubspace> intersect(const AffineSubspace& a,
                                               const AffineSubspace& b) {
  if (a.size() != b.size())
    throw Error("ground-size mismatch in affine intersection");
  // a + u = b + w  <=>  u + w = a + b with u in T(a), w in T(b).
  std::vector<std::pair<Mask, Mask>> rows;
  auto eliminate = [&](Mask value, Mask tag) {
    for (const auto& [rv, rt] : rows)
      if (contains(value, lowest(rv))) {
        value ^= rv;
        tag ^= rt;
      }
    return std::pair{value, tag};
  };
  for (Mask r : a.tangent().rows()) rows.emplace_back(eliminate(r, r));
  for (Mask r : b.tangent().rows()) {
    auto row = eliminate(r, 0);
    if (row.first == 0) continue;
    int p = lowest(row.first);
    for (auto& [rv, rt] : rows)
      if (rv && contains(rv, p)) {
        rv ^= row.first;
        rt ^= row.second;
      }
    rows.push_back(row);
  }
  std::erase_if(rows, [](const auto& r) { return r.first == 0; });
  auto [rest, u] = eliminate(a.base_bits() ^ b.base_bits(), 0);
  if (rest != 0) return std::nullopt;
  return AffineSubspace(a.base_bits() ^ u,
                        intersect(a.tangent(), b.tangent()));
}

/// Image under the coordinate projection forgetting the positions in `drop`.
inline AffineSubspace project(const AffineSubspace& a, Mask drop) {
  int n = a.size();
  if (!is_subset(drop, full_mask(n)))
    throw Error("projection drops coordinates outside the ground set");
  int m = n - popcount(drop);
  LinearSubspace t(m);
  for (Mask r : a.tangent().rows()) t.insert(compress(r, drop, n));
  return AffineSubspace(compress(a.base_bits(), drop, n), std::move(t));
}

/// Image in Z2^n / W, represented on the non-pivot coordinates of W.
inline AffineSubspace quotient(const AffineSubspace& a,
                               const LinearSubspace& w) {
  if (a.size() != w.size()) throw Error("ground-size mismatch in quotient");
  LinearSubspace t(a.size());
  for (Mask r : a.tangent().rows()) t.insert(w.reduce(r));
  return AffineSubspace(w.reduce(a.base_bits()), std::move(t));
}

/// Every point of the union lies in an even number of the spaces.
inline bool even_cover_check(std::span<const AffineSubspace> spaces) {
  if (spaces.empty()) throw Error("even cover check needs at least one space");
  std::vector<Mask> pts;
  for (const auto& s : spaces) {
    if (s.size() != spaces.front().size())
      throw Error("ground-size mismatch in even cover check");
    auto p = s.points();
    pts.insert(pts.end(), p.begin(), p.end());
  }
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i < pts.size();) {
    std::size_t j = i;
    while (j < pts.size() && pts[j] == pts[i]) ++j;
    if ((j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

/// Points covered an odd number of times.
inline std::vector<Mask> odd_points(std::span<const AffineSubspace> spaces) {
  std::vector<Mask> pts, odd;
  for (const auto& s : spaces) {
    auto p = s.points();
    pts.insert(pts.end(), p.begin(), p.end());
  }
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i < pts.size();) {
    std::size_t j = i;
    while (j < pts.size() && pts[j] == pts[i]) ++j;
    if ((j - i) % 2 != 0) odd.push_back(pts[i]);
    i = j;
  }
  return odd;
}

/// A cyclic order up to rotation and reversal. The canonical representative
/// starts at the smallest entry and its second entry is the smaller of the
/// two neighbours.
class NecklaceOrdering {
 public:
  NecklaceOrdering() = default;
  explicit NecklaceOrdering(std::vector<int> cycle) : cycle_(std::move(cycle)) {
    if (cycle_.size() < 2) return;
    auto it = std::min_element(cycle_.begin(), cycle_.end());
    std::rotate(cycle_.begin(), it, cycle_.end());
    if (cycle_.size() > 2 && cycle_.back() < cycle_[1])
      std::reverse(cycle_.begin() + 1, cycle_.end());
  }

  const std::vector<int>& cycle() const { return cycle_; }
  std::size_t size() const { return cycle_.size(); }

  friend bool operator==(const NecklaceOrdering&,
                         const NecklaceOrdering&) = default;
  friend auto operator<=>(const NecklaceOrdering&,
                          const NecklaceOrdering&) = default;

 private:
  std::vector<int> cycle_;
};

/// Cycle test for the intersection complex of affine lines. Returns the
/// cyclic order of the indices if the complex is a single cycle through
/// every line.
inline std::optional<NecklaceOrdering> necklace_of_lines(
    std::span<const AffineSubspace> lines) {
  const std::size_t k = lines.size();
  if (k < 2) return std::nullopt;
  for (const auto& l : lines)
    if (l.dim() != 1) throw Error("necklace of lines expects affine lines");
  if (k == 2) {
    if (lines[0] == lines[1]) return NecklaceOrdering({0, 1});
    return std::nullopt;
  }
  // Each point of the union must lie on exactly two lines; those pairs are
  // the edges of the intersection complex.
  std::vector<std::pair<Mask, int>> incidence;
  for (std::size_t i = 0; i < k; ++i)
    for (Mask p : lines[i].points()) incidence.emplace_back(p, static_cast<int>(i));
  std::sort(incidence.begin(), incidence.end());
  std::vector<std::vector<int>> adj(k);
  for (std::size_t a = 0; a < incidence.size();) {
    std::size_t b = a;
    while (b < incidence.size() && incidence[b].first == incidence[a].first) ++b;
    if (b - a != 2) return std::nullopt;
    int u = incidence[a].second, v = incidence[a + 1].second;
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
    a = b;
  }
  for (const auto& nb : adj)
    if (nb.size() != 2 || nb[0] == nb[1]) return std::nullopt;
  std::vector<int> cycle{0};
  int prev = -1, cur = 0;
  while (true) {
    const auto& nb = adj[static_cast<std::size_t>(cur)];
    int next = nb[0] != prev ? nb[0] : nb[1];
    if (next == 0) break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
    if (cycle.size() > k) return std::nullopt;
  }
  if (cycle.size() != k) return std::nullopt;
  return NecklaceOrdering(std::move(cycle));
}

/// Necklace arrangement test for equidimensional affine spaces whose
/// tangents share a codimension-one subspace.
inline std::optional<NecklaceOrdering> necklace_check(
    std::span<const AffineSubspace> spaces) {
  const std::size_t k = spaces.size();
  if (k < 2) return std::nullopt;
  const int d = spaces.front().dim();
  for (const auto& s : spaces)
    if (s.size() != spaces.front().size() || s.dim() != d)
      throw Error("necklace check expects equidimensional spaces on one ground");
  if (k == 2) {
    if (spaces[0] == spaces[1]) return NecklaceOrdering({0, 1});
    return std::nullopt;
  }
  LinearSubspace w = spaces.front().tangent();
  bool parallel = true;
  for (const auto& s : spaces) {
    if (s.tangent() != w) parallel = false;
  }
  if (parallel)
    throw Error("parallel subspaces form a necklace only in the two-space case");
  for (const auto& s : spaces) w = intersect(w, s.tangent());
  if (w.dim() != d - 1)
    throw Error("tangent spaces do not share a codimension-one subspace");
  std::vector<AffineSubspace> lines;
  lines.reserve(k);
  for (const auto& s : spaces) lines.push_back(quotient(s, w));
  return necklace_of_lines(lines);
}

}  // namespace rphase::gf2
