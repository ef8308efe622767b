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

// Matroids stored as a full rank table over all subsets of the ground set.
// Every constructor normalizes into the table and checks the rank axioms.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rphase/bits.hpp"
#include "rphase/rational.hpp"

namespace rphase {

/// A strictly increasing chain of proper nonempty flats, bottom first.
using Chain = std::vector<Mask>;

struct AxiomViolation {
  int axiom = 0;  // 1: bounds, 2: monotone, 3: submodular
  Mask first = 0;
  Mask second = 0;
};

class Matroid {
 public:
  Matroid() = default;

  static Matroid from_rank_table(std::vector<std::string> labels,
                                 std::vector<int> ranks) {
    Matroid m(std::move(labels));
    if (ranks.size() != (std::size_t{1} << m.size()))
      throw Error("rank table must have 2^n entries");
    for (std::size_t a = 0; a < ranks.size(); ++a) {
      if (ranks[a] < 0 || ranks[a] > 255) throw Error("rank out of range");
      m.ranks_[a] = static_cast<std::uint8_t>(ranks[a]);
    }
    m.validate_or_throw();
    return m;
  }

  static Matroid from_circuits(std::vector<std::string> labels,
                               std::vector<Mask> circuits);
  static Matroid from_bases(std::vector<std::string> labels,
                            std::vector<Mask> bases);
  /// Graphic matroid; the edge order fixes the ground-set order.
  static Matroid from_graph(std::vector<std::string> labels, int vertices,
                            const std::vector<std::pair<int, int>>& edges);
  /// Column matroid of an exact rational matrix.
  static Matroid from_matrix(std::vector<std::string> labels,
                             const RationalMatrix& matrix);

  /// U_{k,n} on labels "1".."n".
  static Matroid uniform(int rank, int n) {
    Matroid m(default_labels(n));
    for (Mask a = 0; a <= full_mask(n); ++a)
      m.ranks_[a] = static_cast<std::uint8_t>(std::min(popcount(a), rank));
    return m;
  }

  static std::vector<std::string> default_labels(int n) {
    std::vector<std::string> l;
    for (int i = 1; i <= n; ++i) l.push_back(std::to_string(i));
    return l;
  }

  int size() const { return static_cast<int>(labels_.size()); }
  Mask ground() const { return full_mask(size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  int rank() const { return rank(ground()); }
  int rank(Mask a) const { return ranks_[a]; }

  Mask closure(Mask a) const {
    Mask c = a;
    const int r = rank(a);
    for (int i = 0; i < size(); ++i)
      if (!contains(a, i) && rank(a | bit(i)) == r) c |= bit(i);
    return c;
  }

  bool is_flat(Mask a) const { return closure(a) == a; }
  Mask loops() const { return closure(0); }

  Mask coloops() const {
    Mask c = 0;
    for (int i = 0; i < size(); ++i)
      if (rank(ground() & ~bit(i)) < rank()) c |= bit(i);
    return c;
  }

  int index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error("unknown element label \"" + label + "\"");
    return static_cast<int>(it - labels_.begin());
  }

  Mask mask_of(std::span<const std::string> labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= bit(index_of(l));
    return m;
  }

  std::vector<std::string> labels_of(Mask m) const {
    std::vector<std::string> out;
    for (int i : elements_of(m)) out.push_back(label(i));
    return out;
  }

  /// Re-indexes a subset of this ground set onto another labelled ground set.
  Mask transfer(Mask m, const Matroid& target) const {
    Mask out = 0;
    for (int i : elements_of(m)) out |= bit(target.index_of(label(i)));
    return out;
  }

  std::optional<AxiomViolation> check_axioms() const {
    const int n = size();
    if (ranks_[0] != 0) return AxiomViolation{1, 0, 0};
    for (Mask a = 0; a <= full_mask(n); ++a) {
      for (int i = 0; i < n; ++i) {
        if (contains(a, i)) continue;
        int d = rank(a | bit(i)) - rank(a);
        if (d < 0) return AxiomViolation{2, a, a | bit(i)};
        if (d > 1) return AxiomViolation{1, a | bit(i), 0};
        for (int j = i + 1; j < n; ++j) {
          if (contains(a, j)) continue;
          if (rank(a | bit(i)) + rank(a | bit(j)) <
              rank(a | bit(i) | bit(j)) + rank(a))
            return AxiomViolation{3, a | bit(i), a | bit(j)};
        }
      }
    }
    return std::nullopt;
  }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  explicit Matroid(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    check_ground_size(size());
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw Error("duplicate element labels");
    ranks_.assign(std::size_t{1} << size(), 0);
  }

  void validate_or_throw() const {
    if (auto v = check_axioms()) {
      std::string msg = "rank axiom " + std::to_string(v->axiom) +
                        " violated at subsets " + std::to_string(v->first) +
                        " and " + std::to_string(v->second);
      throw Error(msg);
    }
  }

  void fill_from_independence(const std::vector<bool>& indep) {
    const std::size_t total = std::size_t{1} << size();
    for (std::size_t a = 1; a < total; ++a) {
      if (indep[a]) {
        ranks_[a] = static_cast<std::uint8_t>(popcount(static_cast<Mask>(a)));
        continue;
      }
      std::uint8_t best = 0;
      for (int i : elements_of(static_cast<Mask>(a)))
        best = std::max(best, ranks_[a & ~bit(i)]);
      ranks_[a] = best;
    }
  }

  friend Matroid minor(const Matroid&, Mask, Mask);
  friend Matroid direct_sum(std::span<const Matroid>);

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> ranks_;
};

inline std::vector<Mask> circuits(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask a = 1; a <= m.ground(); ++a) {
    int k = popcount(a);
    if (m.rank(a) != k - 1) continue;
    bool minimal = true;
    for (int i : elements_of(a))
      if (m.rank(a & ~bit(i)) != k - 1) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](Mask x, Mask y) {
    return popcount(x) != popcount(y) ? popcount(x) < popcount(y)
                                      : subset_lex_less(x, y);
  });
  return out;
}

inline std::vector<Mask> bases(const Matroid& m) {
  std::vector<Mask> out;
  const int r = m.rank();
  for (Mask a = 0; a <= m.ground(); ++a)
    if (popcount(a) == r && m.rank(a) == r) out.push_back(a);
  return out;
}

inline Matroid Matroid::from_circuits(std::vector<std::string> labels,
                                      std::vector<Mask> circs) {
  Matroid m(std::move(labels));
  for (Mask c : circs) {
    if (c == 0) throw Error("the empty set is not a circuit");
    if (!is_subset(c, m.ground())) throw Error("circuit outside ground set");
    for (Mask d : circs)
      if (d != c && is_subset(d, c))
        throw Error("circuits do not form a clutter");
  }
  std::vector<bool> indep(std::size_t{1} << m.size(), true);
  for (Mask a = 0; a <= m.ground(); ++a)
    for (Mask c : circs)
      if (is_subset(c, a)) {
        indep[a] = false;
        break;
      }
  m.fill_from_independence(indep);
  m.validate_or_throw();
  std::sort(circs.begin(), circs.end());
  circs.erase(std::unique(circs.begin(), circs.end()), circs.end());
  auto derived = circuits(m);
  std::sort(derived.begin(), derived.end());
  if (derived != circs)
    throw Error("circuit list violates the circuit elimination axiom");
  return m;
}

inline Matroid Matroid::from_bases(std::vector<std::string> labels,
                                   std::vector<Mask> bs) {
  Matroid m(std::move(labels));
  if (bs.empty()) throw Error("empty basis list");
  const int r = popcount(bs.front());
  for (Mask b : bs) {
    if (popcount(b) != r) throw Error("bases are not equicardinal");
    if (!is_subset(b, m.ground())) throw Error("basis outside ground set");
  }
  std::vector<bool> indep(std::size_t{1} << m.size(), false);
  for (Mask a = 0; a <= m.ground(); ++a)
    for (Mask b : bs)
      if (is_subset(a, b)) {
        indep[a] = true;
        break;
      }
  m.fill_from_independence(indep);
  m.validate_or_throw();
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  if (bases(m) != bs) throw Error("basis list violates the exchange axiom");
  return m;
}

inline Matroid Matroid::from_graph(std::vector<std::string> labels,
                                   int vertices,
                                   const std::vector<std::pair<int, int>>& edges) {
  Matroid m(std::move(labels));
  if (static_cast<int>(edges.size()) != m.size())
    throw Error("graph must have one edge per element");
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw Error("edge endpoint outside vertex range");
  std::vector<int> parent(static_cast<std::size_t>(vertices));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (Mask a = 0; a <= m.ground(); ++a) {
    std::iota(parent.begin(), parent.end(), 0);
    int r = 0;
    for (int e : elements_of(a)) {
      int x = find(edges[static_cast<std::size_t>(e)].first);
      int y = find(edges[static_cast<std::size_t>(e)].second);
      if (x != y) {
        parent[static_cast<std::size_t>(x)] = y;
        ++r;
      }
    }
    m.ranks_[a] = static_cast<std::uint8_t>(r);
  }
  return m;
}

inline Matroid Matroid::from_matrix(std::vector<std::string> labels,
                                    const RationalMatrix& matrix) {
  Matroid m(std::move(labels));
  if (matrix.cols() != m.size())
    throw Error("matrix must have one column per element");
  for (Mask a = 1; a <= m.ground(); ++a)
    m.ranks_[a] = static_cast<std::uint8_t>(matrix.columns(elements_of(a)).rank());
  return m;
}

/// Deletes `del` and contracts `con`; the remaining labels keep their order.
inline Matroid minor(const Matroid& m, Mask del, Mask con) {
  if (del & con) throw Error("deletion and contraction sets overlap");
  if (!is_subset(del | con, m.ground())) throw Error("minor set outside ground");
  const Mask gone = del | con;
  std::vector<std::string> labels;
  for (int i = 0; i < m.size(); ++i)
    if (!contains(gone, i)) labels.push_back(m.label(i));
  Matroid out(std::move(labels));
  const int n = m.size();
  const int rc = m.rank(con);
  for (Mask a = 0; a <= out.ground(); ++a)
    out.ranks_[a] = static_cast<std::uint8_t>(m.rank(expand(a, gone, n) | con) - rc);
  return out;
}

/// The loopfree matroid whose fan is attached to m: all loops contracted.
inline Matroid fan_matroid(const Matroid& m) { return minor(m, 0, m.loops()); }

inline Matroid direct_sum(std::span<const Matroid> parts) {
  std::vector<std::string> labels;
  for (const auto& p : parts)
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw Error("direct sum requires disjoint element labels");
  Matroid out(std::move(labels));
  for (Mask a = 0; a <= out.ground(); ++a) {
    int r = 0, offset = 0;
    for (const auto& p : parts) {
      r += p.rank((a >> offset) & p.ground());
      offset += p.size();
    }
    out.ranks_[a] = static_cast<std::uint8_t>(r);
  }
  return out;
}

struct Flat {
  Mask elements = 0;
  int rank = 0;
  friend bool operator==(const Flat&, const Flat&) = default;
};

/// Lattice of flats, grouped by rank and ordered lexicographically within a
/// rank. covers[i] lists the indices of the flats covering flats[i].
struct FlatLattice {
  std::vector<Flat> flats;
  std::vector<std::vector<int>> covers;

  int index_of(Mask f) const {
    for (std::size_t i = 0; i < flats.size(); ++i)
      if (flats[i].elements == f) return static_cast<int>(i);
    return -1;
  }
};

inline FlatLattice flats(const Matroid& m) {
  FlatLattice lat;
  for (Mask a = 0; a <= m.ground(); ++a)
    if (m.is_flat(a)) lat.flats.push_back({a, m.rank(a)});
  std::sort(lat.flats.begin(), lat.flats.end(), [](const Flat& x, const Flat& y) {
    return x.rank != y.rank ? x.rank < y.rank
                            : subset_lex_less(x.elements, y.elements);
  });
  lat.covers.resize(lat.flats.size());
  for (std::size_t i = 0; i < lat.flats.size(); ++i)
    for (std::size_t j = 0; j < lat.flats.size(); ++j)
      if (lat.flats[j].rank == lat.flats[i].rank + 1 &&
          is_subset(lat.flats[i].elements, lat.flats[j].elements))
        lat.covers[i].push_back(static_cast<int>(j));
  return lat;
}

/// Integer polynomial, coefficient k multiplies t^k.
struct Polynomial {
  std::vector<long long> coeffs;

  long long operator()(long long t) const {
    long long v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
  }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// chi_M(t) = sum over flats F of mu(0, F) t^(r - rk F); zero if M has loops.
inline Polynomial characteristic_polynomial(const Matroid& m) {
  Polynomial p;
  p.coeffs.assign(static_cast<std::size_t>(m.rank()) + 1, 0);
  if (m.loops() != 0) return p;
  auto lat = flats(m);
  std::vector<long long> mu(lat.flats.size(), 0);
  for (std::size_t i = 0; i < lat.flats.size(); ++i) {
    if (i == 0) {
      mu[i] = 1;
    } else {
      long long s = 0;
      for (std::size_t j = 0; j < i; ++j)
        if (lat.flats[j].elements != lat.flats[i].elements &&
            is_subset(lat.flats[j].elements, lat.flats[i].elements))
          s += mu[j];
      mu[i] = -s;
    }
    p.coeffs[static_cast<std::size_t>(m.rank() - lat.flats[i].rank)] += mu[i];
  }
  return p;
}

/// Checks that the chain consists of strictly increasing proper flats that
/// strictly contain the loops.
inline void check_chain(const Matroid& m, const Chain& chain) {
  Mask prev = m.loops();
  for (Mask f : chain) {
    if (!m.is_flat(f)) throw Error("chain entry is not a flat");
    if (f == m.ground()) throw Error("chain entries must be proper flats");
    if (!is_subset(prev, f) || f == prev)
      throw Error("chain is not strictly increasing");
    prev = f;
  }
}

/// M_F: the direct sum of the minors M|F_i / F_{i-1} along the flag
/// cl(empty) = F_0 < F_1 < ... < F_k < F_{k+1} = E.
inline Matroid chain_minor_sum(const Matroid& m, const Chain& chain) {
  check_chain(m, chain);
  std::vector<Matroid> parts;
  Mask prev = m.loops();
  auto add_part = [&](Mask top) {
    parts.push_back(minor(m, m.ground() & ~top, prev));
    prev = top;
  };
  for (Mask f : chain) add_part(f);
  add_part(m.ground());
  return direct_sum(parts);
}

/// Every flat of `coarse` is a flat of `fine`.
inline bool is_quotient(const Matroid& coarse, const Matroid& fine) {
  if (coarse.labels() != fine.labels())
    throw Error("quotient test needs matroids on the same ground set");
  for (Mask a = 0; a <= coarse.ground(); ++a)
    if (coarse.is_flat(a) && !fine.is_flat(a)) return false;
  return true;
}

}  // namespace rphase
