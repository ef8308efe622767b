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

// Oriented matroids stored as full covector sets, and the maps between them
// and real phase structures.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rphase/fan.hpp"
#include "rphase/matroid.hpp"
#include "rphase/phase.hpp"
#include "rphase/rational.hpp"

namespace rphase {

struct SignVector {
  Mask plus = 0;
  Mask minus = 0;

  SignVector() = default;
  SignVector(Mask p, Mask m) : plus(p), minus(m) {
    if (p & m) throw Error("sign vector with an element both positive and negative");
  }

  static SignVector parse(std::string_view s) {
    check_ground_size(static_cast<int>(s.size()));
    SignVector x;
    for (std::size_t k = 0; k < s.size(); ++k) {
      switch (s[k]) {
        case '+': x.plus |= bit(static_cast<int>(k)); break;
        case '-': x.minus |= bit(static_cast<int>(k)); break;
        case '0': break;
        default:
          throw Error(std::string("bad sign character '") + s[k] + "'");
      }
    }
    return x;
  }

  /// (-1)^eps restricted to `support`.
  static SignVector from_exponent(Mask eps, Mask support) {
    return {support & ~eps, support & eps};
  }

  std::string str(int n) const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
      if (contains(plus, i)) s[static_cast<std::size_t>(i)] = '+';
      if (contains(minus, i)) s[static_cast<std::size_t>(i)] = '-';
    }
    return s;
  }

  Mask support() const { return plus | minus; }
  bool is_zero() const { return support() == 0; }
  int at(int i) const { return contains(plus, i) ? 1 : (contains(minus, i) ? -1 : 0); }
  SignVector operator-() const { return {minus, plus}; }

  /// Zero on `f`, unchanged elsewhere.
  SignVector without(Mask f) const { return {plus & ~f, minus & ~f}; }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

inline SignVector compose(const SignVector& x, const SignVector& y) {
  const Mask free = ~x.support();
  return {x.plus | (y.plus & free), x.minus | (y.minus & free)};
}

inline Mask separation(const SignVector& x, const SignVector& y) {
  return (x.plus & y.minus) | (x.minus & y.plus);
}

/// Flips the signs on f.
inline SignVector reflect(const SignVector& x, Mask f) {
  return {(x.plus & ~f) | (x.minus & f), (x.minus & ~f) | (x.plus & f)};
}

/// Sign-orthogonality: disjoint supports, or both agreeing and opposing
/// products on the common support.
inline bool orthogonal(const SignVector& x, const SignVector& y) {
  const Mask same = (x.plus & y.plus) | (x.minus & y.minus);
  const Mask opposite = separation(x, y);
  return (same == 0) == (opposite == 0);
}

struct OMAxiomViolation {
  int axiom = 0;
  SignVector first;
  SignVector second;
  int element = -1;
};

namespace detail {

/// Membership table for sign vectors on at most kMaxGround/2 elements.
class SignSet {
 public:
  explicit SignSet(int n) : n_(n), table_(std::size_t{1} << (2 * n), false) {}
  std::size_t key(const SignVector& x) const {
    return static_cast<std::size_t>(x.plus) | (static_cast<std::size_t>(x.minus) << n_);
  }
  bool has(const SignVector& x) const { return table_[key(x)]; }
  bool add(const SignVector& x) {
    auto k = key(x);
    if (table_[k]) return false;
    table_[k] = true;
    return true;
  }

 private:
  int n_;
  std::vector<bool> table_;
};

inline void check_om_size(int n) {
  if (n < 0 || n > 10) throw Error("oriented matroids are limited to 10 elements");
}

/// Every sign vector on n elements, in ternary order.
template <typename F>
void for_each_sign_vector(int n, F&& f) {
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  while (true) {
    SignVector x;
    for (int i = 0; i < n; ++i) {
      if (digit[static_cast<std::size_t>(i)] == 1) x.plus |= bit(i);
      if (digit[static_cast<std::size_t>(i)] == 2) x.minus |= bit(i);
    }
    f(x);
    int i = 0;
    while (i < n && digit[static_cast<std::size_t>(i)] == 2) digit[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return;
    ++digit[static_cast<std::size_t>(i)];
  }
}

/// Closes {0} plus `generators` under composition.
inline std::vector<SignVector> composition_closure(int n,
                                                   const std::vector<SignVector>& generators) {
  SignSet seen(n);
  std::vector<SignVector> out{SignVector{}};
  seen.add(SignVector{});
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : generators) {
      SignVector c = compose(out[k], g);
      if (seen.add(c)) out.push_back(c);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SignVector> minimal_supports(std::vector<SignVector> xs) {
  std::vector<SignVector> out;
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    bool minimal = std::none_of(xs.begin(), xs.end(), [&](const SignVector& y) {
      return !y.is_zero() && y.support() != x.support() && is_subset(y.support(), x.support());
    });
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Checks the four covector axioms; returns the first violation found.
inline std::optional<OMAxiomViolation> check_covector_axioms(
    int n, const std::vector<SignVector>& covectors) {
  detail::check_om_size(n);
  detail::SignSet set(n);
  for (const auto& x : covectors) {
    if (!is_subset(x.support(), full_mask(n)))
      return OMAxiomViolation{0, x, x, -1};
    set.add(x);
  }
  if (!set.has(SignVector{})) return OMAxiomViolation{1, {}, {}, -1};
  for (const auto& x : covectors)
    if (!set.has(-x)) return OMAxiomViolation{2, x, -x, -1};
  for (const auto& x : covectors)
    for (const auto& y : covectors)
      if (!set.has(compose(x, y))) return OMAxiomViolation{3, x, y, -1};
  for (const auto& x : covectors)
    for (const auto& y : covectors) {
      const Mask s = separation(x, y);
      if (s == 0) continue;
      const SignVector xy = compose(x, y);
      for (int e : elements_of(s)) {
        const SignVector fixed = xy.without(s);
        const std::vector<int> free = elements_of(s & ~bit(e));
        bool found = false;
        // Z agrees with x o y off S(x, y), vanishes at e, is free on the rest.
        std::size_t total = 1;
        for (std::size_t k = 0; k < free.size(); ++k) total *= 3;
        for (std::size_t code = 0; code < total && !found; ++code) {
          SignVector z = fixed;
          std::size_t c = code;
          for (int i : free) {
            if (c % 3 == 1) z.plus |= bit(i);
            if (c % 3 == 2) z.minus |= bit(i);
            c /= 3;
          }
          found = set.has(z);
        }
        if (!found) return OMAxiomViolation{4, x, y, e};
      }
    }
  return std::nullopt;
}

inline std::string describe(const OMAxiomViolation& v, int n) {
  std::string s = "covector axiom " + std::to_string(v.axiom) + " fails";
  if (v.axiom >= 2) s += " at " + v.first.str(n);
  if (v.axiom >= 3) s += ", " + v.second.str(n);
  if (v.axiom == 4) s += " eliminating element " + std::to_string(v.element);
  return s;
}

class OrientedMatroid {
 public:
  /// Validates the covector axioms.
  static OrientedMatroid from_covectors(std::vector<std::string> labels,
                                        std::vector<SignVector> covectors) {
    const int n = static_cast<int>(labels.size());
    detail::check_om_size(n);
    std::sort(covectors.begin(), covectors.end());
    covectors.erase(std::unique(covectors.begin(), covectors.end()), covectors.end());
    if (auto v = check_covector_axioms(n, covectors))
      throw Error("not an oriented matroid: " + describe(*v, n));
    OrientedMatroid om;
    om.labels_ = std::move(labels);
    om.covectors_ = std::move(covectors);
    return om;
  }

  /// X is a covector iff X o T is a tope for every tope T.
  static OrientedMatroid from_topes(std::vector<std::string> labels,
                                    std::vector<SignVector> topes) {
    const int n = static_cast<int>(labels.size());
    detail::check_om_size(n);
    if (topes.empty()) throw Error("empty tope set");
    detail::SignSet set(n);
    for (const auto& t : topes) {
      if (t.support() != full_mask(n)) throw Error("tope without full support");
      set.add(t);
    }
    std::vector<SignVector> cov;
    detail::for_each_sign_vector(n, [&](const SignVector& x) {
      if (std::all_of(topes.begin(), topes.end(),
                      [&](const SignVector& t) { return set.has(compose(x, t)); }))
        cov.push_back(x);
    });
    auto om = from_covectors(std::move(labels), std::move(cov));
    auto back = om.topes();
    std::sort(topes.begin(), topes.end());
    topes.erase(std::unique(topes.begin(), topes.end()), topes.end());
    if (back != topes) throw Error("tope set is not the tope set of an oriented matroid");
    return om;
  }

  /// Covectors are the composition closure of the minimal nonzero sign
  /// vectors orthogonal to every signed circuit.
  static OrientedMatroid from_signed_circuits(std::vector<std::string> labels,
                                              const std::vector<SignVector>& circuits) {
    const int n = static_cast<int>(labels.size());
    detail::check_om_size(n);
    std::vector<SignVector> all;
    for (const auto& c : circuits) {
      if (c.is_zero()) throw Error("zero signed circuit");
      all.push_back(c);
      all.push_back(-c);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<Mask> supports;
    for (const auto& c : all) supports.push_back(c.support());
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    Matroid::from_circuits(labels, supports);

    std::vector<SignVector> orth;
    detail::for_each_sign_vector(n, [&](const SignVector& x) {
      if (std::all_of(all.begin(), all.end(),
                      [&](const SignVector& c) { return orthogonal(x, c); }))
        orth.push_back(x);
    });
    auto cocircuits = detail::minimal_supports(std::move(orth));
    auto om = from_covectors(std::move(labels), detail::composition_closure(n, cocircuits));
    // The covector axioms alone can hold for a different matroid.
    auto back = om.signed_circuits();
    std::sort(back.begin(), back.end());
    if (back != all)
      throw Error("signed circuits are not the circuits of an oriented matroid");
    return om;
  }

  /// Covectors of the column arrangement: sign vectors of the row space.
  static OrientedMatroid from_matrix(std::vector<std::string> labels,
                                     const RationalMatrix& a) {
    const int n = a.cols();
    if (static_cast<int>(labels.size()) != n)
      throw Error("label count does not match matrix columns");
    detail::check_om_size(n);
    const RationalMatrix b = a.row_basis();
    const int r = b.rows();
    std::vector<SignVector> cocircuits;
    if (r > 0) {
      // Each independent (r-1)-subset S spans a hyperplane; the cocircuit is
      // e -> sign det[B_S | b_e].
      for (Mask s = 0; s <= full_mask(n); ++s) {
        if (popcount(s) != r - 1) continue;
        std::vector<int> cols = elements_of(s);
        if (b.columns(cols).rank() != r - 1) continue;
        SignVector y;
        for (int e = 0; e < n; ++e) {
          if (contains(s, e)) continue;
          std::vector<int> with = cols;
          with.push_back(e);
          int sg = sign(b.columns(with).determinant());
          if (sg > 0) y.plus |= bit(e);
          if (sg < 0) y.minus |= bit(e);
        }
        if (y.is_zero()) continue;
        cocircuits.push_back(y);
        cocircuits.push_back(-y);
      }
      std::sort(cocircuits.begin(), cocircuits.end());
      cocircuits.erase(std::unique(cocircuits.begin(), cocircuits.end()), cocircuits.end());
    }
    return from_covectors(std::move(labels), detail::composition_closure(n, cocircuits));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<SignVector>& covectors() const { return covectors_; }

  bool is_covector(const SignVector& x) const {
    return std::binary_search(covectors_.begin(), covectors_.end(), x);
  }

  /// Common zero set of all covectors.
  Mask loops() const {
    Mask s = 0;
    for (const auto& x : covectors_) s |= x.support();
    return full_mask(size()) & ~s;
  }

  /// Maximal covectors: support is everything but the loops.
  std::vector<SignVector> topes() const {
    const Mask top = full_mask(size()) & ~loops();
    std::vector<SignVector> out;
    for (const auto& x : covectors_)
      if (x.support() == top) out.push_back(x);
    return out;
  }

  /// Minimal nonzero covectors.
  std::vector<SignVector> cocircuits() const { return detail::minimal_supports(covectors_); }

  /// Minimal nonzero sign vectors orthogonal to every covector, sorted by
  /// support size, then support, then sign.
  std::vector<SignVector> signed_circuits() const {
    const auto cocirc = cocircuits();
    std::vector<SignVector> orth;
    detail::for_each_sign_vector(size(), [&](const SignVector& x) {
      if (std::all_of(cocirc.begin(), cocirc.end(),
                      [&](const SignVector& c) { return orthogonal(x, c); }))
        orth.push_back(x);
    });
    auto out = detail::minimal_supports(std::move(orth));
    std::sort(out.begin(), out.end(), [](const SignVector& x, const SignVector& y) {
      if (popcount(x.support()) != popcount(y.support()))
        return popcount(x.support()) < popcount(y.support());
      if (x.support() != y.support()) return subset_lex_less(x.support(), y.support());
      return x < y;
    });
    return out;
  }

  friend bool operator==(const OrientedMatroid&, const OrientedMatroid&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<SignVector> covectors_;
};

/// Flats are the complements of covector supports; ranks are heights in
/// the flat lattice.
inline Matroid underlying_matroid(const OrientedMatroid& om) {
  const int n = om.size();
  std::vector<Mask> fl;
  for (const auto& x : om.covectors()) fl.push_back(full_mask(n) & ~x.support());
  std::sort(fl.begin(), fl.end(),
            [](Mask a, Mask b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; });
  fl.erase(std::unique(fl.begin(), fl.end()), fl.end());
  std::vector<int> height(fl.size(), 0);
  for (std::size_t i = 0; i < fl.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (fl[j] != fl[i] && is_subset(fl[j], fl[i]))
        height[i] = std::max(height[i], height[j] + 1);
  std::vector<int> ranks(std::size_t{1} << n, 0);
  for (Mask a = 0; a <= full_mask(n); ++a) {
    // Smallest flat containing a; flats are sorted by size.
    for (std::size_t i = 0; i < fl.size(); ++i)
      if (is_subset(a, fl[i])) {
        ranks[a] = height[i];
        break;
      }
  }
  return Matroid::from_rank_table(om.labels(), std::move(ranks));
}

/// Topes T with T \ F_i a covector for every flat in the chain.
inline std::vector<SignVector> adjacent_topes(const OrientedMatroid& om,
                                              const Chain& chain) {
  const Matroid m = underlying_matroid(om);
  for (Mask f : chain)
    if (!m.is_flat(f)) throw Error("chain contains a set that is not a flat");
  std::vector<SignVector> out;
  for (const auto& t : om.topes())
    if (std::all_of(chain.begin(), chain.end(),
                    [&](Mask f) { return om.is_covector(t.without(f)); }))
      out.push_back(t);
  return out;
}

inline OrientedMatroid reorient_om(const OrientedMatroid& om, Mask s) {
  std::vector<SignVector> cov;
  for (const auto& x : om.covectors()) cov.push_back(reflect(x, s));
  return OrientedMatroid::from_covectors(om.labels(), std::move(cov));
}

/// Deletion projects covectors; contraction keeps those vanishing on the
/// contracted set, then projects.
inline OrientedMatroid om_minor(const OrientedMatroid& om, Mask del, Mask con) {
  const int n = om.size();
  if (del & con) throw Error("deletion and contraction sets overlap");
  if (!is_subset(del | con, full_mask(n))) throw Error("minor set outside the ground set");
  const Mask drop = del | con;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    if (!contains(drop, i)) labels.push_back(om.labels()[static_cast<std::size_t>(i)]);
  std::vector<SignVector> cov;
  for (const auto& x : om.covectors()) {
    if (x.support() & con) continue;
    cov.push_back({compress(x.plus, drop, n), compress(x.minus, drop, n)});
  }
  return OrientedMatroid::from_covectors(std::move(labels), std::move(cov));
}

/// Every covector of q is a covector of om.
inline bool om_is_quotient(const OrientedMatroid& q, const OrientedMatroid& om) {
  if (q.labels() != om.labels()) throw Error("quotient test needs equal ground sets");
  return std::all_of(q.covectors().begin(), q.covectors().end(),
                     [&](const SignVector& x) { return om.is_covector(x); });
}

/// E(sigma_F) = {eps : (-1)^eps is a tope adjacent to F}; loops are removed
/// before building the fan.
inline RealPhaseStructure to_phase(const OrientedMatroid& om, Mode mode = Mode::Affine) {
  const Matroid m = underlying_matroid(om);
  auto fan = make_fan(m, mode);
  const Matroid& carrier = fan->carrier();
  const Mask loops = m.loops();
  const int n = carrier.size();
  const auto topes = om.topes();
  auto affine_tangents = make_fan(m, Mode::Affine);
  std::vector<AffineSubspace> spaces;
  for (std::size_t f = 0; f < fan->facets().size(); ++f) {
    const Chain& sigma = fan->facets()[f];
    std::vector<Mask> pts;
    for (const auto& t : topes) {
      bool adjacent = std::all_of(sigma.begin(), sigma.end(), [&](Mask flat) {
        return om.is_covector(t.without(carrier.transfer(flat, m) | loops));
      });
      if (adjacent) pts.push_back(compress(t.minus, loops, m.size()));
    }
    if (pts.empty()) throw Error("no tope is adjacent to a facet");
    LinearSubspace tangent(n);
    for (Mask p : pts) tangent.insert(p ^ pts.front());
    if (tangent.dim() != affine_tangents->facet_tangent(static_cast<int>(f)).dim() ||
        pts.size() != (std::size_t{1} << tangent.dim()) ||
        tangent != affine_tangents->facet_tangent(static_cast<int>(f)))
      throw Error("adjacent topes do not form a parallel affine subspace");
    spaces.emplace_back(pts.front(), std::move(tangent));
  }
  return RealPhaseStructure(std::move(fan), std::move(spaces));
}

/// The short flag through cl(C \ {i, j}); empty when that closure is empty.
inline Chain gamma_flag(const Matroid& m, Mask circuit, int i, int j) {
  if (i == j) throw Error("gamma needs two distinct elements");
  if (!contains(circuit, i) || !contains(circuit, j))
    throw Error("gamma elements must lie in the circuit");
  const auto cs = circuits(m);
  if (std::find(cs.begin(), cs.end(), circuit) == cs.end())
    throw Error("set is not a circuit");
  const Mask f = m.closure(circuit & ~bit(i) & ~bit(j));
  if (f == m.loops()) return {};
  return {f};
}

/// gamma^C_ij = -(-1)^(eps_i + eps_j) for eps in E extended to the short
/// flag; circuit and elements index the carrier.
inline int gamma_from_phase(const RealPhaseStructure& e, Mask circuit, int i, int j) {
  const Chain tau = gamma_flag(e.carrier(), circuit, i, j);
  const auto pts = extend_to_face(e, tau);
  if (pts.empty()) throw Error("no facet contains the gamma flag");
  std::optional<int> g;
  for (Mask eps : pts) {
    int v = (contains(eps, i) != contains(eps, j)) ? 1 : -1;
    if (g && *g != v) throw Error("inconsistent gamma signs: not a real phase structure");
    g = v;
  }
  return *g;
}

/// gamma^C_ij = -T_i T_j for a tope adjacent to the short flag.
inline int gamma_from_topes(const OrientedMatroid& om, Mask circuit, int i, int j) {
  const Matroid m = underlying_matroid(om);
  Chain tau = gamma_flag(m, circuit, i, j);
  std::optional<int> g;
  for (const auto& t : adjacent_topes(om, tau)) {
    int v = -t.at(i) * t.at(j);
    if (g && *g != v) throw Error("inconsistent gamma signs across topes");
    g = v;
  }
  if (!g) throw Error("no tope adjacent to the gamma flag");
  return *g;
}

/// One representative per circuit, the smallest element positive.
struct SignedCircuitSet {
  std::vector<std::string> labels;
  std::vector<SignVector> circuits;

  std::vector<SignVector> with_negatives() const {
    std::vector<SignVector> out;
    for (const auto& c : circuits) {
      out.push_back(c);
      out.push_back(-c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const SignedCircuitSet&, const SignedCircuitSet&) = default;
};

inline SignVector positive_representative(const SignVector& c) {
  return contains(c.plus, lowest(c.support())) ? c : -c;
}

inline SignedCircuitSet signed_circuits_of(const OrientedMatroid& om) {
  SignedCircuitSet out{om.labels(), {}};
  for (const auto& c : om.signed_circuits()) {
    auto p = positive_representative(c);
    if (out.circuits.empty() || out.circuits.back() != p) out.circuits.push_back(p);
  }
  return out;
}

/// Assembles the gamma description per circuit, checks the triple cocycle
/// condition and emits the positive representative of each signed circuit.
inline SignedCircuitSet signed_circuits_from_phase(const RealPhaseStructure& e) {
  const Matroid& m = e.carrier();
  SignedCircuitSet out{m.labels(), {}};
  for (Mask c : circuits(m)) {
    const std::vector<int> el = elements_of(c);
    const std::size_t k = el.size();
    std::vector<std::vector<int>> g(k, std::vector<int>(k, 1));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        g[a][b] = g[b][a] = gamma_from_phase(e, c, el[a], el[b]);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        for (std::size_t d = b + 1; d < k; ++d)
          if (g[a][b] * g[b][d] * g[a][d] != 1)
            throw Error("gamma cocycle fails on {" + m.label(el[a]) + "," +
                        m.label(el[b]) + "," + m.label(el[d]) + "}");
    SignVector x;
    for (std::size_t a = 0; a < k; ++a) {
      if (g[0][a] > 0 || a == 0)
        x.plus |= bit(el[a]);
      else
        x.minus |= bit(el[a]);
    }
    out.circuits.push_back(x);
  }
  return out;
}

inline OrientedMatroid phase_to_oriented(const RealPhaseStructure& e) {
  auto sc = signed_circuits_from_phase(e);
  return OrientedMatroid::from_signed_circuits(sc.labels, sc.circuits);
}

struct OrientationCount {
  std::size_t count = 0;
  std::size_t nodes = 0;
};

/// Counts orientations of m by backtracking over one sign pattern per
/// circuit, pruning with weak circuit elimination, and validating each
/// complete candidate as an oriented matroid with underlying matroid m.
inline OrientationCount count_orientations_detailed(const Matroid& m) {
  const int n = m.size();
  if (n > 8) throw Error("orientation counting is limited to 8 elements");
  const std::vector<Mask> circ = circuits(m);
  const std::size_t k = circ.size();

  struct Check {
    std::size_t a, b;
    int e;
    std::vector<std::size_t> candidates;
  };
  std::vector<std::vector<Check>> checks_at(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const Mask common = circ[a] & circ[b];
      for (int e : elements_of(common)) {
        const Mask room = (circ[a] | circ[b]) & ~bit(e);
        Check ch{a, b, e, {}};
        std::size_t trigger = b;
        for (std::size_t z = 0; z < k; ++z)
          if (is_subset(circ[z], room)) {
            ch.candidates.push_back(z);
            trigger = std::max(trigger, z);
          }
        checks_at[trigger].push_back(std::move(ch));
      }
    }

  std::vector<SignVector> chosen(k);
  OrientationCount result;
  auto eliminates = [&](const Check& ch) {
    for (int sa : {1, -1})
      for (int sb : {1, -1}) {
        SignVector x = sa > 0 ? chosen[ch.a] : -chosen[ch.a];
        SignVector y = sb > 0 ? chosen[ch.b] : -chosen[ch.b];
        if (!(contains(x.plus, ch.e) && contains(y.minus, ch.e))) continue;
        const Mask p = (x.plus | y.plus) & ~bit(ch.e);
        const Mask q = (x.minus | y.minus) & ~bit(ch.e);
        bool ok = std::any_of(ch.candidates.begin(), ch.candidates.end(), [&](std::size_t z) {
          const SignVector& c = chosen[z];
          return (is_subset(c.plus, p) && is_subset(c.minus, q)) ||
                 (is_subset(c.minus, p) && is_subset(c.plus, q));
        });
        if (!ok) return false;
      }
    return true;
  };
  auto validate = [&]() {
    try {
      auto om = OrientedMatroid::from_signed_circuits(m.labels(), chosen);
      return underlying_matroid(om) == m;
    } catch (const Error&) {
      return false;
    }
  };
  auto descend = [&](auto&& self, std::size_t idx) -> void {
    ++result.nodes;
    if (idx == k) {
      if (validate()) ++result.count;
      return;
    }
    const std::vector<int> el = elements_of(circ[idx]);
    const std::size_t reps = std::size_t{1} << (el.size() - 1);
    for (std::size_t r = 0; r < reps; ++r) {
      SignVector x;
      x.plus = bit(el[0]);
      for (std::size_t t = 1; t < el.size(); ++t) {
        if ((r >> (t - 1)) & 1U)
          x.minus |= bit(el[t]);
        else
          x.plus |= bit(el[t]);
      }
      chosen[idx] = x;
      if (std::all_of(checks_at[idx].begin(), checks_at[idx].end(), eliminates))
        self(self, idx + 1);
    }
  };
  descend(descend, 0);
  return result;
}

inline std::size_t count_orientations(const Matroid& m) {
  return count_orientations_detailed(m).count;
}

}  // namespace rphase
