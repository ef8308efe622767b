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

#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "rphase/fixtures.hpp"
#include "rphase/io.hpp"
#include "rphase/oriented.hpp"

namespace rphase {
namespace {

SignVector sv(const char* s) { return SignVector::parse(s); }

std::vector<OrientedMatroid> om_fixtures() {
  return {fixtures::u24_oriented(), fixtures::u34_oriented(), fixtures::u35_oriented(),
          fixtures::k4_oriented()};
}

TEST(SignVector, Operations) {
  EXPECT_EQ(compose(sv("+-0"), SignVector{}), sv("+-0"));
  EXPECT_EQ(compose(sv("+00"), sv("--+")), sv("+-+"));
  EXPECT_EQ(separation(sv("+-0"), sv("--+")), bit(0));
  // Reflecting (-1)^eps along F gives (-1)^(eps + eps_F).
  for (Mask eps = 0; eps < 16; ++eps)
    for (Mask f = 0; f < 16; ++f)
      EXPECT_EQ(reflect(SignVector::from_exponent(eps, 15), f), SignVector::from_exponent(eps ^ f, 15));
  EXPECT_EQ(sv("+-0").str(3), "+-0");
  EXPECT_THROW(sv("+x"), Error);
  EXPECT_THROW(SignVector(1, 1), Error);
}

TEST(Covectors, Axioms) {
  auto om = fixtures::u34_oriented();
  EXPECT_FALSE(check_covector_axioms(4, om.covectors()).has_value());
  EXPECT_FALSE(check_covector_axioms(3, {SignVector{}}).has_value());
  auto cov = om.covectors();
  auto topes = om.topes();
  cov.erase(std::find(cov.begin(), cov.end(), topes.front()));
  auto v = check_covector_axioms(4, cov);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(v->axiom == 2 || v->axiom == 3);
  EXPECT_THROW(OrientedMatroid::from_covectors(om.labels(), cov), Error);
}

// Face-lattice intervals of length two have exactly two interior elements.
TEST(Covectors, DiamondProperty) {
  for (const auto& om : om_fixtures()) {
    const auto m = underlying_matroid(om);
    const auto& cov = om.covectors();
    auto dim = [&](const SignVector& x) { return m.rank() - m.rank(m.ground() & ~x.support()); };
    auto below = [](const SignVector& x, const SignVector& y) {
      return is_subset(x.plus, y.plus) && is_subset(x.minus, y.minus) && x != y;
    };
    for (const auto& x : cov)
      for (const auto& y : cov) {
        if (!below(x, y) || dim(y) != dim(x) + 2) continue;
        int between = 0;
        for (const auto& z : cov) between += below(x, z) && below(z, y);
        EXPECT_EQ(between, 2);
      }
  }
}

TEST(OrientedMatroid, FromTopes) {
  auto om = fixtures::u34_oriented();
  auto again = OrientedMatroid::from_topes(om.labels(), om.topes());
  EXPECT_EQ(again, om);
  EXPECT_EQ(again.topes().size(), 14U);
  EXPECT_EQ(underlying_matroid(again), fixtures::u34());

  std::vector<SignVector> full;
  for (Mask eps = 0; eps < 8; ++eps) full.push_back(SignVector::from_exponent(eps, 7));
  auto free_om = OrientedMatroid::from_topes(Matroid::default_labels(3), full);
  EXPECT_EQ(underlying_matroid(free_om), fixtures::boolean(3));

  EXPECT_EQ(fixtures::u24_oriented().topes().size(), 8U);
  auto bad = om.topes();
  bad.pop_back();
  EXPECT_THROW(OrientedMatroid::from_topes(om.labels(), bad), Error);
}

TEST(OrientedMatroid, FromSignedCircuits) {
  EXPECT_EQ(fixtures::k4_oriented(), io::om_from_json(fixtures::k4_matrix_doc()));
  auto pair = OrientedMatroid::from_signed_circuits({"a", "b"}, {sv("++")});
  EXPECT_EQ(underlying_matroid(pair).rank(), 1);
  EXPECT_EQ(pair.topes().size(), 2U);
}

TEST(OrientedMatroid, FanoSignsAlwaysFail) {
  auto fano = fixtures::fano();
  auto circ = circuits(fano);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SignVector> cs;
    for (Mask c : circ) {
      SignVector x;
      for (int e : elements_of(c)) (rng() & 1U ? x.plus : x.minus) |= bit(e);
      cs.push_back(x);
    }
    EXPECT_THROW(OrientedMatroid::from_signed_circuits(fano.labels(), cs), Error);
  }
}

TEST(OrientedMatroid, FromMatrix) {
  auto id = RationalMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto free_om = OrientedMatroid::from_matrix(Matroid::default_labels(3), id);
  EXPECT_EQ(free_om.topes().size(), 8U);
  auto zero = OrientedMatroid::from_matrix({"a", "b"}, RationalMatrix(2, 2));
  EXPECT_EQ(zero.covectors().size(), 1U);
  EXPECT_EQ(zero.loops(), 3U);
  // Rank-deficient input: a repeated row changes nothing.
  auto doubled = RationalMatrix::from_rows({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 3}});
  EXPECT_EQ(OrientedMatroid::from_matrix(Matroid::default_labels(4), doubled), fixtures::u34_oriented());
}

TEST(OrientedMatroid, UnderlyingMatroid) {
  EXPECT_EQ(underlying_matroid(fixtures::u34_oriented()), fixtures::u34());
  EXPECT_EQ(underlying_matroid(fixtures::k4_oriented()), fixtures::k4());
  EXPECT_EQ(underlying_matroid(fixtures::u35_oriented()), fixtures::u35());
}

TEST(OrientedMatroid, ToposCountMatchesCharacteristicPolynomial) {
  for (const auto& om : om_fixtures())
    EXPECT_EQ(static_cast<long long>(om.topes().size()),
              std::llabs(characteristic_polynomial(underlying_matroid(om))(-1)));
}

TEST(OrientedMatroid, AdjacentTopes) {
  auto k4 = fixtures::k4_oriented();
  auto m = underlying_matroid(k4);
  Chain flag{m.mask_of(std::vector<std::string>{"e12"}),
             m.mask_of(std::vector<std::string>{"e12", "e13", "e23"})};
  auto adj = adjacent_topes(k4, flag);
  EXPECT_EQ(adj.size(), 8U);
  EXPECT_NE(std::find(adj.begin(), adj.end(), sv("++++++")), adj.end());
  EXPECT_EQ(adjacent_topes(k4, Chain{}).size(), k4.topes().size());
  EXPECT_THROW(adjacent_topes(k4, Chain{0b000011}), Error);
}

TEST(OrientedMatroid, ToPhase) {
  auto k4 = fixtures::k4_phase();
  EXPECT_TRUE(verify(k4).ok);
  auto single = OrientedMatroid::from_topes({"a"}, {sv("+"), sv("-")});
  auto e = to_phase(single);
  ASSERT_EQ(e.spaces().size(), 1U);
  EXPECT_EQ(e.at(0).points(), (std::vector<Mask>{0, 1}));
  EXPECT_EQ(to_phase(fixtures::u24_oriented(), Mode::Projective), fixtures::u24_phase());
  for (const auto& om : om_fixtures()) {
    auto p = to_phase(om);
    EXPECT_TRUE(verify(p).ok);
    EXPECT_TRUE(verify_necklace(p).ok);
  }
}

TEST(OrientedMatroid, ToPhaseDropsLoops) {
  auto with_loop = OrientedMatroid::from_matrix(
      {"a", "z", "b"}, RationalMatrix::from_rows({{1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(with_loop.loops(), bit(1));
  auto e = to_phase(with_loop);
  EXPECT_EQ(e.carrier().labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(verify(e).ok);
}

TEST(Gamma, K4Example) {
  auto e = fixtures::k4_phase();
  Mask c = e.carrier().mask_of(std::vector<std::string>{"e12", "e13", "e23"});
  EXPECT_EQ(gamma_from_phase(e, c, 1, 3), -1);
  EXPECT_THROW(gamma_from_phase(e, c, 1, 1), Error);
  EXPECT_THROW(gamma_from_phase(e, 0b000111, 0, 1), Error);
}

TEST(Gamma, PhaseAgreesWithTopes) {
  for (const auto& om : om_fixtures()) {
    auto e = to_phase(om);
    for (Mask c : circuits(e.carrier())) {
      auto el = elements_of(c);
      for (std::size_t a = 0; a < el.size(); ++a)
        for (std::size_t b = a + 1; b < el.size(); ++b)
          EXPECT_EQ(gamma_from_phase(e, c, el[a], el[b]), gamma_from_topes(om, c, el[a], el[b]));
    }
  }
}

// The short flag and every maximal flag through it give the same sign.
TEST(Gamma, MaximalCompletionsAgree) {
  auto m = fixtures::u34();
  for (const auto& e : search_phase_structures(m).structures)
    for (Mask c : circuits(m)) {
      auto el = elements_of(c);
      for (std::size_t a = 0; a < el.size(); ++a)
        for (std::size_t b = a + 1; b < el.size(); ++b) {
          int g = gamma_from_phase(e, c, el[a], el[b]);
          Chain flag = gamma_flag(m, c, el[a], el[b]);
          for (int f : e.fan().facets_containing(flag))
            for (Mask eps : e.at(f).points())
              EXPECT_EQ(g, contains(eps, el[a]) != contains(eps, el[b]) ? 1 : -1);
        }
    }
}

TEST(SignedCircuits, RecoveredFromPhase) {
  auto k4 = fixtures::k4_oriented();
  auto rec = signed_circuits_from_phase(to_phase(k4));
  EXPECT_EQ(rec, signed_circuits_of(k4));
  EXPECT_EQ(io::to_json(rec), fixtures::k4_oriented_doc());

  // Two parallel elements: one reorientation class. The structure through
  // 00 has topes ++ and --, so its circuit is +-; flipping b gives ++.
  auto m = Matroid::from_circuits({"a", "b"}, {0b11});
  auto found = search_phase_structures(m).structures;
  ASSERT_EQ(found.size(), 2U);
  for (const auto& e : found) {
    auto sc = signed_circuits_from_phase(e);
    ASSERT_EQ(sc.circuits.size(), 1U);
    EXPECT_EQ(sc.circuits.front(), e.at(0).contains_point(0) ? sv("+-") : sv("++"));
    EXPECT_EQ(signed_circuits_from_phase(reorient(e, bit(1))).circuits.front(),
              e.at(0).contains_point(0) ? sv("++") : sv("+-"));
  }

  // U_{3,4} from columns e1, e2, e3, e1+e2+e3: the kernel vector
  // (1, 1, 1, -1) is the signed circuit.
  auto u34 = signed_circuits_from_phase(fixtures::u34_phase());
  ASSERT_EQ(u34.circuits.size(), 1U);
  EXPECT_EQ(u34.circuits.front(), sv("+++-"));
  EXPECT_EQ(u34, signed_circuits_of(fixtures::u34_oriented()));
}

TEST(SignedCircuits, CocycleFailureIsReported) {
  // Breaking one facet breaks gamma consistency.
  auto e = fixtures::u34_phase();
  auto spaces = e.spaces();
  spaces[0] = spaces[0].translate(bit(3));
  RealPhaseStructure bad(e.fan_ptr(), spaces);
  EXPECT_FALSE(verify(bad).ok);
  EXPECT_THROW(signed_circuits_from_phase(bad), Error);
}

TEST(PhaseToOriented, RoundTrips) {
  for (const auto& om : om_fixtures()) {
    auto e = to_phase(om);
    auto back = phase_to_oriented(e);
    EXPECT_EQ(back, om);
    EXPECT_EQ(underlying_matroid(back), e.carrier());
    // Topes are the signs of the points over the vertex.
    std::vector<SignVector> from_points;
    for (Mask eps : extend_to_face(e, Chain{}))
      from_points.push_back(SignVector::from_exponent(eps, e.carrier().ground()));
    std::sort(from_points.begin(), from_points.end());
    EXPECT_EQ(from_points, om.topes());
  }
}

TEST(Reorientation, CommutesWithToPhase) {
  auto k4 = fixtures::k4_oriented();
  EXPECT_EQ(reorient_om(k4, 0), k4);
  for (Mask s : {Mask{0b000001}, Mask{0b011010}, Mask{0b111111}})
    EXPECT_EQ(to_phase(reorient_om(k4, s)), reorient(to_phase(k4), s));
}

TEST(Minors, CommuteWithToPhase) {
  for (const auto& om : {fixtures::u35_oriented(), fixtures::k4_oriented()}) {
    auto e = to_phase(om);
    for (int i = 0; i < om.size(); ++i) {
      EXPECT_EQ(to_phase(om_minor(om, bit(i), 0)), phase_minor(e, bit(i), 0));
      EXPECT_EQ(to_phase(om_minor(om, 0, bit(i))), phase_minor(e, 0, bit(i)));
    }
  }
  EXPECT_THROW(om_minor(fixtures::k4_oriented(), 1, 1), Error);
}

TEST(Quotients, MatchRealSubfans) {
  auto big = fixtures::u34_oriented();
  auto big_phase = to_phase(big);
  int quotients = 0;
  for (const auto& e : search_phase_structures(fixtures::u24()).structures) {
    auto small = phase_to_oriented(e);
    bool q = om_is_quotient(small, big);
    EXPECT_EQ(q, is_real_subfan(to_phase(small), big_phase));
    quotients += q;
  }
  EXPECT_EQ(quotients, 12);
}

TEST(CountOrientations, SmallMatroids) {
  EXPECT_EQ(count_orientations(fixtures::fano()), 0U);
  EXPECT_EQ(count_orientations(fixtures::u34()), 8U);
  // The only covector set is {0, +, -}.
  EXPECT_EQ(count_orientations(Matroid::uniform(1, 1)), 1U);
  for (const auto& m : {fixtures::u23(), fixtures::u24(), fixtures::u35(), fixtures::k4(),
                        fixtures::parallel_pairs(), fixtures::boolean(2), fixtures::boolean(4)})
    EXPECT_EQ(count_orientations(m), search_phase_structures(m).structures.size());
  EXPECT_THROW(count_orientations(Matroid::uniform(2, 9)), Error);
}

}  // namespace
}  // namespace rphase
