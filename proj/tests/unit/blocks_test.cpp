#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "torblocks/blocks.hpp"
#include "torblocks/json_io.hpp"

using namespace torblocks;

namespace {

const LieType A1 = LieType::make('A', 1);
const LieType A2 = LieType::make('A', 2);
const LieType C2 = LieType::make('C', 2);

TorusPoint pt(std::initializer_list<Rational> c) { return TorusPoint(std::vector<Rational>(c)); }

AffineWeight aff(const LieType& t, std::int64_t level, IntVector fin, Rational delta = 0) {
  return AffineWeight{t, level, FiniteWeight{t, std::move(fin)}, delta};
}

XiCharacter single_xi(const LieType& t, std::int64_t level, const std::string& cls) {
  return XiCharacter::make(t, 2, {{pt({1}), XiValue{level, GammaClass::parse(t, cls)}}});
}

bool has_code(const CharacterType& c, const std::string& code) {
  return std::any_of(c.diagnostics.begin(), c.diagnostics.end(), [&](const auto& d) { return d.code == code; });
}

PiFunction two_point(const AffineWeight& a, const AffineWeight& b) {
  return PiFunction::make(a.type, 2, {{pt({1}), a}, {pt({-1}), b}});
}

}  // namespace

TEST(Blocks, ClassifyExamples) {
  EXPECT_EQ(classify_type(single_xi(A2, 1, "w1")).tag, TypeTag::TypeII);
  const auto a2_3 = classify_type(single_xi(A2, 3, "w1"));
  EXPECT_EQ(a2_3.tag, TypeTag::TypeI);
  ASSERT_TRUE(a2_3.witness.has_value());
  EXPECT_EQ(a2_3.witness->realizations.size(), 3u);
  EXPECT_EQ(a2_3.witness->realizations[0].coeffs, (IntVector{0, 2}));
  const auto c2 = classify_type(single_xi(C2, 1, "0"));
  EXPECT_EQ(c2.tag, TypeTag::TypeI);
  EXPECT_EQ(c2.witness->realizations.size(), 2u);
  EXPECT_THROW(classify_type(single_xi(A2, 0, "w1")), ValidationError);
  EXPECT_THROW(classify_type(single_xi(A2, -1, "w1")), ValidationError);
}

TEST(Blocks, DiscrepancyDiagnostics) {
  const auto e8 = classify_type(single_xi(LieType::make('E', 8), 1, "0"));
  EXPECT_EQ(e8.tag, TypeTag::TypeII);
  EXPECT_TRUE(has_code(e8, kDiagTypeDiscrepancy));
  // C2 at level 1 in class w1 has the single realization omega_1.
  const auto c2 = classify_type(single_xi(C2, 1, "w1"));
  EXPECT_EQ(c2.tag, TypeTag::TypeII);
  EXPECT_TRUE(has_code(c2, kDiagTypeDiscrepancy));
  EXPECT_TRUE(classify_type(single_xi(A2, 1, "w1")).diagnostics.empty());
}

TEST(Blocks, StabilizerDiagnostic) {
  const auto v = XiValue{1, GammaClass::parse(A2, "w1")};
  const auto sym = XiCharacter::make(A2, 2, {{pt({1}), v}, {pt({-1}), v}});
  EXPECT_EQ(stabilizer_size(sym), 2u);
  EXPECT_TRUE(has_code(classify_type(sym), kDiagStabilizer));
  const auto asym = XiCharacter::make(A2, 2, {{pt({1}), v}, {pt({3}), v}});
  EXPECT_EQ(stabilizer_size(asym), 1u);
  EXPECT_FALSE(has_code(classify_type(asym), kDiagStabilizer));
}

TEST(Blocks, TwoPointBlockIds) {
  const auto lam = aff(A1, 1, {1});
  const auto p = two_point(lam, lam);
  const auto id0 = block_id(p, {0});
  const auto id1 = block_id(p, {1});
  EXPECT_EQ(id0.kind, TypeTag::TypeII);
  EXPECT_NE(id0, id1);
  EXPECT_EQ(block_id(p, {2}), id0);
  EXPECT_EQ(block_id(p, {-1}), id1);

  const auto q = two_point(aff(A1, 1, {1}), aff(A1, 1, {0}));
  EXPECT_EQ(block_id(q, {0}), block_id(q, {1}));
  EXPECT_FALSE(same_block(p, {0}, p, {1}));
  EXPECT_TRUE(same_block(p, {0}, p, {2}));
}

TEST(Blocks, SingleAnchorNormalization) {
  const auto p = PiFunction::make(A2, 3, {{pt({2, -3}), aff(A2, 1, {1, 0}, 5)}});
  const auto id = block_id(p, {4, 1});
  ASSERT_EQ(id.kind, TypeTag::TypeII);
  EXPECT_EQ(id.pi.entries()[0].point, TorusPoint::ones(2));
  EXPECT_EQ(id.pi.entries()[0].weight.delta, 0);
  EXPECT_EQ(id.coset, (BigVector{0, 0}));
  const auto q = PiFunction::make(A2, 3, {{pt({2, -3}), aff(A2, 3, {1, 0})}});
  const auto idq = block_id(q, {0, 0});
  ASSERT_EQ(idq.kind, TypeTag::TypeI);
  EXPECT_EQ(idq.xi.entries()[0].point, TorusPoint::ones(2));
}

TEST(Blocks, SameBlockExamples) {
  // Level-3 values omega_1 and 2 omega_1 + omega_2 at the same point.
  const auto p1 = PiFunction::make(A2, 2, {{pt({2}), aff(A2, 3, {1, 0})}, {pt({5}), aff(A2, 1, {0, 1})}});
  const auto p2 = PiFunction::make(A2, 2, {{pt({2}), aff(A2, 3, {2, 1})}, {pt({5}), aff(A2, 1, {0, 1})}});
  EXPECT_TRUE(same_block(p1, {0}, p2, {1}));
  EXPECT_TRUE(same_block(p1, {3}, pi_scale_action({Rational(2, 3)}, p1), {3}));
  // Different total level.
  const auto p3 = PiFunction::make(A2, 2, {{pt({2}), aff(A2, 1, {1, 0})}});
  EXPECT_FALSE(same_block(p1, {0}, p3, {0}));
  // Same level, different character orbit.
  const auto p4 = PiFunction::make(A2, 2, {{pt({2}), aff(A2, 3, {0, 0})}, {pt({5}), aff(A2, 1, {0, 1})}});
  EXPECT_FALSE(same_block(p1, {0}, p4, {0}));
  EXPECT_THROW(same_block(p1, {0}, PiFunction::make(A1, 2, {{pt({1}), aff(A1, 1, {1})}}), {0}), ValidationError);
}

TEST(Blocks, LevelZeroBlocks) {
  EXPECT_TRUE(level_zero_block(XiCharacter::make(A2, 2, {})).empty());
  const auto w1 = GammaClass::parse(A2, "w1"), w2 = GammaClass::parse(A2, "w2");
  const auto a = XiCharacter::make(A2, 2, {{pt({2}), {0, w1}}, {pt({3}), {0, w2}}});
  const auto b = XiCharacter::make(A2, 2, {{pt({6}), {0, w1}}, {pt({9}), {0, w2}}});
  EXPECT_EQ(level_zero_block(a), level_zero_block(b));
  EXPECT_NE(level_zero_block(XiCharacter::make(A2, 2, {{pt({2}), {0, w1}}})),
            level_zero_block(XiCharacter::make(A2, 2, {{pt({2}), {0, w2}}})));
  EXPECT_THROW(level_zero_block(single_xi(A2, 1, "w1")), ValidationError);
}

TEST(BlocksProperty, SameBlockAgreesWithBlockIdAndIsEquivalence) {
  gen::Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& t = gen::pick(rng, gen::small_types());
    const std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 2, 3));
    std::vector<std::pair<PiFunction, IntVector>> family;
    const auto base = gen::pi(rng, t, k, 3, 3, true);
    family.emplace_back(base, gen::coset(rng, k - 1));
    for (int i = 0; i < 4; ++i) {
      const auto& [p, g] = family[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<std::int64_t>(family.size()) - 1))];
      const auto next = gen::uniform(rng, 0, 1) ? pi_scale_action(gen::scaling(rng, k - 1), p) : gen::rerealize(rng, p);
      family.emplace_back(next, gen::uniform(rng, 0, 1) ? g : gen::coset(rng, k - 1));
    }
    family.emplace_back(gen::pi(rng, t, k, 3, 3, true), gen::coset(rng, k - 1));
    std::vector<BlockId> ids;
    for (const auto& [p, g] : family) ids.push_back(block_id(p, g));
    const std::size_t n = family.size();
    for (std::size_t a = 0; a < n; ++a) {
      EXPECT_TRUE(same_block(family[a].first, family[a].second, family[a].first, family[a].second));
      for (std::size_t b = 0; b < n; ++b) {
        const bool ab = same_block(family[a].first, family[a].second, family[b].first, family[b].second);
        EXPECT_EQ(ab, ids[a] == ids[b]) << "trial " << trial;
        EXPECT_EQ(ab, same_block(family[b].first, family[b].second, family[a].first, family[a].second));
        for (std::size_t c = 0; c < n; ++c) {
          if (ab && same_block(family[b].first, family[b].second, family[c].first, family[c].second)) {
            EXPECT_TRUE(same_block(family[a].first, family[a].second, family[c].first, family[c].second));
          }
        }
      }
    }
  }
}

TEST(BlocksProperty, TypeIIBlockCountEqualsIndex) {
  gen::Rng rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 2, 4));
    // Level-1 values of a simply-laced type are always type II.
    const auto p = gen::pi(rng, A2, k, 4, 1, true);
    ASSERT_EQ(classify_type(chi(p)).tag, TypeTag::TypeII);
    const auto r = g_pi(p);
    std::set<std::string> distinct;
    for (const auto& rep : r.quotient.coset_reps) {
      distinct.insert(json_io::block_id_to_json(block_id(p, to_small(rep))).dump());
    }
    EXPECT_EQ(Integer(static_cast<unsigned long>(distinct.size())), *r.quotient.index);
  }
}

TEST(BlocksProperty, ClassifyIsScaleInvariant) {
  gen::Rng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& t = gen::pick(rng, gen::small_types());
    const std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 2, 4));
    const auto xi = chi(gen::pi(rng, t, k, 4, 3));
    EXPECT_EQ(classify_type(xi_scale_action(gen::scaling(rng, k - 1), xi)).tag, classify_type(xi).tag);
  }
}

TEST(BlocksProperty, BlockIdIsScaleInvariantAndCanonical) {
  gen::Rng rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& t = gen::pick(rng, gen::small_types());
    const std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 2, 4));
    const auto p = gen::pi(rng, t, k, 4, 2);
    const auto g = gen::coset(rng, k - 1);
    const auto id = block_id(p, g);
    EXPECT_EQ(block_id(pi_scale_action(gen::scaling(rng, k - 1), p), g), id);
    if (id.kind == TypeTag::TypeI) {
      EXPECT_EQ(canonical_orbit_rep(id.xi), id.xi);
    } else {
      EXPECT_EQ(canonical_orbit_rep(id.pi), id.pi);
    }
  }
}

TEST(BlocksProperty, SimplyLacedLevelOneIsTypeIIAndNonSimplyLacedZeroIsTypeI) {
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "E7"}) {
    const auto t = LieType::parse(name);
    for (int i : j0_set(t)) {
      EXPECT_EQ(classify_type(single_xi(t, 1, "w" + std::to_string(i))).tag, TypeTag::TypeII) << name;
    }
  }
  for (const char* name : {"B3", "B4", "C2", "C3", "F4", "G2"}) {
    const auto t = LieType::parse(name);
    for (std::int64_t l = 1; l <= 4; ++l) EXPECT_EQ(classify_type(single_xi(t, l, "0")).tag, TypeTag::TypeI) << name;
  }
}
