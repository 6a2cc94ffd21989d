#include <gtest/gtest.h>

#include "qblock/qexpr.hpp"

using namespace qblock;

namespace {

const QGroupExpr S1 = QGroupExpr::symq(1);
const QGroupExpr S2 = QGroupExpr::symq(2);
const QGroupExpr S3 = QGroupExpr::symq(3);
const QGroupExpr S4 = QGroupExpr::symq(4);
const QGroupExpr T = QGroupExpr::trivial();

QGroupExpr cyclic(int k) {
  Permutation p(k);
  for (int i = 0; i < k; ++i) p[i] = (i + 1) % k;
  return normalize(QGroupExpr::classical(ClassicalPermGroup{k, {p}, static_cast<std::uint64_t>(k)}));
}

QGroupExpr dihedral(int k) {
  Permutation r(k), s(k);
  for (int i = 0; i < k; ++i) {
    r[i] = (i + 1) % k;
    s[i] = (k - i) % k;
  }
  return normalize(QGroupExpr::classical(ClassicalPermGroup{k, {r, s}, static_cast<std::uint64_t>(2 * k)}));
}

}  // namespace

TEST(FreeProduct, UnitFlattenAndSort) {
  EXPECT_EQ(free_product({T, S2}), S2);
  EXPECT_EQ(free_product({S2, S2}), QGroupExpr::raw_free_product({S2, S2}));
  EXPECT_EQ(free_product({free_product({S3, S2}), S2}), QGroupExpr::raw_free_product({S2, S2, S3}));
  EXPECT_EQ(free_product({T, T}), T);
  EXPECT_THROW(free_product({}), EmptyList);
}

TEST(FreeWreath, Rules) {
  EXPECT_EQ(free_wreath(T, S3), S3);
  EXPECT_EQ(free_wreath(S2, S1), S2);
  EXPECT_EQ(free_wreath(S2, T), S2);
  EXPECT_EQ(free_wreath(S2, S2), QGroupExpr::raw_free_wreath(S2, S2));
  EXPECT_EQ(free_wreath(S2, free_product({S2, S3})), free_product({free_wreath(S2, S2), free_wreath(S2, S3)}));
  EXPECT_THROW(free_wreath(S2, QGroupExpr::raw_free_wreath(T, S2)), BadOuter);
}

TEST(InhomFreeWreath, PropositionRewrites) {
  // equal fibres
  EXPECT_EQ(inhom_free_wreath({{S2, 2}}, S2), free_wreath(S2, S2));
  EXPECT_EQ(inhom_free_wreath({{S2, 2}, {S2, 1}}, cyclic(3)), free_wreath(S2, cyclic(3)));
  // trivial base
  EXPECT_EQ(inhom_free_wreath({{S2, 1}, {S3, 1}}, T), free_product({S2, S3}));
  // base a free product of S^+ acting orbit by orbit
  auto a = S2, b = cyclic(3);
  EXPECT_EQ(inhom_free_wreath({{a, 2}, {b, 3}}, free_product({S2, S3})),
            free_product({free_wreath(a, S2), free_wreath(b, S3)}));
  // fixed points of the base keep their fibre
  EXPECT_EQ(inhom_free_wreath({{a, 2}, {b, 1}}, S2), free_product({free_wreath(a, S2), b}));
  // trivial fibres
  EXPECT_EQ(inhom_free_wreath({{T, 2}, {T, 3}}, dihedral(5)), dihedral(5));
}

TEST(InhomFreeWreath, KeptWhenNothingApplies) {
  auto e = inhom_free_wreath({{S3, 5}, {S2, 5}}, dihedral(10));
  ASSERT_TRUE(e.is(Kind::InhomFreeWreath));
  auto fs = e.orbit_factors();
  EXPECT_EQ(fs.front().group, S2);  // sorted
  EXPECT_EQ(e.base(), dihedral(10));
  EXPECT_EQ(classical_shadow_order(e), BigInt(32) * BigInt(7776) * 20);
}

TEST(InhomFreeWreath, OrbitMismatch) {
  EXPECT_THROW(inhom_free_wreath({}, S2), OrbitMismatch);
  EXPECT_THROW(inhom_free_wreath({{S2, 0}}, S2), OrbitMismatch);
  EXPECT_THROW(inhom_free_wreath({{S2, 1}}, S3), OrbitMismatch);
  EXPECT_THROW(inhom_free_wreath({{S2, 2}}, T), OrbitMismatch);
}

TEST(Normalize, RewritesAndIdempotence) {
  EXPECT_EQ(normalize(S1), T);
  EXPECT_EQ(normalize(QGroupExpr::classical(ClassicalPermGroup{4, {}, 1})), T);
  auto raw = QGroupExpr::raw_free_product({S1, QGroupExpr::raw_free_wreath(T, S3), QGroupExpr::raw_free_product({S2, T})});
  auto e = normalize(raw);
  EXPECT_EQ(e, free_product({S2, S3}));
  EXPECT_EQ(normalize(e), e);
  auto inhom = QGroupExpr::raw_inhom_free_wreath({{S2, 1}, {S2, 1}}, QGroupExpr::raw_free_product({S1, S1}));
  EXPECT_EQ(normalize(inhom), free_product({S2, S2}));
}

TEST(Normalize, ClassicalGeneratorsCanonicalised) {
  Permutation r{1, 2, 0}, r2{2, 0, 1};
  auto a = normalize(QGroupExpr::classical({3, {r}, 3}));
  auto b = normalize(QGroupExpr::classical({3, {r2}, 3}));
  EXPECT_EQ(a, b);
}

TEST(Classical, Predicate) {
  EXPECT_TRUE(is_classical(T));
  EXPECT_TRUE(is_classical(S3));
  EXPECT_FALSE(is_classical(S4));
  EXPECT_TRUE(is_classical(dihedral(5)));
  EXPECT_FALSE(is_classical(free_wreath(S2, S2)));
  EXPECT_FALSE(is_classical(free_product({S2, S2})));
}

TEST(Shadow, Orders) {
  EXPECT_EQ(classical_shadow_order(free_wreath(S2, S2)), 8);
  EXPECT_EQ(classical_shadow_order(free_product({S2, S2})), 4);
  EXPECT_EQ(classical_shadow_order(S3), 6);
  EXPECT_EQ(classical_shadow_order(T), 1);
  // big values do not overflow
  auto big = free_wreath(free_wreath(S4, QGroupExpr::symq(20)), QGroupExpr::symq(20));
  EXPECT_EQ(classical_shadow_order(big), boost::multiprecision::pow(BigInt(24), 400) *
                                             boost::multiprecision::pow(factorial(20), 21));
}

TEST(Degree, Semantics) {
  EXPECT_FALSE(degree(T).has_value());
  EXPECT_EQ(degree(S3), 3u);
  EXPECT_EQ(degree(free_product({S2, S3})), 5u);
  EXPECT_EQ(degree(free_wreath(S2, S3)), 6u);
  EXPECT_EQ(degree(dihedral(5)), 5u);
}

TEST(Orbits, Sandwich) {
  std::vector<VertexSet> aut{{0, 1}, {2}, {3}};
  std::vector<VertexSet> wl{{2}, {0, 1}, {3}};
  EXPECT_EQ(quantum_orbits(S4, aut, wl), (std::vector<VertexSet>{{0, 1}, {2}, {3}}));
  std::vector<VertexSet> coarse{{0, 1}, {2, 3}};
  EXPECT_EQ(quantum_orbits(dihedral(4), aut, coarse), aut);
  EXPECT_THROW(quantum_orbits(S4, aut, coarse), OrbitGap);
}

TEST(Render, Text) {
  EXPECT_EQ(render(T, RenderFormat::text), "1");
  EXPECT_EQ(render(free_wreath(S2, S2), RenderFormat::text), "S^+(2) wr* S^+(2)");
  EXPECT_EQ(render(free_product({S2, S2}), RenderFormat::text), "S^+(2) * S^+(2)");
  EXPECT_EQ(render(dihedral(5), RenderFormat::text), "D_5");
  EXPECT_EQ(render(cyclic(5), RenderFormat::text), "Z_5");
  EXPECT_EQ(render(free_product({free_wreath(S2, S2), S3}), RenderFormat::text), "S^+(3) * (S^+(2) wr* S^+(2))");
  auto e = inhom_free_wreath({{S3, 5}, {S2, 5}}, dihedral(10));
  EXPECT_EQ(render(e, RenderFormat::text), "(S^+(2),S^+(3)) wrwr* D_10");
}

TEST(Render, SymmetricAndGenericCatalog) {
  Permutation a{1, 0, 2, 3}, b{0, 2, 1, 3}, c{0, 1, 3, 2};
  auto s4 = normalize(QGroupExpr::classical({4, {a, b, c}, 24}));
  EXPECT_EQ(render(s4, RenderFormat::text), "S_4");
  Permutation x{1, 0, 2, 3, 4, 5}, y{0, 1, 3, 2, 4, 5}, z{0, 1, 2, 3, 5, 4};
  auto c2cubed = normalize(QGroupExpr::classical({6, {x, y, z}, 8}));
  EXPECT_EQ(render(c2cubed, RenderFormat::text), "Grp(order=8)");
}

TEST(Render, LatexAndJson) {
  EXPECT_EQ(render(free_wreath(S2, S2), RenderFormat::latex), "S_{2}^{+} \\wr_{*} S_{2}^{+}");
  EXPECT_EQ(render(S2, RenderFormat::json), R"({"n":2,"t":"symq"})");
  for (const auto& e : {T, S3, free_wreath(S2, S2), free_product({S2, dihedral(5)}), inhom_free_wreath({{S3, 5}, {S2, 5}}, dihedral(10))})
    EXPECT_EQ(from_json(nlohmann::json::parse(render(e, RenderFormat::json))), e);
  EXPECT_THROW(from_json(nlohmann::json::parse(R"({"t":"nope"})")), std::invalid_argument);
}
