#include <gtest/gtest.h>

#include "gorth/errors.hpp"
#include "gorth/normal_forms.hpp"
#include "gorth/labels.hpp"
#include "gorth/structures.hpp"

using namespace gorth;

namespace {

Mat diag(std::initializer_list<Rat> d) {
  Mat m(d.size(), d.size());
  std::size_t i = 0;
  for (const auto& x : d) m(i, i) = x, ++i;
  return m;
}

Triple two_dim() { return {SymForm(diag({0, 1})), Mat{{0, 2}, {0, 0}}, unit_vector(2, 0)}; }

}  // namespace

TEST(ValidateTriple, SpecExamples) {
  EXPECT_TRUE(validate_triple(two_dim()).ok);

  auto bad = validate_triple({SymForm(diag({0, 1})), Mat{{0, 0}, {2, 0}}, unit_vector(2, 0)});
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.identity, "xi*v0 == 0");
  EXPECT_EQ(bad.row, 1u);

  auto nondeg = validate_triple({SymForm(Mat::identity(2)), Mat(2, 2), unit_vector(2, 0)});
  EXPECT_FALSE(nondeg.ok);
  EXPECT_NE(nondeg.identity.find("radical"), std::string::npos);
}

TEST(ValidateTriple, SkewIdentityAndShapes) {
  auto v = validate_triple({SymForm(diag({0, 1, 1})), Mat{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}, unit_vector(3, 0)});
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.identity, "xi^T*gram + gram*xi == 0");
  EXPECT_EQ(v.report(), "violation: xi^T*gram + gram*xi == 0 at (1,2)");
  EXPECT_FALSE(validate_triple({SymForm(diag({0, 1})), Mat(3, 3), unit_vector(2, 0)}).ok);
  EXPECT_FALSE(validate_triple({SymForm(diag({0, 1})), Mat(2, 2), Vec{0, 0}}).ok);
  EXPECT_FALSE(validate_triple({SymForm(diag({0, 1})), Mat(2, 2), unit_vector(2, 1)}).ok);
}

TEST(ValidateGroupElement, SpecExamples) {
  SymForm g(diag({0, 1}));
  Vec v0 = unit_vector(2, 0);
  EXPECT_TRUE(validate_group_element({Mat::identity(2)}, g, v0).ok);
  // The spec's note settles on "ok": translations (1, b^T; 0, I) are members.
  EXPECT_TRUE(validate_group_element({Mat{{1, 3}, {0, 1}}}, g, v0).ok);
  EXPECT_FALSE(validate_group_element({Mat{{1, 0}, {0, 2}}}, g, v0).ok);
  EXPECT_FALSE(validate_group_element({Mat{{1, 0}, {1, 1}}}, g, v0).ok);
}

TEST(Conjugate, SpecExamples) {
  Triple t = two_dim();
  EXPECT_EQ(conjugate(t, {Mat::identity(2)}), t);
  EXPECT_EQ(conjugate(t, {Mat{{1, 5}, {0, 1}}}).xi, (Mat{{0, 2}, {0, 0}}));
  EXPECT_THROW(conjugate(t, {Mat{{1, 0}, {0, 2}}}), PreconditionError);
}

TEST(Conjugate, GroupActionLaws) {
  Triple t = assemble(parse_label("S:double[s=2] + T:even[k=0,-]"));
  GroupElement g = random_group_element(t, 1), h = random_group_element(t, 2);
  Triple gt = conjugate(t, g);
  EXPECT_TRUE(validate_triple(gt).ok);
  EXPECT_EQ(conjugate(gt, {inverse(g.a)}), t);
  EXPECT_EQ(conjugate(gt, h), conjugate(t, {h.a * g.a}));
}

TEST(Cayley, SpecExamples) {
  SymForm i2(Mat::identity(2));
  EXPECT_EQ(cayley_group_element(i2, Mat(2, 2), Vec{0, 0}).a, Mat::identity(3));
  // (I - s)(I + s)^-1 for s = [[0,1],[-1,0]] is [[0,-1],[1,0]]; the spec's
  // printed value has the opposite sign.
  GroupElement g = cayley_group_element(i2, Mat{{0, 1}, {-1, 0}}, Vec{0, 0});
  EXPECT_EQ(g.a, (Mat{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}));
  Mat at{{0, -1}, {1, 0}};
  EXPECT_EQ(at.transpose() * at, Mat::identity(2));
}

TEST(Cayley, TranslationPartIsGroupElement) {
  SymForm gt(Mat{{0, 1}, {1, 0}});
  GroupElement g = cayley_group_element(gt, Mat{{2, 0}, {0, -2}}, Vec{3, -1});
  EXPECT_EQ(g.a(0, 1), Rat(3));
  EXPECT_EQ(g.a(0, 2), Rat(-1));
  Mat full{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  EXPECT_TRUE(validate_group_element(g, SymForm(full), unit_vector(3, 0)).ok);
  EXPECT_THROW(cayley_group_element(SymForm(Mat::identity(2)), Mat{{1, 0}, {0, 1}}, Vec{0, 0}), PreconditionError);
  EXPECT_THROW(cayley_group_element(SymForm(Mat{{0, 1}, {1, 0}}), Mat{{0, 1}, {-1, 0}}, Vec{0, 0}),
               PreconditionError);
}

TEST(RandomGroupElement, AlwaysValidAndDeterministic) {
  Triple t = assemble(parse_label("S:single[s=3,eps=-,a2=4] + T:pair[k=1]"), Rat(2));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GroupElement g = random_group_element(t, seed);
    EXPECT_TRUE(validate_group_element(g, t.form, t.v0).ok);
    bool translated = false;
    for (std::size_t j = 1; j < t.dim(); ++j) translated |= !g.a(0, j).is_zero();
    EXPECT_TRUE(translated);
    EXPECT_EQ(g.a, random_group_element(t, seed).a);
  }
  EXPECT_NE(random_group_element(t, 1).a, random_group_element(t, 2).a);
  EXPECT_EQ(trial_seed(5, 3), trial_seed(5, 3));
  EXPECT_NE(trial_seed(5, 3), trial_seed(5, 4));
}

TEST(FittingSplit, SpecExamples) {
  Triple nil = two_dim();
  EXPECT_EQ(fitting_split(nil).nonzero.dim(), 0u);

  Triple mixed{SymForm(diag({0, 1, -1})), Mat{{0, 0, 0}, {0, 0, 2}, {0, 2, 0}}, unit_vector(3, 0)};
  FittingSplit f = fitting_split(mixed);
  ASSERT_EQ(f.nilpotent_basis.size(), 1u);
  EXPECT_EQ(f.nilpotent_basis[0], unit_vector(3, 0));
  ASSERT_EQ(f.nonzero_basis.size(), 2u);
  EXPECT_TRUE(linearly_independent({unit_vector(3, 0), f.nonzero_basis[0], f.nonzero_basis[1]}, 3));
  for (const auto& u : f.nonzero_basis) EXPECT_TRUE(u[0].is_zero());
  EXPECT_TRUE(validate_pair(f.nonzero).ok);
  EXPECT_EQ(f.nilpotent.dim(), 1u);

  Triple zero{SymForm(diag({0, 1, -1})), Mat(3, 3), unit_vector(3, 0)};
  FittingSplit z = fitting_split(zero);
  EXPECT_EQ(z.nilpotent.dim(), 3u);
  EXPECT_EQ(z.nonzero.dim(), 0u);
}

TEST(FittingSplit, PartsAreOrthogonalAndNilpotent) {
  // Nilpotent normal form plus a hyperbolic block with eigenvalues +-1,
  // hidden by a group element.
  Triple base = assemble(parse_label("S:double[s=1] + T:even[k=0,+]"));
  Mat gram = direct_sum({base.form.gram(), Mat{{0, 1}, {1, 0}}});
  Mat xi = direct_sum({base.xi, Mat{{1, 0}, {0, -1}}});
  Vec v0 = unit_vector(6, 0);
  Triple t{SymForm(gram), xi, v0};
  ASSERT_TRUE(validate_triple(t).ok);
  t = conjugate(t, random_group_element(t, 3));

  FittingSplit f = fitting_split(t);
  EXPECT_EQ(f.nilpotent.dim(), 4u);
  EXPECT_EQ(f.nonzero.dim(), 2u);
  EXPECT_TRUE(validate_triple(f.nilpotent).ok);
  EXPECT_TRUE(mat_power(f.nilpotent.xi, 4).is_zero());
  EXPECT_TRUE(f.nonzero.form.nondegenerate());
  for (const auto& a : f.nilpotent_basis)
    for (const auto& b : f.nonzero_basis) EXPECT_TRUE(t.form(a, b).is_zero());
}
