#include <random>

#include "ckp/error.hpp"
#include "ckp/io.hpp"
#include "ckp/model.hpp"
#include "ckp/oracle.hpp"
#include "gtest/gtest.h"
#include "support.hpp"

namespace ckp {
namespace {

using testing::MakeGroup;
using testing::MakeInequality;
using testing::MakePoint;

ErrorKind KindOf(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kResource;
}

TEST(InstanceTest, Dimensions) {
  const Instance inst = testing::InstanceB21();
  EXPECT_EQ(inst.num_groups(), 5);
  EXPECT_EQ(inst.dimension(), 7u);
  EXPECT_EQ(inst.index({4, 2}), 4u);
  EXPECT_EQ(inst.var_at(6), (VarRef{5, 2}));
  EXPECT_TRUE(inst.contains({5, 2}));
  EXPECT_FALSE(inst.contains({5, 3}));
  EXPECT_FALSE(inst.contains({0, 1}));
  EXPECT_EQ((VarRef{4, 2}).ToString(), "x_{4,2}");
}

TEST(InstanceTest, RejectsBadData) {
  EXPECT_EQ(KindOf([] { Instance::Create({MakeGroup({-1})}, 3); }), ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { Instance::Create({MakeGroup({1}, {-2})}, 3); }), ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { Instance::Create({MakeGroup({1})}, 0); }), ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { Instance::Create({}, 1); }), ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { Instance::Create({MakeGroup({})}, 1); }), ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { Instance::Create({MakeGroup({1, 2}, {1})}, 1); }),
            ErrorKind::kValidation);
  try {
    Instance::Create({MakeGroup({1}), MakeGroup({4, -3})}, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("2,2"), std::string::npos) << e.what();
  }
}

TEST(NormalizeTest, SortsByWeightThenProfit) {
  const Instance inst = Instance::Create({MakeGroup({6, 10}, {1, 2})}, 7);
  const Normalized n = Normalize(inst);
  EXPECT_EQ(n.instance.group(1).weights, (std::vector<Rational>{10, 6}));
  EXPECT_EQ(n.instance.group(1).profits, (std::vector<Rational>{2, 1}));
  EXPECT_EQ(n.permutation[0], (std::vector<int>{2, 1}));
  EXPECT_FALSE(n.is_identity());

  const Instance ties = Instance::Create({MakeGroup({5, 5, 5}, {1, 3, 1})}, 7);
  EXPECT_EQ(Normalize(ties).permutation[0], (std::vector<int>{2, 1, 3}));
}

TEST(NormalizeTest, WorkedExampleIsAlreadyNormal) {
  const Normalized n = Normalize(testing::InstanceB21());
  EXPECT_TRUE(n.is_identity());
  EXPECT_EQ(n.instance, testing::InstanceB21());
}

TEST(NormalizeTest, IdempotentAndPreservesOptimum) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> v(0, 12), n(1, 3), m(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Group> gs;
    const int groups = m(rng);
    for (int i = 0; i < groups; ++i) {
      std::vector<std::int64_t> a, c;
      for (int j = n(rng); j > 0; --j) {
        a.push_back(v(rng));
        c.push_back(v(rng));
      }
      gs.push_back(MakeGroup(a, c));
    }
    const Instance inst = Instance::Create(gs, Rational(1 + v(rng)));
    const Normalized once = Normalize(inst);
    EXPECT_TRUE(once.instance.is_normalized());
    EXPECT_EQ(Normalize(once.instance).instance, once.instance);
    EXPECT_TRUE(Normalize(once.instance).is_identity());

    SparseVector profits, nprofits;
    for (VarRef x : inst.variables()) profits.set(x, inst.profit(x));
    for (VarRef x : once.instance.variables()) nprofits.set(x, once.instance.profit(x));
    const MaximizeResult r = MaximizeOverS(once.instance, nprofits);
    const Point back = once.ToInput(r.argmax);
    EXPECT_TRUE(IsFeasible(inst, back));
    EXPECT_EQ(Dot(inst, profits, back), r.value);
    EXPECT_EQ(testing::BruteMax(inst, profits), r.value);
  }
}

TEST(AssumptionsTest, WorkedExamplePasses) {
  const AssumptionReport r = ValidateAssumptions(testing::InstanceB21());
  EXPECT_TRUE(r.assumption1);
  EXPECT_TRUE(r.assumption2);
  EXPECT_EQ(r.m0, (std::vector<int>{1, 2, 3}));
  EXPECT_FALSE(r.trivial_optimum.has_value());
}

TEST(AssumptionsTest, AllSingletonsIsAContinuousKnapsack) {
  const Instance inst =
      Instance::Create({MakeGroup({4}, {4}), MakeGroup({3}, {6}), MakeGroup({5}, {5})}, 6);
  const AssumptionReport r = ValidateAssumptions(inst);
  EXPECT_FALSE(r.assumption1);
  EXPECT_TRUE(r.assumption2);
  ASSERT_TRUE(r.trivial_optimum.has_value());
  // Ratio order 2, 1, 1: x2 = 1, then 3 units left for the ratio-1 items.
  EXPECT_EQ(r.trivial_optimum->value, Rational(9));
  EXPECT_TRUE(IsFeasible(inst, r.trivial_optimum->point));
}

TEST(AssumptionsTest, LooseCapacityGivesBestSlots) {
  const Instance inst = Instance::Create({MakeGroup({5, 3}, {1, 4}), MakeGroup({2}, {7})}, 100);
  const AssumptionReport r = ValidateAssumptions(inst);
  EXPECT_FALSE(r.assumption2);
  ASSERT_TRUE(r.trivial_optimum.has_value());
  EXPECT_EQ(r.trivial_optimum->value, Rational(11));
  EXPECT_EQ(r.trivial_optimum->point, MakePoint({{1, 2, 1}, {2, 1, 1}}));
}

TEST(EvaluateTest, Basics) {
  const Instance inst = testing::InstanceB36();
  const LinearInequality q = MakeInequality({{1, 1, 3}, {2, 1, 1}}, 7);
  EXPECT_EQ(Evaluate(inst, q, Point{}).violation, Rational(-7));

  const LinearInequality cut = MakeInequality({{1, 1, 1},
                                               {2, 1, 6},
                                               {3, 1, Rational(35, 3)},
                                               {3, 2, 10},
                                               {4, 1, 13},
                                               {4, 2, 11},
                                               {5, 1, 12},
                                               {5, 2, 10}},
                                              38);
  const Point x = MakePoint(
      {{1, 1, 1}, {2, 1, 1}, {3, 1, Rational(1, 7)}, {3, 2, 1}, {4, 2, 1}, {5, 2, 1}});
  EXPECT_EQ(Evaluate(inst, KnapsackRow(inst), x).violation, Rational(0));
  EXPECT_EQ(Evaluate(inst, cut, x).violation, Rational(5, 3));

  EXPECT_EQ(KindOf([&] { Evaluate(inst, MakeInequality({{6, 1, 1}}, 1), x); }),
            ErrorKind::kValidation);
  EXPECT_EQ(KindOf([&] { Evaluate(inst, q, MakePoint({{3, 3, 1}})); }), ErrorKind::kValidation);
}

TEST(EvaluateTest, IsAffineInThePoint) {
  std::mt19937_64 rng(9);
  const Instance inst = testing::InstanceB22();
  std::uniform_int_distribution<int> num(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    Point p, q;
    LinearInequality row;
    for (VarRef v : inst.variables()) {
      p.values.set(v, Rational(num(rng), 6));
      q.values.set(v, Rational(num(rng), 6));
      row.coeffs.set(v, Rational(num(rng) - 3, 1 + num(rng)));
    }
    const Rational alpha(num(rng), 6);
    Point mix;
    for (VarRef v : inst.variables()) {
      mix.values.set(v, alpha * p.values.get(v) + (Rational(1) - alpha) * q.values.get(v));
    }
    EXPECT_EQ(Evaluate(inst, row, mix).lhs,
              alpha * Evaluate(inst, row, p).lhs + (Rational(1) - alpha) * Evaluate(inst, row, q).lhs);
  }
}

TEST(FeasibilityTest, Predicates) {
  const Instance inst = testing::InstanceB21();
  EXPECT_TRUE(IsFeasible(inst, MakePoint({{4, 1, 1}, {5, 1, 1}, {1, 1, 1}})));
  EXPECT_FALSE(SatisfiesKnapsack(inst, MakePoint({{4, 1, 1}, {5, 1, 1}, {3, 1, 1}})));
  EXPECT_FALSE(SatisfiesComplementarity(inst, MakePoint({{4, 1, Rational(1, 2)}, {4, 2, 1}})));
  EXPECT_FALSE(SatisfiesBounds(inst, MakePoint({{1, 1, 2}})));
}

TEST(IoTest, InstanceRoundTrip) {
  const std::string text =
      "ckp 1\n"
      "b 36\n"
      "group 1 a 1 c 1\n"
      "group 1 a 6 c 6\n"
      "group 2 a 14 10 c 14 10\n"
      "group 2 a 13 9 c 13 9\n"
      "group 2 a 12 8 c 12 8\n";
  const Instance inst = ParseInstance(text);
  EXPECT_EQ(inst, testing::InstanceB36());
  EXPECT_EQ(SerializeInstance(inst), text);
}

TEST(IoTest, CommentsAndNonCanonicalNumbers) {
  const Instance inst = ParseInstance(
      "# worked example\n\nckp 1\nb 42/2  # capacity\ngroup 2 a 20/2 6 c 10 12/2\n");
  EXPECT_EQ(inst.capacity(), Rational(21));
  EXPECT_EQ(SerializeInstance(inst), "ckp 1\nb 21\ngroup 2 a 10 6 c 10 6\n");
}

TEST(IoTest, InstanceErrors) {
  EXPECT_EQ(KindOf([] { ParseInstance(""); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseInstance("ckp 2\nb 1\ngroup 1 a 1 c 1\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseInstance("ckp 1\nb 1\ngroup 2 a 1 c 1 1\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseInstance("ckp 1\nb x\ngroup 1 a 1 c 1\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseInstance("ckp 1\nb -1\ngroup 1 a 1 c 1\n"); }),
            ErrorKind::kValidation);
}

TEST(IoTest, InequalityAndPointRoundTrip) {
  const LinearInequality q = ParseInequality("ineq 1\nrhs 229/6\nterm 1 1 10/12\nterm 4 2 67/6\n");
  EXPECT_EQ(q.coeffs.get({1, 1}), Rational(5, 6));
  EXPECT_EQ(SerializeInequality(q), "ineq 1\nrhs 229/6\nterm 1 1 5/6\nterm 4 2 67/6\n");
  EXPECT_EQ(ParseInequality(SerializeInequality(q)), q);

  const Point p = ParsePoint("point 1\nval 4 1 1\nval 1 1 1/12\nval 2 1 0\n");
  EXPECT_EQ(SerializePoint(p), "point 1\nval 1 1 1/12\nval 4 1 1\n");
  EXPECT_EQ(ParsePoint(SerializePoint(p)), p);

  EXPECT_EQ(KindOf([] { ParseInequality("ineq 1\nrhs 1\nterm 1 1 1\nterm 1 1 2\n"); }),
            ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParsePoint("point 1\nval 1 1 3/2\n"); }), ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { ParsePoint("point 1\nval 0 1 1\n"); }), ErrorKind::kParse);
}

TEST(IoTest, RandomRoundTrip) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = testing::RandomInstance(rng, 5, 3, 20);
    EXPECT_EQ(ParseInstance(SerializeInstance(inst)), inst);
  }
}

}  // namespace
}  // namespace ckp
