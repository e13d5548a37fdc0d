#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qtorder/free_group.hpp"
#include "qtorder/magnus.hpp"
#include "qtorder/modular.hpp"

using namespace qtorder;

namespace {

FreeWord w(const std::string& s) { return parse_free_word(s); }

std::string raw_string(const std::vector<int>& raw) {
  std::string s;
  for (int t : raw) s += t == 0 ? 'S' : (t == 1 ? 'R' : 'r');
  return s;
}

std::string semigroup_string(const SemigroupForm& f) {
  std::string s = f.left_s ? "S" : "";
  for (int t : f.t) s += t == 1 ? "SR" : "SRR";
  if (f.right_s) s += "S";
  return s;
}

}  // namespace

TEST(FreeReduce, Examples) {
  EXPECT_EQ(format_free_word(free_reduce(2, {1, 2, -2, 1})), "aa");
  EXPECT_TRUE(free_reduce(2, {}).empty());
  EXPECT_EQ(multiply(w("abA"), w("aB")), w("a"));
  EXPECT_EQ(format_free_word(w("e")), "e");
}

TEST(FreeReduce, MatchesStackOracle) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> letter(0, 3), len(0, 14);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> raw;
    for (int i = len(rng); i > 0; --i) {
      int l = letter(rng);
      raw.push_back(l < 2 ? l + 1 : -(l - 1));
    }
    EXPECT_EQ(free_reduce(2, raw).letters, oracle::reduce(raw));
  }
}

TEST(FreeReduce, BadGeneratorAndParse) {
  try {
    free_reduce(2, {3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadGenerator);
  }
  try {
    parse_free_word("ab#");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(Ball, Counts) {
  EXPECT_EQ(ball_enumerate(2, 0).size(), 1u);
  EXPECT_EQ(ball_enumerate(2, 1).size(), 5u);
  EXPECT_EQ(ball_enumerate(2, 3).size(), 53u);
  for (int r = 0; r <= 5; ++r) {
    long long closed = 1, sphere = 4;
    for (int k = 1; k <= r; ++k, sphere *= 3) closed += sphere;
    EXPECT_EQ(ball_size(2, r), closed);
    EXPECT_EQ(static_cast<long long>(ball_enumerate(2, r).size()), closed);
  }
  EXPECT_EQ(ball_size(3, 2), 1 + 6 + 30);
}

TEST(Ball, ShortlexDistinctReduced) {
  auto ball = ball_enumerate(2, 4);
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    EXPECT_EQ(ball[i].letters, oracle::reduce(ball[i].letters));
    EXPECT_TRUE(seen.insert(ball[i].letters).second);
    if (i > 0) EXPECT_TRUE(shortlex_less(ball[i - 1], ball[i]));
  }
}

TEST(CountingHom, Examples) {
  EXPECT_EQ(counting_hom(w("bbba"), 2), 3);
  EXPECT_EQ(counting_hom(w("e"), 2), 0);
  EXPECT_EQ(counting_hom(w("aBaB"), 2), -2);
  auto ball = ball_enumerate(2, 3);
  for (const auto& u : ball)
    for (const auto& v : ball) EXPECT_EQ(counting_hom(multiply(u, v), 1), counting_hom(u, 1) + counting_hom(v, 1));
}

TEST(Brooks, Examples) {
  const FreeWord ab = w("ab");
  EXPECT_EQ(brooks_count(w("ababab"), ab), 3);
  EXPECT_EQ(brooks_count(w("e"), ab), 0);
  EXPECT_EQ(brooks_count(w("BABAa"), ab), -1);
  for (long long n = 0; n <= 20; ++n) EXPECT_EQ(brooks_count(power(ab, n), ab), n);
}

TEST(Brooks, MatchesFactorScan) {
  const FreeWord ab = w("ab");
  const FreeWord aB = w("aB");
  for (const auto& u : ball_enumerate(2, 6)) {
    EXPECT_EQ(brooks_count(u, ab), oracle::brooks(u.letters, ab.letters));
    EXPECT_EQ(brooks_count(u, aB), oracle::brooks(u.letters, aB.letters));
  }
}

TEST(Brooks, CyclicIsHomogeneous) {
  const FreeWord ab = w("ab");
  for (const auto& u : ball_enumerate(2, 4))
    for (long long n = 1; n <= 4; ++n) EXPECT_EQ(brooks_cyclic(power(u, n), ab), n * brooks_cyclic(u, ab));
}

TEST(Magnus, Expansions) {
  auto one = magnus_expand(w("e"), 3);
  EXPECT_EQ(one.coefficient({}), 1);
  EXPECT_EQ(one.coefficient({1}), 0);
  auto x1 = magnus_expand(w("a"), 2);
  EXPECT_EQ(x1.coefficient({}), 1);
  EXPECT_EQ(x1.coefficient({1}), 1);
  EXPECT_EQ(x1.coefficient({1, 1}), 0);
  auto inv = magnus_expand(w("A"), 2);
  EXPECT_EQ(inv.coefficient({1}), -1);
  EXPECT_EQ(inv.coefficient({1, 1}), 1);
  EXPECT_EQ(inv.coefficient({2}), 0);
}

TEST(Magnus, CommutatorStartsInDegreeTwo) {
  auto c = magnus_expand(w("abAB"), 3);
  EXPECT_EQ(c.coefficient({1}), 0);
  EXPECT_EQ(c.coefficient({2}), 0);
  EXPECT_EQ(c.coefficient({1, 2}), 1);
  EXPECT_EQ(c.coefficient({2, 1}), -1);
}

TEST(Magnus, CompareExamples) {
  EXPECT_EQ(magnus_compare(w("ab"), w("ab")), Comparison::Equal);
  EXPECT_EQ(magnus_compare(w("e"), w("b")), Comparison::Less);
  EXPECT_EQ(magnus_compare(w("b"), w("e")), Comparison::Greater);
}

TEST(Magnus, BiInvariantTotalOnBall) {
  auto ball = ball_enumerate(2, 2);
  for (const auto& u : ball)
    for (const auto& v : ball) {
      Comparison c = magnus_compare(u, v);
      EXPECT_NE(c, Comparison::Incomparable);
      EXPECT_EQ(c == Comparison::Equal, u == v);
      for (const auto& g : ball) {
        EXPECT_EQ(magnus_compare(multiply(g, u), multiply(g, v)), c);
        EXPECT_EQ(magnus_compare(multiply(u, g), multiply(v, g)), c);
      }
    }
}

TEST(Modular, DecomposeExamples) {
  auto d = modular_decompose({0, 1});
  EXPECT_FALSE(d.form.left_s);
  EXPECT_EQ(d.form.t, std::vector<int>{1});
  EXPECT_FALSE(d.form.right_s);
  auto id = modular_decompose({});
  EXPECT_TRUE(id.normal.empty());
  EXPECT_TRUE(id.form.t.empty());
  auto rrs = modular_decompose({1, 1, 0});
  EXPECT_TRUE(rrs.form.left_s);
  EXPECT_EQ(rrs.form.t, std::vector<int>{2});
  EXPECT_TRUE(rrs.form.right_s);
  EXPECT_EQ(compose(rrs.form), rrs.normal);
}

TEST(Modular, RelationsHold) {
  EXPECT_TRUE(power(modular_S(), 2).empty());
  EXPECT_TRUE(power(modular_R(), 3).empty());
  EXPECT_TRUE(parse_modular("RRR").empty());
  EXPECT_TRUE(parse_modular("Rr").empty());
  EXPECT_THROW(parse_modular("SX"), Error);
}

TEST(Modular, MatrixRoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> tok(-1, 1), len(0, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> raw;
    for (int i = len(rng); i > 0; --i) raw.push_back(tok(rng));
    auto d = modular_decompose(raw);
    auto m = oracle::modular_matrix(raw_string(raw));
    std::string normal = format_modular(d.normal);
    EXPECT_EQ(oracle::modular_matrix(normal == "e" ? "" : normal), m);
    EXPECT_EQ(oracle::modular_matrix(semigroup_string(d.form)), m);
    EXPECT_EQ(compose(d.form), d.normal);
  }
}

TEST(Modular, BallIsFaithful) {
  std::set<oracle::Mat> seen;
  auto ball = modular_ball(7);
  for (const auto& g : ball) {
    std::string s = format_modular(g);
    EXPECT_TRUE(seen.insert(oracle::modular_matrix(s == "e" ? "" : s)).second) << s;
  }
}

TEST(Rademacher, Values) {
  EXPECT_EQ(rademacher(modular_T1()), 1);
  EXPECT_EQ(rademacher(modular_T2()), -1);
  EXPECT_EQ(rademacher(modular_identity()), 0);
  auto g = multiply(multiply(modular_T1(), modular_T2()), modular_T1());
  EXPECT_EQ(rademacher(g), 1);
  EXPECT_EQ(rademacher(power(g, 2)), 2);
  EXPECT_EQ(rademacher_raw(g), 1);
  EXPECT_EQ(rademacher(modular_S()), 0);
  EXPECT_EQ(rademacher(modular_R()), 0);
}

TEST(Rademacher, HomogeneousAndConjugationInvariant) {
  auto ball = modular_ball(4);
  for (const auto& g : ball) {
    for (long long n = 1; n <= 6; ++n) EXPECT_EQ(rademacher(power(g, n)), n * rademacher(g)) << format_modular(g);
    for (const auto& k : ball) EXPECT_EQ(rademacher(multiply(multiply(k, g), inverse(k))), rademacher(g));
  }
}

TEST(Rademacher, RawCountOnSemigroupWords) {
  // T-words are already in semigroup form, so the raw count reads off directly.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> bit(1, 2), len(0, 12);
  for (int trial = 0; trial < 300; ++trial) {
    ModularElement g = modular_identity();
    long long expect = 0;
    for (int i = len(rng); i > 0; --i) {
      int t = bit(rng);
      g = multiply(g, t == 1 ? modular_T1() : modular_T2());
      expect += t == 1 ? 1 : -1;
    }
    EXPECT_EQ(rademacher_raw(g), expect);
  }
}
