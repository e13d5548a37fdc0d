#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "qtorder/braids.hpp"

using namespace qtorder;

namespace {

BraidWord b3(const std::vector<int>& l) { return make_braid(3, l); }

// Every word of length <= n over the given signed letters.
void for_each_word(const std::vector<int>& alphabet, int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    f(cur);
    if (static_cast<int>(cur.size()) == n) return;
    for (int l : alphabet) {
      cur.push_back(l);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

}  // namespace

TEST(DeltaSq, Words) {
  EXPECT_EQ(delta_sq(2).letters, (std::vector<int>{1, 1}));
  EXPECT_EQ(delta_sq(3).letters, (std::vector<int>{1, 2, 1, 1, 2, 1}));
  EXPECT_EQ(delta_sq(4).size(), 12u);
}

TEST(DeltaSq, CentralViaArtinAndCompare) {
  for (int n = 2; n <= 5; ++n) {
    auto d = delta_sq(n);
    for (int i = 1; i < n; ++i) {
      auto s = make_braid(n, {i});
      EXPECT_TRUE(oracle::braid_equal(n, multiply(d, s).letters, multiply(s, d).letters));
      EXPECT_EQ(dehornoy_compare(multiply(d, s), multiply(s, d)), Comparison::Equal);
    }
  }
  EXPECT_EQ(dehornoy_compare(multiply(delta_sq(3), b3({2})), multiply(b3({2}), delta_sq(3))), Comparison::Equal);
}

TEST(HandleReduce, Examples) {
  auto r = handle_reduce(b3({1, 2, -1}));
  EXPECT_EQ(r.letters, (std::vector<int>{-2, 1, 2}));
  EXPECT_TRUE(oracle::braid_equal(3, r.letters, {1, 2, -1}));
  EXPECT_EQ(sigma_sign(r), 1);
  EXPECT_TRUE(handle_reduce(b3({})).empty());
  EXPECT_EQ(handle_reduce(b3({1, -1, 2})).letters, std::vector<int>{2});
}

TEST(HandleReduce, PreservesBraidAndSingleSign) {
  const std::vector<int> alphabet{1, -1, 2, -2};
  long long count = 0;
  for_each_word(alphabet, 6, [&](const std::vector<int>& word) {
    auto r = handle_reduce(b3(word));
    ASSERT_TRUE(oracle::braid_equal(3, r.letters, word));
    if (!r.empty()) {
      int least = 99, pos = 0, neg = 0;
      for (int l : r.letters) least = std::min(least, std::abs(l));
      for (int l : r.letters) {
        if (l == least) ++pos;
        if (l == -least) ++neg;
      }
      EXPECT_TRUE(pos == 0 || neg == 0);
    }
    ++count;
  });
  EXPECT_EQ(count, 1 + 4 + 16 + 64 + 256 + 1024 + 4096);
}

TEST(Dehornoy, CompareExamples) {
  EXPECT_EQ(dehornoy_compare(b3({1, 2}), b3({1, 2})), Comparison::Equal);
  EXPECT_EQ(dehornoy_compare(b3({}), b3({1})), Comparison::Less);
  auto s = make_braid(2, {1});
  EXPECT_EQ(dehornoy_compare(power(s, 3), power(s, 5)), Comparison::Less);
  EXPECT_EQ(dehornoy_compare(power(s, 5), power(s, 3)), Comparison::Greater);
}

TEST(Dehornoy, EqualityMatchesArtin) {
  std::vector<std::vector<int>> words;
  for_each_word({1, -1, 2, -2}, 4, [&](const std::vector<int>& w) { words.push_back(w); });
  for (std::size_t i = 0; i < words.size(); i += 3)
    for (std::size_t j = 0; j < words.size(); j += 5) {
      bool eq = oracle::braid_equal(3, words[i], words[j]);
      EXPECT_EQ(dehornoy_compare(b3(words[i]), b3(words[j])) == Comparison::Equal, eq);
    }
}

TEST(Dehornoy, LeftInvariantTotal) {
  std::vector<std::vector<int>> words;
  for_each_word({1, -1, 2, -2}, 3, [&](const std::vector<int>& w) { words.push_back(w); });
  for (const auto& u : words)
    for (const auto& v : words) {
      Comparison c = dehornoy_compare(b3(u), b3(v));
      ASSERT_NE(c, Comparison::Incomparable);
      EXPECT_EQ(dehornoy_compare(b3(v), b3(u)), flip(c));
      for (int g : {1, -2}) EXPECT_EQ(dehornoy_compare(multiply(b3({g}), b3(u)), multiply(b3({g}), b3(v))), c);
    }
}

TEST(Dehornoy, B2FloorMatchesIntegerOracle) {
  auto s = make_braid(2, {1});
  for (long long k = -10; k <= 10; ++k) EXPECT_EQ(dehornoy_floor(power(s, k)), oracle::floor_div(k, 2)) << k;
  EXPECT_EQ(dehornoy_floor(power(s, 5)), 2);
}

TEST(Dehornoy, FloorOfDeltaPowers) {
  for (int n = 2; n <= 4; ++n)
    for (long long m = -3; m <= 3; ++m) EXPECT_EQ(dehornoy_floor(power(delta_sq(n), m)), m);
  EXPECT_EQ(dehornoy_floor(b3({})), 0);
}

TEST(Dehornoy, FloorShiftsByCentre) {
  std::vector<std::vector<int>> words;
  for_each_word({1, -1, 2, -2}, 4, [&](const std::vector<int>& w) { words.push_back(w); });
  for (std::size_t i = 0; i < words.size(); i += 7) {
    auto b = b3(words[i]);
    long long f = dehornoy_floor(b);
    EXPECT_EQ(dehornoy_floor(multiply(b, delta_sq(3))), f + 1);
    EXPECT_EQ(dehornoy_floor(multiply(delta_sq(3), b)), f + 1);
  }
}

TEST(Dehornoy, TranslationNumbers) {
  EXPECT_TRUE(braid_translation_number(delta_sq(3), 16).contains(Rational(1)));
  EXPECT_TRUE(braid_translation_number(make_braid(2, {1}), 64).contains(make_rational(1, 2)));
  EXPECT_TRUE(braid_translation_number(b3({}), 16).contains(Rational(0)));
  auto e = braid_translation_number(b3({1, 2}), 30);
  EXPECT_TRUE(e.contains(make_rational(1, 3)));
  EXPECT_EQ(e.hi - e.lo, make_rational(1, 30));
}

TEST(Braids, PermutationAndErrors) {
  EXPECT_EQ(braid_permutation(b3({1})), (std::vector<int>{1, 0, 2}));
  EXPECT_EQ(braid_permutation(delta_sq(4)), (std::vector<int>{0, 1, 2, 3}));
  try {
    make_braid(3, {3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadGenerator);
  }
  EXPECT_EQ(format_braid(parse_braid("1 -2 1", 3)), "1 -2 1");
}

TEST(Braids, ReductionCap) {
  Caps c = caps(), tight = c;
  tight.reduction_steps = 1;
  set_caps(tight);
  EXPECT_THROW(handle_reduce(b3({1, 2, -1, 2, 1, -2, -1})), Error);
  set_caps(c);
}

TEST(PureBraid, Pi) {
  EXPECT_EQ(pure_braid_pi(3, {{1, 2, 1}, {1, 2, 1}, {1, 2, 1}}), 3);
  EXPECT_EQ(pure_braid_pi(3, {{1, 3, 1}, {2, 3, 1}}), 0);
  EXPECT_EQ(pure_braid_pi(3, {{1, 2, 1}, {1, 3, 1}, {1, 2, -1}, {1, 2, -1}}), -1);
  try {
    pure_braid_pi(3, {{2, 1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadIndex);
  }
  EXPECT_THROW(pure_braid_pi(3, {{1, 4, 1}}), Error);
}
