#include <algorithm>
#include <random>

#include "braidroots/braid_word.hpp"
#include "braidroots/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace braidroots;

namespace {
  BraidWord delta_(int n) {
    std::vector<int> l;
    for (int i = n - 1; i >= 1; --i) {
      l.push_back(i);
    }
    return BraidWord(n, l);
  }
  BraidWord eps_(int n) {
    return delta_(n) * BraidWord(n, {1});
  }
  template <typename F>
  ErrorCode code_of(F&& f) {
    try {
      f();
    } catch (BraidError const& e) {
      return e.code();
    }
    FAIL("no BraidError thrown");
    return ErrorCode::VerificationFailed;
  }
  BraidWord figure_word() {
    return BraidWord(4, {-2, 1, 1, -2, -1, -1, -2, -1, -1, 3, 2, 1, 1, 2, 3});
  }
}  // namespace

TEST_CASE("word algebra") {
  BraidWord a(3, {1}), b(3, {-1});
  CHECK((a * b).letters().size() == 2);
  CHECK((a * b).free_reduced().empty());
  CHECK(BraidWord(3, {1, 2, -1}).inverse() == BraidWord(3, {1, -2, -1}));
  CHECK(half_twist(3).pow(2).length() == 6);
  CHECK(half_twist(3).pow(-1) == half_twist(3).inverse());
  CHECK(half_twist(4).pow(0).empty());
  CHECK(BraidWord(2, {1, -1}).shifted(2, 5) == BraidWord(5, {3, -3}));
  CHECK(code_of([] { (void) (BraidWord(3) * BraidWord(4)); })
        == ErrorCode::StrandCountMismatch);
  CHECK(code_of([] { BraidWord(3, {3}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { BraidWord(3, {0}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("induced permutation examples") {
  CHECK(induced_permutation(BraidWord(3, {1})) == Permutation({2, 1, 3}));
  for (int n = 1; n <= 8; ++n) {
    CHECK(induced_permutation(half_twist(n).pow(2)).is_identity());
    // Delta reverses the strands.
    auto const p = induced_permutation(half_twist(n));
    for (int i = 1; i <= n; ++i) {
      CHECK(p(i) == n + 1 - i);
    }
  }
  for (int n = 3; n <= 9; ++n) {
    CHECK(induced_permutation(delta_(n).pow(n)).is_identity());
    auto const p     = induced_permutation(eps_(n));
    int        fixed = 0;
    for (int i = 1; i <= n; ++i) {
      fixed += p(i) == i;
    }
    CHECK(fixed == 1);
    CHECK(p(1) == 1);
  }
}

TEST_CASE("induced permutation is a homomorphism") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int const n = 2 + static_cast<int>(rng() % 6);
    auto      a = oracle::random_word(rng, n, 12);
    auto      b = oracle::random_word(rng, n, 12);
    CHECK(induced_permutation(a * b) == induced_permutation(a) * induced_permutation(b));
    CHECK(induced_permutation(a.inverse()) == induced_permutation(a).inverse());
  }
}

TEST_CASE("P-purity") {
  BraidWord w(4, {1, 1, 3});
  CHECK(is_P_pure(w, {1, 2}));
  CHECK_FALSE(is_P_pure(w, {1, 3}));
  CHECK(is_P_pure(w, {}));
  CHECK(code_of([&] { is_P_pure(w, {5}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("strand deletion examples") {
  // Keeping everything changes nothing.
  BraidWord w(4, {1, 2, -3, 1});
  CHECK(delete_strands(w, StrandSet::range(1, 4)) == w);
  // A single strand leaves the empty 1-strand braid.
  CHECK(delete_strands(w, {2}) == BraidWord(1));
  // sigma_1^2 sigma_2^2 with strand 2 dropped: the crossings of 1 and 3 are gone.
  CHECK(delete_strands(BraidWord(3, {1, 1, 2, 2}), {1, 3}) == BraidWord(2));
  // Strand 3 of sigma_2 sigma_1^2 sigma_2^{-1} loops around strand 1.
  BraidWord a13(3, {2, 1, 1, -2});
  CHECK(delete_strands(a13, {1, 3}) == BraidWord(2, {1, 1}));
  CHECK(delete_strands(a13, {1, 2}).free_reduced().empty());
  CHECK(delete_strands(a13, {2, 3}).free_reduced().empty());
  CHECK(code_of([&] { delete_strands(w, {}); }) == ErrorCode::EmptyKeepSet);
  CHECK(code_of([&] { delete_strands(w, {5}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("strand deletion respects products") {
  // delete(ab, K) = delete(a, pi_b(K)) delete(b, K) with right-end labels.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int const        n = 2 + static_cast<int>(rng() % 6);
    auto             a = oracle::random_word(rng, n, 10);
    auto             b = oracle::random_word(rng, n, 10);
    std::vector<int> keep;
    for (int i = 1; i <= n; ++i) {
      if (rng() % 2) {
        keep.push_back(i);
      }
    }
    if (keep.empty()) {
      keep.push_back(1);
    }
    StrandSet const K(keep);
    auto const      pb = induced_permutation(b);
    auto const      lhs = delete_strands(a * b, K);
    auto const      rhs = delete_strands(a, K.image(pb)) * delete_strands(b, K);
    CHECK(lhs == rhs);
    // The kept strand of rank i ends at the rank of its left end among
    // the left ends of all kept strands.
    auto const  pk   = induced_permutation(lhs);
    auto const  pw   = induced_permutation(a * b);
    auto const& m    = K.members();
    auto const  left = K.image(pw).members();
    for (size_t i = 0; i < m.size(); ++i) {
      auto it = std::find(left.begin(), left.end(), pw(m[i]));
      CHECK(pk(static_cast<int>(i) + 1) == static_cast<int>(it - left.begin()) + 1);
    }
  }
}

TEST_CASE("linking number fixtures") {
  CHECK(lk(BraidWord(3, {1, 1})) == 1);
  CHECK(lk(BraidWord(3, {2, 2})) == 0);
  CHECK(lk(BraidWord(3, {1, 1, 2, 2, 2, 2})) == 1);
  CHECK(lk(BraidWord(3, {2, 2, 1, 1, 1, 1})) == 2);
  CHECK(lk(figure_word()) == 0);
  auto const v = lk_all(figure_word());
  REQUIRE(v.size() == 3);
  CHECK(v[0] == HalfInteger::from_integer(0));
  CHECK(v[1] == HalfInteger::from_integer(-1));
  CHECK(v[2] == HalfInteger::from_integer(1));
  CHECK(lk_i(figure_word(), 3) == HalfInteger::from_integer(-1));
  for (int n = 2; n <= 7; ++n) {
    for (int i = 2; i <= n; ++i) {
      CHECK(lk_i(BraidWord(n), i) == HalfInteger::from_integer(0));
    }
    HalfInteger sum;
    for (auto const& x : lk_all(eps_(n))) {
      sum += x;
    }
    CHECK(sum == HalfInteger::from_integer(1));
    CHECK(lk(eps_(n)) == 1);
  }
  CHECK(is_one_unlinked(BraidWord(3, {2, 2})));
  CHECK_FALSE(is_one_unlinked(BraidWord(3, {1, 1})));
  CHECK_FALSE(is_one_unlinked(BraidWord(3, {1})));
  CHECK(code_of([] { lk(BraidWord(3, {1})); }) == ErrorCode::NotOnePure);
  CHECK(code_of([] { lk_i(BraidWord(3, {1}), 2); }) == ErrorCode::NotOnePure);
  CHECK(code_of([] { lk_i(BraidWord(3), 1); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { lk_i(BraidWord(3), 4); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("half-integer values") {
  CHECK(HalfInteger::from_twice(1).to_string() == "1/2");
  CHECK((-HalfInteger::from_twice(3)).to_string() == "-3/2");
  CHECK(HalfInteger::from_twice(-4).to_string() == "-2");
  CHECK(HalfInteger::from_twice(1) + HalfInteger::from_twice(1) == HalfInteger::from_integer(1));
  // Strand 1 is at the left edge at both ends, so every other strand stays on
  // one side of it and each pairwise count is even even when strand i moves.
  BraidWord w(3, {1, 2, 2, 1, 2});
  REQUIRE(induced_permutation(w)(2) == 3);
  for (auto const& x : lk_all(w)) {
    CHECK(x.is_integer());
  }
}

TEST_CASE("linking numbers agree with a forward crossing trace") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int const  n = 2 + static_cast<int>(rng() % 7);
    auto const w = oracle::random_one_pure(rng, n, 20);
    auto const counts = oracle::crossing_counts(w);
    auto const v      = lk_all(w);
    int64_t    total  = 0;
    for (int i = 2; i <= n; ++i) {
      auto it = counts.find({1, i});
      int  c  = it == counts.end() ? 0 : it->second;
      total += c;
      CHECK(v[static_cast<size_t>(i - 2)] == HalfInteger::from_twice(c));
    }
    CHECK(total % 2 == 0);
    CHECK(lk(w) == total / 2);
  }
}

TEST_CASE("linking number laws") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int const  n = 2 + static_cast<int>(rng() % 6);
    auto const w = oracle::random_one_pure(rng, n, 16);
    auto const g = oracle::random_one_pure(rng, n, 16);
    CHECK(lk(g * w * g.inverse()) == lk(w));
    CHECK(lk(g * w) == lk(g) + lk(w));
    CHECK(lk(w.inverse()) == -lk(w));
    HalfInteger sum;
    for (auto const& x : lk_all(w)) {
      sum += x;
    }
    CHECK(sum == HalfInteger::from_integer(lk(w)));
  }
}
