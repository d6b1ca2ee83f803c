#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "lefschetz/wlp.hpp"

using namespace lefschetz;

TEST_CASE("rank decision on pinned cases") {
  SUBCASE("(2,2,2)") {
    const WlpVerdict bad = wlp_direct(CIParams(2, 2, 2), 2);
    CHECK_FALSE(bad.holds);
    CHECK(bad.method == Method::direct);
    CHECK(bad.characteristic == 2);
    CHECK(bad.witness.kind == Witness::Kind::rank);
    CHECK(bad.witness.rank == 2);
    CHECK(bad.witness.expected == 3);
    CHECK(bad.witness.flat(2) == "rank=2;expected=3");

    CHECK(wlp_direct(CIParams(2, 2, 2), 3).holds);
    CHECK(wlp_direct(CIParams(2, 2, 2), 5).holds);
  }
  SUBCASE("(3,3,3)") {
    CHECK_FALSE(wlp_direct(CIParams(3, 3, 3), 3).holds);
    CHECK(wlp_direct(CIParams(3, 3, 3), 2).holds);
    const WlpVerdict good = wlp_direct(CIParams(3, 3, 3), 2);
    CHECK(good.witness.rank == 6);
    CHECK(good.witness.expected == 6);
  }
  SUBCASE("characteristic zero always holds") {
    const WlpVerdict v = wlp_direct(CIParams(7, 8, 9), 0);
    CHECK(v.holds);
    CHECK(v.witness.kind == Witness::Kind::nonzero_determinant);
    CHECK(v.witness.flat(0) == "nonzero-determinant");
  }
  SUBCASE("one-dimensional algebra is trivial") {
    const WlpVerdict v = wlp_direct(CIParams(1, 1, 1), 5);
    CHECK(v.holds);
    CHECK(v.method == Method::trivial);
    CHECK(v.witness.kind == Witness::Kind::trivial_region);
    CHECK(v.witness.flat(5) == "trivial-region");
  }
  SUBCASE("characteristic must be zero or prime") {
    CHECK_THROWS_AS(wlp_direct(CIParams(2, 2, 2), 4), std::invalid_argument);
    CHECK_THROWS_AS(wlp_direct(CIParams(2, 2, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(wlp_direct(CIParams(2, 2, 2), -3), std::invalid_argument);
  }
  SUBCASE("caller-supplied matrix gives the same verdict") {
    for (const auto& [a, b, g] : {std::tuple{2, 2, 2}, {3, 3, 3}, {3, 3, 4}, {4, 5, 6}}) {
      const CIParams params(a, b, g);
      const IntMatrix mid = lefschetz_matrix(params).matrix;
      for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        const WlpVerdict v1 = wlp_direct(params, p);
        const WlpVerdict v2 = wlp_direct(params, mid, p);
        CHECK(v1.holds == v2.holds);
        CHECK(v1.witness.rank == v2.witness.rank);
        CHECK(v1.witness.expected == v2.witness.expected);
      }
    }
  }
}

TEST_CASE("divisibility decision on pinned cases") {
  SUBCASE("odd socle degree reduces to one box count") {
    const WlpVerdict v = wlp_by_theorem(CIParams(2, 2, 2), 2);
    CHECK_FALSE(v.holds);
    CHECK(v.method == Method::theorem);
    CHECK(v.witness.kind == Witness::Kind::divisor);
    CHECK(v.witness.valuations ==
          std::vector<std::pair<std::string, long long>>{{"M(1,1,1)", 1}});
    CHECK(v.witness.flat(2) == "v_2(M(1,1,1))=1");
    CHECK(wlp_by_theorem(CIParams(2, 2, 2), 3).holds);
  }
  SUBCASE("even socle degree reduces to the minors") {
    const WlpVerdict bad = wlp_by_theorem(CIParams(3, 3, 3), 3);
    CHECK_FALSE(bad.holds);
    CHECK(bad.witness.flat(3) == "v_3(H(1))=1;v_3(H(2))=1");

    const WlpVerdict good = wlp_by_theorem(CIParams(3, 3, 3), 2);
    CHECK(good.holds);
    CHECK(good.witness.valuations ==
          std::vector<std::pair<std::string, long long>>{{"H(1)", 0}});
  }
  SUBCASE("failure needs every minor, not just the first") {
    // (5,5,5): H(1) = 50 is even but H(2) = 75 is odd, so char 2 holds;
    // stopping at k = 1 would wrongly report failure.
    const WlpVerdict v = wlp_by_theorem(CIParams(5, 5, 5), 2);
    CHECK(v.holds);
    CHECK(v.witness.valuations ==
          std::vector<std::pair<std::string, long long>>{{"H(2)", 0}});

    const WlpVerdict five = wlp_by_theorem(CIParams(5, 5, 5), 5);
    CHECK_FALSE(five.holds);
    CHECK(five.witness.flat(5) == "v_5(H(1))=2;v_5(H(2))=2;v_5(H(3))=2");
  }
  SUBCASE("the k range runs to m even when H is not palindromic") {
    // (4,5,6): H = (15, 20).  3 divides H(1) but not H(2), so char 3
    // holds; any shortened range would wrongly report failure.
    const WlpVerdict v = wlp_by_theorem(CIParams(4, 5, 6), 3);
    CHECK(v.holds);
    CHECK(v.witness.valuations ==
          std::vector<std::pair<std::string, long long>>{{"H(2)", 0}});
    CHECK(wlp_by_theorem(CIParams(3, 6, 6), 2).holds);
    CHECK(wlp_by_theorem(CIParams(4, 6, 7), 3).holds);
    CHECK(wlp_by_theorem(CIParams(5, 6, 6), 3).holds);
    CHECK_FALSE(wlp_by_theorem(CIParams(4, 5, 6), 5).holds);
  }
  SUBCASE("trivial region short-circuits") {
    const WlpVerdict v = wlp_by_theorem(CIParams(2, 3, 9), 2);
    CHECK(v.holds);
    CHECK(v.method == Method::trivial);
    CHECK(v.witness.kind == Witness::Kind::trivial_region);
  }
  SUBCASE("large parameters stay cheap") {
    CHECK_FALSE(wlp_by_theorem(CIParams(100, 100, 100), 2).holds);
    CHECK_FALSE(wlp_by_theorem(CIParams(100, 100, 100), 5).holds);
    CHECK(wlp_by_theorem(CIParams(100, 100, 100), 211).holds);
  }
  SUBCASE("characteristic zero and bad primes") {
    CHECK(wlp_by_theorem(CIParams(3, 3, 3), 0).holds);
    CHECK(wlp_by_theorem(CIParams(3, 3, 3), 0).witness.kind == Witness::Kind::nonzero_determinant);
    CHECK_THROWS_AS(wlp_by_theorem(CIParams(3, 3, 3), 6), std::invalid_argument);
  }
}

TEST_CASE("failing prime enumeration") {
  CHECK(failing_primes(CIParams(2, 2, 2), FailingPrimesMethod::direct) == std::vector<long long>{2});
  CHECK(failing_primes(CIParams(2, 2, 2), FailingPrimesMethod::theorem) == std::vector<long long>{2});
  CHECK(failing_primes(CIParams(3, 3, 3), FailingPrimesMethod::direct) == std::vector<long long>{3});
  CHECK(failing_primes(CIParams(3, 3, 3), FailingPrimesMethod::theorem) == std::vector<long long>{3});
  CHECK(failing_primes(CIParams(1, 1, 1), FailingPrimesMethod::direct).empty());
  CHECK(failing_primes(CIParams(1, 1, 1), FailingPrimesMethod::theorem).empty());
  CHECK(failing_primes(CIParams(2, 3, 9), FailingPrimesMethod::theorem).empty());

  SUBCASE("central binomial family fails at 2") {
    for (int b = 1; b <= 10; ++b) {
      const CIParams params(b + 1, b + 1, 2 * b);
      const auto fp = failing_primes(params, FailingPrimesMethod::theorem);
      CAPTURE(b);
      CHECK(std::find(fp.begin(), fp.end(), 2) != fp.end());
    }
  }
  SUBCASE("the two methods list the same primes") {
    for (int a = 1; a <= 5; ++a)
      for (int b = a; b <= 5; ++b)
        for (int g = b; g <= 7; ++g) {
          const CIParams params(a, b, g);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(g);
          CHECK(failing_primes(params, FailingPrimesMethod::direct) ==
                failing_primes(params, FailingPrimesMethod::theorem));
        }
  }
}

TEST_CASE("prime power failure window") {
  SUBCASE("(100,100,100) has twelve entries") {
    CHECK(prime_power_window_bounds(CIParams(100, 100, 100)) == std::pair<long long, long long>{100, 148});
    const std::vector<PrimePower> w = prime_power_window(CIParams(100, 100, 100));
    REQUIRE(w.size() == 12);
    CHECK(w[0] == PrimePower{2, 7, 128});
    CHECK(w[1] == PrimePower{5, 3, 125});
    CHECK(w[2] == PrimePower{11, 2, 121});
    CHECK(w[3] == PrimePower{101, 1, 101});
    CHECK(w[11] == PrimePower{139, 1, 139});
  }
  SUBCASE("empty window in the trivial region") {
    CHECK(prime_power_window(CIParams(2, 3, 9)).empty());
    CHECK(prime_power_window(CIParams(1, 1, 1)).empty());
  }
  SUBCASE("window verdicts carry the prime power") {
    const std::vector<WlpVerdict> vs = window_verdicts(CIParams(100, 100, 100));
    REQUIRE(vs.size() == 12);
    for (const WlpVerdict& v : vs) {
      CHECK_FALSE(v.holds);
      CHECK(v.method == Method::window);
      CHECK(v.witness.kind == Witness::Kind::prime_power);
    }
    CHECK(vs[0].characteristic == 2);
    CHECK(vs[0].witness.flat(2) == "2^7=128");
    CHECK(vs[11].characteristic == 139);
  }
  SUBCASE("every window prime power is a genuine failure") {
    for (int a = 2; a <= 8; ++a)
      for (int b = a; b <= 8; ++b)
        for (int g = b; a + b + g <= 20; ++g) {
          const CIParams params(a, b, g);
          const auto window = prime_power_window(params);
          if (window.empty()) continue;
          const IntMatrix mid = lefschetz_matrix(params).matrix;
          for (const PrimePower& pp : window) {
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(g);
            CAPTURE(pp.value);
            CHECK_FALSE(wlp_direct(params, mid, pp.p).holds);
          }
        }
  }
}

TEST_CASE("box divisor window") {
  CHECK(box_divisor_window_bounds({50, 50, 50}) == std::pair<long long, long long>{100, 148});
  CHECK(box_divisor_window({50, 50, 50}) ==
        std::vector<long long>{2, 5, 11, 101, 103, 107, 109, 113, 127, 131, 137, 139});
  CHECK(box_divisor_window_bounds({2, 2, 3}) == std::pair<long long, long long>{5, 6});
  CHECK(box_divisor_window({2, 2, 3}) == std::vector<long long>{5});
  CHECK(box_divisor_window({1, 2, 3}) == std::vector<long long>{5});
  CHECK(box_divisor_window({1, 1, 1}).empty());
  CHECK(box_divisor_window({3, 1, 2}) == box_divisor_window({1, 2, 3}));
  CHECK_THROWS_AS(box_divisor_window({0, 1, 1}), std::invalid_argument);

  SUBCASE("window primes always divide (the check never fires)") {
    for (long long a = 1; a <= 6; ++a)
      for (long long b = a; b <= 7; ++b)
        for (long long c = b; a + b + c <= 20; ++c) {
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CHECK_NOTHROW(box_divisor_window({a, b, c}));
        }
  }
}

TEST_CASE("characteristic 2 scan of equal parameters") {
  const std::vector<ConjectureRow> rows = conjecture_char2_scan(12);
  REQUIRE(rows.size() == 12);
  std::set<int> holds;
  for (const ConjectureRow& r : rows) {
    CHECK(r.d == &r - rows.data() + 1);
    CHECK(r.agree);
    if (r.holds_in_char2) holds.insert(r.d);
  }
  CHECK(holds == std::set<int>{1, 3, 5, 11});
  CHECK_THROWS_AS(conjecture_char2_scan(0), std::invalid_argument);
}

TEST_CASE("the two decision paths never disagree") {
  SUBCASE("cross validation reports") {
    for (const auto& [a, b, g] : {std::tuple{3, 3, 3}, {4, 5, 6}, {5, 5, 5}, {2, 3, 9}, {1, 1, 1}}) {
      const CrossValidationReport r = cross_validate(CIParams(a, b, g), 50);
      CHECK(r.prime_bound == 50);
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(g);
      CHECK(r.disagreements.empty());
    }
  }
  SUBCASE("verdict sweep") {
    for (int a = 1; a <= 7; ++a)
      for (int b = a; b <= 7; ++b)
        for (int g = b; a + b + g <= 21; ++g) {
          const CIParams params(a, b, g);
          for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(g);
            CAPTURE(p);
            CHECK(wlp_direct(params, p).holds == wlp_by_theorem(params, p).holds);
          }
        }
  }
}
