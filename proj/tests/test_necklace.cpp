#include <algorithm>

#include "doctest.h"
#include "gfd/necklace.hpp"
#include "gfd/never.hpp"

using namespace gfd;

namespace {

AltSet bits(std::initializer_list<int> labels) {
  AltSet s = 0;
  for (int a : labels) s |= alt_bit(a);
  return s;
}

Domain dom(int n, std::initializer_list<const char*> orders) {
  std::vector<LinearOrder> v;
  for (const char* s : orders) v.push_back(LinearOrder::parse(s));
  return Domain(n, std::move(v));
}

}  // namespace

TEST_CASE("gf_necklace spectra") {
  auto fishburn4 = gf_necklace(4, KSubset(4, {2}));
  CHECK(fishburn4.circle() == std::vector<int>{1, 2, 4, 3});
  CHECK(fishburn4.black_mask() == bits({3}));

  auto dipped4 = gf_necklace(4, KSubset::empty_set(4));
  CHECK(dipped4.circle() == std::vector<int>{1, 4, 3, 2});
  CHECK(dipped4.black_mask() == bits({2, 3}));

  auto peaked3 = gf_necklace(3, KSubset(3, {2}));
  CHECK(peaked3.circle() == std::vector<int>{1, 2, 3});
  CHECK(peaked3.black_mask() == 0);

  CHECK_THROWS(gf_necklace(2, KSubset::empty_set(3)));
}

TEST_CASE("necklace serialization") {
  auto s = gf_necklace(4, KSubset(4, {2}));
  CHECK(s.to_text() == "1w,2w,4w,3b");
  CHECK(Necklace::parse_text("1w,2w,4w,3b").to_text() == s.to_text());
  CHECK(Necklace::parse_json(s.to_json()).to_text() == s.to_text());
  CHECK_THROWS(Necklace::parse_text("1w,2x"));
  CHECK_THROWS(Necklace::parse_text("1w,1b"));
}

TEST_CASE("is_arc on circle positions") {
  auto s = gf_necklace(4, KSubset(4, {2}));  // circle 1,2,4,3
  CHECK(is_arc(s, bits({3, 1})));   // wraps
  CHECK_FALSE(is_arc(s, bits({1, 4})));
  CHECK(is_arc(s, full_alt_set(4)));
  CHECK(is_arc(s, 0));
}

TEST_CASE("w-convexity") {
  auto s = gf_necklace(4, KSubset(4, {2}));
  CHECK_FALSE(is_w_convex(s, bits({3})));     // single black bead
  CHECK(is_w_convex(s, bits({2})));
  CHECK_FALSE(is_w_convex(s, bits({1, 3})));  // skips white label 2
  CHECK_THROWS(is_w_convex(s, 0));
}

TEST_CASE("enumerate_w_convex") {
  auto all_white = Necklace({1, 2, 3}, 0);
  auto sets = enumerate_w_convex(all_white);
  CHECK(sets.size() == 6);
  CHECK(std::find(sets.begin(), sets.end(), bits({1, 3})) == sets.end());

  auto dipped = gf_necklace(4, KSubset::empty_set(4));
  auto dsets = enumerate_w_convex(dipped);
  CHECK(std::find(dsets.begin(), dsets.end(), bits({1, 4})) != dsets.end());
  CHECK(std::find(dsets.begin(), dsets.end(), full_alt_set(4)) != dsets.end());
}

TEST_CASE("flags_to_domain reproduces the paper tables") {
  CHECK(flags_to_domain(gf_necklace(4, KSubset(4, {2}))) ==
        dom(4, {"1234", "1243", "2134", "2143", "2413", "2431", "4213", "4231",
                "4321"}));
  CHECK(flags_to_domain(gf_necklace(4, KSubset::empty_set(4))) ==
        dom(4, {"1234", "1243", "1423", "1432", "4123", "4132", "4312",
                "4321"}));
  CHECK(flags_to_domain(gf_necklace(3, KSubset::empty_set(3))) ==
        dom(3, {"123", "132", "312", "321"}));
  CHECK(flags_to_domain(gf_necklace(3, KSubset(3, {2}))) ==
        dom(3, {"123", "213", "231", "321"}));
}

TEST_CASE("emitted orders have w-convex prefixes, arcs, no black top") {
  for (int n = 3; n <= 6; ++n) {
    AltSet interior = KSubset::full_set(n).mask();
    for (AltSet mask = 0;; mask = (mask - interior) & interior) {
      auto s = gf_necklace(n, KSubset(n, mask));
      auto d = flags_to_domain(s);
      for (const auto& v : d.orders()) {
        CHECK_FALSE(s.is_black(v.top()));
        for (int k = 1; k <= n; ++k) {
          CHECK(is_w_convex(s, prefix_set(v, k)));
          CHECK(is_arc(s, prefix_set(v, k)));
        }
      }
      if (mask == interior) break;
    }
  }
}

TEST_CASE("never-top for black middles, never-bottom for white middles") {
  for (int n = 4; n <= 6; ++n) {
    AltSet interior = KSubset::full_set(n).mask();
    for (AltSet mask = 0;; mask = (mask - interior) & interior) {
      KSubset k(n, mask);
      auto s = gf_necklace(n, k);
      auto d = flags_to_domain(s);
      for (const auto& t : all_triples(n)) {
        for (const auto& r : restrict_domain(d, t)) {
          if (s.is_black(t.b)) CHECK(r[0] != t.b);
          if (!s.is_black(t.b) && t.b != 1 && t.b != n) CHECK(r[2] != t.b);
        }
      }
      if (mask == interior) break;
    }
  }
}

TEST_CASE("classical single-peaked oracle") {
  CHECK(classical_single_peaked(3) == dom(3, {"123", "213", "231", "321"}));
  CHECK(classical_single_peaked(4).size() == 8);
  for (int n = 1; n <= 6; ++n) {
    auto d = classical_single_peaked(n);
    CHECK(d.size() == (std::size_t{1} << (n > 0 ? n - 1 : 0)));
    CHECK(d.contains(LinearOrder::identity(n)));
    CHECK(d.contains(LinearOrder::reverse_identity(n)));
  }
}
