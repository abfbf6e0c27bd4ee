// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <cstdio>
#include <vector>

#include "gfd/analysis.hpp"
#include "gfd/cardinality.hpp"
#include "gfd/necklace.hpp"
#include "gfd/never.hpp"
#include "gfd/orders.hpp"
#include "gfd/single_crossing.hpp"

using namespace gfd;

namespace {

int g_failures = 0;

void report(int criterion, const char* name, bool ok) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, name);
  if (!ok) ++g_failures;
}

Domain dom(int n, std::initializer_list<const char*> orders) {
  std::vector<LinearOrder> v;
  for (const char* s : orders) v.push_back(LinearOrder::parse(s));
  return Domain(n, std::move(v));
}

template <typename Fn>
void for_each_k(int n, Fn&& fn) {
  AltSet interior = KSubset::full_set(n).mask();
  for (AltSet mask = 0;; mask = (mask - interior) & interior) {
    fn(KSubset(n, mask));
    if (mask == interior) break;
  }
}

// Criterion 1: the three classic n=3 domains, plus exhaustive confirmation
// that every maximal Condorcet domain over [3] has 4 orders and that the
// classics represent all relabeling orbits.
void criterion1() {
  bool ok = true;
  Domain d1 = dom(3, {"123", "312", "132", "321"});
  Domain d2 = dom(3, {"123", "231", "132", "321"});
  Domain d3 = dom(3, {"123", "213", "231", "321"});
  // Reproduce each via its defining never condition.
  auto never_domain = [](const NeverCondition& c) {
    Domain all = Domain::all_orders(3);
    std::vector<LinearOrder> kept;
    for (const auto& v : all.orders())
      if (satisfies(v, c)) kept.push_back(v);
    return Domain(3, std::move(kept));
  };
  ok &= never_domain(NeverCondition(Triple(1, 2, 3), 2, 1)) == d1;
  ok &= never_domain(NeverCondition(Triple(1, 2, 3), 1, 2)) == d2;
  ok &= never_domain(NeverCondition(Triple(1, 2, 3), 2, 3)) == d3;

  auto all = Domain::all_orders(3);
  std::vector<Domain> maximal;
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<LinearOrder> orders;
    for (int i = 0; i < 6; ++i)
      if (mask & (1u << i)) orders.push_back(all.orders()[i]);
    Domain d(3, std::move(orders));
    if (is_condorcet(d) && is_maximal_condorcet(d)) maximal.push_back(d);
  }
  for (const auto& d : maximal) ok &= d.size() == 4;
  ok &= std::count(maximal.begin(), maximal.end(), d1) == 1;
  ok &= std::count(maximal.begin(), maximal.end(), d2) == 1;
  ok &= std::count(maximal.begin(), maximal.end(), d3) == 1;

  // Orbits under relabeling: exactly three, one per classic.
  std::vector<Domain> reps;
  for (const auto& d : maximal) {
    Domain canon = d;
    std::vector<int> p{1, 2, 3};
    do {
      std::vector<LinearOrder> relabeled;
      for (const auto& v : d.orders()) {
        std::vector<int> r;
        for (int a : v.ranking()) r.push_back(p[a - 1]);
        relabeled.emplace_back(std::move(r));
      }
      Domain image(3, std::move(relabeled));
      if (image.orders() < canon.orders()) canon = image;
    } while (std::next_permutation(p.begin(), p.end()));
    if (std::find(reps.begin(), reps.end(), canon) == reps.end())
      reps.push_back(canon);
  }
  ok &= reps.size() == 3;
  report(1, "n=3 ground truth and exhaustive classification", ok);
}

void criterion2() {
  bool ok =
      flags_to_domain(gf_necklace(4, KSubset::empty_set(4))) ==
      dom(4, {"1234", "1243", "1423", "1432", "4123", "4132", "4312", "4321"});
  ok &= flags_to_domain(gf_necklace(4, KSubset(4, {2}))) ==
        dom(4, {"1234", "1243", "2134", "2143", "2413", "2431", "4213", "4231",
                "4321"});
  report(2, "paper example tables for n=4", ok);
}

void criteria3to6() {
  bool equal_ok = true, copious_ok = true, maximal_ok = true;
  bool width_ok = true, connected_ok = true, spoc_ok = true;
  int cases = 0;
  for (int n = 3; n <= 7; ++n) {
    for_each_k(n, [&](const KSubset& k) {
      ++cases;
      Necklace neck = gf_necklace(n, k);
      Domain from_necklace = flags_to_domain(neck);
      Domain from_scheme = domain_of_scheme(gf_scheme(n, k));
      equal_ok &= from_necklace == from_scheme;
      copious_ok &= is_copious(from_scheme);
      maximal_ok &= is_maximal_condorcet(from_scheme);
      width_ok &= has_maximal_width(from_scheme);
      connected_ok &= is_directly_connected(from_scheme);
      spoc_ok &= is_spoc_on(from_scheme, CircularArrangement(neck.circle()));
      spoc_ok &= find_spoc_arrangement(from_scheme).found;
    });
  }
  equal_ok &= cases == 62;
  report(3, "necklace construction equals scheme construction, n=3..7, all K",
         equal_ok);
  report(4, "every F_K is copious and a maximal Condorcet domain", copious_ok &&
         maximal_ok);
  report(5, "every F_K has maximal width and is directly connected",
         width_ok && connected_ok);
  report(6, "every F_K is single-peaked on its necklace circle and by search",
         spoc_ok);
}

void criterion7() {
  bool ok = true;
  int maximal_chains = 0;
  for (int n = 4; n <= 5; ++n) {
    auto chains = enumerate_maximal_chains(n);
    ok &= chains.size() == (n == 4 ? 16u : 768u);
    for (const auto& sw : chains) {
      Domain d = chain_to_domain(sw);
      if (!is_maximal_condorcet(d)) continue;
      ++maximal_chains;
      ok &= !find_spoc_arrangement(d).found;
    }
    // The relay obstruction, asserted directly: the relay chain realizes
    // the two-element sets {1,2},{1,3},{1,4} as bottom pairs of its orders.
    // Each is the complement of a prefix set, so in a SPOC arrangement each
    // would have to be an arc, and no circle makes all three of them arcs.
    Domain relay = chain_to_domain(relay_chain(n));
    std::vector<AltSet> bottom_pairs;
    for (const auto& v : relay.orders())
      bottom_pairs.push_back(alt_bit(v.at(n - 1)) | alt_bit(v.at(n - 2)));
    const std::vector<AltSet> obstruction{alt_bit(1) | alt_bit(2),
                                          alt_bit(1) | alt_bit(3),
                                          alt_bit(1) | alt_bit(4)};
    for (AltSet p : obstruction)
      ok &= std::find(bottom_pairs.begin(), bottom_pairs.end(), p) !=
            bottom_pairs.end();
    for (const auto& arr : all_arrangements(n))
      ok &= !(arr.is_arc(obstruction[0]) && arr.is_arc(obstruction[1]) &&
              arr.is_arc(obstruction[2]));
  }
  ok &= maximal_chains > 0;
  report(7, "single-crossing maximal chains are never SPOC (n=4,5)", ok);
}

void criterion8() {
  bool ok = true;
  const std::int64_t expected[] = {4, 9, 20, 45, 100, 222};
  for (int n = 3; n <= 8; ++n) {
    std::int64_t formula = fishburn_formula(n);
    ok &= formula == expected[n - 3];
    std::int64_t enumerated = static_cast<std::int64_t>(
        domain_of_scheme(gf_scheme(n, KSubset::fishburn(n))).size());
    ok &= formula == enumerated;
  }
  report(8, "cardinality formula matches enumeration, n=3..8", ok);
}

void criterion9() {
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    std::size_t extreme = std::size_t{1} << (n - 1);
    ok &= domain_of_scheme(gf_scheme(n, KSubset::empty_set(n))).size() == extreme;
    ok &= domain_of_scheme(gf_scheme(n, KSubset::full_set(n))).size() == extreme;
    for_each_k(n, [&](const KSubset& k) {
      Domain fk = domain_of_scheme(gf_scheme(n, k));
      Domain fkc = domain_of_scheme(gf_scheme(n, k.complement()));
      ok &= fk.reversed() == fkc;
    });
  }
  report(9, "2^(n-1) extremes and reversal duality across the census", ok);
}

void criterion10() {
  bool ok = true;
  for (int n = 3; n <= 8; ++n)
    ok &= flags_to_domain(gf_necklace(n, KSubset::full_set(n))) ==
          classical_single_peaked(n);
  report(10, "full-K necklace domain equals the single-peaked oracle, n=3..8",
         ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criteria3to6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
