#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gfd/orders.hpp"

namespace gfd {

/// "x never in position i" on the restriction to one triple; text form
/// "xN{a,b,c}i".
struct NeverCondition {
  Triple triple;
  int restricted;  // one of triple.a/b/c
  int position;    // 1..3

  NeverCondition(Triple t, int x, int i);
  static NeverCondition parse(std::string_view text);
  std::string str() const;

  bool holds_for(const LinearOrder& v) const;

  auto operator<=>(const NeverCondition&) const = default;
};

/// A subset K of [2, n-1] selecting which middle elements get never-bottom.
class KSubset {
 public:
  KSubset(int n, AltSet members);
  KSubset(int n, std::initializer_list<int> members);

  static KSubset empty_set(int n) { return KSubset(n, AltSet{0}); }
  static KSubset full_set(int n);
  static KSubset fishburn(int n);  // even numbers in [2, n-1]
  // Comma-separated members; empty string means the empty set.
  static KSubset parse(int n, std::string_view csv);

  int n() const { return n_; }
  AltSet mask() const { return members_; }
  bool contains(int j) const { return alt_in(members_, j); }
  std::vector<int> members() const { return alt_members(members_); }
  KSubset complement() const;
  std::string str() const;  // "2,4" or ""

  bool operator==(const KSubset&) const = default;

 private:
  int n_;
  AltSet members_;
};

/// Exactly one never condition per triple of [1..n].
class CompleteNeverSet {
 public:
  CompleteNeverSet(int n, std::vector<NeverCondition> conditions);

  static CompleteNeverSet parse(int n, std::string_view text);

  int n() const { return n_; }
  const std::vector<NeverCondition>& conditions() const { return conditions_; }
  const NeverCondition& condition_for(const Triple& t) const;
  std::string to_text() const;  // one condition per line

 private:
  int n_;
  std::vector<NeverCondition> conditions_;  // in all_triples(n) order
};

// Generalised alternating scheme: middle element j gets never-bottom when
// j is in K, never-top otherwise.
CompleteNeverSet gf_scheme(int n, const KSubset& k);

bool satisfies(const LinearOrder& v, const NeverCondition& c);

// All n! orders filtered by every condition of s; F_K when s = gf_scheme(n,K).
Domain domain_of_scheme(const CompleteNeverSet& s);

// Every never condition on t satisfied by all orders of d.
std::vector<NeverCondition> infer_satisfied_conditions(const Domain& d,
                                                       const Triple& t);

// True iff every condition bans position 1 or 3.
bool is_peak_pit(const CompleteNeverSet& s);

// Bitmask plumbing shared with the property checkers: condition (x index
// within triple, position p) is bit x*3 + (p-1).
inline constexpr unsigned kAllConditionBits = 0x1FF;
unsigned satisfied_condition_mask(const LinearOrder& v, const Triple& t);
unsigned surviving_condition_mask(const Domain& d, const Triple& t);
NeverCondition condition_from_bit(const Triple& t, int bit);

}  // namespace gfd
