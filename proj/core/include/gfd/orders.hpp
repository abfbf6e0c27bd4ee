#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gfd {

// Enumeration cap; factorial-scale operations refuse larger n.
int max_alternatives();
void set_max_alternatives(int n);

// Alternatives are integers 1..n; sets of them are bitmasks with bit a-1 for a.
using AltSet = std::uint32_t;

constexpr AltSet alt_bit(int a) { return AltSet{1} << (a - 1); }
constexpr bool alt_in(AltSet s, int a) { return (s >> (a - 1)) & 1u; }
constexpr AltSet full_alt_set(int n) { return (AltSet{1} << n) - 1; }

std::vector<int> alt_members(AltSet s);

// True when the labels in s form a contiguous integer interval [lo,hi].
bool is_interval(AltSet s);

/// A ranking of alternatives 1..n, best first.
class LinearOrder {
 public:
  explicit LinearOrder(std::vector<int> ranking);

  static LinearOrder identity(int n);          // 12...n
  static LinearOrder reverse_identity(int n);  // n...21
  static LinearOrder parse(std::string_view text);

  int size() const { return static_cast<int>(ranking_.size()); }
  int at(int pos) const { return ranking_[pos]; }  // pos is 0-based
  int top() const { return ranking_.front(); }
  int position_of(int alt) const;  // 0-based
  const std::vector<int>& ranking() const { return ranking_; }

  LinearOrder reversed() const;

  // Digit string for n <= 9, comma-separated otherwise.
  std::string str() const;

  bool operator==(const LinearOrder& o) const { return ranking_ == o.ranking_; }
  std::strong_ordering operator<=>(const LinearOrder& o) const {
    return ranking_ <=> o.ranking_;
  }

 private:
  std::vector<int> ranking_;
  std::vector<int> pos_;  // pos_[a-1] = 0-based position of a
};

/// Three distinct alternatives a < b < c.
struct Triple {
  int a, b, c;
  Triple(int a_, int b_, int c_);
  AltSet mask() const { return alt_bit(a) | alt_bit(b) | alt_bit(c); }
  int member(int idx) const { return idx == 0 ? a : (idx == 1 ? b : c); }
  int index_of(int x) const;  // 0,1,2 for a,b,c
  std::string str() const;
  auto operator<=>(const Triple&) const = default;
};

std::vector<Triple> all_triples(int n);

/// Canonically sorted duplicate-free set of linear orders over a common [n].
class Domain {
 public:
  Domain(int n, std::vector<LinearOrder> orders);

  static Domain all_orders(int n);
  static Domain parse_text(std::string_view text, int n_hint = 0);
  static Domain parse_json(std::string_view text);
  // Auto-detects JSON ({"n":..,"orders":[..]}) vs one order per line.
  static Domain parse(std::string_view text);

  int n() const { return n_; }
  std::size_t size() const { return orders_.size(); }
  const std::vector<LinearOrder>& orders() const { return orders_; }
  bool contains(const LinearOrder& v) const;
  Domain with_order(const LinearOrder& v) const;
  Domain reversed() const;  // reverse every order

  std::string to_text() const;
  std::string to_json() const;

  bool operator==(const Domain& o) const = default;

 private:
  int n_;
  std::vector<LinearOrder> orders_;
};

// The three alternatives of t in the relative order they appear in v.
std::array<int, 3> restrict_order(const LinearOrder& v, const Triple& t);

std::set<std::array<int, 3>> restrict_domain(const Domain& d, const Triple& t);

// Number of pairs {x,y} ordered oppositely by u and v.
int kendall_distance(const LinearOrder& u, const LinearOrder& v);

// True iff u and v differ by exactly one adjacent transposition.
bool are_adjacent(const LinearOrder& u, const LinearOrder& v);

// Top-k alternatives of v.
AltSet prefix_set(const LinearOrder& v, int k);

// Alternatives strictly above a in v.
AltSet upper_contour(const LinearOrder& v, int a);

// True iff u and v are joined by a permutohedron geodesic inside d.
bool geodesic_connected(const Domain& d, const LinearOrder& u,
                        const LinearOrder& v);

}  // namespace gfd
