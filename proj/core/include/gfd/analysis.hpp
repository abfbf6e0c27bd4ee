#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfd/necklace.hpp"
#include "gfd/never.hpp"
#include "gfd/orders.hpp"

namespace gfd {

/// Circle of alternatives canonicalized with 1 first and the second element
/// smaller than the last, fixing rotation and reflection.
class CircularArrangement {
 public:
  explicit CircularArrangement(std::vector<int> circle);

  int n() const { return static_cast<int>(circle_.size()); }
  const std::vector<int>& circle() const { return circle_; }
  int position_of(int alt) const { return pos_[alt - 1]; }
  bool is_arc(AltSet x) const;  // empty and full pass
  std::string str() const;

  bool operator==(const CircularArrangement&) const = default;

 private:
  std::vector<int> circle_;
  std::vector<int> pos_;
};

// All canonical arrangements of [1..n]; (n-1)!/2 of them for n >= 3.
std::vector<CircularArrangement> all_arrangements(int n);

struct SpocResult {
  bool found = false;
  std::optional<CircularArrangement> arrangement;
};

struct PropertyReport {
  bool condorcet = false;
  bool copious = false;
  bool maximal = false;
  bool maximal_width = false;
  bool semi_connected = false;
  bool directly_connected = false;
  SpocResult spoc;

  std::optional<Triple> condorcet_witness;     // triple with no never condition
  std::optional<Triple> copious_witness;       // triple with != 4 restrictions
  std::optional<LinearOrder> maximal_witness;  // addable order
  std::optional<std::pair<LinearOrder, LinearOrder>> connectivity_witness;

  std::string to_json() const;
};

// Condorcet via Criterion-style per-triple never conditions; vacuously true
// for n < 3.
bool is_condorcet(const Domain& d);

// Every triple restriction has exactly 4 distinct orders.
bool is_copious(const Domain& d);

// An order u outside d with d + u still Condorcet, if any.
std::optional<LinearOrder> find_condorcet_extension(const Domain& d);

bool is_maximal_condorcet(const Domain& d);

// Default: contains both 12..n and n..21. With any_reversed_pair, any order
// together with its reversal qualifies.
bool has_maximal_width(const Domain& d, bool any_reversed_pair = false);

bool is_semi_connected(const Domain& d);

bool is_directly_connected(const Domain& d);
std::optional<std::pair<LinearOrder, LinearOrder>> find_unconnected_pair(
    const Domain& d);

// Every prefix set of every order is a contiguous arc of arr.
bool is_spoc_on(const Domain& d, const CircularArrangement& arr);

// Exhaustive sweep over canonical arrangements.
SpocResult find_spoc_arrangement(const Domain& d);

PropertyReport full_report(const Domain& d);

}  // namespace gfd
