#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gfd/never.hpp"
#include "gfd/orders.hpp"

namespace gfd {

/// Circular arrangement of labeled beads, each white or black. Positions run
/// anticlockwise; arcs are computed on positions, colors live on labels.
class Necklace {
 public:
  Necklace(std::vector<int> circle, AltSet black);

  // Text form "1w,2w,4w,3b"; JSON form {"circle":[1,2,4,3],"black":[3]}.
  static Necklace parse_text(std::string_view text);
  static Necklace parse_json(std::string_view text);
  std::string to_text() const;
  std::string to_json() const;

  int n() const { return static_cast<int>(circle_.size()); }
  const std::vector<int>& circle() const { return circle_; }
  int position_of(int label) const { return pos_[label - 1]; }
  bool is_black(int label) const { return alt_in(black_, label); }
  AltSet black_mask() const { return black_; }

 private:
  std::vector<int> circle_;
  std::vector<int> pos_;
  AltSet black_;
};

// GF-necklace from K: circle 1, k_1..k_s, n, l_t..l_1 with K and the
// endpoints white and the complement black.
Necklace gf_necklace(int n, const KSubset& k);

// True iff x occupies contiguous circular positions; empty and full pass.
bool is_arc(const Necklace& s, AltSet x);

// Arc, not a single black bead, and no absent white label strictly between
// two member labels. Rejects the empty set.
bool is_w_convex(const Necklace& s, AltSet x);

std::vector<AltSet> enumerate_w_convex(const Necklace& s);

// Orders read off maximal chains of nested w-convex sets.
Domain flags_to_domain(const Necklace& s);

// Independent oracle: all orders whose every prefix set is an integer
// interval of [1..n].
Domain classical_single_peaked(int n);

}  // namespace gfd
