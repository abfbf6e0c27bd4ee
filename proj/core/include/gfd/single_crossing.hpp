#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfd/orders.hpp"

namespace gfd {

/// A sequence of C(n,2) adjacent transpositions carrying 12..n to n..21,
/// each unordered pair swapped exactly once. Text form "1-2 1-3 2-3".
class SwapSequence {
 public:
  SwapSequence(int n, std::vector<std::pair<int, int>> swaps);

  static SwapSequence parse(int n, std::string_view text);
  std::string str() const;

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& swaps() const { return swaps_; }

  bool operator==(const SwapSequence&) const = default;

 private:
  int n_;
  std::vector<std::pair<int, int>> swaps_;  // each pair stored (x,y), x < y
};

// The C(n,2)+1 orders visited along the chain, e first, reversed e last.
Domain chain_to_domain(const SwapSequence& sw);

// All maximal chains in the weak order from e to its reversal; n <= 5.
std::vector<SwapSequence> enumerate_maximal_chains(int n);

// Canonical single-crossing chain: 1 relays to the bottom first, then the
// largest remaining element bubbles to the top, recursively.
SwapSequence relay_chain(int n);

// True iff no maximal chain at this n (4 or 5) yields a maximal Condorcet
// domain that is single-peaked on a circle.
bool verify_thm7(int n);

}  // namespace gfd
