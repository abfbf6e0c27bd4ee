#include "gfd/single_crossing.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gfd/analysis.hpp"

namespace gfd {

namespace {

// Applies the swaps starting from e, validating adjacency and collecting
// every visited order.
std::vector<LinearOrder> walk_chain(int n,
                                    const std::vector<std::pair<int, int>>& swaps) {
  std::vector<int> current(n);
  for (int i = 0; i < n; ++i) current[i] = i + 1;
  std::vector<LinearOrder> visited;
  visited.emplace_back(current);
  for (auto [x, y] : swaps) {
    int px = -1;
    for (int i = 0; i < n; ++i)
      if (current[i] == x || current[i] == y) {
        px = i;
        break;
      }
    if (px < 0 || px + 1 >= n ||
        !((current[px] == x && current[px + 1] == y) ||
          (current[px] == y && current[px + 1] == x)))
      throw std::invalid_argument("swap " + std::to_string(x) + "-" +
                                  std::to_string(y) +
                                  " is not adjacent at this point");
    std::swap(current[px], current[px + 1]);
    visited.emplace_back(current);
  }
  return visited;
}

}  // namespace

SwapSequence::SwapSequence(int n, std::vector<std::pair<int, int>> swaps)
    : n_(n), swaps_(std::move(swaps)) {
  if (n_ < 2) throw std::invalid_argument("swap sequence requires n >= 2");
  std::vector<std::vector<char>> seen(n_ + 1, std::vector<char>(n_ + 1, 0));
  for (auto& [x, y] : swaps_) {
    if (x > y) std::swap(x, y);
    if (x < 1 || y > n_ || x == y)
      throw std::invalid_argument("bad swap pair");
    if (seen[x][y]++)
      throw std::invalid_argument("pair swapped twice: " + std::to_string(x) +
                                  "-" + std::to_string(y));
  }
  if (static_cast<int>(swaps_.size()) != n_ * (n_ - 1) / 2)
    throw std::invalid_argument("chain must swap every pair exactly once");
  walk_chain(n_, swaps_);  // adjacency validation
}

SwapSequence SwapSequence::parse(int n, std::string_view text) {
  std::vector<std::pair<int, int>> swaps;
  std::string s(text);
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    auto dash = tok.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("bad swap token: " + tok);
    swaps.emplace_back(std::stoi(tok.substr(0, dash)),
                       std::stoi(tok.substr(dash + 1)));
  }
  return SwapSequence(n, std::move(swaps));
}

std::string SwapSequence::str() const {
  std::string out;
  for (const auto& [x, y] : swaps_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x) + "-" + std::to_string(y);
  }
  return out;
}

Domain chain_to_domain(const SwapSequence& sw) {
  return Domain(sw.n(), walk_chain(sw.n(), sw.swaps()));
}

namespace {

void chains_dfs(std::vector<int>& current, std::vector<std::pair<int, int>>& swaps,
                std::vector<SwapSequence>& out) {
  const int n = static_cast<int>(current.size());
  if (static_cast<int>(swaps.size()) == n * (n - 1) / 2) {
    out.emplace_back(n, swaps);
    return;
  }
  for (int i = 0; i + 1 < n; ++i) {
    // A pair still in its original order has not been swapped yet.
    if (current[i] < current[i + 1]) {
      swaps.emplace_back(current[i], current[i + 1]);
      std::swap(current[i], current[i + 1]);
      chains_dfs(current, swaps, out);
      std::swap(current[i], current[i + 1]);
      swaps.pop_back();
    }
  }
}

}  // namespace

std::vector<SwapSequence> enumerate_maximal_chains(int n) {
  if (n < 2 || n > 5)
    throw std::invalid_argument("chain enumeration supported for 2 <= n <= 5");
  std::vector<int> current(n);
  for (int i = 0; i < n; ++i) current[i] = i + 1;
  std::vector<std::pair<int, int>> swaps;
  std::vector<SwapSequence> out;
  chains_dfs(current, swaps, out);
  return out;
}

SwapSequence relay_chain(int n) {
  if (n < 3) throw std::invalid_argument("relay chain requires n >= 3");
  std::vector<int> current(n);
  for (int i = 0; i < n; ++i) current[i] = i + 1;
  std::vector<std::pair<int, int>> swaps;
  auto swap_at = [&](int i) {
    swaps.emplace_back(std::min(current[i], current[i + 1]),
                       std::max(current[i], current[i + 1]));
    std::swap(current[i], current[i + 1]);
  };
  // 1 relays from top to bottom.
  for (int i = 0; i + 1 < n; ++i) swap_at(i);
  // Largest element not yet in place bubbles to the top.
  for (int target = n; target >= 3; --target) {
    int p = static_cast<int>(std::find(current.begin(), current.end(), target) -
                             current.begin());
    for (int i = p; i >= n - target + 1; --i) swap_at(i - 1);
  }
  return SwapSequence(n, std::move(swaps));
}

bool verify_thm7(int n) {
  if (n < 4 || n > 5)
    throw std::invalid_argument("exhaustive range is n in {4,5}");
  for (const auto& sw : enumerate_maximal_chains(n)) {
    Domain d = chain_to_domain(sw);
    if (!is_maximal_condorcet(d)) continue;
    if (find_spoc_arrangement(d).found) return false;
  }
  return true;
}

}  // namespace gfd
