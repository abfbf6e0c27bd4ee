#include "gfd/analysis.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace gfd {

CircularArrangement::CircularArrangement(std::vector<int> circle)
    : circle_(std::move(circle)) {
  const int n = static_cast<int>(circle_.size());
  if (n < 1) throw std::invalid_argument("arrangement needs at least one label");
  pos_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int a = circle_[i];
    if (a < 1 || a > n) throw std::invalid_argument("label out of range");
    if (pos_[a - 1] != -1) throw std::invalid_argument("duplicate label");
    pos_[a - 1] = i;
  }
  // Rotate so 1 is first, then reflect so the second element is smaller
  // than the last.
  std::rotate(circle_.begin(), circle_.begin() + pos_[0], circle_.end());
  if (n >= 3 && circle_[1] > circle_[n - 1])
    std::reverse(circle_.begin() + 1, circle_.end());
  for (int i = 0; i < n; ++i) pos_[circle_[i] - 1] = i;
}

bool CircularArrangement::is_arc(AltSet x) const {
  const int n = this->n();
  int changes = 0;
  bool prev = alt_in(x, circle_[n - 1]);
  for (int i = 0; i < n; ++i) {
    bool cur = alt_in(x, circle_[i]);
    if (cur != prev) ++changes;
    prev = cur;
  }
  return changes <= 2;
}

std::string CircularArrangement::str() const {
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(circle_[i]);
  }
  return out;
}

std::vector<CircularArrangement> all_arrangements(int n) {
  std::vector<CircularArrangement> out;
  if (n < 3) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i + 1;
    out.emplace_back(std::move(c));
    return out;
  }
  std::vector<int> rest(n - 1);
  for (int i = 0; i < n - 1; ++i) rest[i] = i + 2;
  do {
    if (rest.front() > rest.back()) continue;  // reflection representative
    std::vector<int> c;
    c.push_back(1);
    c.insert(c.end(), rest.begin(), rest.end());
    out.emplace_back(std::move(c));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

bool is_condorcet(const Domain& d) {
  if (d.n() < 3) return true;
  for (const auto& t : all_triples(d.n()))
    if (surviving_condition_mask(d, t) == 0) return false;
  return true;
}

bool is_copious(const Domain& d) {
  if (d.n() < 3) return true;
  for (const auto& t : all_triples(d.n()))
    if (restrict_domain(d, t).size() != 4) return false;
  return true;
}

std::optional<LinearOrder> find_condorcet_extension(const Domain& d) {
  if (!is_condorcet(d))
    throw std::invalid_argument("domain is not a Condorcet domain");
  auto triples = all_triples(d.n());
  std::vector<unsigned> surviving;
  surviving.reserve(triples.size());
  for (const auto& t : triples) surviving.push_back(surviving_condition_mask(d, t));
  const Domain universe = Domain::all_orders(d.n());
  for (const auto& u : universe.orders()) {
    if (d.contains(u)) continue;
    bool extends = true;
    for (std::size_t i = 0; i < triples.size(); ++i)
      if ((surviving[i] & satisfied_condition_mask(u, triples[i])) == 0) {
        extends = false;
        break;
      }
    if (extends) return u;
  }
  return std::nullopt;
}

bool is_maximal_condorcet(const Domain& d) {
  return !find_condorcet_extension(d).has_value();
}

bool has_maximal_width(const Domain& d, bool any_reversed_pair) {
  if (!any_reversed_pair)
    return d.contains(LinearOrder::identity(d.n())) &&
           d.contains(LinearOrder::reverse_identity(d.n()));
  for (const auto& v : d.orders())
    if (d.contains(v.reversed())) return true;
  return false;
}

bool is_semi_connected(const Domain& d) {
  if (!has_maximal_width(d))
    throw std::invalid_argument("semi-connectivity requires maximal width");
  return geodesic_connected(d, LinearOrder::identity(d.n()),
                            LinearOrder::reverse_identity(d.n()));
}

std::optional<std::pair<LinearOrder, LinearOrder>> find_unconnected_pair(
    const Domain& d) {
  const auto& orders = d.orders();
  const int m = static_cast<int>(orders.size());
  // Distance matrix and in-domain adjacency once, then layered BFS per pair.
  std::vector<std::vector<int>> dist(m, std::vector<int>(m, 0));
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int dij = kendall_distance(orders[i], orders[j]);
      dist[i][j] = dist[j][i] = dij;
      if (dij == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  for (int s = 0; s < m; ++s)
    for (int t = s + 1; t < m; ++t) {
      std::vector<char> frontier(m, 0);
      frontier[s] = 1;
      bool alive = true;
      for (int remaining = dist[s][t]; remaining > 0 && alive; --remaining) {
        std::vector<char> next(m, 0);
        alive = false;
        for (int i = 0; i < m; ++i) {
          if (!frontier[i]) continue;
          for (int j : adj[i])
            if (dist[j][t] == remaining - 1) {
              next[j] = 1;
              alive = true;
            }
        }
        frontier = std::move(next);
      }
      if (!alive || !frontier[t]) return std::make_pair(orders[s], orders[t]);
    }
  return std::nullopt;
}

bool is_directly_connected(const Domain& d) {
  return !find_unconnected_pair(d).has_value();
}

bool is_spoc_on(const Domain& d, const CircularArrangement& arr) {
  if (arr.n() != d.n()) throw std::invalid_argument("mismatched n");
  for (const auto& v : d.orders())
    for (int k = 1; k < d.n(); ++k)
      if (!arr.is_arc(prefix_set(v, k))) return false;
  return true;
}

SpocResult find_spoc_arrangement(const Domain& d) {
  for (auto& arr : all_arrangements(d.n()))
    if (is_spoc_on(d, arr)) return SpocResult{true, std::move(arr)};
  return SpocResult{};
}

PropertyReport full_report(const Domain& d) {
  PropertyReport r;
  r.condorcet = true;
  if (d.n() >= 3)
    for (const auto& t : all_triples(d.n()))
      if (surviving_condition_mask(d, t) == 0) {
        r.condorcet = false;
        r.condorcet_witness = t;
        break;
      }
  r.copious = true;
  if (d.n() >= 3)
    for (const auto& t : all_triples(d.n()))
      if (restrict_domain(d, t).size() != 4) {
        r.copious = false;
        r.copious_witness = t;
        break;
      }
  if (r.condorcet) {
    r.maximal_witness = find_condorcet_extension(d);
    r.maximal = !r.maximal_witness.has_value();
  }
  r.maximal_width = has_maximal_width(d);
  r.connectivity_witness = find_unconnected_pair(d);
  r.directly_connected = !r.connectivity_witness.has_value();
  r.semi_connected = r.maximal_width && is_semi_connected(d);
  r.spoc = find_spoc_arrangement(d);
  return r;
}

std::string PropertyReport::to_json() const {
  nlohmann::json j;
  j["condorcet"] = condorcet;
  j["copious"] = copious;
  j["maximal"] = maximal;
  j["maximal_width"] = maximal_width;
  j["semi_connected"] = semi_connected;
  j["directly_connected"] = directly_connected;
  j["spoc"]["found"] = spoc.found;
  if (spoc.found) j["spoc"]["arrangement"] = spoc.arrangement->circle();
  nlohmann::json w = nlohmann::json::object();
  if (condorcet_witness) w["condorcet_triple"] = condorcet_witness->str();
  if (copious_witness) w["copious_triple"] = copious_witness->str();
  if (maximal_witness) w["addable_order"] = maximal_witness->str();
  if (connectivity_witness)
    w["unconnected_pair"] = {connectivity_witness->first.str(),
                             connectivity_witness->second.str()};
  if (!w.empty()) j["witnesses"] = w;
  return j.dump();
}

}  // namespace gfd
