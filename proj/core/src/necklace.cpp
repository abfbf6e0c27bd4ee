#include "gfd/necklace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gfd {

Necklace::Necklace(std::vector<int> circle, AltSet black)
    : circle_(std::move(circle)), black_(black) {
  const int n = static_cast<int>(circle_.size());
  if (n < 1) throw std::invalid_argument("necklace needs at least one bead");
  pos_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int a = circle_[i];
    if (a < 1 || a > n) throw std::invalid_argument("bead label out of range");
    if (pos_[a - 1] != -1) throw std::invalid_argument("duplicate bead label");
    pos_[a - 1] = i;
  }
  if ((black_ & ~full_alt_set(n)) != 0)
    throw std::invalid_argument("black label out of range");
}

Necklace Necklace::parse_text(std::string_view text) {
  std::vector<int> circle;
  AltSet black = 0;
  std::string s(text);
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto first = tok.find_first_not_of(" \t");
    auto last = tok.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw std::invalid_argument("empty bead token");
    tok = tok.substr(first, last - first + 1);
    char color = tok.back();
    if (color != 'w' && color != 'b')
      throw std::invalid_argument("bead needs w/b suffix: " + tok);
    int label = std::stoi(tok.substr(0, tok.size() - 1));
    circle.push_back(label);
    if (color == 'b') black |= alt_bit(label);
  }
  return Necklace(std::move(circle), black);
}

Necklace Necklace::parse_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  std::vector<int> circle = j.at("circle").get<std::vector<int>>();
  AltSet black = 0;
  for (int label : j.at("black").get<std::vector<int>>())
    black |= alt_bit(label);
  return Necklace(std::move(circle), black);
}

std::string Necklace::to_text() const {
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(circle_[i]);
    out += is_black(circle_[i]) ? 'b' : 'w';
  }
  return out;
}

std::string Necklace::to_json() const {
  nlohmann::json j;
  j["circle"] = circle_;
  j["black"] = alt_members(black_);
  return j.dump();
}

Necklace gf_necklace(int n, const KSubset& k) {
  if (n < 3) throw std::invalid_argument("GF-necklace requires n >= 3");
  if (k.n() != n) throw std::invalid_argument("K built for a different n");
  std::vector<int> circle;
  circle.push_back(1);
  for (int j : k.members()) circle.push_back(j);
  circle.push_back(n);
  auto ells = k.complement().members();
  for (auto it = ells.rbegin(); it != ells.rend(); ++it) circle.push_back(*it);
  return Necklace(std::move(circle), k.complement().mask());
}

bool is_arc(const Necklace& s, AltSet x) {
  const int n = s.n();
  // Contiguous iff membership changes at most twice around the circle.
  int changes = 0;
  bool prev = alt_in(x, s.circle()[n - 1]);
  for (int i = 0; i < n; ++i) {
    bool cur = alt_in(x, s.circle()[i]);
    if (cur != prev) ++changes;
    prev = cur;
  }
  return changes <= 2;
}

bool is_w_convex(const Necklace& s, AltSet x) {
  if (x == 0) throw std::invalid_argument("w-convexity is defined for nonempty sets");
  if (!is_arc(s, x)) return false;
  auto members = alt_members(x);
  if (members.size() == 1 && s.is_black(members[0])) return false;
  // No absent white label strictly between two member labels.
  int lo = members.front(), hi = members.back();
  for (int j = lo + 1; j < hi; ++j)
    if (!alt_in(x, j) && !s.is_black(j)) return false;
  return true;
}

std::vector<AltSet> enumerate_w_convex(const Necklace& s) {
  std::vector<AltSet> out;
  for (AltSet x = 1; x <= full_alt_set(s.n()); ++x)
    if (is_w_convex(s, x)) out.push_back(x);
  return out;
}

namespace {

void extend_flag(const Necklace& s, AltSet current, std::vector<int>& prefix,
                 std::vector<LinearOrder>& out) {
  const int n = s.n();
  if (static_cast<int>(prefix.size()) == n) {
    out.emplace_back(prefix);
    return;
  }
  for (int a = 1; a <= n; ++a) {
    if (alt_in(current, a)) continue;
    AltSet next = current | alt_bit(a);
    if (!is_w_convex(s, next)) continue;
    prefix.push_back(a);
    extend_flag(s, next, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Domain flags_to_domain(const Necklace& s) {
  std::vector<LinearOrder> out;
  std::vector<int> prefix;
  extend_flag(s, 0, prefix, out);
  return Domain(s.n(), std::move(out));
}

Domain classical_single_peaked(int n) {
  auto universe = Domain::all_orders(n);
  std::vector<LinearOrder> kept;
  for (const auto& v : universe.orders()) {
    bool ok = true;
    for (int k = 1; k < n && ok; ++k)
      if (!is_interval(prefix_set(v, k))) ok = false;
    if (ok) kept.push_back(v);
  }
  return Domain(n, std::move(kept));
}

}  // namespace gfd
