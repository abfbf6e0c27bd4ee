#include "gfd/never.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gfd {

NeverCondition::NeverCondition(Triple t, int x, int i)
    : triple(t), restricted(x), position(i) {
  triple.index_of(x);  // throws if x not in triple
  if (i < 1 || i > 3) throw std::invalid_argument("position must be 1..3");
}

NeverCondition NeverCondition::parse(std::string_view text) {
  // Format: xN{a,b,c}i
  std::string s(text);
  auto nmark = s.find('N');
  auto open = s.find('{');
  auto close = s.find('}');
  if (nmark == std::string::npos || open != nmark + 1 ||
      close == std::string::npos || close + 1 >= s.size())
    throw std::invalid_argument("bad never-condition syntax: " + s);
  int x = std::stoi(s.substr(0, nmark));
  int abc[3];
  std::istringstream in(s.substr(open + 1, close - open - 1));
  std::string tok;
  int idx = 0;
  while (std::getline(in, tok, ',')) {
    if (idx >= 3) throw std::invalid_argument("triple needs 3 members: " + s);
    abc[idx++] = std::stoi(tok);
  }
  if (idx != 3) throw std::invalid_argument("triple needs 3 members: " + s);
  int i = std::stoi(s.substr(close + 1));
  return NeverCondition(Triple(abc[0], abc[1], abc[2]), x, i);
}

std::string NeverCondition::str() const {
  return std::to_string(restricted) + "N{" + std::to_string(triple.a) + "," +
         std::to_string(triple.b) + "," + std::to_string(triple.c) + "}" +
         std::to_string(position);
}

bool NeverCondition::holds_for(const LinearOrder& v) const {
  auto r = restrict_order(v, triple);
  return r[position - 1] != restricted;
}

bool satisfies(const LinearOrder& v, const NeverCondition& c) {
  return c.holds_for(v);
}

KSubset::KSubset(int n, AltSet members) : n_(n), members_(members) {
  if (n_ < 3) throw std::invalid_argument("K requires n >= 3");
  AltSet allowed = 0;
  for (int j = 2; j <= n_ - 1; ++j) allowed |= alt_bit(j);
  if ((members_ & ~allowed) != 0)
    throw std::invalid_argument("K members must lie in [2, n-1]");
}

KSubset::KSubset(int n, std::initializer_list<int> members)
    : KSubset(n, [&] {
        AltSet m = 0;
        for (int j : members) {
          if (j < 1 || j > 31) throw std::invalid_argument("K member out of range");
          m |= alt_bit(j);
        }
        return m;
      }()) {}

KSubset KSubset::full_set(int n) {
  AltSet m = 0;
  for (int j = 2; j <= n - 1; ++j) m |= alt_bit(j);
  return KSubset(n, m);
}

KSubset KSubset::fishburn(int n) {
  AltSet m = 0;
  for (int j = 2; j <= n - 1; j += 2) m |= alt_bit(j);
  return KSubset(n, m);
}

KSubset KSubset::parse(int n, std::string_view csv) {
  AltSet m = 0;
  std::string s(csv);
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto first = tok.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    int j = std::stoi(tok);
    if (j < 1 || j > 31) throw std::invalid_argument("K member out of range");
    m |= alt_bit(j);
  }
  return KSubset(n, m);
}

KSubset KSubset::complement() const {
  return KSubset(n_, full_set(n_).mask() & ~members_);
}

std::string KSubset::str() const {
  std::string out;
  for (int j : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(j);
  }
  return out;
}

CompleteNeverSet::CompleteNeverSet(int n, std::vector<NeverCondition> conditions)
    : n_(n) {
  auto triples = all_triples(n);
  if (conditions.size() != triples.size())
    throw std::invalid_argument("scheme must have exactly one condition per triple");
  std::sort(conditions.begin(), conditions.end(),
            [](const NeverCondition& x, const NeverCondition& y) {
              return x.triple < y.triple;
            });
  for (std::size_t i = 0; i < triples.size(); ++i)
    if (!(conditions[i].triple == triples[i]))
      throw std::invalid_argument("scheme is missing triple " + triples[i].str());
  conditions_ = std::move(conditions);
}

CompleteNeverSet CompleteNeverSet::parse(int n, std::string_view text) {
  std::vector<NeverCondition> conds;
  std::string s(text);
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    conds.push_back(NeverCondition::parse(line.substr(first, last - first + 1)));
  }
  return CompleteNeverSet(n, std::move(conds));
}

const NeverCondition& CompleteNeverSet::condition_for(const Triple& t) const {
  auto it = std::lower_bound(
      conditions_.begin(), conditions_.end(), t,
      [](const NeverCondition& c, const Triple& key) { return c.triple < key; });
  if (it == conditions_.end() || !(it->triple == t))
    throw std::invalid_argument("no condition for triple " + t.str());
  return *it;
}

std::string CompleteNeverSet::to_text() const {
  std::string out;
  for (const auto& c : conditions_) {
    out += c.str();
    out += '\n';
  }
  return out;
}

CompleteNeverSet gf_scheme(int n, const KSubset& k) {
  if (n < 3) throw std::invalid_argument("scheme requires n >= 3");
  if (k.n() != n) throw std::invalid_argument("K built for a different n");
  std::vector<NeverCondition> conds;
  for (const auto& t : all_triples(n))
    conds.emplace_back(t, t.b, k.contains(t.b) ? 3 : 1);
  return CompleteNeverSet(n, std::move(conds));
}

Domain domain_of_scheme(const CompleteNeverSet& s) {
  auto universe = Domain::all_orders(s.n());
  std::vector<LinearOrder> kept;
  for (const auto& v : universe.orders()) {
    bool ok = true;
    for (const auto& c : s.conditions())
      if (!c.holds_for(v)) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(v);
  }
  return Domain(s.n(), std::move(kept));
}

unsigned satisfied_condition_mask(const LinearOrder& v, const Triple& t) {
  auto r = restrict_order(v, t);
  unsigned violated = 0;
  for (int p = 0; p < 3; ++p) violated |= 1u << (t.index_of(r[p]) * 3 + p);
  return kAllConditionBits & ~violated;
}

unsigned surviving_condition_mask(const Domain& d, const Triple& t) {
  unsigned mask = kAllConditionBits;
  for (const auto& v : d.orders()) {
    mask &= satisfied_condition_mask(v, t);
    if (mask == 0) break;
  }
  return mask;
}

NeverCondition condition_from_bit(const Triple& t, int bit) {
  return NeverCondition(t, t.member(bit / 3), bit % 3 + 1);
}

std::vector<NeverCondition> infer_satisfied_conditions(const Domain& d,
                                                       const Triple& t) {
  unsigned mask = surviving_condition_mask(d, t);
  std::vector<NeverCondition> out;
  for (int bit = 0; bit < 9; ++bit)
    if (mask & (1u << bit)) out.push_back(condition_from_bit(t, bit));
  return out;
}

bool is_peak_pit(const CompleteNeverSet& s) {
  for (const auto& c : s.conditions())
    if (c.position == 2) return false;
  return true;
}

}  // namespace gfd
