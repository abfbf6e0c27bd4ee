#include "gfd/orders.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gfd {

namespace {
int g_max_alternatives = 10;
}

int max_alternatives() { return g_max_alternatives; }

void set_max_alternatives(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("cap must be in [1,12]");
  g_max_alternatives = n;
}

std::vector<int> alt_members(AltSet s) {
  std::vector<int> out;
  for (int a = 1; s != 0; ++a, s >>= 1)
    if (s & 1u) out.push_back(a);
  return out;
}

bool is_interval(AltSet s) {
  if (s == 0) return true;
  AltSet shifted = s >> std::countr_zero(s);
  return (shifted & (shifted + 1)) == 0;
}

LinearOrder::LinearOrder(std::vector<int> ranking)
    : ranking_(std::move(ranking)) {
  const int n = static_cast<int>(ranking_.size());
  if (n < 1) throw std::invalid_argument("order must rank at least one alternative");
  pos_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int a = ranking_[i];
    if (a < 1 || a > n)
      throw std::invalid_argument("alternative " + std::to_string(a) +
                                  " out of range for n=" + std::to_string(n));
    if (pos_[a - 1] != -1)
      throw std::invalid_argument("duplicate alternative " + std::to_string(a));
    pos_[a - 1] = i;
  }
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = i + 1;
  return LinearOrder(std::move(r));
}

LinearOrder LinearOrder::reverse_identity(int n) {
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = n - i;
  return LinearOrder(std::move(r));
}

LinearOrder LinearOrder::parse(std::string_view text) {
  std::vector<int> r;
  if (text.find(',') != std::string_view::npos) {
    std::string s(text);
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size() && tok.find_first_not_of(" \t", pos) != std::string::npos)
        throw std::invalid_argument("bad order token: " + tok);
      r.push_back(v);
    }
  } else {
    for (char ch : text) {
      if (ch == ' ' || ch == '\t' || ch == '\r') continue;
      if (ch < '1' || ch > '9')
        throw std::invalid_argument(std::string("bad order digit: ") + ch);
      r.push_back(ch - '0');
    }
  }
  if (r.empty()) throw std::invalid_argument("empty order");
  return LinearOrder(std::move(r));
}

int LinearOrder::position_of(int alt) const {
  if (alt < 1 || alt > size())
    throw std::invalid_argument("alternative out of range");
  return pos_[alt - 1];
}

LinearOrder LinearOrder::reversed() const {
  std::vector<int> r(ranking_.rbegin(), ranking_.rend());
  return LinearOrder(std::move(r));
}

std::string LinearOrder::str() const {
  std::string out;
  const bool compact = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(ranking_[i]);
  }
  return out;
}

Triple::Triple(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
  if (!(a >= 1 && a < b && b < c))
    throw std::invalid_argument("triple must satisfy 1 <= a < b < c");
}

int Triple::index_of(int x) const {
  if (x == a) return 0;
  if (x == b) return 1;
  if (x == c) return 2;
  throw std::invalid_argument("alternative not in triple");
}

std::string Triple::str() const {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + "}";
}

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) out.emplace_back(a, b, c);
  return out;
}

Domain::Domain(int n, std::vector<LinearOrder> orders)
    : n_(n), orders_(std::move(orders)) {
  if (n_ < 1) throw std::invalid_argument("n must be >= 1");
  for (const auto& v : orders_)
    if (v.size() != n_)
      throw std::invalid_argument("order " + v.str() + " has wrong n");
  std::sort(orders_.begin(), orders_.end());
  orders_.erase(std::unique(orders_.begin(), orders_.end()), orders_.end());
}

Domain Domain::all_orders(int n) {
  if (n > max_alternatives())
    throw std::invalid_argument("n exceeds enumeration cap " +
                                std::to_string(max_alternatives()));
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = i + 1;
  std::vector<LinearOrder> orders;
  do {
    orders.emplace_back(r);
  } while (std::next_permutation(r.begin(), r.end()));
  return Domain(n, std::move(orders));
}

Domain Domain::parse_text(std::string_view text, int n_hint) {
  std::vector<LinearOrder> orders;
  std::string s(text);
  std::istringstream in(s);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    try {
      orders.push_back(LinearOrder::parse(line.substr(first, last - first + 1)));
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  if (orders.empty() && n_hint == 0)
    throw std::invalid_argument("empty domain input");
  int n = orders.empty() ? n_hint : orders.front().size();
  return Domain(n, std::move(orders));
}

Domain Domain::parse_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  int n = j.at("n").get<int>();
  std::vector<LinearOrder> orders;
  for (const auto& item : j.at("orders"))
    orders.push_back(LinearOrder::parse(item.get<std::string>()));
  return Domain(n, std::move(orders));
}

Domain Domain::parse(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return parse_json(text);
  return parse_text(text);
}

bool Domain::contains(const LinearOrder& v) const {
  return std::binary_search(orders_.begin(), orders_.end(), v);
}

Domain Domain::with_order(const LinearOrder& v) const {
  auto orders = orders_;
  orders.push_back(v);
  return Domain(n_, std::move(orders));
}

Domain Domain::reversed() const {
  std::vector<LinearOrder> orders;
  orders.reserve(orders_.size());
  for (const auto& v : orders_) orders.push_back(v.reversed());
  return Domain(n_, std::move(orders));
}

std::string Domain::to_text() const {
  std::string out;
  for (const auto& v : orders_) {
    out += v.str();
    out += '\n';
  }
  return out;
}

std::string Domain::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto& arr = j["orders"] = nlohmann::json::array();
  for (const auto& v : orders_) arr.push_back(v.str());
  return j.dump();
}

std::array<int, 3> restrict_order(const LinearOrder& v, const Triple& t) {
  if (t.c > v.size()) throw std::invalid_argument("triple out of range");
  std::array<int, 3> out{t.a, t.b, t.c};
  std::sort(out.begin(), out.end(), [&](int x, int y) {
    return v.position_of(x) < v.position_of(y);
  });
  return out;
}

std::set<std::array<int, 3>> restrict_domain(const Domain& d, const Triple& t) {
  std::set<std::array<int, 3>> out;
  for (const auto& v : d.orders()) out.insert(restrict_order(v, t));
  return out;
}

int kendall_distance(const LinearOrder& u, const LinearOrder& v) {
  if (u.size() != v.size()) throw std::invalid_argument("mismatched n");
  const int n = u.size();
  int count = 0;
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y) {
      bool ux = u.position_of(x) < u.position_of(y);
      bool vx = v.position_of(x) < v.position_of(y);
      if (ux != vx) ++count;
    }
  return count;
}

bool are_adjacent(const LinearOrder& u, const LinearOrder& v) {
  if (u.size() != v.size()) throw std::invalid_argument("mismatched n");
  const int n = u.size();
  int first = -1;
  for (int i = 0; i < n; ++i)
    if (u.at(i) != v.at(i)) {
      first = i;
      break;
    }
  if (first == -1 || first + 1 >= n) return false;
  if (u.at(first) != v.at(first + 1) || u.at(first + 1) != v.at(first))
    return false;
  for (int i = first + 2; i < n; ++i)
    if (u.at(i) != v.at(i)) return false;
  return true;
}

AltSet prefix_set(const LinearOrder& v, int k) {
  if (k < 0 || k > v.size()) throw std::invalid_argument("k out of range");
  AltSet s = 0;
  for (int i = 0; i < k; ++i) s |= alt_bit(v.at(i));
  return s;
}

AltSet upper_contour(const LinearOrder& v, int a) {
  return prefix_set(v, v.position_of(a));
}

bool geodesic_connected(const Domain& d, const LinearOrder& u,
                        const LinearOrder& v) {
  if (!d.contains(u) || !d.contains(v))
    throw std::invalid_argument("endpoints must belong to the domain");
  int dist = kendall_distance(u, v);
  std::vector<LinearOrder> frontier{u};
  for (int remaining = dist; remaining > 0; --remaining) {
    std::vector<LinearOrder> next;
    for (const auto& w : frontier)
      for (const auto& x : d.orders())
        if (are_adjacent(w, x) && kendall_distance(x, v) == remaining - 1)
          next.push_back(x);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.empty()) return false;
    frontier = std::move(next);
  }
  return std::find(frontier.begin(), frontier.end(), v) != frontier.end();
}

}  // namespace gfd
