#include "msl/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace msl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
    weight_ += parts_[i];
  }
}

int Partition::multiplicity(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

Partition Partition::join(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  std::sort(all.begin(), all.end(), std::greater<>());
  return Partition(std::move(all));
}

std::optional<Partition> Partition::remove_part(int v) const {
  auto it = std::find(parts_.begin(), parts_.end(), v);
  if (it == parts_.end()) return std::nullopt;
  std::vector<int> rest = parts_;
  rest.erase(rest.begin() + (it - parts_.begin()));
  return Partition(std::move(rest));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s.push_back(c);
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad partition: " + text);
    parts.push_back(v);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate(n, n, prefix, out);
  return cache.emplace(n, std::move(out)).first->second;
}

std::int64_t partition_count(int n) {
  if (n < 0) return 0;
  // Euler's pentagonal recurrence.
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t total = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p[static_cast<std::size_t>(n)];
}

int partition_index(const Partition& p) {
  static std::map<Partition, int> index;
  static std::mutex m;
  {
    std::lock_guard lock(m);
    auto it = index.find(p);
    if (it != index.end()) return it->second;
  }
  const auto& all = partitions_of(p.weight());
  std::lock_guard lock(m);
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], static_cast<int>(i));
  return index.at(p);
}

std::int64_t distinct_permutations(const Partition& p) {
  std::int64_t result = 1;
  int placed = 0;
  std::map<int, int> counts;
  for (int v : p.parts()) ++counts[v];
  for (auto [value, count] : counts) {
    (void)value;
    for (int i = 1; i <= count; ++i) {
      ++placed;
      result = result * placed / i;
    }
  }
  return result;
}

}  // namespace msl
