#include "br/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "br/bigint.hpp"

namespace br {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= max_part(); ++j) {
    int cnt = 0;
    for (int p : parts)
      if (p >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  return os.str();
}

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("parse_partition: bad token '" + tok + "'");
    if (v == 0 && parts.empty()) continue; // allow "0" for the empty partition
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

static void gen(int remaining, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, maxp); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> all_partitions(int d) {
  if (d < 0) throw std::invalid_argument("all_partitions: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(d, d == 0 ? 1 : d, cur, out);
  return out;
}

std::uint64_t syt_count(const Partition& p) {
  const int d = p.weight();
  const Partition c = p.conjugate();
  Int num = factorial(static_cast<unsigned>(d));
  Int den = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.parts[i]; ++j) {
      const int hook = (p.parts[i] - j) + (c.parts[j] - i) - 1;
      den *= hook;
    }
  Int q = num / den;
  return static_cast<std::uint64_t>(q);
}

} // namespace br
