#include "br/characters.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace br {

Int conjugacy_class_size(const Partition& mu) {
  const int d = mu.weight();
  Int z = 1;
  int run = 0;
  for (std::size_t i = 0; i < mu.parts.size(); ++i) {
    z *= mu.parts[i];
    ++run;
    if (i + 1 == mu.parts.size() || mu.parts[i + 1] != mu.parts[i]) {
      z *= factorial(static_cast<unsigned>(run));
      run = 0;
    }
  }
  return factorial(static_cast<unsigned>(d)) / z;
}

namespace {

// beta-numbers of a partition padded to `slots` rows: beta_i = p_i + slots-1-i,
// strictly decreasing.
std::vector<int> beta_numbers(const std::vector<int>& parts, int slots) {
  std::vector<int> b(slots);
  for (int i = 0; i < slots; ++i) {
    const int pi = i < static_cast<int>(parts.size()) ? parts[i] : 0;
    b[i] = pi + slots - 1 - i;
  }
  return b;
}

std::vector<int> partition_from_betas(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<int>());
  const int slots = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < slots; ++i) {
    const int p = b[i] - (slots - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

} // namespace

CharacterTable::CharacterTable(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("CharacterTable: degree must be >= 1");
  parts_ = all_partitions(d);
  for (std::size_t i = 0; i < parts_.size(); ++i) index_[parts_[i].parts] = i;
  class_sizes_.reserve(parts_.size());
  for (const Partition& mu : parts_) class_sizes_.push_back(conjugacy_class_size(mu));

  // partitions of every intermediate weight, with index maps
  std::vector<std::vector<Partition>> by_weight(d + 1);
  std::vector<std::map<std::vector<int>, std::size_t>> idx_by_weight(d + 1);
  for (int w = 0; w <= d; ++w) {
    by_weight[w] = all_partitions(w);
    for (std::size_t i = 0; i < by_weight[w].size(); ++i)
      idx_by_weight[w][by_weight[w][i].parts] = i;
  }

  const std::size_t n = parts_.size();
  table_.assign(n * n, 0);

  const int slots = d; // enough rows for any partition of weight <= d
  std::vector<char> present(2 * d + slots + 2, 0);

  for (std::size_t mu_i = 0; mu_i < n; ++mu_i) {
    const Partition& mu = parts_[mu_i];
    std::vector<std::int64_t> cur(1, 1); // weight-0 layer: empty partition
    int w = 0;
    for (int r : mu.parts) {
      std::vector<std::int64_t> next(by_weight[w + r].size(), 0);
      for (std::size_t ki = 0; ki < cur.size(); ++ki) {
        const std::int64_t coef = cur[ki];
        if (coef == 0) continue;
        std::vector<int> beta = beta_numbers(by_weight[w][ki].parts, slots);
        for (int v : beta) present[v] = 1;
        for (int i = 0; i < slots; ++i) {
          const int from = beta[i], to = beta[i] + r;
          if (present[to]) continue;
          // height = number of occupied betas strictly between from and to
          int height = 0;
          for (int j = 0; j < slots; ++j)
            if (beta[j] > from && beta[j] < to) ++height;
          std::vector<int> nb = beta;
          nb[i] = to;
          const std::vector<int> np = partition_from_betas(std::move(nb));
          const std::size_t li = idx_by_weight[w + r].at(np);
          next[li] += (height % 2 == 0) ? coef : -coef;
        }
        for (int v : beta) present[v] = 0;
      }
      cur = std::move(next);
      w += r;
    }
    for (std::size_t li = 0; li < n; ++li) table_[li * n + mu_i] = cur[li];
  }
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = index_.find(p.parts);
  if (it == index_.end())
    throw std::invalid_argument("CharacterTable: partition has wrong weight");
  return it->second;
}

const CharacterTable& character_table(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it == cache.end())
    it = cache.emplace(d, std::make_unique<CharacterTable>(d)).first;
  return *it->second;
}

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("mn_character: weights differ");
  const CharacterTable& t = character_table(lambda.weight());
  return t.chi(lambda, mu);
}

} // namespace br
