#pragma once

#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "raag/element.hpp"

namespace raag {

// Bounded least-recently-used map, safe for concurrent use.
template <class Value>
class LruCache {
 public:
  explicit LruCache(std::size_t capacity) : capacity_(capacity) {}

  std::optional<Value> get(const std::string& key) {
    std::lock_guard lock(mutex_);
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    order_.splice(order_.begin(), order_, it->second);
    return it->second->second;
  }

  void put(const std::string& key, Value value) {
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) {
      it->second->second = std::move(value);
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    order_.emplace_front(key, std::move(value));
    index_.emplace(key, order_.begin());
    if (index_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return index_.size();
  }

 private:
  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<std::pair<std::string, Value>> order_;
  std::unordered_map<std::string, typename std::list<std::pair<std::string, Value>>::iterator> index_;
};

inline constexpr std::size_t kDefaultCacheEntries = std::size_t{1} << 20;

struct StarFactor {
  Vertex center;
  GroupElement word;  // supported in st(center)
};

// target = factors[k-1] * ... * factors[0]
struct Factorization {
  std::vector<StarFactor> factors;
  GroupElement target;

  GroupElement product() const;
  // Checks support containment and the product.
  bool valid() const;
};

int syllable_length(const GroupElement& g);
int star_length(const GroupElement& g);
// Shortest star factorization found by maximal-prefix peeling.
Factorization star_factorization(const GroupElement& g);

// Minimum total syllable length over star factorizations of length star_length(g).
int syllable_via_star(const GroupElement& g);
Factorization min_syllable_star_factorization(const GroupElement& g);

// Every prefix of g (in the commutation sense), including 1 and g.
std::vector<GroupElement> all_prefixes(const GroupElement& g);

// Number of star lengths currently memoized (for diagnostics).
std::size_t length_cache_size();

}  // namespace raag
