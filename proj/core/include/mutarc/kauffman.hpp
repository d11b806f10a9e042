#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mutarc/diagram.hpp"
#include "mutarc/laurent.hpp"

namespace mutarc {

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SkeinStrategy {
  FirstBad,   // first crossing met from below along the traversal
  Reducible,  // prefer a bad crossing sitting in a bigon, so the switch cancels
};

// Values of connected, reduced diagrams keyed by their canonical code.
// Lookups and inserts may come from several threads.
class SkeinCache {
 public:
  bool find(const std::string& key, BiLaurent& out) const;
  void insert(const std::string& key, const BiLaurent& value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, BiLaurent> table_;
};

struct SkeinConfig {
  int max_crossings = 24;
  bool memo_enabled = true;
  // Cancel bigons whose strands do not alternate before branching. Off gives
  // the plain curl-only recursion.
  bool bigon_moves = true;
  SkeinStrategy strategy = SkeinStrategy::Reducible;
  int threads = 1;
  // When set, reused across calls; otherwise each call has a private cache.
  std::shared_ptr<SkeinCache> cache;
};

struct SkeinStats {
  std::uint64_t skein_steps = 0;
  std::uint64_t descending_leaves = 0;
  std::uint64_t memo_hits = 0;
};

// The loop value (a + a^{-1}) z^{-1} - 1.
BiLaurent loop_value();

BiLaurent lambda(const Diagram& d, const SkeinConfig& cfg = {}, SkeinStats* stats = nullptr);
BiLaurent kauffman_f(const Diagram& d, const SkeinConfig& cfg = {}, SkeinStats* stats = nullptr);
BracketForm lambda_bracket(const Diagram& d, const SkeinConfig& cfg = {});

SkeinStrategy parse_strategy(const std::string& name);
std::string to_string(SkeinStrategy s);

}  // namespace mutarc
