#include "staircase/oracle.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace staircase {

namespace {

class Enumerator {
 public:
  Enumerator(const GraphInstance& g, int k, std::uint64_t budget)
      : k_(k), budget_(budget), earlier_(g.vertices().size()), word_(g.vertices().size(), 0) {
    for (const auto& e : g.edges()) {
      std::size_t a = g.index_of(e.a);
      std::size_t b = g.index_of(e.b);
      if (a < b) earlier_[b].push_back(a);
      else earlier_[a].push_back(b);
    }
  }

  /// Counts completions of a word whose first `fixed` letters are preset.
  std::uint64_t count(std::size_t fixed, const std::vector<int>& prefix) {
    for (std::size_t i = 0; i < fixed; ++i) word_[i] = prefix[i];
    for (std::size_t i = 0; i < fixed; ++i)
      if (!fits(i, word_[i])) return 0;
    std::uint64_t before = visited_;
    descend(fixed);
    return visited_ - before;
  }

 private:
  bool fits(std::size_t pos, int value) const {
    for (std::size_t j : earlier_[pos])
      if (std::abs(word_[j] - value) > 1) return false;
    return true;
  }

  void descend(std::size_t pos) {
    if (pos == word_.size()) {
      if (++visited_ > budget_)
        throw OracleOutOfRange("oracle out of range: more than " + std::to_string(budget_) +
                               " words; use the transfer method");
      return;
    }
    for (int v = 1; v <= k_; ++v) {
      if (!fits(pos, v)) continue;
      word_[pos] = v;
      descend(pos + 1);
    }
  }

  int k_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<std::vector<std::size_t>> earlier_;
  std::vector<int> word_;
};

void check_alphabet(int k) {
  if (k < 1) throw std::invalid_argument("alphabet size must be positive");
}

}  // namespace

BigInt enumerate_count(const FamilySpec& spec, int k, std::uint64_t budget) {
  check_alphabet(k);
  GraphInstance g = build_graph(spec);
  Enumerator e(g, k, budget);
  return BigInt(e.count(0, {}));
}

RefinedTable refined_oracle(const FamilySpec& spec, int k, std::uint64_t budget) {
  check_alphabet(k);
  if (!is_ladder(spec.family)) throw std::invalid_argument("refined counts need a two-row family");
  GraphInstance g = build_graph(spec);
  Enumerator e(g, k, budget);
  RefinedTable table{k, {}};
  for (ColumnState s : column_states(k)) table.entries[s] = BigInt(e.count(2, {s.top, s.bottom}));
  return table;
}

}  // namespace staircase
