#pragma once

#include <map>
#include <string>
#include <vector>

#include "equlat/dfa.hpp"
#include "equlat/partition.hpp"

namespace equlat::test {

inline Partition P(const std::vector<std::vector<Element>>& classes) { return Partition::from_classes(classes); }

// Trie automaton for a finite set of words over 0, 1, B, plus a dead state.
inline Dfa finite_language(const std::vector<std::string>& words) {
  std::vector<std::map<char, StateId>> edges(2);  // 0 = dead, 1 = root
  std::vector<bool> accepting(2, false);
  for (const auto& w : words) {
    StateId at = 1;
    for (char c : w) {
      auto it = edges[at].find(c);
      if (it == edges[at].end()) {
        edges.emplace_back();
        accepting.push_back(false);
        it = edges[at].emplace(c, static_cast<StateId>(edges.size() - 1)).first;
      }
      at = it->second;
    }
    accepting[at] = true;
  }
  std::vector<StateId> table;
  for (const auto& e : edges) {
    for (char c : {'0', '1', 'B'}) {
      auto it = e.find(c);
      table.push_back(it == e.end() ? 0 : it->second);
    }
  }
  return Dfa(edges.size(), 1, table, accepting);
}

}  // namespace equlat::test
