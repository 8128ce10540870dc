#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gg/error.hpp"

namespace gg::detail {

// Iterative DFS over all nodes; returns children-first order. Kids(i) yields
// a vector of child ids already known to be in range.
template <class Kids>
std::vector<std::uint32_t> topo_order(std::size_t n, Kids kids) {
  enum : unsigned char { White, Grey, Black };
  std::vector<unsigned char> color(n, White);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (color[root] != White) continue;
    stack.push_back({root, 0});
    color[root] = Grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& ks = kids(v);
      if (next < ks.size()) {
        std::uint32_t c = ks[next++];
        if (color[c] == Grey) fail(Errc::CyclicGrammar, "at id " + std::to_string(c));
        if (color[c] == White) {
          color[c] = Grey;
          stack.push_back({c, 0});
        }
      } else {
        color[v] = Black;
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  return order;
}

// Reverse postorder from start restricted to reachable nodes: parents first.
template <class Kids>
std::vector<std::uint32_t> reachable_parents_first(std::size_t n, std::uint32_t start, Kids kids) {
  std::vector<unsigned char> seen(n, 0);
  std::vector<std::uint32_t> post;
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{start, 0}};
  seen[start] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& ks = kids(v);
    if (next < ks.size()) {
      std::uint32_t c = ks[next++];
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back({c, 0});
      }
    } else {
      post.push_back(v);
      stack.pop_back();
    }
  }
  return {post.rbegin(), post.rend()};
}

}  // namespace gg::detail
