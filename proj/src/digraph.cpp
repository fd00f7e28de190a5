#include "fproot/digraph.hpp"

#include <algorithm>
#include <limits>

namespace fproot {

SccDecomposition strongly_connected_components(const Digraph& g) {
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.size();
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  SccDecomposition out;
  out.component.assign(n, unvisited);
  std::size_t counter = 0;

  // Iterative Tarjan: frames hold (vertex, next edge position).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < g[v].size()) {
        std::size_t w = g[v][pos++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> members;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component[w] = out.members.size();
          members.push_back(w);
        } while (w != v);
        std::sort(members.begin(), members.end());
        out.members.push_back(std::move(members));
      }
      std::size_t finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }

  out.cyclic.assign(out.members.size(), false);
  for (std::size_t c = 0; c < out.members.size(); ++c) {
    if (out.members[c].size() > 1) {
      out.cyclic[c] = true;
      continue;
    }
    std::size_t v = out.members[c][0];
    out.cyclic[c] = std::find(g[v].begin(), g[v].end(), v) != g[v].end();
  }
  return out;
}

}  // namespace fproot
