#include "topoclique/clique.hpp"

#include <algorithm>

namespace topoclique {

namespace {

struct Search {
  const std::vector<std::vector<char>>& adj;
  std::vector<int> current;
  std::vector<int> best;

  void expand(std::vector<int> p, std::vector<int> x) {
    if (current.size() + p.size() <= best.size()) return;
    if (p.empty()) {
      if (x.empty() && current.size() > best.size()) best = current;
      return;
    }
    // Pivot: vertex of P u X with most neighbours in P.
    int pivot = -1;
    std::size_t most = 0;
    for (const auto* side : {&p, &x}) {
      for (int u : *side) {
        std::size_t c = 0;
        for (int w : p) c += adj[u][w] != 0;
        if (pivot < 0 || c > most) {
          pivot = u;
          most = c;
        }
      }
    }
    std::vector<int> branch;
    for (int v : p) {
      if (!adj[pivot][v]) branch.push_back(v);
    }
    for (int v : branch) {
      std::vector<int> np, nx;
      for (int w : p) {
        if (adj[v][w]) np.push_back(w);
      }
      for (int w : x) {
        if (adj[v][w]) nx.push_back(w);
      }
      current.push_back(v);
      expand(std::move(np), std::move(nx));
      current.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
      if (current.size() + p.size() <= best.size()) return;
    }
  }
};

}  // namespace

std::vector<int> maximum_clique(const std::vector<std::vector<char>>& adj) {
  Search s{adj, {}, {}};
  std::vector<int> all(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) all[i] = static_cast<int>(i);
  s.expand(all, {});
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

}  // namespace topoclique
