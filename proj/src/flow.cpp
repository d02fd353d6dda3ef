#include "gallai/flow.hpp"

#include <algorithm>
#include <deque>

namespace gallai {

int FlowNetwork::add_arc(int from, int to, int capacity) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, 0});
  out_[from].push_back(id);
  arcs_.push_back({from, 0, 0});
  out_[to].push_back(id + 1);
  return id;
}

int FlowNetwork::max_flow(int source, int sink, int limit) {
  int total = 0;
  std::vector<int> via(out_.size());
  while (total < limit) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> queue{source};
    via[source] = -2;
    while (!queue.empty() && via[sink] == -1) {
      int u = queue.front();
      queue.pop_front();
      for (int a : out_[u]) {
        const Arc& arc = arcs_[a];
        if (via[arc.to] == -1 && arc.capacity - arc.flow > 0) {
          via[arc.to] = a;
          queue.push_back(arc.to);
        }
      }
    }
    if (via[sink] == -1) break;
    int push = limit - total;
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to)
      push = std::min(push, arcs_[via[v]].capacity - arcs_[via[v]].flow);
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].flow += push;
      arcs_[via[v] ^ 1].flow -= push;
    }
    total += push;
  }
  return total;
}

std::vector<bool> FlowNetwork::residual_reachable(int source) const {
  std::vector<bool> seen(out_.size(), false);
  std::deque<int> queue{source};
  seen[source] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int a : out_[u]) {
      const Arc& arc = arcs_[a];
      if (!seen[arc.to] && arc.capacity - arc.flow > 0) {
        seen[arc.to] = true;
        queue.push_back(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace gallai
