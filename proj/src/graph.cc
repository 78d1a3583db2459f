#include "graph.h"

#include <algorithm>
#include <set>

namespace argannot {
namespace internal {

namespace {

class Tarjan {
 public:
  explicit Tarjan(const Digraph &graph) : graph_(graph) {}

  std::vector<std::vector<std::string>> Run() {
    std::set<std::string> nodes;
    for (const auto &[node, edges] : graph_) {
      nodes.insert(node);
      nodes.insert(edges.begin(), edges.end());
    }
    for (const std::string &node : nodes) {
      if (!index_.count(node)) Visit(node);
    }
    std::sort(components_.begin(), components_.end());
    return std::move(components_);
  }

 private:
  void Visit(const std::string &v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_.insert(v);
    auto it = graph_.find(v);
    if (it != graph_.end()) {
      for (const std::string &w : it->second) {
        if (!index_.count(w)) {
          Visit(w);
          low_[v] = std::min(low_[v], low_[w]);
        } else if (on_stack_.count(w)) {
          low_[v] = std::min(low_[v], index_[w]);
        }
      }
    }
    if (low_[v] != index_[v]) return;
    std::vector<std::string> component;
    std::string w;
    do {
      w = stack_.back();
      stack_.pop_back();
      on_stack_.erase(w);
      component.push_back(w);
    } while (w != v);
    std::sort(component.begin(), component.end());
    components_.push_back(std::move(component));
  }

  const Digraph &graph_;
  std::map<std::string, int> index_;
  std::map<std::string, int> low_;
  std::set<std::string> on_stack_;
  std::vector<std::string> stack_;
  std::vector<std::vector<std::string>> components_;
  int counter_ = 0;
};

}  // namespace

std::vector<std::vector<std::string>> StronglyConnectedComponents(
    const Digraph &graph) {
  return Tarjan(graph).Run();
}

}  // namespace internal
}  // namespace argannot
