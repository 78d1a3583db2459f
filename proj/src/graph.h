#ifndef ARGANNOT_SRC_GRAPH_H_
#define ARGANNOT_SRC_GRAPH_H_

#include <map>
#include <string>
#include <vector>

namespace argannot {
namespace internal {

using Digraph = std::map<std::string, std::vector<std::string>>;

// Strongly connected components (Tarjan), each sorted, in sorted order.
// Every node that appears as a key or in an adjacency list is covered.
std::vector<std::vector<std::string>> StronglyConnectedComponents(
    const Digraph &graph);

}  // namespace internal
}  // namespace argannot

#endif  // ARGANNOT_SRC_GRAPH_H_
