#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "tangle/detect.hpp"
#include "tangle/error.hpp"

namespace tangle {

bool is_planar_graph(const UndirectedGraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                      boost::property<boost::vertex_index_t, int>,
                                      boost::property<boost::edge_index_t, int>>;
  Graph bg(g.vertex_count);
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= g.vertex_count || static_cast<std::size_t>(b) >= g.vertex_count)
      throw DomainError("graph: edge endpoint out of range");
    boost::add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), bg);
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace tangle
