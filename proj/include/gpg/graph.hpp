#ifndef GPG_GRAPH_HPP
#define GPG_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gpg/rational.hpp"

namespace gpg {

enum class EdgeColor { blue, red };

// Simple undirected graph on vertices 0..n-1. Immutable after
// construction; neighbor lists are kept sorted. Edges may optionally carry
// a blue/red color (used by the network-externality games).
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  bool has_edge(int i, int j) const;
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  // Edges with i < j, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  void set_edge_color(int i, int j, EdgeColor c);
  std::optional<EdgeColor> edge_color(int i, int j) const;
  bool fully_colored() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::map<std::pair<int, int>, EdgeColor> colors_;
  int edge_count_ = 0;
};

// Members sorted ascending; every pair of members is an edge of the graph
// it was enumerated from.
struct Clique {
  std::vector<int> members;

  friend bool operator==(const Clique&, const Clique&) = default;
  friend auto operator<=>(const Clique&, const Clique&) = default;
};

// Breadth-first layer sizes around a center: sizes[r] = #vertices at
// distance exactly r. Trailing zero layers are trimmed.
struct SphereProfile {
  int center = 0;
  std::vector<std::size_t> sizes;
};

// All maximal cliques, in lexicographic order of their sorted member
// lists. Isolated vertices appear as singleton cliques.
std::vector<Clique> maximal_cliques(const Graph& g);

// Largest number of maximal cliques any single vertex belongs to; 0 for
// the empty graph.
int clique_degree(const Graph& g);

// Shortest-path edge count; nullopt when j is unreachable from i.
std::optional<int> graph_distance(const Graph& g, int i, int j);

// min over members of graph_distance; nullopt when the whole clique is
// unreachable.
std::optional<int> clique_distance(const Graph& g, int k, const Clique& c);

SphereProfile sphere_sizes(const Graph& g, int k);

struct GrowthCheck {
  bool bounded = true;
  int vertex = -1;  // witness when !bounded
  int radius = -1;
};

// True iff S_r(G,i) <= f(r) for every vertex i and radius r.
GrowthCheck growth_bounded_by(const Graph& g, const std::function<Rational(int)>& f);

// True iff removing a_set disconnects every u in u_set\a_set from every w
// in w_set\a_set. A shared vertex of U and W outside A is a length-0 path.
bool is_cut(const Graph& g, const std::vector<int>& a_set, const std::vector<int>& u_set,
            const std::vector<int>& w_set);

struct Amalgamation {
  Graph graph;
  std::vector<int> relabel;  // old vertex -> new vertex (i and j map to the merged vertex)
  int merged = -1;           // new index of the merged vertex
};

// Merge vertices i and j; the merged vertex sits at min(i,j) and inherits
// the union of both neighborhoods (minus i,j). Edge colors are dropped.
Amalgamation amalgamate(const Graph& g, int i, int j);

// Generators. Grid vertices are numbered row-major ((r,c) -> r*n + c);
// binary trees level-order (root 0, children of v at 2v+1, 2v+2).
Graph make_grid(int n);
Graph make_binary_tree(int depth);
Graph make_cycle(int n);
Graph make_line(int n);

enum class ColoringRule { all_blue, all_red, seeded_uniform };
void apply_coloring(Graph& g, ColoringRule rule, std::uint64_t seed = 0);

}  // namespace gpg

#endif  // GPG_GRAPH_HPP
