#ifndef FROBDIAM_GRAPH_HPP
#define FROBDIAM_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobdiam/frobenius.hpp"

namespace frobdiam
{

/// Diameter of a graph: a positive integer, or Infinite when disconnected.
class Diameter
{
public:
  static Diameter finite(std::size_t value) { return Diameter(false, value); }
  static Diameter infinite() { return Diameter(true, 0); }

  bool is_infinite() const { return _infinite; }
  // Throws std::logic_error when infinite.
  std::size_t value() const;

  std::string to_string() const;
  bool operator==(Diameter const &rhs) const = default;

private:
  Diameter(bool infinite, std::size_t value) : _infinite(infinite), _value(value) {}

  bool _infinite;
  std::size_t _value;
};

/// Bipartite graph on Irr(G) (vertices 0..k(G)-1) and Irr(H) (vertices
/// k(G)..k(G)+k(H)-1) with an edge wherever the Frobenius matrix is nonzero.
class FrobeniusGraph
{
public:
  explicit FrobeniusGraph(IntMatrix const &m, std::vector<std::int64_t> g_degrees = {},
                          std::vector<std::int64_t> h_degrees = {});

  std::size_t g_vertices() const { return _kg; }
  std::size_t h_vertices() const { return _kh; }
  std::size_t vertex_count() const { return _kg + _kh; }
  std::size_t g_vertex(std::size_t chi) const { return chi; }
  std::size_t h_vertex(std::size_t phi) const { return _kg + phi; }

  std::vector<std::size_t> const &neighbours(std::size_t v) const { return _adj[v]; }
  std::size_t edge_count() const;

  std::size_t component_count() const { return _components.size(); }
  std::size_t component_of(std::size_t v) const { return _component_id[v]; }
  std::vector<std::vector<std::size_t>> const &components() const { return _components; }

  std::optional<std::size_t> distance(std::size_t u, std::size_t v) const;
  // Within the vertex's own component.
  std::size_t eccentricity(std::size_t v) const { return _eccentricity[v]; }
  std::size_t component_diameter(std::size_t c) const;
  Diameter diameter() const;

  std::int64_t g_degree(std::size_t chi) const { return _g_degrees[chi]; }
  std::int64_t h_degree(std::size_t phi) const { return _h_degrees[phi]; }

private:
  std::size_t _kg;
  std::size_t _kh;
  std::vector<std::int64_t> _g_degrees;
  std::vector<std::int64_t> _h_degrees;
  std::vector<std::vector<std::size_t>> _adj;
  std::vector<std::vector<std::size_t>> _dist;  // npos when unreachable
  std::vector<std::size_t> _component_id;
  std::vector<std::vector<std::size_t>> _components;
  std::vector<std::size_t> _eccentricity;
};

FrobeniusGraph frobenius_graph(Inclusion const &inc);

struct IrrOrbits
{
  std::size_t count = 0;
  std::vector<std::vector<std::size_t>> orbits;  // partition of Irr(K) by table index
};

/// Orbits of G on Irr(K) for K normal in G, found by matching each
/// character to its conjugate under the generators of G.
IrrOrbits irr_action_orbits(PermGroup const &group, Subgroup const &k);

/// Graphviz rendering with character degrees as vertex labels.
std::string to_dot(FrobeniusGraph const &graph, std::string const &name = "frobenius");

} // namespace frobdiam

#endif // FROBDIAM_GRAPH_HPP
