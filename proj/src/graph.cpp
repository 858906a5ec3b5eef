#include "frobdiam/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "frobdiam/errors.hpp"

namespace frobdiam
{

namespace
{

constexpr std::size_t unreachable = static_cast<std::size_t>(-1);

} // namespace

std::size_t Diameter::value() const
{
  if (_infinite)
    throw std::logic_error("diameter is infinite");
  return _value;
}

std::string Diameter::to_string() const
{ return _infinite ? "infinite" : std::to_string(_value); }

FrobeniusGraph::FrobeniusGraph(IntMatrix const &m, std::vector<std::int64_t> g_degrees,
                               std::vector<std::int64_t> h_degrees)
: _kg(m.empty() ? 0 : m[0].size()), _kh(m.size()),
  _g_degrees(std::move(g_degrees)), _h_degrees(std::move(h_degrees))
{
  _g_degrees.resize(_kg, 0);
  _h_degrees.resize(_kh, 0);

  std::size_t n = vertex_count();
  _adj.resize(n);
  for (std::size_t phi = 0; phi < _kh; ++phi) {
    for (std::size_t chi = 0; chi < _kg; ++chi) {
      if (m[phi][chi] != 0) {
        _adj[chi].push_back(_kg + phi);
        _adj[_kg + phi].push_back(chi);
      }
    }
  }
  for (auto &a : _adj)
    std::sort(a.begin(), a.end());

  _dist.assign(n, std::vector<std::size_t>(n, unreachable));
  for (std::size_t s = 0; s < n; ++s) {
    auto &d = _dist[s];
    d[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto v : _adj[u]) {
        if (d[v] == unreachable) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }

  _component_id.assign(n, unreachable);
  for (std::size_t s = 0; s < n; ++s) {
    if (_component_id[s] != unreachable)
      continue;
    std::vector<std::size_t> comp;
    for (std::size_t v = 0; v < n; ++v) {
      if (_dist[s][v] != unreachable) {
        _component_id[v] = _components.size();
        comp.push_back(v);
      }
    }
    _components.push_back(std::move(comp));
  }

  _eccentricity.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto d : _dist[v]) {
      if (d != unreachable)
        _eccentricity[v] = std::max(_eccentricity[v], d);
    }
  }
}

std::size_t FrobeniusGraph::edge_count() const
{
  std::size_t deg = 0;
  for (auto const &a : _adj)
    deg += a.size();
  return deg / 2;
}

std::optional<std::size_t> FrobeniusGraph::distance(std::size_t u, std::size_t v) const
{
  auto d = _dist.at(u).at(v);
  if (d == unreachable)
    return std::nullopt;
  return d;
}

std::size_t FrobeniusGraph::component_diameter(std::size_t c) const
{
  std::size_t res = 0;
  for (auto v : _components.at(c))
    res = std::max(res, _eccentricity[v]);
  return res;
}

Diameter FrobeniusGraph::diameter() const
{
  if (_components.size() != 1)
    return Diameter::infinite();
  return Diameter::finite(component_diameter(0));
}

FrobeniusGraph frobenius_graph(Inclusion const &inc)
{ return FrobeniusGraph(inc.matrix(), inc.table_g().degrees(), inc.table_h().degrees()); }

IrrOrbits irr_action_orbits(PermGroup const &group, Subgroup const &k)
{
  if (!is_normal(group, k))
    throw InvalidSpec("subgroup is not normal");

  auto table = make_character_table(k.as_group());
  auto const &kcd = table->classes();
  std::size_t nk = table->size();

  std::vector<std::uint32_t> k_class_of(group.order(), 0);
  for (ElementId x : k.elements()) {
    auto id = table->group().find(group.element(x));
    k_class_of[x] = kcd.class_of[*id];
  }

  std::vector<std::size_t> parent(nk);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };

  for (ElementId g : group.generator_ids()) {
    // class c of K -> class of g^-1 rep_c g
    std::vector<std::size_t> moved(nk);
    for (std::size_t c = 0; c < nk; ++c) {
      auto rep = group.find(kcd.representatives[c]);
      moved[c] = k_class_of[group.conj(*rep, g)];
    }
    for (std::size_t chi = 0; chi < nk; ++chi) {
      std::optional<std::size_t> match;
      for (std::size_t psi = 0; psi < nk && !match; ++psi) {
        bool same = true;
        for (std::size_t c = 0; c < nk && same; ++c)
          same = table->value(psi, c) == table->value(chi, moved[c]);
        if (same)
          match = psi;
      }
      if (!match)
        throw InternalInconsistency("conjugate character not found in the table");
      parent[find(chi)] = find(*match);
    }
  }

  IrrOrbits res;
  std::vector<std::size_t> slot(nk, unreachable);
  for (std::size_t chi = 0; chi < nk; ++chi) {
    auto r = find(chi);
    if (slot[r] == unreachable) {
      slot[r] = res.orbits.size();
      res.orbits.emplace_back();
    }
    res.orbits[slot[r]].push_back(chi);
  }
  res.count = res.orbits.size();
  return res;
}

std::string to_dot(FrobeniusGraph const &graph, std::string const &name)
{
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  node [shape=circle];\n";
  for (std::size_t chi = 0; chi < graph.g_vertices(); ++chi)
    os << "  g" << chi + 1 << " [label=\"" << graph.g_degree(chi) << "\"];\n";
  for (std::size_t phi = 0; phi < graph.h_vertices(); ++phi)
    os << "  h" << phi + 1 << " [label=\"" << graph.h_degree(phi)
       << "\", shape=box];\n";
  for (std::size_t chi = 0; chi < graph.g_vertices(); ++chi) {
    for (auto v : graph.neighbours(graph.g_vertex(chi)))
      os << "  g" << chi + 1 << " -- h" << v - graph.g_vertices() + 1 << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace frobdiam
