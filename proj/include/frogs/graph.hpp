#pragma once
// Finite transition graphs of letter-driven processes. A graph is built from a
// closed state list and a poke function; every state/letter pair must land
// back inside the list.

#include <map>
#include <stdexcept>
#include <vector>

namespace frogs {

template <class State>
struct TransitionGraph {
  int sigma = 0;
  std::vector<State> states;            // canonical order
  std::vector<std::vector<int>> succ;   // succ[i][a-1]: state after poking letter a
};

template <class State, class PokeFn>
TransitionGraph<State> build_graph(std::vector<State> states, int sigma, PokeFn&& poke) {
  if (sigma < 1) throw std::invalid_argument("build_graph: sigma must be positive");
  TransitionGraph<State> g;
  g.sigma = sigma;
  g.states = std::move(states);
  std::map<State, int> index;
  for (int i = 0; i < static_cast<int>(g.states.size()); ++i) index.emplace(g.states[i], i);
  g.succ.assign(g.states.size(), std::vector<int>(sigma, -1));
  for (size_t i = 0; i < g.states.size(); ++i) {
    for (int a = 1; a <= sigma; ++a) {
      State next = poke(g.states[i], a);
      auto it = index.find(next);
      if (it == index.end()) throw std::logic_error("build_graph: poke left the state set");
      g.succ[i][a - 1] = it->second;
    }
  }
  return g;
}

struct RegularityReport {
  bool regular = false;        // every in-degree (with multiplicity) equals sigma
  std::vector<int> in_degree;
};

template <class State>
RegularityReport check_regular(const TransitionGraph<State>& g) {
  RegularityReport rep;
  rep.in_degree.assign(g.states.size(), 0);
  for (const auto& row : g.succ)
    for (int j : row) ++rep.in_degree[j];
  rep.regular = true;
  for (int d : rep.in_degree)
    if (d != g.sigma) rep.regular = false;
  return rep;
}

}  // namespace frogs
