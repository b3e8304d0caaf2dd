#pragma once

#include "lozenge/lattice.hpp"

#include <random>

namespace lozenge::testing {

// Grows a random edge-connected region of the requested size from the origin.
inline Region random_region(std::mt19937& rng, int size) {
  Region r;
  r.insert(up(0, 0));
  while (static_cast<int>(r.size()) < size) {
    std::vector<TriRef> frontier;
    for (const TriRef& t : r.triangles())
      for (const TriRef& a : adjacent(t))
        if (!r.contains(a)) frontier.push_back(a);
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    r.insert(frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)]);
  }
  return r;
}

// Random region with a few random lozenge weights attached.
inline Region random_weighted_region(std::mt19937& rng, int size) {
  Region r = random_region(rng, size);
  std::vector<LozengeRef> lozenges;
  for (const TriRef& t : r.triangles()) {
    if (t.o != Orient::Up) continue;
    for (const TriRef& a : r.neighbors_in(t)) lozenges.push_back(LozengeRef::of(t, a));
  }
  if (lozenges.empty()) return r;
  std::uniform_int_distribution<std::size_t> pick(0, lozenges.size() - 1);
  std::uniform_int_distribution<int> num(1, 5), den(1, 4);
  for (int i = 0; i < 3; ++i) r.set_weight(lozenges[pick(rng)], Rat(num(rng), den(rng)));
  return r;
}

}  // namespace lozenge::testing
