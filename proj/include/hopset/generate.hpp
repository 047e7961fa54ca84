// Seeded synthetic graph families.

#ifndef HOPSET_GENERATE_HPP
#define HOPSET_GENERATE_HPP

#include <cstdint>
#include <string_view>

#include "hopset/graph.hpp"

namespace hopset {

enum class Family { kRandomDigraph, kLayeredDag, kCycleChain, kPathNoise };

std::string_view family_name(Family family);
Family parse_family(std::string_view name);

struct GenOptions {
  int layers = 3;       // layered-dag
  int cycles = 3;       // cycle-chain
  bool strong = false;  // random-digraph: embed a Hamiltonian cycle first
};

// random-digraph: m distinct uniform edges.
// layered-dag: contiguous layers, edges only from a layer to a later one.
// cycle-chain: one directed cycle per block, a link between consecutive
//   blocks, remaining edges forward across blocks or inside a block.
// path-noise: the path 0->1->...->n-1, the edge n-1->0, and random back edges.
// Weights are uniform in [1, W]. Throws std::invalid_argument when m cannot
// be met.
WeightedDigraph generate(Family family, Vertex n, std::size_t m, Length W, std::uint64_t seed,
                         const GenOptions& options = {});

}  // namespace hopset

#endif  // HOPSET_GENERATE_HPP
