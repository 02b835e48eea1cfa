// Seeded random instances.  Draws use std::mt19937_64 with a fixed bounded
// sampling rule, so a seed gives the same instance on every platform.

#ifndef GLP_RANDOM_INSTANCE_H_
#define GLP_RANDOM_INSTANCE_H_

#include <cstdint>
#include <random>
#include <vector>

#include "glp/labeled_graph.h"

namespace glp {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n).  Requires n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

// With probability `identity_bias` the identity, otherwise uniform over Z_q,
// over S_n, over [-3, 3] for the integers, or a reduced word of length 1 or 2
// for free groups.
GroupElement random_element(Rng& rng, const GroupSpec& spec,
                            double identity_bias = 0.0);

// Vertices v0 .. v{n-1}; `edges` arcs between uniformly chosen distinct
// endpoints.
LabeledGraph random_graph(Rng& rng, int vertices, int edges,
                          const GroupSpec& spec, double identity_bias);

// Antiprism on 2k vertices (4-regular, planar, 3-connected), vertices
// v0 .. v{2k-1}, random labels.
LabeledGraph random_antiprism(Rng& rng, int k, const GroupSpec& spec,
                              double identity_bias);

// K_{4,4} with random labels (4-regular, not planar).
LabeledGraph random_k44(Rng& rng, const GroupSpec& spec, double identity_bias);

}  // namespace glp

#endif  // GLP_RANDOM_INSTANCE_H_
