#include "glp/random_instance.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace glp {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  // Rejection sampling keeps the draw unbiased and portable.
  const std::uint64_t limit = engine_.max() - engine_.max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(double p) {
  return static_cast<double>(below(1u << 30)) < p * static_cast<double>(1u << 30);
}

GroupElement random_element(Rng& rng, const GroupSpec& spec,
                            double identity_bias) {
  if (identity_bias > 0 && rng.chance(identity_bias)) return identity(spec);
  switch (spec.kind()) {
    case GroupKind::kCyclic:
      return make_scalar(spec, static_cast<std::int64_t>(
                                   rng.below(static_cast<std::uint64_t>(spec.modulus()))));
    case GroupKind::kInteger:
      return make_scalar(spec, rng.between(-3, 3));
    case GroupKind::kSymmetric: {
      std::vector<int> images(spec.degree());
      std::iota(images.begin(), images.end(), 1);
      for (int i = spec.degree() - 1; i > 0; --i) {
        std::swap(images[i], images[rng.below(static_cast<std::uint64_t>(i) + 1)]);
      }
      return make_permutation(spec, images);
    }
    case GroupKind::kFree: {
      const int gens = static_cast<int>(spec.generators().size());
      std::vector<int> letters(rng.between(1, 2));
      for (int& l : letters) {
        l = static_cast<int>(rng.between(1, gens)) * (rng.chance(0.5) ? 1 : -1);
      }
      return make_word(spec, letters);
    }
  }
  throw std::logic_error("unknown group kind");
}

namespace {

LabeledGraph named_vertices(const GroupSpec& spec, int n) {
  LabeledGraph g(spec);
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  return g;
}

}  // namespace

LabeledGraph random_graph(Rng& rng, int vertices, int edges,
                          const GroupSpec& spec, double identity_bias) {
  if (vertices < 2) throw std::invalid_argument("need at least two vertices");
  LabeledGraph g = named_vertices(spec, vertices);
  for (int i = 0; i < edges; ++i) {
    auto u = static_cast<VertexId>(rng.below(vertices));
    auto v = static_cast<VertexId>(rng.below(vertices - 1));
    if (v >= u) ++v;
    g.add_arc(u, v, random_element(rng, spec, identity_bias));
  }
  return g;
}

LabeledGraph random_antiprism(Rng& rng, int k, const GroupSpec& spec,
                              double identity_bias) {
  if (k < 3) throw std::invalid_argument("antiprism needs k >= 3");
  LabeledGraph g = named_vertices(spec, 2 * k);
  auto arc = [&](int u, int v) {
    if (rng.chance(0.5)) std::swap(u, v);
    g.add_arc(u, v, random_element(rng, spec, identity_bias));
  };
  for (int i = 0; i < k; ++i) {
    arc(i, (i + 1) % k);                  // top ring
    arc(k + i, k + (i + 1) % k);          // bottom ring
    arc(i, k + i);                        // zigzag
    arc(k + i, (i + 1) % k);
  }
  return g;
}

LabeledGraph random_k44(Rng& rng, const GroupSpec& spec, double identity_bias) {
  LabeledGraph g = named_vertices(spec, 8);
  for (int i = 0; i < 4; ++i) {
    for (int j = 4; j < 8; ++j) {
      g.add_arc(i, j, random_element(rng, spec, identity_bias));
    }
  }
  return g;
}

}  // namespace glp
