#ifndef GRAIL_GENERATORS_HPP
#define GRAIL_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "grail/graph.hpp"
#include "grail/ideals.hpp"

namespace grail {

/// SplitMix64; the fixed, portable generator behind gen_random.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by 128-bit multiply-shift.
    uint64_t bounded(uint64_t n) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// True with probability p.
    bool chance(double p) {
        if (p <= 0.0)
            return false;
        if (p >= 1.0)
            return true;
        return static_cast<double>(next()) < p * 18446744073709551616.0;
    }

private:
    uint64_t state_;
};

/// Depth-truncated binary-tree graph with a loop at every vertex and an
/// edge from each child up to its parent, together with the saturated
/// hereditary set of all vertices whose bitstring contains a 0.
/// Vertices: v (root) and v_<bits> for bitstrings of length <= depth;
/// loops f / f_<bits>; tree edges e_<childbits>.
struct Figure1 {
    GraphPtr graph;
    SatHerSet h;
};
Figure1 gen_figure1(unsigned depth, unsigned max_vertices = 100000);

/// Chain v <- v_1 <- v_11 <- ... of n vertices with a loop at each,
/// named so that it equals the figure-1 quotient by its canonical set.
GraphPtr gen_chain_loops(unsigned n);

/// Seeded random multigraph, a pure function of all four parameters.
/// Vertices "u0".."u{n-1}", edges "e0".."e{m-1}".  Per edge: one draw
/// decides loop-ness with probability loop_prob, then one draw picks
/// the loop vertex, or two draws pick source and range uniformly.
GraphPtr gen_random(unsigned vertices, unsigned edges, double loop_prob, uint64_t seed);

/// Deterministic ensemble for verification sweeps: per graph, draws
/// vertex count in [0, max_vertices], edge count in [0, max_edges]
/// (0 when there are no vertices), and a fresh sub-seed.
std::vector<GraphPtr> gen_ensemble(unsigned count, unsigned max_vertices, unsigned max_edges,
                                   double loop_prob, uint64_t seed);

} // namespace grail

#endif
