#pragma once

#include "extalg/io.hpp"

namespace extalg {

struct HarnessConfig {
    std::uint64_t seed = 0;
    std::string profile = "small"; // small | tiny
    std::size_t max_ring_size = 4096;
    std::size_t random_ring_cap = 150;
    std::size_t oracle_cap = 36;
    MixedSweepConfig sweep;
    std::int64_t poset_bound_r1 = 60;
    std::int64_t poset_bound_r2 = 12;
    int threads = 0; // 0: decide from EXTALG_THREADS or hardware
};

// Deterministic corpus: golden instances (Z/pq, diagonal embeddings, the
// non-locally-principal (x,y) ring, Z and friends inside Q, tails) plus
// seeded random subring extensions. Identical (seed, profile, caps) give an
// identical corpus.
std::vector<CorpusEntry> builtin_corpus(const HarnessConfig& cfg);

} // namespace extalg
