#pragma once

#include <cstdint>
#include <vector>

#include "vulnrank/neural/adamax.hpp"
#include "vulnrank/neural/net.hpp"

namespace vulnrank::neural {

struct TrainConfig {
    int epochs = 60;
    int batch_size = 64;
    AdamaxConfig opt;
    uint64_t seed = 1;
};

struct TrainResult {
    std::vector<float> epoch_loss; // mean cross-entropy per epoch
};

// Minibatch training with a seeded shuffle per epoch. Single-threaded, so
// the same seed reproduces identical parameters bit for bit.
TrainResult train(RankNet<float>& net, const std::vector<RankNet<float>::Sample>& data,
                  const TrainConfig& cfg);

} // namespace vulnrank::neural
