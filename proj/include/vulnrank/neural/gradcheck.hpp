#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vulnrank/neural/config.hpp"

namespace vulnrank::neural {

struct GradCheckReport {
    struct TensorResult {
        std::string name;
        double max_rel_error = 0.0;
    };
    std::vector<TensorResult> tensors;
    double max_rel_error = 0.0;
};

// Central finite differences against the analytic gradients, in double
// precision, over every parameter of a model built from `cfg`. Biases are
// nudged off zero and dropout is disabled so the loss stays smooth at the
// probe points.
GradCheckReport gradient_check(ModelConfig cfg, uint64_t seed, int batch_size = 2,
                               double step = 1e-4);

} // namespace vulnrank::neural
