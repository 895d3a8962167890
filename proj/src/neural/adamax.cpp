#include "vulnrank/neural/adamax.hpp"

#include <cmath>

#include "vulnrank/util/error.hpp"

namespace vulnrank::neural {

Adamax::Adamax(size_t n, const AdamaxConfig& cfg)
    : cfg_(cfg), m_(n, 0.0f), u_(n, 0.0f) {}

void Adamax::step(std::vector<float>& params, const std::vector<float>& grads) {
    if (params.size() != m_.size() || grads.size() != m_.size())
        throw ShapeError("optimizer state does not match parameter count");
    ++t_;
    const float correction =
        cfg_.lr / (1.0f - std::pow(cfg_.beta1, static_cast<float>(t_)));
    for (size_t i = 0; i < params.size(); ++i) {
        const float g = grads[i];
        m_[i] = cfg_.beta1 * m_[i] + (1.0f - cfg_.beta1) * g;
        u_[i] = std::max(cfg_.beta2 * u_[i], std::fabs(g));
        params[i] -= correction * m_[i] / (u_[i] + cfg_.eps);
    }
}

} // namespace vulnrank::neural
