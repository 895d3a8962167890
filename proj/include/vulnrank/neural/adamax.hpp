#pragma once

#include <cstddef>
#include <vector>

namespace vulnrank::neural {

struct AdamaxConfig {
    float lr = 0.002f;
    float beta1 = 0.9f;
    float beta2 = 0.999f;
    float eps = 1e-8f;
};

// Infinity-norm Adam variant:
//   m <- b1*m + (1-b1)*g
//   u <- max(b2*u, |g|)
//   theta <- theta - (lr / (1 - b1^t)) * m / (u + eps)
class Adamax {
public:
    Adamax(size_t n, const AdamaxConfig& cfg);

    void step(std::vector<float>& params, const std::vector<float>& grads);

    long steps_taken() const { return t_; }
    const std::vector<float>& first_moment() const { return m_; }
    const std::vector<float>& inf_norm() const { return u_; }

private:
    AdamaxConfig cfg_;
    std::vector<float> m_, u_;
    long t_ = 0;
};

} // namespace vulnrank::neural
