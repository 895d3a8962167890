#include "vulnrank/neural/gradcheck.hpp"

#include <cmath>

#include "vulnrank/neural/net.hpp"

namespace vulnrank::neural {

GradCheckReport gradient_check(ModelConfig cfg, uint64_t seed, int batch_size, double step) {
    cfg.dropout = 0.0f;
    RankNet<double> net(cfg);
    net.init_params(sub_seed(seed, "gradcheck-init"));

    Rng rng(sub_seed(seed, "gradcheck-data"));
    // Zero biases would leave ReLU inputs sitting exactly on the kink at the
    // padded rows; shift them a little.
    auto& store = net.params();
    for (size_t i = 0; i < store.entries().size(); ++i) {
        if (!store.entries()[i].is_bias)
            continue;
        auto m = store.mat(i);
        for (int c = 0; c < m.cols(); ++c)
            m(0, c) = rng.uniform(-0.1, 0.1);
    }

    std::vector<RankNet<double>::Sample> data;
    for (int s = 0; s < batch_size; ++s) {
        RankNet<double>::Sample sample;
        sample.slice.resize(cfg.slice_len, cfg.embed_dim);
        sample.gadget.resize(cfg.gadget_len, cfg.embed_dim);
        for (int t = 0; t < cfg.slice_len; ++t)
            for (int d = 0; d < cfg.embed_dim; ++d)
                sample.slice(t, d) = rng.uniform(-1.0, 1.0);
        for (int t = 0; t < cfg.gadget_len; ++t)
            for (int d = 0; d < cfg.embed_dim; ++d)
                sample.gadget(t, d) = rng.uniform(-1.0, 1.0);
        sample.label = s % 2;
        data.push_back(std::move(sample));
    }
    std::vector<const RankNet<double>::Sample*> batch;
    for (const auto& s : data)
        batch.push_back(&s);

    ParamStore<double> grads = net.make_grad_store();
    net.loss_and_grad(batch, grads, false, nullptr);

    auto loss_at = [&]() {
        ParamStore<double> scratch = net.make_grad_store();
        return static_cast<double>(net.loss_and_grad(batch, scratch, false, nullptr));
    };

    GradCheckReport report;
    auto& values = net.params().values();
    for (size_t e = 0; e < store.entries().size(); ++e) {
        const auto& entry = store.entries()[e];
        GradCheckReport::TensorResult tr;
        tr.name = entry.name;
        const size_t count = static_cast<size_t>(entry.rows) * static_cast<size_t>(entry.cols);
        for (size_t i = entry.offset; i < entry.offset + count; ++i) {
            const double saved = values[i];
            values[i] = saved + step;
            const double up = loss_at();
            values[i] = saved - step;
            const double down = loss_at();
            values[i] = saved;

            const double numeric = (up - down) / (2.0 * step);
            const double analytic = grads.values()[i];
            const double denom =
                std::max({std::fabs(numeric), std::fabs(analytic), 1e-6});
            tr.max_rel_error = std::max(tr.max_rel_error, std::fabs(numeric - analytic) / denom);
        }
        report.max_rel_error = std::max(report.max_rel_error, tr.max_rel_error);
        report.tensors.push_back(std::move(tr));
    }
    return report;
}

} // namespace vulnrank::neural
