#include "vulnrank/neural/trainer.hpp"

#include <cmath>
#include <numeric>

#include "vulnrank/util/error.hpp"

namespace vulnrank::neural {

const char* mode_name(Mode m) {
    switch (m) {
    case Mode::Combined: return "combined";
    case Mode::CnnOnly: return "cnn_only";
    case Mode::BigruOnly: return "bigru_only";
    }
    return "?";
}

Mode parse_mode(const std::string& s) {
    if (s == "combined")
        return Mode::Combined;
    if (s == "cnn_only")
        return Mode::CnnOnly;
    if (s == "bigru_only")
        return Mode::BigruOnly;
    throw ConfigError("unknown mode '" + s + "'");
}

TrainResult train(RankNet<float>& net, const std::vector<RankNet<float>::Sample>& data,
                  const TrainConfig& cfg) {
    if (data.empty())
        throw EmptyDataset();

    ParamStore<float> grads = net.make_grad_store();
    Adamax opt(net.params().size(), cfg.opt);

    std::vector<size_t> order(data.size());
    std::iota(order.begin(), order.end(), size_t{0});

    TrainResult result;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        Rng shuffle_rng(sub_seed(cfg.seed, "shuffle", static_cast<uint64_t>(epoch)));
        shuffle_rng.shuffle(order);
        Rng dropout_rng(sub_seed(cfg.seed, "dropout", static_cast<uint64_t>(epoch)));

        double epoch_loss = 0.0;
        size_t start = 0;
        while (start < order.size()) {
            const size_t stop = std::min(order.size(), start + static_cast<size_t>(cfg.batch_size));
            std::vector<const RankNet<float>::Sample*> batch;
            batch.reserve(stop - start);
            for (size_t i = start; i < stop; ++i)
                batch.push_back(&data[order[i]]);

            const float loss = net.loss_and_grad(batch, grads, true, &dropout_rng);
            for (float g : grads.values())
                if (!std::isfinite(g))
                    throw NonFiniteError("gradient");
            opt.step(net.params().values(), grads.values());

            epoch_loss += static_cast<double>(loss) * static_cast<double>(batch.size());
            start = stop;
        }
        result.epoch_loss.push_back(
            static_cast<float>(epoch_loss / static_cast<double>(data.size())));
    }
    return result;
}

} // namespace vulnrank::neural
