#pragma once

#include <string>

namespace vulnrank::neural {

// Which representation stack feeds the head; the two ablations keep a
// single stage per branch.
enum class Mode { Combined, CnnOnly, BigruOnly };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct ModelConfig {
    Mode mode = Mode::Combined;
    int slice_len = 700;
    int gadget_len = 900;
    int embed_dim = 64;
    int conv_filters = 64;
    int conv_kernel = 3; // odd, same-padding
    int gru_hidden = 64; // per direction
    int gru_layers = 2;
    int head_hidden = 128;
    float dropout = 0.1f;

    int branch_out_dim() const {
        return mode == Mode::CnnOnly ? conv_filters : 2 * gru_hidden;
    }
    int head_in_dim() const { return 2 * branch_out_dim(); }
    int gru_in_dim(int layer) const {
        if (layer > 0)
            return 2 * gru_hidden;
        return mode == Mode::BigruOnly ? embed_dim : conv_filters;
    }
};

} // namespace vulnrank::neural
