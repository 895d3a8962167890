#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vulnrank::textpipe {

// Vectorization settings. Context lengths and the embedding size default to
// the best-performing values from the length study; everything is
// overridable through the run config.
struct PipelineConfig {
    int slice_len = 700;
    int gadget_len = 900;
    int embed_dim = 64;
    int w2v_window = 5;
    int w2v_epochs = 10;
    int w2v_negatives = 5;
    int w2v_min_count = 1;
    uint64_t seed = 1;
    std::vector<std::string> keep_functions; // callee names exempt from abstraction
};

inline const char* kPadToken = "<pad>";
inline const char* kUnkToken = "<unk>";

} // namespace vulnrank::textpipe
