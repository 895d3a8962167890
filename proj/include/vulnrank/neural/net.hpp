#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "vulnrank/neural/config.hpp"
#include "vulnrank/neural/params.hpp"
#include "vulnrank/util/error.hpp"
#include "vulnrank/util/mat.hpp"
#include "vulnrank/util/rng.hpp"

namespace vulnrank::neural {

// Two-branch ranking network: per branch a 1-D convolution feeds a stacked
// bidirectional GRU, global max pooling reduces each stack over time, and a
// small dense head with softmax turns the concatenated branch vectors into
// (p_FP, p_TP). Forward and reverse passes are written out by hand; the
// scalar type is a template parameter so the finite-difference checks can
// run the whole network in double precision.
template <class S>
class RankNet {
public:
    struct Sample {
        RowMat<S> slice, gadget;
        int label = 0; // 0 = FP, 1 = TP
    };

    explicit RankNet(const ModelConfig& cfg) : cfg_(cfg) {
        if (cfg_.conv_kernel % 2 == 0)
            throw ShapeError("conv kernel width must be odd");
        if (cfg_.gru_layers < 1)
            throw ShapeError("need at least one recurrent layer");
        build_layout();
        params_.allocate();
    }

    const ModelConfig& config() const { return cfg_; }
    ParamStore<S>& params() { return params_; }
    const ParamStore<S>& params() const { return params_; }

    ParamStore<S> make_grad_store() const {
        ParamStore<S> g = params_;
        g.zero();
        return g;
    }

    // Glorot-uniform weights, zero biases.
    void init_params(uint64_t seed) {
        Rng rng(seed);
        for (size_t i = 0; i < params_.entries().size(); ++i) {
            const auto& e = params_.entries()[i];
            auto m = params_.mat(i);
            if (e.is_bias) {
                m.setZero();
                continue;
            }
            const S limit = std::sqrt(S(6) / static_cast<S>(e.rows + e.cols));
            for (int r = 0; r < e.rows; ++r)
                for (int c = 0; c < e.cols; ++c)
                    m(r, c) = static_cast<S>(rng.uniform(-limit, limit));
        }
    }

    enum class Branch { Slice, Gadget };

    // Inference probabilities (p_FP, p_TP); dropout inactive.
    std::pair<S, S> predict(const RowMat<S>& slice_in, const RowMat<S>& gadget_in) const {
        Cache cache;
        forward(slice_in, gadget_in, false, nullptr, cache);
        return {cache.probs[0], cache.probs[1]};
    }

    // Training-mode probabilities; dropout masks draw from `dropout_rng`.
    std::pair<S, S> forward_probs(const RowMat<S>& slice_in, const RowMat<S>& gadget_in,
                                  bool training, Rng* dropout_rng) const {
        Cache cache;
        forward(slice_in, gadget_in, training, dropout_rng, cache);
        return {cache.probs[0], cache.probs[1]};
    }

    // Single operations, exposed for direct use and verification.

    RowMat<S> conv1d(const RowMat<S>& x, Branch branch) const {
        if (x.cols() != cfg_.embed_dim)
            throw ShapeError("conv input must have embed_dim columns");
        RowMat<S> out;
        conv_forward(x, refs_of(branch), out);
        return out;
    }

    // Full stacked bidirectional pass; output is l x 2*hidden.
    RowMat<S> bigru(const RowMat<S>& x, Branch branch) const {
        const BranchRefs& refs = refs_of(branch);
        if (x.cols() != refs.gru.front().in_dim)
            throw ShapeError("recurrent input width does not match layer 0");
        RowMat<S> cur = x;
        for (const auto& layer : refs.gru) {
            GruDirCache fc, bc;
            gru_dir_forward(cur, layer.fwd, true, fc);
            gru_dir_forward(cur, layer.bwd, false, bc);
            RowMat<S> out(cur.rows(), 2 * cfg_.gru_hidden);
            out.leftCols(cfg_.gru_hidden) = fc.h;
            out.rightCols(cfg_.gru_hidden) = bc.h;
            cur = std::move(out);
        }
        return cur;
    }

    // Per-channel maximum over time steps. Ties resolve to the first maximal
    // step; the backward pass routes the whole gradient there.
    static RowVec<S> global_max_pool(const RowMat<S>& x) {
        std::vector<int> argmax;
        return global_max_pool(x, argmax);
    }

    static RowVec<S> global_max_pool(const RowMat<S>& x, std::vector<int>& argmax) {
        if (x.rows() < 1)
            throw ShapeError("pooling needs at least one time step");
        const int l = static_cast<int>(x.rows());
        const int channels = static_cast<int>(x.cols());
        RowVec<S> pooled(channels);
        argmax.assign(static_cast<size_t>(channels), 0);
        for (int j = 0; j < channels; ++j) {
            S best = x(0, j);
            int best_t = 0;
            for (int t = 1; t < l; ++t)
                if (x(t, j) > best) {
                    best = x(t, j);
                    best_t = t;
                }
            pooled(j) = best;
            argmax[static_cast<size_t>(j)] = best_t;
        }
        return pooled;
    }

    // Mean cross-entropy over the batch; parameter gradients accumulate into
    // `grads` (zeroed here). Dropout masks draw from `dropout_rng` in batch
    // order when training is true.
    S loss_and_grad(const std::vector<const Sample*>& batch, ParamStore<S>& grads,
                    bool training, Rng* dropout_rng) const {
        if (batch.empty())
            throw EmptyDataset();
        grads.zero();
        const S inv_batch = S(1) / static_cast<S>(batch.size());
        S total_loss = 0;
        Cache cache;
        for (const Sample* sample : batch) {
            forward(sample->slice, sample->gadget, training, dropout_rng, cache);
            const S p_true = cache.probs[sample->label];
            total_loss += cache.loss_base - cache.logits(0, sample->label);
            RowVec<S> dlogits(2);
            dlogits(0) = cache.probs[0];
            dlogits(1) = cache.probs[1];
            dlogits(0, sample->label) -= S(1);
            dlogits *= inv_batch;
            backward(dlogits, cache, grads);
            (void)p_true;
        }
        const S loss = total_loss * inv_batch;
        if (!std::isfinite(static_cast<double>(loss)))
            throw NonFiniteError("batch loss");
        return loss;
    }

private:
    struct GruDirRefs {
        size_t wz, wr, wh, uz, ur, uh, bz, br, bh;
    };
    struct GruLayerRefs {
        GruDirRefs fwd, bwd;
        int in_dim = 0;
    };
    struct BranchRefs {
        size_t conv_w = 0, conv_b = 0;
        std::vector<GruLayerRefs> gru;
    };

    struct GruDirCache {
        RowMat<S> z, r, hc, h, hprev, rh;
    };
    struct GruLayerCache {
        RowMat<S> input, output;
        GruDirCache fwd, bwd;
    };
    struct BranchCache {
        RowMat<S> input, conv_out;
        std::vector<GruLayerCache> gru;
        RowMat<S> feat; // branch output sequence feeding the pooling
        std::vector<int> argmax;
        RowVec<S> pooled;
    };
    struct Cache {
        BranchCache slice, gadget;
        RowVec<S> concat, z1, a1d, mask;
        RowVec<S> logits;
        std::array<S, 2> probs{};
        S loss_base = 0; // logsumexp(logits)
    };

    const BranchRefs& refs_of(Branch b) const {
        return b == Branch::Slice ? slice_refs_ : gadget_refs_;
    }

    // --- layout -----------------------------------------------------------

    GruDirRefs add_gru_dir(const std::string& prefix, int in, int h) {
        GruDirRefs r;
        r.wz = params_.add(prefix + ".wz", in, h);
        r.wr = params_.add(prefix + ".wr", in, h);
        r.wh = params_.add(prefix + ".wh", in, h);
        r.uz = params_.add(prefix + ".uz", h, h);
        r.ur = params_.add(prefix + ".ur", h, h);
        r.uh = params_.add(prefix + ".uh", h, h);
        r.bz = params_.add(prefix + ".bz", 1, h, true);
        r.br = params_.add(prefix + ".br", 1, h, true);
        r.bh = params_.add(prefix + ".bh", 1, h, true);
        return r;
    }

    void build_layout() {
        for (const char* branch : {"slice", "gadget"}) {
            BranchRefs refs;
            refs.conv_w = params_.add(std::string(branch) + ".conv.w",
                                      cfg_.conv_kernel * cfg_.embed_dim, cfg_.conv_filters);
            refs.conv_b = params_.add(std::string(branch) + ".conv.b", 1,
                                      cfg_.conv_filters, true);
            for (int layer = 0; layer < cfg_.gru_layers; ++layer) {
                GruLayerRefs lr;
                lr.in_dim = cfg_.gru_in_dim(layer);
                std::string p = std::string(branch) + ".gru" + std::to_string(layer);
                lr.fwd = add_gru_dir(p + ".f", lr.in_dim, cfg_.gru_hidden);
                lr.bwd = add_gru_dir(p + ".b", lr.in_dim, cfg_.gru_hidden);
                refs.gru.push_back(lr);
            }
            (std::string(branch) == "slice" ? slice_refs_ : gadget_refs_) = refs;
        }
        head_w1_ = params_.add("head.dense1.w", cfg_.head_in_dim(), cfg_.head_hidden);
        head_b1_ = params_.add("head.dense1.b", 1, cfg_.head_hidden, true);
        head_w2_ = params_.add("head.dense2.w", cfg_.head_hidden, 2);
        head_b2_ = params_.add("head.dense2.b", 1, 2, true);
    }

    // --- forward ----------------------------------------------------------

    static RowMat<S> sigmoid(const RowMat<S>& x) {
        return ((-x.array()).exp() + S(1)).inverse().matrix();
    }

    void conv_forward(const RowMat<S>& x, const BranchRefs& refs, RowMat<S>& out) const {
        const int l = static_cast<int>(x.rows());
        const int k = cfg_.embed_dim;
        const int w = cfg_.conv_kernel;
        const int off = w / 2;
        auto W = params_.mat(refs.conv_w);
        auto b = params_.mat(refs.conv_b);
        out = b.replicate(l, 1);
        for (int d = 0; d < w; ++d) {
            const int shift = d - off;
            const int t0 = std::max(0, -shift);
            const int t1 = std::min(l - 1, l - 1 - shift);
            const int len = t1 - t0 + 1;
            if (len <= 0)
                continue;
            out.middleRows(t0, len).noalias() +=
                x.middleRows(t0 + shift, len) * W.middleRows(d * k, k);
        }
        out = out.cwiseMax(S(0)); // ReLU
    }

    void conv_backward(const RowMat<S>& dout, const BranchCache& c, const BranchRefs& refs,
                       ParamStore<S>& grads) const {
        const int l = static_cast<int>(c.input.rows());
        const int k = cfg_.embed_dim;
        const int w = cfg_.conv_kernel;
        const int off = w / 2;
        RowMat<S> dpre =
            (c.conv_out.array() > S(0)).select(dout, RowMat<S>::Zero(dout.rows(), dout.cols()));
        grads.mat(refs.conv_b) += dpre.colwise().sum();
        auto gW = grads.mat(refs.conv_w);
        for (int d = 0; d < w; ++d) {
            const int shift = d - off;
            const int t0 = std::max(0, -shift);
            const int t1 = std::min(l - 1, l - 1 - shift);
            const int len = t1 - t0 + 1;
            if (len <= 0)
                continue;
            gW.middleRows(d * k, k).noalias() +=
                c.input.middleRows(t0 + shift, len).transpose() * dpre.middleRows(t0, len);
        }
        // No input gradient: the embedding below is frozen.
    }

    void gru_dir_forward(const RowMat<S>& x, const GruDirRefs& refs, bool forward_dir,
                         GruDirCache& c) const {
        const int l = static_cast<int>(x.rows());
        const int h = cfg_.gru_hidden;
        RowMat<S> az = x * params_.mat(refs.wz);
        az.rowwise() += params_.mat(refs.bz).row(0);
        RowMat<S> ar = x * params_.mat(refs.wr);
        ar.rowwise() += params_.mat(refs.br).row(0);
        RowMat<S> ah = x * params_.mat(refs.wh);
        ah.rowwise() += params_.mat(refs.bh).row(0);

        auto Uz = params_.mat(refs.uz);
        auto Ur = params_.mat(refs.ur);
        auto Uh = params_.mat(refs.uh);

        c.z.resize(l, h);
        c.r.resize(l, h);
        c.hc.resize(l, h);
        c.h.resize(l, h);
        c.hprev.resize(l, h);
        c.rh.resize(l, h);

        RowVec<S> hprev = RowVec<S>::Zero(h);
        for (int step = 0; step < l; ++step) {
            const int t = forward_dir ? step : l - 1 - step;
            c.hprev.row(t) = hprev;
            RowVec<S> z = sigmoid(az.row(t) + hprev * Uz);
            RowVec<S> r = sigmoid(ar.row(t) + hprev * Ur);
            RowVec<S> rh = r.cwiseProduct(hprev);
            RowVec<S> hc = (ah.row(t) + rh * Uh).array().tanh().matrix();
            RowVec<S> hnew =
                (RowVec<S>::Ones(h) - z).cwiseProduct(hprev) + z.cwiseProduct(hc);
            c.z.row(t) = z;
            c.r.row(t) = r;
            c.rh.row(t) = rh;
            c.hc.row(t) = hc;
            c.h.row(t) = hnew;
            hprev = hnew;
        }
    }

    // Accumulates parameter gradients; adds the input gradient into dx when
    // a layer below needs it.
    void gru_dir_backward(const RowMat<S>& x, const RowMat<S>& dh_out, const GruDirRefs& refs,
                          bool forward_dir, const GruDirCache& c, ParamStore<S>& grads,
                          RowMat<S>* dx) const {
        const int l = static_cast<int>(x.rows());
        const int h = cfg_.gru_hidden;
        auto Uz = params_.mat(refs.uz);
        auto Ur = params_.mat(refs.ur);
        auto Uh = params_.mat(refs.uh);

        RowMat<S> dAz(l, h), dAr(l, h), dAh(l, h);
        RowVec<S> carry = RowVec<S>::Zero(h);
        for (int step = l - 1; step >= 0; --step) {
            const int t = forward_dir ? step : l - 1 - step;
            RowVec<S> dh = dh_out.row(t) + carry;
            RowVec<S> z = c.z.row(t), r = c.r.row(t), hc = c.hc.row(t),
                      hprev = c.hprev.row(t);

            RowVec<S> dz = dh.cwiseProduct(hc - hprev);
            RowVec<S> dhc = dh.cwiseProduct(z);
            carry = dh.cwiseProduct(RowVec<S>::Ones(h) - z);

            RowVec<S> dah =
                dhc.cwiseProduct((RowVec<S>::Ones(h) - hc.cwiseProduct(hc)));
            RowVec<S> drh = dah * Uh.transpose();
            RowVec<S> dr = drh.cwiseProduct(hprev);
            carry += drh.cwiseProduct(r);

            RowVec<S> daz =
                dz.cwiseProduct(z).cwiseProduct(RowVec<S>::Ones(h) - z);
            RowVec<S> dar =
                dr.cwiseProduct(r).cwiseProduct(RowVec<S>::Ones(h) - r);
            carry += daz * Uz.transpose() + dar * Ur.transpose();

            dAz.row(t) = daz;
            dAr.row(t) = dar;
            dAh.row(t) = dah;
        }

        grads.mat(refs.wz).noalias() += x.transpose() * dAz;
        grads.mat(refs.wr).noalias() += x.transpose() * dAr;
        grads.mat(refs.wh).noalias() += x.transpose() * dAh;
        grads.mat(refs.uz).noalias() += c.hprev.transpose() * dAz;
        grads.mat(refs.ur).noalias() += c.hprev.transpose() * dAr;
        grads.mat(refs.uh).noalias() += c.rh.transpose() * dAh;
        grads.mat(refs.bz) += dAz.colwise().sum();
        grads.mat(refs.br) += dAr.colwise().sum();
        grads.mat(refs.bh) += dAh.colwise().sum();
        if (dx) {
            dx->noalias() += dAz * params_.mat(refs.wz).transpose();
            dx->noalias() += dAr * params_.mat(refs.wr).transpose();
            dx->noalias() += dAh * params_.mat(refs.wh).transpose();
        }
    }

    void branch_forward(const RowMat<S>& in, const BranchRefs& refs, BranchCache& c) const {
        c.input = in;
        const bool use_conv = cfg_.mode != Mode::BigruOnly;
        const bool use_gru = cfg_.mode != Mode::CnnOnly;

        const RowMat<S>* x = &c.input;
        if (use_conv) {
            conv_forward(c.input, refs, c.conv_out);
            x = &c.conv_out;
        }
        if (use_gru) {
            c.gru.resize(refs.gru.size());
            for (size_t layer = 0; layer < refs.gru.size(); ++layer) {
                auto& lc = c.gru[layer];
                lc.input = *x;
                gru_dir_forward(lc.input, refs.gru[layer].fwd, true, lc.fwd);
                gru_dir_forward(lc.input, refs.gru[layer].bwd, false, lc.bwd);
                lc.output.resize(lc.input.rows(), 2 * cfg_.gru_hidden);
                lc.output.leftCols(cfg_.gru_hidden) = lc.fwd.h;
                lc.output.rightCols(cfg_.gru_hidden) = lc.bwd.h;
                x = &lc.output;
            }
        }
        c.feat = *x;

        // Global max pooling; ties keep the first maximal step so the
        // backward pass is deterministic.
        const int l = static_cast<int>(c.feat.rows());
        const int channels = static_cast<int>(c.feat.cols());
        c.pooled.resize(channels);
        c.argmax.assign(static_cast<size_t>(channels), 0);
        for (int j = 0; j < channels; ++j) {
            S best = c.feat(0, j);
            int best_t = 0;
            for (int t = 1; t < l; ++t)
                if (c.feat(t, j) > best) {
                    best = c.feat(t, j);
                    best_t = t;
                }
            c.pooled(j) = best;
            c.argmax[static_cast<size_t>(j)] = best_t;
        }
    }

    void branch_backward(const RowVec<S>& dpooled, const BranchCache& c, const BranchRefs& refs,
                         ParamStore<S>& grads) const {
        RowMat<S> dfeat = RowMat<S>::Zero(c.feat.rows(), c.feat.cols());
        for (int j = 0; j < static_cast<int>(c.feat.cols()); ++j)
            dfeat(c.argmax[static_cast<size_t>(j)], j) = dpooled(j);

        const bool use_conv = cfg_.mode != Mode::BigruOnly;
        const bool use_gru = cfg_.mode != Mode::CnnOnly;

        if (use_gru) {
            RowMat<S> dout = std::move(dfeat);
            for (size_t layer = c.gru.size(); layer-- > 0;) {
                const auto& lc = c.gru[layer];
                const bool need_dx = layer > 0 || use_conv;
                RowMat<S> dx;
                if (need_dx)
                    dx = RowMat<S>::Zero(lc.input.rows(), lc.input.cols());
                gru_dir_backward(lc.input, dout.leftCols(cfg_.gru_hidden),
                                 refs.gru[layer].fwd, true, lc.fwd, grads,
                                 need_dx ? &dx : nullptr);
                gru_dir_backward(lc.input, dout.rightCols(cfg_.gru_hidden),
                                 refs.gru[layer].bwd, false, lc.bwd, grads,
                                 need_dx ? &dx : nullptr);
                dout = std::move(dx);
            }
            dfeat = std::move(dout);
        }
        if (use_conv)
            conv_backward(dfeat, c, refs, grads);
    }

    void check_input(const RowMat<S>& m, int expect_len, const char* what) const {
        if (m.rows() != expect_len || m.cols() != cfg_.embed_dim)
            throw ShapeError(std::string(what) + ": got " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", want " + std::to_string(expect_len) +
                             "x" + std::to_string(cfg_.embed_dim));
    }

    void forward(const RowMat<S>& slice_in, const RowMat<S>& gadget_in, bool training,
                 Rng* dropout_rng, Cache& cache) const {
        check_input(slice_in, cfg_.slice_len, "slice input");
        check_input(gadget_in, cfg_.gadget_len, "gadget input");

        branch_forward(slice_in, slice_refs_, cache.slice);
        branch_forward(gadget_in, gadget_refs_, cache.gadget);

        const int cb = cfg_.branch_out_dim();
        cache.concat.resize(2 * cb);
        cache.concat.head(cb) = cache.slice.pooled;
        cache.concat.tail(cb) = cache.gadget.pooled;

        cache.z1 = cache.concat * params_.mat(head_w1_) + params_.mat(head_b1_).row(0);
        RowVec<S> a1 = cache.z1.cwiseMax(S(0));

        cache.mask = RowVec<S>::Ones(cfg_.head_hidden);
        if (training && cfg_.dropout > 0.0f && dropout_rng) {
            const S keep = S(1) - static_cast<S>(cfg_.dropout);
            for (int j = 0; j < cfg_.head_hidden; ++j)
                cache.mask(j) = dropout_rng->uniform() < static_cast<double>(keep)
                                    ? S(1) / keep
                                    : S(0);
        }
        cache.a1d = a1.cwiseProduct(cache.mask);

        cache.logits = cache.a1d * params_.mat(head_w2_) + params_.mat(head_b2_).row(0);
        const S m = cache.logits.maxCoeff();
        const S e0 = std::exp(cache.logits(0) - m);
        const S e1 = std::exp(cache.logits(1) - m);
        const S sum = e0 + e1;
        cache.probs[0] = e0 / sum;
        cache.probs[1] = e1 / sum;
        cache.loss_base = std::log(sum) + m;
        if (!std::isfinite(static_cast<double>(cache.probs[0])) ||
            !std::isfinite(static_cast<double>(cache.probs[1])))
            throw NonFiniteError("softmax output");
    }

    void backward(const RowVec<S>& dlogits, const Cache& cache, ParamStore<S>& grads) const {
        grads.mat(head_w2_).noalias() += cache.a1d.transpose() * dlogits;
        grads.mat(head_b2_) += dlogits;
        RowVec<S> da1d = dlogits * params_.mat(head_w2_).transpose();
        RowVec<S> da1 = da1d.cwiseProduct(cache.mask);
        RowVec<S> dz1 = (cache.z1.array() > S(0)).select(da1, RowVec<S>::Zero(cfg_.head_hidden));
        grads.mat(head_w1_).noalias() += cache.concat.transpose() * dz1;
        grads.mat(head_b1_) += dz1;
        RowVec<S> dconcat = dz1 * params_.mat(head_w1_).transpose();

        const int cb = cfg_.branch_out_dim();
        branch_backward(dconcat.head(cb), cache.slice, slice_refs_, grads);
        branch_backward(dconcat.tail(cb), cache.gadget, gadget_refs_, grads);
    }

    ModelConfig cfg_;
    ParamStore<S> params_;
    BranchRefs slice_refs_, gadget_refs_;
    size_t head_w1_ = 0, head_b1_ = 0, head_w2_ = 0, head_b2_ = 0;
};

} // namespace vulnrank::neural
