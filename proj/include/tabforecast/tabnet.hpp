#pragma once

// TABNet: a residual stack of period-folding attention-inception blocks for
// per-heartbeat-cycle SBP forecasting. Each block detects the top-k dominant
// periods of its input spectrum, folds the sequence into one 2-D tensor per
// period (one period per column), runs an attention-gated multi-kernel
// convolution over each, unfolds, and fuses the branches with
// amplitude-softmax weights.

#include "tabforecast/errors.hpp"
#include "tabforecast/tensor.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace tabforecast::model {

using nn::Shape;
using nn::Tensor;

struct TabNetConfig {
    int input_length = 30;   // cycles fed to the model
    int forecast_length = 5; // cycles predicted
    int n_features = 38;
    int channels = 39;       // features + SBP history
    int d_model = 32;
    int n_layers = 2;
    int top_k = 5;
    std::vector<int> inception_kernels = {1, 3, 5};
    int attention_bottleneck_ratio = 4;
    bool attention_sigmoid = false;
    double lr = 1e-4;
    int batch_size = 4;
    int epochs = 10;
    std::uint64_t seed = 1;

    int total_length() const { return input_length + forecast_length; }

    void validate() const {
        if (channels != n_features + 1)
            throw ConfigError("channels must equal n_features + 1");
        if (input_length < 2 || forecast_length < 1)
            throw ConfigError("input_length/forecast_length out of range");
        if (d_model < 8) throw ConfigError("d_model must be >= 8");
        if (top_k < 1 || top_k > total_length() / 2)
            throw ConfigError("top_k must lie in [1, (input_length+forecast_length)/2]");
        if (n_layers < 1) throw ConfigError("n_layers must be >= 1");
        if (inception_kernels.empty()) throw ConfigError("inception_kernels must be non-empty");
        for (int k : inception_kernels)
            if (k < 1 || k % 2 == 0) throw ConfigError("inception kernels must be odd and >= 1");
        if (attention_bottleneck_ratio < 1 || d_model % attention_bottleneck_ratio != 0)
            throw ConfigError("attention_bottleneck_ratio must divide d_model");
        if (lr <= 0 || batch_size < 1 || epochs < 1)
            throw ConfigError("lr/batch_size/epochs out of range");
    }
};

// ---------------------------------------------------------------------------
// Period detection (forward-only, feeds the fold/aggregate plan).
// ---------------------------------------------------------------------------
struct PeriodDecomposition {
    std::vector<double> amplitudes;  // index i -> frequency i+1
    std::vector<int> frequencies;    // selected r_1..r_k
    std::vector<int> periods;        // c_i = ceil(T / r_i)
};

// Amplitudes at or below this value are treated as exactly zero when ranking
// frequencies; the bound scales with the signal so spectral leakage from a
// constant input cannot win a top-k slot.
template <class T>
double amplitude_zero_threshold(const Tensor<T>& x) {
    double acc = 0.0;
    for (size_t i = 0; i < x.size(); ++i) acc += std::fabs(static_cast<double>(x.data()[i]));
    return 1e-8 * acc / x.dim(1);
}

inline std::vector<int> select_top_frequencies(const std::vector<double>& amp, int k,
                                               double zero_thresh) {
    std::vector<int> order(amp.size());
    for (size_t i = 0; i < amp.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double aa = amp[a] <= zero_thresh ? 0.0 : amp[a];
        const double ab = amp[b] <= zero_thresh ? 0.0 : amp[b];
        if (aa != ab) return aa > ab;
        return a < b;  // ties and zeros toward the lower frequency
    });
    std::vector<int> freqs(static_cast<size_t>(std::min<int>(k, order.size())));
    for (size_t i = 0; i < freqs.size(); ++i) freqs[i] = order[i] + 1;
    return freqs;
}

template <class T>
PeriodDecomposition detect_periods(const Tensor<T>& x, int top_k) {
    if (x.ndim() != 2) throw ShapeMismatch("detect_periods: expects [T,d]");
    const int Tn = x.dim(0);
    if (Tn < 2 * top_k)
        throw SignalTooShort("detect_periods: T=" + std::to_string(Tn) + " < 2*top_k");
    Tensor<T> amp = nn::rfft_amplitude(x);
    PeriodDecomposition out;
    out.amplitudes.assign(amp.data(), amp.data() + amp.size());
    out.frequencies = select_top_frequencies(out.amplitudes, top_k, amplitude_zero_threshold(x));
    out.periods.reserve(out.frequencies.size());
    for (int r : out.frequencies) out.periods.push_back((Tn + r - 1) / r);
    return out;
}

// Softmax over the amplitudes of the selected frequencies. The weights are
// constants in the gradient graph.
inline std::vector<double> aggregation_weights(const PeriodDecomposition& pd) {
    std::vector<double> a;
    a.reserve(pd.frequencies.size());
    for (int r : pd.frequencies) a.push_back(pd.amplitudes[static_cast<size_t>(r - 1)]);
    double mx = a[0];
    for (double v : a) mx = std::max(mx, v);
    double sum = 0.0;
    for (double& v : a) {
        v = std::exp(v - mx);
        sum += v;
    }
    for (double& v : a) v /= sum;
    return a;
}

// ---------------------------------------------------------------------------
// 1D <-> 2D period folding.
// fold_periods(x[T,d], r, c) -> [d, c, r] with element (ch, a, b) = x[b*c+a, ch];
// the tail (t >= T) is zero padding. unfold_periods inverts and truncates.
// ---------------------------------------------------------------------------
template <class T>
Tensor<T> fold_periods(const Tensor<T>& x, int r, int c) {
    if (x.ndim() != 2) throw ShapeMismatch("fold_periods: expects [T,d]");
    const int Tn = x.dim(0), d = x.dim(1);
    if (r < 1 || c < 1 || r * c < Tn)
        throw ShapeMismatch("fold_periods: need r*c >= T");
    Tensor<T> y = nn::detail::make_output<T>({d, c, r}, {&x});
    const T* xp = x.data();
    T* yp = y.data();
    for (int ch = 0; ch < d; ++ch)
        for (int b = 0; b < r; ++b)
            for (int a = 0; a < c; ++a) {
                const int t = b * c + a;
                yp[(static_cast<size_t>(ch) * c + a) * r + b] =
                    t < Tn ? xp[static_cast<size_t>(t) * d + ch] : T(0);
            }
    if (nn::detail::recording<T>({&x})) {
        auto xs = x.storage(), ys = y.storage();
        nn::Tape<T>::active()->record([xs, ys, Tn, d, r, c]() {
            if (ys->grad.empty()) return;
            if (xs->grad.empty()) xs->grad.assign(xs->value.size(), T(0));
            for (int ch = 0; ch < d; ++ch)
                for (int b = 0; b < r; ++b)
                    for (int a = 0; a < c; ++a) {
                        const int t = b * c + a;
                        if (t < Tn)
                            xs->grad[static_cast<size_t>(t) * d + ch] +=
                                ys->grad[(static_cast<size_t>(ch) * c + a) * r + b];
                    }
        });
    }
    return y;
}

template <class T>
Tensor<T> unfold_periods(const Tensor<T>& x2d, int Tn) {
    if (x2d.ndim() != 3) throw ShapeMismatch("unfold_periods: expects [d,c,r]");
    const int d = x2d.dim(0), c = x2d.dim(1), r = x2d.dim(2);
    if (r * c < Tn) throw ShapeMismatch("unfold_periods: need r*c >= T");
    Tensor<T> y = nn::detail::make_output<T>({Tn, d}, {&x2d});
    const T* xp = x2d.data();
    T* yp = y.data();
    for (int t = 0; t < Tn; ++t) {
        const int a = t % c, b = t / c;
        for (int ch = 0; ch < d; ++ch)
            yp[static_cast<size_t>(t) * d + ch] = xp[(static_cast<size_t>(ch) * c + a) * r + b];
    }
    if (nn::detail::recording<T>({&x2d})) {
        auto xs = x2d.storage(), ys = y.storage();
        nn::Tape<T>::active()->record([xs, ys, Tn, d, r, c]() {
            if (ys->grad.empty()) return;
            if (xs->grad.empty()) xs->grad.assign(xs->value.size(), T(0));
            for (int t = 0; t < Tn; ++t) {
                const int a = t % c, b = t / c;
                for (int ch = 0; ch < d; ++ch)
                    xs->grad[(static_cast<size_t>(ch) * c + a) * r + b] +=
                        ys->grad[static_cast<size_t>(t) * d + ch];
            }
        });
    }
    return y;
}

// ---------------------------------------------------------------------------
// Instance normalization over the input window; statistics are detached
// constants. Channels with SD below 1e-8 pass through unscaled (flagged) so
// constant channels survive the round trip.
// ---------------------------------------------------------------------------
template <class T>
struct InstanceStats {
    std::vector<T> mean, scale;
    std::vector<bool> flagged;
};

template <class T>
std::pair<Tensor<T>, InstanceStats<T>> instance_normalize(const Tensor<T>& x) {
    if (x.ndim() != 2) throw ShapeMismatch("instance_normalize: expects [T,C]");
    const int Tn = x.dim(0), C = x.dim(1);
    if (Tn < 2) throw SignalTooShort("instance_normalize: need T >= 2");
    InstanceStats<T> st;
    st.mean.assign(C, T(0));
    st.scale.assign(C, T(1));
    st.flagged.assign(C, false);
    const T* xp = x.data();
    for (int c = 0; c < C; ++c) {
        double m = 0;
        for (int t = 0; t < Tn; ++t) m += xp[static_cast<size_t>(t) * C + c];
        m /= Tn;
        double v = 0;
        for (int t = 0; t < Tn; ++t) {
            const double dvi = xp[static_cast<size_t>(t) * C + c] - m;
            v += dvi * dvi;
        }
        const double sd = std::sqrt(v / Tn);
        st.mean[c] = static_cast<T>(m);
        if (sd < 1e-8) {
            st.flagged[c] = true;
            st.scale[c] = T(1);
        } else {
            st.scale[c] = static_cast<T>(sd);
        }
    }
    Tensor<T> y = nn::detail::make_output<T>(x.shape(), {&x});
    T* yp = y.data();
    for (int t = 0; t < Tn; ++t)
        for (int c = 0; c < C; ++c) {
            const size_t i = static_cast<size_t>(t) * C + c;
            yp[i] = (xp[i] - st.mean[c]) / st.scale[c];
        }
    if (nn::detail::recording<T>({&x})) {
        auto xs = x.storage(), ys = y.storage();
        auto scale = st.scale;
        nn::Tape<T>::active()->record([xs, ys, scale, Tn, C]() {
            if (ys->grad.empty()) return;
            if (xs->grad.empty()) xs->grad.assign(xs->value.size(), T(0));
            for (int t = 0; t < Tn; ++t)
                for (int c = 0; c < C; ++c) {
                    const size_t i = static_cast<size_t>(t) * C + c;
                    xs->grad[i] += ys->grad[i] / scale[c];
                }
        });
    }
    return {y, st};
}

// De-normalization with the stats captured at entry; broadcasts over any T.
template <class T>
Tensor<T> instance_denormalize(const Tensor<T>& x, const InstanceStats<T>& st) {
    if (x.ndim() != 2 || x.dim(1) != static_cast<int>(st.mean.size()))
        throw ShapeMismatch("instance_denormalize: channel mismatch");
    const int Tn = x.dim(0), C = x.dim(1);
    Tensor<T> y = nn::detail::make_output<T>(x.shape(), {&x});
    for (int t = 0; t < Tn; ++t)
        for (int c = 0; c < C; ++c) {
            const size_t i = static_cast<size_t>(t) * C + c;
            y.data()[i] = x.data()[i] * st.scale[c] + st.mean[c];
        }
    if (nn::detail::recording<T>({&x})) {
        auto xs = x.storage(), ys = y.storage();
        auto scale = st.scale;
        nn::Tape<T>::active()->record([xs, ys, scale, Tn, C]() {
            if (ys->grad.empty()) return;
            if (xs->grad.empty()) xs->grad.assign(xs->value.size(), T(0));
            for (int t = 0; t < Tn; ++t)
                for (int c = 0; c < C; ++c) {
                    const size_t i = static_cast<size_t>(t) * C + c;
                    xs->grad[i] += ys->grad[i] * scale[c];
                }
        });
    }
    return y;
}

// Rows [T-H, T) of one channel, as a length-H vector.
template <class T>
Tensor<T> slice_tail_channel(const Tensor<T>& x, int H, int channel) {
    if (x.ndim() != 2) throw ShapeMismatch("slice_tail_channel: expects [T,C]");
    const int Tn = x.dim(0), C = x.dim(1);
    if (H < 1 || H > Tn || channel < 0 || channel >= C)
        throw ShapeMismatch("slice_tail_channel: out of range");
    Tensor<T> y = nn::detail::make_output<T>({H}, {&x});
    for (int j = 0; j < H; ++j)
        y.data()[j] = x.data()[static_cast<size_t>(Tn - H + j) * C + channel];
    if (nn::detail::recording<T>({&x})) {
        auto xs = x.storage(), ys = y.storage();
        nn::Tape<T>::active()->record([xs, ys, Tn, C, H, channel]() {
            if (ys->grad.empty()) return;
            if (xs->grad.empty()) xs->grad.assign(xs->value.size(), T(0));
            for (int j = 0; j < H; ++j)
                xs->grad[static_cast<size_t>(Tn - H + j) * C + channel] += ys->grad[j];
        });
    }
    return y;
}

// Fixed sinusoidal positional encoding, [T, d].
template <class T>
Tensor<T> positional_encoding(int Tn, int d) {
    Tensor<T> pe = Tensor<T>::zeros({Tn, d});
    for (int t = 0; t < Tn; ++t)
        for (int i = 0; i < d; ++i) {
            const double expo = static_cast<double>(2 * (i / 2)) / d;
            const double angle = t / std::pow(10000.0, expo);
            pe.data()[static_cast<size_t>(t) * d + i] =
                static_cast<T>((i % 2 == 0) ? std::sin(angle) : std::cos(angle));
        }
    return pe;
}

// ---------------------------------------------------------------------------
// Parameters and the model.
// ---------------------------------------------------------------------------
struct BlockPlan {
    std::vector<int> frequencies, periods;
    std::vector<double> weights;
};

struct ModelPlan {
    std::vector<BlockPlan> layers;
};

template <class T>
struct TabBlockParams {
    Tensor<T> attention1_kernel, attention1_bias;  // d -> d/ratio, 3x3
    Tensor<T> attention2_kernel, attention2_bias;  // d/ratio -> d, 3x3
    std::vector<Tensor<T>> branch_kernels, branch_biases;
};

// Trainable parameters of one block plus the attention gate, given the
// default geometry (3x3 attention convs at the bottleneck ratio, one k x k
// conv per inception kernel).
inline std::size_t block_parameter_count(int d_model, int ratio, const std::vector<int>& kernels) {
    const std::size_t dr = static_cast<std::size_t>(d_model / ratio);
    std::size_t n = static_cast<std::size_t>(d_model) * dr * 9 + dr;  // attention 1
    n += dr * static_cast<std::size_t>(d_model) * 9 + d_model;        // attention 2
    for (int k : kernels)
        n += static_cast<std::size_t>(d_model) * d_model * k * k + d_model;
    return n;
}

// Plain multi-kernel inception layer at the same width (no attention gate,
// no bottleneck) — the reference this design undercuts.
inline std::size_t inception_reference_parameter_count(int d_model, const std::vector<int>& kernels) {
    std::size_t n = 0;
    for (int k : kernels)
        n += static_cast<std::size_t>(d_model) * d_model * k * k + d_model;
    return n;
}

template <class T>
class TabNet {
public:
    explicit TabNet(TabNetConfig config) : cfg_(std::move(config)) {
        cfg_.validate();
        allocate();
        init_parameters(cfg_.seed);
    }

    const TabNetConfig& config() const { return cfg_; }

    // Parameters in a fixed, documented order (init, Adam state, checkpoint
    // payload and the name list below all share it).
    std::vector<Tensor<T>> parameters() const {
        std::vector<Tensor<T>> out{embed_W_, embed_b_, time_W_, time_b_};
        for (const auto& blk : blocks_) {
            out.push_back(blk.attention1_kernel);
            out.push_back(blk.attention1_bias);
            out.push_back(blk.attention2_kernel);
            out.push_back(blk.attention2_bias);
            for (size_t i = 0; i < blk.branch_kernels.size(); ++i) {
                out.push_back(blk.branch_kernels[i]);
                out.push_back(blk.branch_biases[i]);
            }
        }
        out.push_back(project_W_);
        out.push_back(project_b_);
        return out;
    }

    std::vector<std::string> parameter_names() const {
        std::vector<std::string> out{"embed.W", "embed.b", "time_extend.W", "time_extend.b"};
        for (int l = 0; l < cfg_.n_layers; ++l) {
            const std::string p = "layer" + std::to_string(l) + ".";
            out.push_back(p + "attention1.kernel");
            out.push_back(p + "attention1.bias");
            out.push_back(p + "attention2.kernel");
            out.push_back(p + "attention2.bias");
            for (int k : cfg_.inception_kernels) {
                out.push_back(p + "branch" + std::to_string(k) + ".kernel");
                out.push_back(p + "branch" + std::to_string(k) + ".bias");
            }
        }
        out.push_back("project.W");
        out.push_back("project.b");
        return out;
    }

    std::size_t parameter_count() const {
        std::size_t n = 0;
        for (const auto& p : parameters()) n += p.size();
        return n;
    }

    // x: [T, C] -> [T, d_model] with positional encoding; T is free.
    Tensor<T> embed(const Tensor<T>& x) const {
        if (x.ndim() != 2 || x.dim(1) != cfg_.channels)
            throw ShapeMismatch("embed: expects [T," + std::to_string(cfg_.channels) + "]");
        auto proj = nn::linear(x, embed_W_, embed_b_);
        return nn::elementwise_add(proj, positional_encoding<T>(x.dim(0), cfg_.d_model));
    }

    // Trainable linear map along the time axis, input_length -> total_length.
    Tensor<T> time_extend(const Tensor<T>& x) const {
        if (x.ndim() != 2 || x.dim(0) != cfg_.input_length)
            throw ShapeMismatch("time_extend: expects [" + std::to_string(cfg_.input_length) + ",d]");
        auto xt = nn::permute(x, {1, 0});
        auto yt = nn::linear(xt, time_W_, time_b_);
        return nn::permute(yt, {1, 0});
    }

    // Attention-gated inception over one folded tensor [d, c, r].
    Tensor<T> att_inception(const Tensor<T>& x2d, int layer) const {
        const auto& blk = blocks_.at(static_cast<size_t>(layer));
        auto hidden = nn::relu(nn::conv2d(x2d, blk.attention1_kernel, blk.attention1_bias));
        auto gate = nn::conv2d(hidden, blk.attention2_kernel, blk.attention2_bias);
        if (cfg_.attention_sigmoid) gate = nn::sigmoid(gate);
        auto gated = nn::elementwise_mul(x2d, gate);
        std::vector<Tensor<T>> branches;
        branches.reserve(blk.branch_kernels.size());
        for (size_t i = 0; i < blk.branch_kernels.size(); ++i)
            branches.push_back(nn::conv2d(gated, blk.branch_kernels[i], blk.branch_biases[i]));
        const double w = 1.0 / static_cast<double>(branches.size());
        return nn::weighted_sum(branches, std::vector<T>(branches.size(), static_cast<T>(w)));
    }

    // One residual block: x + aggregate_i(unfold(att_inception(fold(x, r_i, c_i)))).
    // `forced` pins the period plan (finite-difference tests need the
    // decomposition frozen, since it is a constant of the gradient graph);
    // `captured` returns the plan actually used.
    Tensor<T> tabblock_forward(const Tensor<T>& x, int layer, const BlockPlan* forced = nullptr,
                               BlockPlan* captured = nullptr) const {
        const int Tn = x.dim(0);
        BlockPlan plan;
        if (forced != nullptr) {
            plan = *forced;
        } else {
            PeriodDecomposition pd = detect_periods(x, cfg_.top_k);
            plan.frequencies = pd.frequencies;
            plan.periods = pd.periods;
            plan.weights = aggregation_weights(pd);
        }
        if (captured != nullptr) *captured = plan;
        std::vector<Tensor<T>> branch_outputs;
        std::vector<T> weights;
        branch_outputs.reserve(plan.frequencies.size());
        for (size_t i = 0; i < plan.frequencies.size(); ++i) {
            auto folded = fold_periods(x, plan.frequencies[i], plan.periods[i]);
            auto mixed = att_inception(folded, layer);
            branch_outputs.push_back(unfold_periods(mixed, Tn));
            weights.push_back(static_cast<T>(plan.weights[i]));
        }
        auto fused = nn::weighted_sum(branch_outputs, weights);
        return nn::elementwise_add(x, fused);
    }

    // Full pipeline on one window in model-input units (train-eval feeds
    // z-scored channels): instance-normalize, embed, extend the time axis,
    // run the residual blocks, project back to channel space, de-normalize,
    // return the SBP channel (last channel) of the last forecast_length steps.
    Tensor<T> forward(const Tensor<T>& window, const ModelPlan* forced = nullptr,
                      ModelPlan* captured = nullptr) const {
        if (window.ndim() != 2 || window.dim(0) != cfg_.input_length ||
            window.dim(1) != cfg_.channels)
            throw ShapeMismatch("forward: expects [" + std::to_string(cfg_.input_length) + "," +
                                std::to_string(cfg_.channels) + "], got " +
                                nn::shape_str(window.shape()));
        auto [normed, stats] = instance_normalize(window);
        auto x = time_extend(embed(normed));
        if (captured != nullptr) captured->layers.assign(static_cast<size_t>(cfg_.n_layers), {});
        for (int l = 0; l < cfg_.n_layers; ++l) {
            const BlockPlan* fp =
                forced != nullptr ? &forced->layers.at(static_cast<size_t>(l)) : nullptr;
            BlockPlan* cp = captured != nullptr ? &captured->layers[static_cast<size_t>(l)] : nullptr;
            x = tabblock_forward(x, l, fp, cp);
        }
        auto projected = nn::linear(x, project_W_, project_b_);
        auto restored = instance_denormalize(projected, stats);
        return slice_tail_channel(restored, cfg_.forecast_length, cfg_.channels - 1);
    }

    // Re-initialize all parameters in place (fixed draw order).
    void init_parameters(std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        auto fill_uniform = [&rng](Tensor<T>& t, double bound) {
            std::uniform_real_distribution<double> dist(-bound, bound);
            for (size_t i = 0; i < t.size(); ++i) t.data()[i] = static_cast<T>(dist(rng));
        };
        auto fan_in_linear = [&](Tensor<T>& W) {
            fill_uniform(W, 1.0 / std::sqrt(static_cast<double>(W.dim(0))));
        };
        auto fan_in_conv = [&](Tensor<T>& K) {
            fill_uniform(K, 1.0 / std::sqrt(static_cast<double>(K.dim(1)) * K.dim(2) * K.dim(3)));
        };
        fan_in_linear(embed_W_);
        fan_in_linear(time_W_);
        for (auto& blk : blocks_) {
            fan_in_conv(blk.attention1_kernel);
            fan_in_conv(blk.attention2_kernel);
            for (auto& k : blk.branch_kernels) fan_in_conv(k);
        }
        fan_in_linear(project_W_);
        for (auto p : parameters())
            if (p.ndim() == 1) std::fill(p.data(), p.data() + p.size(), T(0));
    }

    TabBlockParams<T>& block(int layer) { return blocks_.at(static_cast<size_t>(layer)); }
    const TabBlockParams<T>& block(int layer) const { return blocks_.at(static_cast<size_t>(layer)); }

private:
    void allocate() {
        const int C = cfg_.channels, d = cfg_.d_model;
        const int Lin = cfg_.input_length, Ltot = cfg_.total_length();
        const int dr = d / cfg_.attention_bottleneck_ratio;
        auto mk = [](Shape s) {
            auto t = Tensor<T>::zeros(std::move(s));
            t.set_requires_grad(true);
            return t;
        };
        embed_W_ = mk({C, d});
        embed_b_ = mk({d});
        time_W_ = mk({Lin, Ltot});
        time_b_ = mk({Ltot});
        blocks_.clear();
        for (int l = 0; l < cfg_.n_layers; ++l) {
            TabBlockParams<T> blk;
            blk.attention1_kernel = mk({dr, d, 3, 3});
            blk.attention1_bias = mk({dr});
            blk.attention2_kernel = mk({d, dr, 3, 3});
            blk.attention2_bias = mk({d});
            for (int k : cfg_.inception_kernels) {
                blk.branch_kernels.push_back(mk({d, d, k, k}));
                blk.branch_biases.push_back(mk({d}));
            }
            blocks_.push_back(std::move(blk));
        }
        project_W_ = mk({d, C});
        project_b_ = mk({C});
    }

    TabNetConfig cfg_;
    Tensor<T> embed_W_, embed_b_, time_W_, time_b_, project_W_, project_b_;
    std::vector<TabBlockParams<T>> blocks_;
};

} // namespace tabforecast::model
