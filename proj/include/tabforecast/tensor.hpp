#pragma once

// Dense row-major tensors with a reverse-mode gradient tape. Scalar type is a
// template parameter: float for training/inference, double for the
// finite-difference test harness. Ops are free functions; they record their
// backward rule onto the innermost active Tape when any input requires grad.

#include "tabforecast/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

namespace tabforecast::nn {

using Shape = std::vector<int>;

inline std::string shape_str(const Shape& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

inline size_t shape_numel(const Shape& s) {
    size_t n = 1;
    for (int d : s) {
        if (d < 1) throw ShapeMismatch("shape entries must be >= 1, got " + shape_str(s));
        n *= static_cast<size_t>(d);
    }
    return n;
}

template <class T>
struct TensorStorage {
    Shape shape;
    std::vector<T> value;
    std::vector<T> grad;   // empty until first needed
    bool requires_grad = false;
};

template <class T>
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(Shape shape) {
        Tensor t;
        size_t n = shape_numel(shape);
        t.s_ = std::make_shared<TensorStorage<T>>();
        t.s_->shape = std::move(shape);
        t.s_->value.assign(n, T(0));
        return t;
    }

    static Tensor full(Shape shape, T v) {
        Tensor t = zeros(std::move(shape));
        std::fill(t.s_->value.begin(), t.s_->value.end(), v);
        return t;
    }

    static Tensor from(Shape shape, std::vector<T> data) {
        if (shape_numel(shape) != data.size())
            throw ShapeMismatch("data length " + std::to_string(data.size()) +
                                " does not match shape " + shape_str(shape));
        Tensor t;
        t.s_ = std::make_shared<TensorStorage<T>>();
        t.s_->shape = std::move(shape);
        t.s_->value = std::move(data);
        return t;
    }

    static Tensor scalar(T v) { return from({1}, {v}); }

    bool defined() const { return static_cast<bool>(s_); }
    const Shape& shape() const { return s_->shape; }
    int dim(int i) const { return s_->shape[static_cast<size_t>(i)]; }
    int ndim() const { return static_cast<int>(s_->shape.size()); }
    size_t size() const { return s_->value.size(); }

    T* data() { return s_->value.data(); }
    const T* data() const { return s_->value.data(); }
    T item() const { return s_->value.at(0); }

    bool requires_grad() const { return s_->requires_grad; }
    Tensor& set_requires_grad(bool b) {
        s_->requires_grad = b;
        return *this;
    }

    bool has_grad() const { return !s_->grad.empty(); }
    // Lazily allocates a zero-filled gradient buffer of matching shape.
    T* grad() {
        if (s_->grad.empty()) s_->grad.assign(s_->value.size(), T(0));
        return s_->grad.data();
    }
    const std::vector<T>& grad_vec() {
        grad();
        return s_->grad;
    }
    void zero_grad() {
        if (!s_->grad.empty()) std::fill(s_->grad.begin(), s_->grad.end(), T(0));
    }

    std::shared_ptr<TensorStorage<T>> storage() const { return s_; }

private:
    std::shared_ptr<TensorStorage<T>> s_;
};

// Reverse-mode tape. Construction pushes the tape onto a thread-local stack;
// ops record onto the innermost one. backward() replays recorded nodes in
// exact reverse order of recording (reverse topological order, since every op
// is recorded after its inputs exist) and then clears the tape.
template <class T>
class Tape {
public:
    Tape() { stack().push_back(this); }
    ~Tape() {
        auto& s = stack();
        s.erase(std::find(s.rbegin(), s.rend(), this).base() - 1);
    }
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    static Tape* active() { return stack().empty() ? nullptr : stack().back(); }

    void record(std::function<void()> backward_fn) { nodes_.push_back(std::move(backward_fn)); }
    size_t size() const { return nodes_.size(); }

    // Seeds d(loss)/d(loss) = seed and propagates to every requires_grad leaf.
    void backward(Tensor<T>& loss, T seed = T(1)) {
        if (loss.size() != 1) throw ShapeMismatch("backward() expects a scalar loss");
        loss.grad()[0] += seed;
        for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) (*it)();
        nodes_.clear();
    }

    void clear() { nodes_.clear(); }

private:
    static std::vector<Tape*>& stack() {
        static thread_local std::vector<Tape*> s;
        return s;
    }
    std::vector<std::function<void()>> nodes_;
};

namespace detail {

template <class T>
bool recording(std::initializer_list<const Tensor<T>*> inputs) {
    if (!Tape<T>::active()) return false;
    for (const Tensor<T>* t : inputs)
        if (t->requires_grad()) return true;
    return false;
}

template <class T>
Tensor<T> make_output(Shape shape, std::initializer_list<const Tensor<T>*> inputs) {
    Tensor<T> out = Tensor<T>::zeros(std::move(shape));
    for (const Tensor<T>* t : inputs)
        if (t->requires_grad()) out.set_requires_grad(true);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// linear: y = x @ W + b, broadcasting over all leading dimensions of x.
// x: [..., in], W: [in, out], b: [out] (optional, pass undefined to skip).
// ---------------------------------------------------------------------------
template <class T>
Tensor<T> linear(const Tensor<T>& x, const Tensor<T>& W, const Tensor<T>& b = {}) {
    if (W.ndim() != 2) throw ShapeMismatch("linear: W must be 2-D, got " + shape_str(W.shape()));
    const int in = W.dim(0), out = W.dim(1);
    if (x.ndim() < 1 || x.shape().back() != in)
        throw ShapeMismatch("linear: x " + shape_str(x.shape()) + " vs W " + shape_str(W.shape()));
    if (b.defined() && (b.ndim() != 1 || b.dim(0) != out))
        throw ShapeMismatch("linear: bias shape " + shape_str(b.shape()));

    Shape ys = x.shape();
    ys.back() = out;
    const size_t rows = x.size() / static_cast<size_t>(in);

    Tensor<T> y = b.defined() ? detail::make_output<T>(ys, {&x, &W, &b})
                              : detail::make_output<T>(ys, {&x, &W});
    const T* xp = x.data();
    const T* wp = W.data();
    T* yp = y.data();
    for (size_t r = 0; r < rows; ++r) {
        T* yr = yp + r * out;
        if (b.defined()) std::copy(b.data(), b.data() + out, yr);
        const T* xr = xp + r * in;
        for (int i = 0; i < in; ++i) {
            const T xv = xr[i];
            const T* wrow = wp + static_cast<size_t>(i) * out;
            for (int o = 0; o < out; ++o) yr[o] += xv * wrow[o];
        }
    }

    if (detail::recording<T>({&x, &W})) {
        auto xs = x.storage(), ws = W.storage(), ys2 = y.storage();
        auto bs = b.defined() ? b.storage() : nullptr;
        Tape<T>::active()->record([xs, ws, bs, ys2, rows, in, out]() {
            const T* g = ys2->grad.data();
            if (g == nullptr || ys2->grad.empty()) return;
            const T* xp = xs->value.data();
            const T* wp = ws->value.data();
            if (xs->requires_grad) {
                if (xs->grad.empty()) xs->grad.assign(xs->value.size(), T(0));
                T* gx = xs->grad.data();
                for (size_t r = 0; r < rows; ++r) {
                    const T* gr = g + r * out;
                    T* gxr = gx + r * in;
                    for (int i = 0; i < in; ++i) {
                        const T* wrow = wp + static_cast<size_t>(i) * out;
                        T acc = 0;
                        for (int o = 0; o < out; ++o) acc += gr[o] * wrow[o];
                        gxr[i] += acc;
                    }
                }
            }
            if (ws->requires_grad) {
                if (ws->grad.empty()) ws->grad.assign(ws->value.size(), T(0));
                T* gw = ws->grad.data();
                for (size_t r = 0; r < rows; ++r) {
                    const T* gr = g + r * out;
                    const T* xr = xp + r * in;
                    for (int i = 0; i < in; ++i) {
                        const T xv = xr[i];
                        T* gwrow = gw + static_cast<size_t>(i) * out;
                        for (int o = 0; o < out; ++o) gwrow[o] += xv * gr[o];
                    }
                }
            }
            if (bs && bs->requires_grad) {
                if (bs->grad.empty()) bs->grad.assign(bs->value.size(), T(0));
                T* gb = bs->grad.data();
                for (size_t r = 0; r < rows; ++r) {
                    const T* gr = g + r * out;
                    for (int o = 0; o < out; ++o) gb[o] += gr[o];
                }
            }
        });
    }
    return y;
}

// ---------------------------------------------------------------------------
// conv2d: same-padded stride-1 2-D convolution (cross-correlation).
// x: [Cin, H, W], kernels: [Cout, Cin, k, k] with k odd, bias: [Cout] optional.
// ---------------------------------------------------------------------------
namespace detail {

template <class T>
std::vector<T> pad2d(const T* src, int C, int H, int W, int p) {
    const int Hp = H + 2 * p, Wp = W + 2 * p;
    std::vector<T> out(static_cast<size_t>(C) * Hp * Wp, T(0));
    for (int c = 0; c < C; ++c)
        for (int y = 0; y < H; ++y) {
            const T* s = src + (static_cast<size_t>(c) * H + y) * W;
            T* d = out.data() + (static_cast<size_t>(c) * Hp + y + p) * Wp + p;
            std::copy(s, s + W, d);
        }
    return out;
}

} // namespace detail

template <class T>
Tensor<T> conv2d(const Tensor<T>& x, const Tensor<T>& kernels, const Tensor<T>& bias = {}) {
    if (x.ndim() != 3) throw ShapeMismatch("conv2d: input must be [C,H,W], got " + shape_str(x.shape()));
    if (kernels.ndim() != 4 || kernels.dim(2) != kernels.dim(3))
        throw ShapeMismatch("conv2d: kernels must be [Cout,Cin,k,k], got " + shape_str(kernels.shape()));
    const int Cin = x.dim(0), H = x.dim(1), W = x.dim(2);
    const int Cout = kernels.dim(0), k = kernels.dim(2);
    if (kernels.dim(1) != Cin)
        throw ShapeMismatch("conv2d: Cin mismatch " + shape_str(x.shape()) + " vs " + shape_str(kernels.shape()));
    if (k % 2 == 0) throw ShapeMismatch("conv2d: kernel size must be odd, got " + std::to_string(k));
    if (bias.defined() && (bias.ndim() != 1 || bias.dim(0) != Cout))
        throw ShapeMismatch("conv2d: bias shape " + shape_str(bias.shape()));
    const int p = k / 2;
    const int Hp = H + 2 * p, Wp = W + 2 * p;

    Tensor<T> y = bias.defined() ? detail::make_output<T>({Cout, H, W}, {&x, &kernels, &bias})
                                 : detail::make_output<T>({Cout, H, W}, {&x, &kernels});
    std::vector<T> xpad = detail::pad2d(x.data(), Cin, H, W, p);
    T* yp = y.data();
    const T* kp = kernels.data();
    if (bias.defined()) {
        for (int co = 0; co < Cout; ++co)
            std::fill(yp + static_cast<size_t>(co) * H * W, yp + static_cast<size_t>(co + 1) * H * W,
                      bias.data()[co]);
    }
    for (int co = 0; co < Cout; ++co) {
        T* ybase = yp + static_cast<size_t>(co) * H * W;
        for (int ci = 0; ci < Cin; ++ci) {
            const T* pbase = xpad.data() + static_cast<size_t>(ci) * Hp * Wp;
            const T* kbase = kp + (static_cast<size_t>(co) * Cin + ci) * k * k;
            for (int dy = 0; dy < k; ++dy)
                for (int dx = 0; dx < k; ++dx) {
                    const T w = kbase[dy * k + dx];
                    for (int yy = 0; yy < H; ++yy) {
                        const T* src = pbase + static_cast<size_t>(yy + dy) * Wp + dx;
                        T* dst = ybase + static_cast<size_t>(yy) * W;
                        for (int xx = 0; xx < W; ++xx) dst[xx] += w * src[xx];
                    }
                }
        }
    }

    if (detail::recording<T>({&x, &kernels})) {
        auto xs = x.storage(), ks = kernels.storage(), ys = y.storage();
        auto bs = bias.defined() ? bias.storage() : nullptr;
        Tape<T>::active()->record([xs, ks, bs, ys, Cin, Cout, H, W, k, p, Hp, Wp, xpad = std::move(xpad)]() {
            if (ys->grad.empty()) return;
            const T* g = ys->grad.data();
            const T* kp = ks->value.data();
            if (ks->requires_grad) {
                if (ks->grad.empty()) ks->grad.assign(ks->value.size(), T(0));
                T* gk = ks->grad.data();
                for (int co = 0; co < Cout; ++co) {
                    const T* gbase = g + static_cast<size_t>(co) * H * W;
                    for (int ci = 0; ci < Cin; ++ci) {
                        const T* pbase = xpad.data() + static_cast<size_t>(ci) * Hp * Wp;
                        T* gkbase = gk + (static_cast<size_t>(co) * Cin + ci) * k * k;
                        for (int dy = 0; dy < k; ++dy)
                            for (int dx = 0; dx < k; ++dx) {
                                T acc = 0;
                                for (int yy = 0; yy < H; ++yy) {
                                    const T* src = pbase + static_cast<size_t>(yy + dy) * Wp + dx;
                                    const T* gr = gbase + static_cast<size_t>(yy) * W;
                                    for (int xx = 0; xx < W; ++xx) acc += gr[xx] * src[xx];
                                }
                                gkbase[dy * k + dx] += acc;
                            }
                    }
                }
            }
            if (bs && bs->requires_grad) {
                if (bs->grad.empty()) bs->grad.assign(bs->value.size(), T(0));
                T* gb = bs->grad.data();
                for (int co = 0; co < Cout; ++co) {
                    const T* gbase = g + static_cast<size_t>(co) * H * W;
                    T acc = 0;
                    for (int i = 0; i < H * W; ++i) acc += gbase[i];
                    gb[co] += acc;
                }
            }
            if (xs->requires_grad) {
                if (xs->grad.empty()) xs->grad.assign(xs->value.size(), T(0));
                T* gx = xs->grad.data();
                std::vector<T> gpad = detail::pad2d(g, Cout, H, W, p);
                for (int ci = 0; ci < Cin; ++ci) {
                    T* gxbase = gx + static_cast<size_t>(ci) * H * W;
                    for (int co = 0; co < Cout; ++co) {
                        const T* pbase = gpad.data() + static_cast<size_t>(co) * Hp * Wp;
                        const T* kbase = kp + (static_cast<size_t>(co) * Cin + ci) * k * k;
                        for (int dy = 0; dy < k; ++dy)
                            for (int dx = 0; dx < k; ++dx) {
                                // dL/dx gets the kernel flipped in both axes.
                                const T w = kbase[dy * k + dx];
                                const int oy = 2 * p - dy, ox = 2 * p - dx;
                                for (int yy = 0; yy < H; ++yy) {
                                    const T* src = pbase + static_cast<size_t>(yy + oy) * Wp + ox;
                                    T* dst = gxbase + static_cast<size_t>(yy) * W;
                                    for (int xx = 0; xx < W; ++xx) dst[xx] += w * src[xx];
                                }
                            }
                    }
                }
            }
        });
    }
    return y;
}

// ---------------------------------------------------------------------------
// Elementwise and structural ops.
// ---------------------------------------------------------------------------
template <class T>
Tensor<T> relu(const Tensor<T>& x) {
    Tensor<T> y = detail::make_output<T>(x.shape(), {&x});
    const T* xp = x.data();
    T* yp = y.data();
    const size_t n = x.size();
    for (size_t i = 0; i < n; ++i) yp[i] = xp[i] > T(0) ? xp[i] : T(0);
    if (detail::recording<T>({&x})) {
        auto xs = x.storage(), ys = y.storage();
        Tape<T>::active()->record([xs, ys, n]() {
            if (ys->grad.empty()) return;
            if (xs->grad.empty()) xs->grad.assign(n, T(0));
            for (size_t i = 0; i < n; ++i)
                if (xs->value[i] > T(0)) xs->grad[i] += ys->grad[i];
        });
    }
    return y;
}

template <class T>
Tensor<T> sigmoid(const Tensor<T>& x) {
    Tensor<T> y = detail::make_output<T>(x.shape(), {&x});
    const size_t n = x.size();
    for (size_t i = 0; i < n; ++i) y.data()[i] = T(1) / (T(1) + std::exp(-x.data()[i]));
    if (detail::recording<T>({&x})) {
        auto xs = x.storage(), ys = y.storage();
        Tape<T>::active()->record([xs, ys, n]() {
            if (ys->grad.empty()) return;
            if (xs->grad.empty()) xs->grad.assign(n, T(0));
            for (size_t i = 0; i < n; ++i) {
                const T v = ys->value[i];
                xs->grad[i] += ys->grad[i] * v * (T(1) - v);
            }
        });
    }
    return y;
}

template <class T>
Tensor<T> elementwise_add(const Tensor<T>& a, const Tensor<T>& b) {
    if (a.shape() != b.shape())
        throw ShapeMismatch("add: " + shape_str(a.shape()) + " vs " + shape_str(b.shape()));
    Tensor<T> y = detail::make_output<T>(a.shape(), {&a, &b});
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) y.data()[i] = a.data()[i] + b.data()[i];
    if (detail::recording<T>({&a, &b})) {
        auto as = a.storage(), bs = b.storage(), ys = y.storage();
        Tape<T>::active()->record([as, bs, ys, n]() {
            if (ys->grad.empty()) return;
            for (auto* s : {as.get(), bs.get()}) {
                if (!s->requires_grad) continue;
                if (s->grad.empty()) s->grad.assign(n, T(0));
                for (size_t i = 0; i < n; ++i) s->grad[i] += ys->grad[i];
            }
        });
    }
    return y;
}

template <class T>
Tensor<T> elementwise_mul(const Tensor<T>& a, const Tensor<T>& b) {
    if (a.shape() != b.shape())
        throw ShapeMismatch("mul: " + shape_str(a.shape()) + " vs " + shape_str(b.shape()));
    Tensor<T> y = detail::make_output<T>(a.shape(), {&a, &b});
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) y.data()[i] = a.data()[i] * b.data()[i];
    if (detail::recording<T>({&a, &b})) {
        auto as = a.storage(), bs = b.storage(), ys = y.storage();
        Tape<T>::active()->record([as, bs, ys, n]() {
            if (ys->grad.empty()) return;
            if (as->requires_grad) {
                if (as->grad.empty()) as->grad.assign(n, T(0));
                for (size_t i = 0; i < n; ++i) as->grad[i] += ys->grad[i] * bs->value[i];
            }
            if (bs->requires_grad) {
                if (bs->grad.empty()) bs->grad.assign(n, T(0));
                for (size_t i = 0; i < n; ++i) bs->grad[i] += ys->grad[i] * as->value[i];
            }
        });
    }
    return y;
}

template <class T>
Tensor<T> reshape(const Tensor<T>& x, Shape shape) {
    if (shape_numel(shape) != x.size())
        throw ShapeMismatch("reshape: " + shape_str(x.shape()) + " -> " + shape_str(shape));
    Tensor<T> y = detail::make_output<T>(std::move(shape), {&x});
    std::copy(x.data(), x.data() + x.size(), y.data());
    if (detail::recording<T>({&x})) {
        auto xs = x.storage(), ys = y.storage();
        const size_t n = x.size();
        Tape<T>::active()->record([xs, ys, n]() {
            if (ys->grad.empty()) return;
            if (xs->grad.empty()) xs->grad.assign(n, T(0));
            for (size_t i = 0; i < n; ++i) xs->grad[i] += ys->grad[i];
        });
    }
    return y;
}

template <class T>
Tensor<T> permute(const Tensor<T>& x, const std::vector<int>& perm) {
    const int nd = x.ndim();
    if (static_cast<int>(perm.size()) != nd) throw ShapeMismatch("permute: rank mismatch");
    std::vector<bool> seen(nd, false);
    Shape ys(nd);
    for (int i = 0; i < nd; ++i) {
        if (perm[i] < 0 || perm[i] >= nd || seen[perm[i]]) throw ShapeMismatch("permute: bad axes");
        seen[perm[i]] = true;
        ys[i] = x.dim(perm[i]);
    }
    // strides of the source, then gather
    std::vector<size_t> xstride(nd, 1);
    for (int i = nd - 2; i >= 0; --i) xstride[i] = xstride[i + 1] * static_cast<size_t>(x.dim(i + 1));
    std::vector<size_t> gather(x.size());
    {
        std::vector<int> idx(nd, 0);
        for (size_t o = 0; o < x.size(); ++o) {
            size_t src = 0;
            for (int i = 0; i < nd; ++i) src += static_cast<size_t>(idx[i]) * xstride[perm[i]];
            gather[o] = src;
            for (int i = nd - 1; i >= 0; --i) {
                if (++idx[i] < ys[i]) break;
                idx[i] = 0;
            }
        }
    }
    Tensor<T> y = detail::make_output<T>(ys, {&x});
    for (size_t o = 0; o < x.size(); ++o) y.data()[o] = x.data()[gather[o]];
    if (detail::recording<T>({&x})) {
        auto xs = x.storage(), ys2 = y.storage();
        Tape<T>::active()->record([xs, ys2, gather = std::move(gather)]() {
            if (ys2->grad.empty()) return;
            if (xs->grad.empty()) xs->grad.assign(xs->value.size(), T(0));
            for (size_t o = 0; o < gather.size(); ++o) xs->grad[gather[o]] += ys2->grad[o];
        });
    }
    return y;
}

template <class T>
Tensor<T> softmax(const Tensor<T>& x) {
    if (x.ndim() != 1) throw ShapeMismatch("softmax: expects 1-D input");
    const int n = x.dim(0);
    Tensor<T> y = detail::make_output<T>(x.shape(), {&x});
    const T* xp = x.data();
    T* yp = y.data();
    T mx = xp[0];
    for (int i = 1; i < n; ++i) mx = std::max(mx, xp[i]);
    T sum = 0;
    for (int i = 0; i < n; ++i) {
        yp[i] = std::exp(xp[i] - mx);
        sum += yp[i];
    }
    for (int i = 0; i < n; ++i) yp[i] /= sum;
    if (detail::recording<T>({&x})) {
        auto xs = x.storage(), ys = y.storage();
        Tape<T>::active()->record([xs, ys, n]() {
            if (ys->grad.empty()) return;
            if (xs->grad.empty()) xs->grad.assign(n, T(0));
            T dot = 0;
            for (int i = 0; i < n; ++i) dot += ys->grad[i] * ys->value[i];
            for (int i = 0; i < n; ++i) xs->grad[i] += ys->value[i] * (ys->grad[i] - dot);
        });
    }
    return y;
}

template <class T>
Tensor<T> mse_loss(const Tensor<T>& pred, const Tensor<T>& target) {
    if (pred.shape() != target.shape())
        throw ShapeMismatch("mse_loss: " + shape_str(pred.shape()) + " vs " + shape_str(target.shape()));
    const size_t n = pred.size();
    T acc = 0;
    for (size_t i = 0; i < n; ++i) {
        const T d = pred.data()[i] - target.data()[i];
        acc += d * d;
    }
    Tensor<T> y = detail::make_output<T>({1}, {&pred, &target});
    y.data()[0] = acc / static_cast<T>(n);
    if (detail::recording<T>({&pred, &target})) {
        auto ps = pred.storage(), ts = target.storage(), ys = y.storage();
        Tape<T>::active()->record([ps, ts, ys, n]() {
            if (ys->grad.empty()) return;
            const T g = ys->grad[0] * T(2) / static_cast<T>(n);
            if (ps->requires_grad) {
                if (ps->grad.empty()) ps->grad.assign(n, T(0));
                for (size_t i = 0; i < n; ++i) ps->grad[i] += g * (ps->value[i] - ts->value[i]);
            }
            if (ts->requires_grad) {
                if (ts->grad.empty()) ts->grad.assign(n, T(0));
                for (size_t i = 0; i < n; ++i) ts->grad[i] -= g * (ps->value[i] - ts->value[i]);
            }
        });
    }
    return y;
}

// Weighted sum of same-shape tensors with constant (non-differentiable) weights.
template <class T>
Tensor<T> weighted_sum(const std::vector<Tensor<T>>& xs, const std::vector<T>& weights) {
    if (xs.empty() || xs.size() != weights.size())
        throw ShapeMismatch("weighted_sum: need matching non-empty inputs and weights");
    for (const auto& x : xs)
        if (x.shape() != xs[0].shape()) throw ShapeMismatch("weighted_sum: shape mismatch");
    std::vector<const Tensor<T>*> ptrs;
    Tensor<T> y = Tensor<T>::zeros(xs[0].shape());
    for (const auto& x : xs)
        if (x.requires_grad()) y.set_requires_grad(true);
    const size_t n = y.size();
    for (size_t b = 0; b < xs.size(); ++b) {
        const T w = weights[b];
        const T* xp = xs[b].data();
        T* yp = y.data();
        for (size_t i = 0; i < n; ++i) yp[i] += w * xp[i];
    }
    bool rec = Tape<T>::active() && y.requires_grad();
    if (rec) {
        std::vector<std::shared_ptr<TensorStorage<T>>> stores;
        for (const auto& x : xs) stores.push_back(x.storage());
        auto ys = y.storage();
        Tape<T>::active()->record([stores = std::move(stores), weights, ys, n]() {
            if (ys->grad.empty()) return;
            for (size_t b = 0; b < stores.size(); ++b) {
                auto& s = *stores[b];
                if (!s.requires_grad) continue;
                if (s.grad.empty()) s.grad.assign(n, T(0));
                const T w = weights[b];
                for (size_t i = 0; i < n; ++i) s.grad[i] += w * ys->grad[i];
            }
        });
    }
    return y;
}

// ---------------------------------------------------------------------------
// rfft_amplitude: channel-averaged DFT magnitudes for frequencies 1..T/2.
// x: [T, d] -> [T/2]. Forward only; nothing is recorded on the tape.
// Direct O(T^2) evaluation — block sequence lengths stay well under a few
// hundred, where this is faster than setting up an FFT.
// ---------------------------------------------------------------------------
template <class T>
Tensor<T> rfft_amplitude(const Tensor<T>& x) {
    if (x.ndim() != 2) throw ShapeMismatch("rfft_amplitude: expects [T,d]");
    const int Tn = x.dim(0), d = x.dim(1);
    if (Tn < 4) throw SignalTooShort("rfft_amplitude: need T >= 4, got " + std::to_string(Tn));
    const int nf = Tn / 2;
    Tensor<T> amp = Tensor<T>::zeros({nf});
    const T* xp = x.data();
    const double w0 = 2.0 * M_PI / static_cast<double>(Tn);
    for (int f = 1; f <= nf; ++f) {
        double sum_mag = 0.0;
        for (int c = 0; c < d; ++c) {
            double re = 0.0, im = 0.0;
            for (int t = 0; t < Tn; ++t) {
                const double a = w0 * f * t;
                const double v = static_cast<double>(xp[static_cast<size_t>(t) * d + c]);
                re += v * std::cos(a);
                im -= v * std::sin(a);
            }
            sum_mag += std::sqrt(re * re + im * im);
        }
        amp.data()[f - 1] = static_cast<T>(sum_mag / d);
    }
    return amp;
}

// ---------------------------------------------------------------------------
// Adam with bias correction. Parameters are updated in place from their
// accumulated gradients; call zero_grad afterwards.
// ---------------------------------------------------------------------------
template <class T>
struct AdamState {
    T lr = T(1e-4);
    T beta1 = T(0.9);
    T beta2 = T(0.999);
    T eps = T(1e-8);
    long t = 0;
    std::vector<std::vector<T>> m, v;

    void init(const std::vector<Tensor<T>>& params) {
        m.clear();
        v.clear();
        for (const auto& p : params) {
            m.emplace_back(p.size(), T(0));
            v.emplace_back(p.size(), T(0));
        }
        t = 0;
    }
};

template <class T>
void adam_step(std::vector<Tensor<T>>& params, AdamState<T>& st) {
    if (st.m.size() != params.size()) throw ShapeMismatch("adam_step: state not initialized for params");
    st.t += 1;
    const T bc1 = T(1) - std::pow(st.beta1, static_cast<T>(st.t));
    const T bc2 = T(1) - std::pow(st.beta2, static_cast<T>(st.t));
    for (size_t i = 0; i < params.size(); ++i) {
        auto& p = params[i];
        if (st.m[i].size() != p.size()) throw ShapeMismatch("adam_step: moment shape mismatch");
        const T* g = p.grad();
        T* pv = p.data();
        T* m = st.m[i].data();
        T* v = st.v[i].data();
        const size_t n = p.size();
        for (size_t j = 0; j < n; ++j) {
            m[j] = st.beta1 * m[j] + (T(1) - st.beta1) * g[j];
            v[j] = st.beta2 * v[j] + (T(1) - st.beta2) * g[j] * g[j];
            const T mhat = m[j] / bc1;
            const T vhat = v[j] / bc2;
            pv[j] -= st.lr * mhat / (std::sqrt(vhat) + st.eps);
        }
    }
}

} // namespace tabforecast::nn
