#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fishnets/linalg.hpp"
#include "fishnets/rng.hpp"

namespace fishnets {

enum class Activation { Identity, Elu, Swish };

Activation activation_from_string(std::string_view tag);
std::string to_string(Activation a);

inline double activate(Activation a, double z) {
  switch (a) {
    case Activation::Identity: return z;
    case Activation::Elu: return z >= 0.0 ? z : std::expm1(z);
    case Activation::Swish: return z * sigmoid(z);
  }
  return z;
}

inline double activate_grad(Activation a, double z) {
  switch (a) {
    case Activation::Identity: return 1.0;
    case Activation::Elu: return z >= 0.0 ? 1.0 : std::exp(z);
    case Activation::Swish: {
      const double s = sigmoid(z);
      return s * (1.0 + z * (1.0 - s));
    }
  }
  return 1.0;
}

// Fully-connected feedforward network. Hidden layers carry the per-layer
// activation tag; the output layer is always linear. Weight matrices are
// (fan_out × fan_in) row-major, so shapes chain with layer_sizes.
struct DenseNet {
  std::vector<std::size_t> layer_sizes;   // n_layers + 1 entries, all > 0
  std::vector<Activation> activations;    // one per hidden layer
  std::vector<Mat> weights;
  std::vector<Vec> biases;

  std::size_t n_layers() const { return weights.size(); }
  std::size_t input_dim() const { return layer_sizes.front(); }
  std::size_t output_dim() const { return layer_sizes.back(); }
  std::size_t parameter_count() const;
};

// Fan-in-scaled uniform initialization, U(-1/sqrt(fan_in), 1/sqrt(fan_in)),
// biases zero. Deterministic given the engine state.
DenseNet make_dense_net(std::vector<std::size_t> layer_sizes,
                        const std::vector<Activation>& hidden_activations, Rng& rng);
DenseNet make_dense_net(std::vector<std::size_t> layer_sizes, Activation hidden_activation,
                        Rng& rng);

void validate_shapes(const DenseNet& net);

// Per-datum forward cache: act[0] is the input, act[l] the post-activation
// output of layer l; pre[l] the pre-activation. Reused across calls to keep
// the training loop allocation-free.
struct ForwardCache {
  std::vector<Vec> pre;
  std::vector<Vec> act;
};

Vec forward(const DenseNet& net, std::span<const double> x);
void forward_cached(const DenseNet& net, std::span<const double> x, ForwardCache& cache);

// Row-by-row batch evaluation; rows of `x` are independent inputs.
Mat forward_batch(const DenseNet& net, const Mat& x);

struct NetGrads {
  std::vector<Mat> w;
  std::vector<Vec> b;

  void zero();
  void add(const NetGrads& other);
  void scale(double s);
};

NetGrads make_grads(const DenseNet& net);

// Accumulates dLoss/dW and dLoss/db into `grads` given dLoss/doutput.
// If `dx` is non-null it receives dLoss/dinput (overwritten, not accumulated).
void backward_accumulate(const DenseNet& net, const ForwardCache& cache,
                         std::span<const double> grad_out, NetGrads& grads, Vec* dx = nullptr);

// Flat views over parameters, in a fixed canonical order (layer by layer,
// weights then bias). The optimizer walks these.
struct TensorRef {
  double* data = nullptr;
  std::size_t size = 0;
};

std::vector<TensorRef> parameter_views(DenseNet& net);
std::vector<TensorRef> grad_views(NetGrads& grads);

}  // namespace fishnets
