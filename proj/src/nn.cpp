#include "fishnets/nn.hpp"

#include <cmath>

#include "fishnets/errors.hpp"

namespace fishnets {

Activation activation_from_string(std::string_view tag) {
  if (tag == "identity") return Activation::Identity;
  if (tag == "elu") return Activation::Elu;
  if (tag == "swish") return Activation::Swish;
  raise(ErrorCategory::Config, "unknown activation tag '" + std::string(tag) + "'");
}

std::string to_string(Activation a) {
  switch (a) {
    case Activation::Identity: return "identity";
    case Activation::Elu: return "elu";
    case Activation::Swish: return "swish";
  }
  return "identity";
}

std::size_t DenseNet::parameter_count() const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < weights.size(); ++l) n += weights[l].a.size() + biases[l].size();
  return n;
}

DenseNet make_dense_net(std::vector<std::size_t> layer_sizes,
                        const std::vector<Activation>& hidden_activations, Rng& rng) {
  if (layer_sizes.size() < 2) raise(ErrorCategory::Config, "dense net needs >= 2 layer sizes");
  for (std::size_t s : layer_sizes)
    if (s == 0) raise(ErrorCategory::Config, "layer sizes must be positive");
  const std::size_t n_hidden = layer_sizes.size() - 2;
  if (hidden_activations.size() != n_hidden)
    raise(ErrorCategory::Config, "need one activation per hidden layer");

  DenseNet net;
  net.layer_sizes = std::move(layer_sizes);
  net.activations = hidden_activations;
  for (std::size_t l = 0; l + 1 < net.layer_sizes.size(); ++l) {
    const std::size_t fan_in = net.layer_sizes[l];
    const std::size_t fan_out = net.layer_sizes[l + 1];
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    Mat w(fan_out, fan_in);
    std::uniform_real_distribution<double> u(-bound, bound);
    for (double& v : w.a) v = u(rng);
    net.weights.push_back(std::move(w));
    net.biases.emplace_back(fan_out, 0.0);
  }
  return net;
}

DenseNet make_dense_net(std::vector<std::size_t> layer_sizes, Activation hidden_activation,
                        Rng& rng) {
  const std::size_t n_hidden = layer_sizes.size() >= 2 ? layer_sizes.size() - 2 : 0;
  return make_dense_net(std::move(layer_sizes),
                        std::vector<Activation>(n_hidden, hidden_activation), rng);
}

void validate_shapes(const DenseNet& net) {
  if (net.layer_sizes.size() < 2 || net.weights.size() != net.layer_sizes.size() - 1 ||
      net.biases.size() != net.weights.size())
    raise(ErrorCategory::Shape, "dense net: layer bookkeeping inconsistent");
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    if (net.weights[l].rows != net.layer_sizes[l + 1] ||
        net.weights[l].cols != net.layer_sizes[l] ||
        net.biases[l].size() != net.layer_sizes[l + 1])
      raise(ErrorCategory::Shape, "dense net: weight shapes do not chain with layer_sizes");
  }
  if (net.activations.size() != net.layer_sizes.size() - 2)
    raise(ErrorCategory::Shape, "dense net: one activation required per hidden layer");
}

namespace {

inline void layer_forward(const Mat& w, const Vec& b, std::span<const double> in, Vec& out) {
  out.resize(w.rows);
  for (std::size_t i = 0; i < w.rows; ++i) out[i] = b[i] + dot(w.row_span(i), in);
}

}  // namespace

Vec forward(const DenseNet& net, std::span<const double> x) {
  if (x.size() != net.input_dim())
    raise(ErrorCategory::Shape, "forward: input has length " + std::to_string(x.size()) +
                                    ", net expects " + std::to_string(net.input_dim()));
  Vec cur(x.begin(), x.end());
  Vec next;
  const std::size_t L = net.n_layers();
  for (std::size_t l = 0; l < L; ++l) {
    layer_forward(net.weights[l], net.biases[l], cur, next);
    if (l + 1 < L) {
      const Activation a = net.activations[l];
      for (double& v : next) v = activate(a, v);
    }
    std::swap(cur, next);
  }
  return cur;
}

void forward_cached(const DenseNet& net, std::span<const double> x, ForwardCache& cache) {
  if (x.size() != net.input_dim())
    raise(ErrorCategory::Shape, "forward: input has length " + std::to_string(x.size()) +
                                    ", net expects " + std::to_string(net.input_dim()));
  const std::size_t L = net.n_layers();
  cache.pre.resize(L);
  cache.act.resize(L + 1);
  cache.act[0].assign(x.begin(), x.end());
  for (std::size_t l = 0; l < L; ++l) {
    layer_forward(net.weights[l], net.biases[l], cache.act[l], cache.pre[l]);
    cache.act[l + 1] = cache.pre[l];
    if (l + 1 < L) {
      const Activation a = net.activations[l];
      for (double& v : cache.act[l + 1]) v = activate(a, v);
    }
  }
}

Mat forward_batch(const DenseNet& net, const Mat& x) {
  Mat out(x.rows, net.output_dim());
  for (std::size_t i = 0; i < x.rows; ++i) {
    Vec y = forward(net, x.row_span(i));
    std::copy(y.begin(), y.end(), out.row(i));
  }
  return out;
}

void NetGrads::zero() {
  for (Mat& m : w) m.fill(0.0);
  for (Vec& v : b) std::fill(v.begin(), v.end(), 0.0);
}

void NetGrads::add(const NetGrads& other) {
  for (std::size_t l = 0; l < w.size(); ++l) {
    for (std::size_t i = 0; i < w[l].a.size(); ++i) w[l].a[i] += other.w[l].a[i];
    for (std::size_t i = 0; i < b[l].size(); ++i) b[l][i] += other.b[l][i];
  }
}

void NetGrads::scale(double s) {
  for (Mat& m : w)
    for (double& v : m.a) v *= s;
  for (Vec& v : b)
    for (double& x : v) x *= s;
}

NetGrads make_grads(const DenseNet& net) {
  NetGrads g;
  for (std::size_t l = 0; l < net.n_layers(); ++l) {
    g.w.emplace_back(net.weights[l].rows, net.weights[l].cols);
    g.b.emplace_back(net.biases[l].size(), 0.0);
  }
  return g;
}

void backward_accumulate(const DenseNet& net, const ForwardCache& cache,
                         std::span<const double> grad_out, NetGrads& grads, Vec* dx) {
  const std::size_t L = net.n_layers();
  if (grad_out.size() != net.output_dim())
    raise(ErrorCategory::Shape, "backward: upstream gradient has wrong length");

  // delta = dLoss/d(pre-activation of current layer)
  Vec delta(grad_out.begin(), grad_out.end());
  Vec delta_prev;
  for (std::size_t l = L; l-- > 0;) {
    const Mat& w = net.weights[l];
    const Vec& in = cache.act[l];
    Mat& dw = grads.w[l];
    Vec& db = grads.b[l];
    for (std::size_t i = 0; i < w.rows; ++i) {
      const double d = delta[i];
      db[i] += d;
      double* dwr = dw.row(i);
      const double* inp = in.data();
      for (std::size_t j = 0; j < w.cols; ++j) dwr[j] += d * inp[j];
    }
    if (l > 0) {
      delta_prev.assign(w.cols, 0.0);
      matvec_transpose_add(w, delta, delta_prev);
      const Activation a = net.activations[l - 1];
      const Vec& pre = cache.pre[l - 1];
      for (std::size_t j = 0; j < delta_prev.size(); ++j)
        delta_prev[j] *= activate_grad(a, pre[j]);
      std::swap(delta, delta_prev);
    } else if (dx != nullptr) {
      dx->assign(w.cols, 0.0);
      matvec_transpose_add(w, delta, *dx);
    }
  }
}

std::vector<TensorRef> parameter_views(DenseNet& net) {
  std::vector<TensorRef> views;
  views.reserve(2 * net.n_layers());
  for (std::size_t l = 0; l < net.n_layers(); ++l) {
    views.push_back({net.weights[l].a.data(), net.weights[l].a.size()});
    views.push_back({net.biases[l].data(), net.biases[l].size()});
  }
  return views;
}

std::vector<TensorRef> grad_views(NetGrads& grads) {
  std::vector<TensorRef> views;
  views.reserve(2 * grads.w.size());
  for (std::size_t l = 0; l < grads.w.size(); ++l) {
    views.push_back({grads.w[l].a.data(), grads.w[l].a.size()});
    views.push_back({grads.b[l].data(), grads.b[l].size()});
  }
  return views;
}

}  // namespace fishnets
