#include "fishnets/adam.hpp"

#include <cmath>
#include <string>

#include "fishnets/errors.hpp"

namespace fishnets {

AdamState make_adam_state(std::size_t n_params, double learning_rate) {
  AdamState s;
  s.learning_rate = learning_rate;
  s.first_moment.assign(n_params, 0.0);
  s.second_moment.assign(n_params, 0.0);
  return s;
}

void adam_step(std::span<const TensorRef> params, std::span<const TensorRef> grads,
               AdamState& state) {
  if (params.size() != grads.size())
    raise(ErrorCategory::Shape, "adam_step: parameter/gradient view count mismatch");
  std::size_t total = 0;
  for (const TensorRef& t : params) total += t.size;
  if (state.first_moment.size() != total)
    raise(ErrorCategory::Shape, "adam_step: state sized for different parameter count");

  for (std::size_t k = 0; k < grads.size(); ++k) {
    if (params[k].size != grads[k].size)
      raise(ErrorCategory::Shape, "adam_step: tensor shape mismatch at index " +
                                      std::to_string(k));
    for (std::size_t i = 0; i < grads[k].size; ++i)
      if (!std::isfinite(grads[k].data[i]))
        raise(ErrorCategory::Divergence,
              "non-finite gradient in tensor " + std::to_string(k) + " entry " +
                  std::to_string(i));
  }

  state.step_count += 1;
  const double t = static_cast<double>(state.step_count);
  const double bc1 = 1.0 - std::pow(state.beta1, t);
  const double bc2 = 1.0 - std::pow(state.beta2, t);

  std::size_t off = 0;
  for (std::size_t k = 0; k < params.size(); ++k) {
    double* p = params[k].data;
    const double* g = grads[k].data;
    double* m = state.first_moment.data() + off;
    double* v = state.second_moment.data() + off;
    for (std::size_t i = 0; i < params[k].size; ++i) {
      m[i] = state.beta1 * m[i] + (1.0 - state.beta1) * g[i];
      v[i] = state.beta2 * v[i] + (1.0 - state.beta2) * g[i] * g[i];
      const double mhat = m[i] / bc1;
      const double vhat = v[i] / bc2;
      p[i] -= state.learning_rate * mhat / (std::sqrt(vhat) + state.epsilon);
    }
    off += params[k].size;
  }
}

}  // namespace fishnets
