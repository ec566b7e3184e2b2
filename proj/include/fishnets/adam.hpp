#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fishnets/nn.hpp"

namespace fishnets {

// Standard Adam with bias correction. Moments are stored flat over the
// canonical parameter-view order and are zero at step_count == 0.
struct AdamState {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  long step_count = 0;
  Vec first_moment;
  Vec second_moment;
};

AdamState make_adam_state(std::size_t n_params, double learning_rate);

// Applies one update in place. Throws a divergence error (with the offending
// tensor index in the message) if any gradient entry is non-finite.
void adam_step(std::span<const TensorRef> params, std::span<const TensorRef> grads,
               AdamState& state);

}  // namespace fishnets
