#pragma once

#include <span>

#include "emph/nn/tape.hpp"

namespace emph::nn {

// Log clamp applied to predicted probabilities inside both losses.
inline constexpr double kLossEps = 1e-7;

// -y*log(yh) - (1-y)*log(1-yh), with yh clamped to [eps, 1-eps].
double bce(double y, double y_hat);

// sum_i Y_i * log(Y_i / Yh_i); terms with Y_i = 0 contribute 0.
// Both distributions must sum to 1 within 1e-6 (ValidationError otherwise).
double kld(std::span<const double> y, std::span<const double> y_hat);

// Batch forms: mean over tokens. pred and targets share the same shape for
// BCE; for KLD pred is [T x 2] with rows summing to 1 and targets likewise.
Value bce_loss(Tape& t, Value pred, const Tensor& targets);
Value kld_loss(Tape& t, Value pred, const Tensor& targets);

}  // namespace emph::nn
