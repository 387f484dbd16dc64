#include "emph/nn/loss.hpp"

#include <cmath>

#include "emph/errors.hpp"

namespace emph::nn {

namespace {
inline double clamp_prob(double p) {
  if (p < kLossEps) return kLossEps;
  if (p > 1.0 - kLossEps) return 1.0 - kLossEps;
  return p;
}

void check_distribution(std::span<const double> d, const char* who) {
  double s = 0.0;
  for (double v : d) {
    if (v < 0.0) throw ValidationError(std::string(who) + ": negative probability");
    s += v;
  }
  if (std::abs(s - 1.0) > 1e-6)
    throw ValidationError(std::string(who) + ": distribution sums to " + std::to_string(s));
}
}  // namespace

double bce(double y, double y_hat) {
  const double p = clamp_prob(y_hat);
  return -y * std::log(p) - (1.0 - y) * std::log(1.0 - p);
}

double kld(std::span<const double> y, std::span<const double> y_hat) {
  if (y.size() != y_hat.size()) throw ValidationError("kld: distribution sizes differ");
  check_distribution(y, "kld: Y");
  check_distribution(y_hat, "kld: Y_hat");
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0.0) continue;
    s += y[i] * std::log(y[i] / clamp_prob(y_hat[i]));
  }
  return s;
}

Value bce_loss(Tape& t, Value pred, const Tensor& targets) {
  const Tensor& pv = t.value(pred);
  if (!pv.same_shape(targets))
    throw ShapeError("bce_loss: prediction " + pv.shape_str() + " vs targets " +
                     targets.shape_str());
  const std::size_t n = pv.numel();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += bce(targets[i], pv[i]);
  Tensor y = targets;  // captured for the backward pass
  return t.emit(Tensor::scalar(total / static_cast<double>(n)),
                [pred, y = std::move(y), n](Tape& tp, Value self) {
                  const double d = tp.grad(self)[0] / static_cast<double>(n);
                  const auto& p = tp.value(pred).vec();
                  auto& dp = tp.grad(pred).vec();
                  for (std::size_t i = 0; i < n; ++i) {
                    const double pc = clamp_prob(p[i]);
                    dp[i] += d * (-y[i] / pc + (1.0 - y[i]) / (1.0 - pc));
                  }
                });
}

Value kld_loss(Tape& t, Value pred, const Tensor& targets) {
  const Tensor& pv = t.value(pred);
  if (pv.rank() != 2 || !pv.same_shape(targets))
    throw ShapeError("kld_loss: prediction " + pv.shape_str() + " vs targets " +
                     targets.shape_str());
  const int rows = pv.rows(), cols = pv.cols();
  double total = 0.0;
  for (int r = 0; r < rows; ++r) {
    std::span<const double> yrow(targets.data() + static_cast<std::size_t>(r) * cols,
                                 static_cast<std::size_t>(cols));
    std::span<const double> prow(pv.data() + static_cast<std::size_t>(r) * cols,
                                 static_cast<std::size_t>(cols));
    total += kld(yrow, prow);
  }
  Tensor y = targets;
  return t.emit(Tensor::scalar(total / rows), [pred, y = std::move(y), rows, cols](Tape& tp, Value self) {
    const double d = tp.grad(self)[0] / rows;
    const Tensor& p = tp.value(pred);
    Tensor& dp = tp.grad(pred);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        const double yi = y.at(r, c);
        if (yi == 0.0) continue;
        dp.at(r, c) += d * (-yi / clamp_prob(p.at(r, c)));
      }
  });
}

}  // namespace emph::nn
