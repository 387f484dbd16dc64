#include "emph/nn/params.hpp"

#include <cmath>
#include <stdexcept>

namespace emph::nn {

Parameter& ParameterSet::add(std::string name, Tensor init) {
  if (index_.count(name)) throw std::logic_error("duplicate parameter name: " + name);
  auto p = std::make_unique<Parameter>();
  p->name = name;
  p->grad = Tensor(init.shape());
  p->tensor = std::move(init);
  index_.emplace(std::move(name), params_.size());
  params_.push_back(std::move(p));
  return *params_.back();
}

Parameter& ParameterSet::at(const std::string& name) {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("no parameter named '" + name + "'");
  return *params_[it->second];
}

const Parameter& ParameterSet::at(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("no parameter named '" + name + "'");
  return *params_[it->second];
}

std::size_t ParameterSet::total_size() const {
  std::size_t n = 0;
  for (const auto& p : params_) n += p->tensor.numel();
  return n;
}

void ParameterSet::zero_grads() {
  for (auto& p : params_)
    std::fill(p->grad.vec().begin(), p->grad.vec().end(), 0.0);
}

std::vector<std::vector<double>> ParameterSet::snapshot_values() const {
  std::vector<std::vector<double>> out;
  out.reserve(params_.size());
  for (const auto& p : params_) out.push_back(p->tensor.vec());
  return out;
}

void ParameterSet::restore_values(const std::vector<std::vector<double>>& values) {
  if (values.size() != params_.size())
    throw std::invalid_argument("snapshot does not match parameter set");
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (values[i].size() != params_[i]->tensor.numel())
      throw std::invalid_argument("snapshot shape mismatch for " + params_[i]->name);
    params_[i]->tensor.vec() = values[i];
  }
}

Tensor init_weight(const std::vector<int>& shape, Rng& rng) {
  Tensor t(shape);
  if (shape.size() == 1) return t;  // biases start at zero
  const double bound = std::sqrt(6.0 / (shape[0] + shape[1]));
  for (std::size_t i = 0; i < t.numel(); ++i) t[i] = rng.uniform(-bound, bound);
  return t;
}

}  // namespace emph::nn
