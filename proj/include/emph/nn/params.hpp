#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "emph/nn/tensor.hpp"
#include "emph/rng.hpp"

namespace emph::nn {

struct Parameter {
  Tensor tensor;
  Tensor grad;  // same shape, accumulated by Tape::backward
  std::string name;
};

// Ordered, name-addressable parameter collection. Addresses stay stable
// across insertions so layer structs can hold raw Parameter pointers.
class ParameterSet {
 public:
  Parameter& add(std::string name, Tensor init);
  Parameter& at(const std::string& name);
  const Parameter& at(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) > 0; }

  std::size_t count() const { return params_.size(); }
  std::size_t total_size() const;
  Parameter& operator[](std::size_t i) { return *params_[i]; }
  const Parameter& operator[](std::size_t i) const { return *params_[i]; }

  void zero_grads();

  std::vector<std::vector<double>> snapshot_values() const;
  void restore_values(const std::vector<std::vector<double>>& values);

 private:
  std::vector<std::unique_ptr<Parameter>> params_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Fan-based uniform init in [-sqrt(6/(d0+d1)), +sqrt(6/(d0+d1))] for rank-2
// shapes; rank-1 parameters (biases) are zero-initialized.
Tensor init_weight(const std::vector<int>& shape, Rng& rng);

}  // namespace emph::nn
