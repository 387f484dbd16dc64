#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace emph::nn {

// Dense row-major tensor of doubles. Rank 0 (scalar), 1 or 2 in practice.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);  // zero-filled
  Tensor(std::vector<int> shape, std::vector<double> data);
  static Tensor scalar(double v);

  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }
  int rows() const { return shape_[0]; }
  int cols() const { return shape_[1]; }
  std::size_t numel() const { return data_.size(); }
  const std::vector<int>& shape() const { return shape_; }

  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }

  // rank-2 access
  double at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(shape_[1]) +
                 static_cast<std::size_t>(c)];
  }
  double& at(int r, int c) {
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(shape_[1]) +
                 static_cast<std::size_t>(c)];
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& vec() { return data_; }
  const std::vector<double>& vec() const { return data_; }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
  std::string shape_str() const;  // e.g. "3x4", "7", "scalar"

 private:
  std::vector<int> shape_;
  std::vector<double> data_;
};

std::size_t shape_numel(const std::vector<int>& shape);

}  // namespace emph::nn
