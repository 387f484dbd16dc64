#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "emph/nn/params.hpp"
#include "emph/nn/tensor.hpp"
#include "emph/rng.hpp"

namespace emph::nn {

class Tape;

// Handle to a node on a Tape.
struct Value {
  std::uint32_t idx = 0;
};

// Records the forward computation; nodes are appended in evaluation order,
// so the record itself is a topological order and the reverse sweep visits
// nodes in reverse topological order. One tape = one forward/backward pass.
class Tape {
 public:
  Value constant(Tensor t);
  Value param(Parameter& p);

  const Tensor& value(Value v) const { return nodes_[v.idx].value; }
  Tensor& grad(Value v) { return nodes_[v.idx].grad; }

  // Reverse sweep from a scalar output. Parameter gradients are accumulated
  // into Parameter::grad. Call at most once per tape.
  void backward(Value loss);

  std::size_t size() const { return nodes_.size(); }

  // recording hook used by the primitive implementations
  Value emit(Tensor value, std::function<void(Tape&, Value)> backward_fn);

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    std::function<void(Tape&, Value)> backward;  // null for leaves
    Parameter* param = nullptr;
  };
  std::vector<Node> nodes_;
  bool swept_ = false;
};

// ---- differentiable primitives -------------------------------------------
// Shape mismatches throw ShapeError naming the primitive and offending dims.

Value matmul(Tape&, Value a, Value b);  // [m×k]·[k×n] → [m×n]; [m×k]·[k] → [m]
Value add(Tape&, Value a, Value b);     // same shape
Value add_rowwise(Tape&, Value m, Value v);  // [T×d] + [d] broadcast over rows
Value mul(Tape&, Value a, Value b);     // elementwise
Value scale(Tape&, Value a, double c);
Value concat(Tape&, Value a, Value b, int axis);
Value slice(Tape&, Value v, int begin, int end);  // rank-1 subrange [begin,end)
Value row(Tape&, Value m, int r);                 // rank-2 → rank-1
Value stack_rows(Tape&, std::span<const Value> rows);
Value transpose(Tape&, Value m);
Value tanh(Tape&, Value);
Value relu(Tape&, Value);
Value sigmoid(Tape&, Value);
Value softmax(Tape&, Value, int axis = -1);  // normalizes along the last axis
Value dropout(Tape&, Value, double rate, bool train, Rng& rng);
Value embedding_lookup(Tape&, Parameter& table, std::span<const int> indices);
Value sum(Tape&, Value);  // → scalar

}  // namespace emph::nn
