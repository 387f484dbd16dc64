#include "emph/nn/tape.hpp"

#include <cmath>
#include <cstdint>

#include "emph/errors.hpp"
#include "emph/nn/kernels.hpp"

namespace emph::nn {

namespace {

[[noreturn]] void shape_fail(const char* op, const Tensor& a) {
  throw ShapeError(std::string(op) + ": unsupported shape " + a.shape_str());
}

[[noreturn]] void shape_fail(const char* op, const Tensor& a, const Tensor& b) {
  throw ShapeError(std::string(op) + ": " + a.shape_str() + " vs " + b.shape_str());
}

}  // namespace

Value Tape::emit(Tensor value, std::function<void(Tape&, Value)> backward_fn) {
  Node n;
  n.grad = Tensor(value.shape());
  n.value = std::move(value);
  n.backward = std::move(backward_fn);
  nodes_.push_back(std::move(n));
  return Value{static_cast<std::uint32_t>(nodes_.size() - 1)};
}

Value Tape::constant(Tensor t) { return emit(std::move(t), nullptr); }

Value Tape::param(Parameter& p) {
  Value v = emit(p.tensor, nullptr);
  nodes_[v.idx].param = &p;
  return v;
}

void Tape::backward(Value loss) {
  if (swept_) throw std::logic_error("Tape::backward called twice");
  swept_ = true;
  if (value(loss).numel() != 1)
    throw ShapeError("backward: loss must be scalar, got " + value(loss).shape_str());
  grad(loss)[0] = 1.0;
  for (std::uint32_t i = loss.idx + 1; i-- > 0;) {
    Node& n = nodes_[i];
    if (n.backward) n.backward(*this, Value{i});
    if (n.param) {
      auto& g = n.param->grad.vec();
      const auto& ng = n.grad.vec();
      for (std::size_t j = 0; j < g.size(); ++j) g[j] += ng[j];
    }
  }
}

// ---------------------------------------------------------------------------

Value matmul(Tape& t, Value a, Value b) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  if (av.rank() != 2) shape_fail("matmul", av, bv);
  const int m = av.rows(), k = av.cols();

  if (bv.rank() == 2) {
    if (bv.rows() != k) shape_fail("matmul", av, bv);
    const int n = bv.cols();
    Tensor out({m, n});
    gemm(false, false, m, n, k, av.data(), bv.data(), out.data(), false);
    return t.emit(std::move(out), [a, b, m, n, k](Tape& tp, Value self) {
      const double* dc = tp.grad(self).data();
      // dA += dC * B^T ; dB += A^T * dC
      gemm(false, true, m, k, n, dc, tp.value(b).data(), tp.grad(a).data(), true);
      gemm(true, false, k, n, m, tp.value(a).data(), dc, tp.grad(b).data(), true);
    });
  }
  if (bv.rank() == 1) {
    if (bv.dim(0) != k) shape_fail("matmul", av, bv);
    Tensor out({m});
    gemm(false, false, m, 1, k, av.data(), bv.data(), out.data(), false);
    return t.emit(std::move(out), [a, b, m, k](Tape& tp, Value self) {
      const double* dy = tp.grad(self).data();
      gemm(false, false, m, k, 1, dy, tp.value(b).data(), tp.grad(a).data(), true);
      gemm(true, false, k, 1, m, tp.value(a).data(), dy, tp.grad(b).data(), true);
    });
  }
  shape_fail("matmul", av, bv);
}

Value add(Tape& t, Value a, Value b) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  if (!av.same_shape(bv)) shape_fail("add", av, bv);
  Tensor out(av.shape());
  for (std::size_t i = 0; i < out.numel(); ++i) out[i] = av[i] + bv[i];
  return t.emit(std::move(out), [a, b](Tape& tp, Value self) {
    const auto& dc = tp.grad(self).vec();
    auto& da = tp.grad(a).vec();
    auto& db = tp.grad(b).vec();
    for (std::size_t i = 0; i < dc.size(); ++i) {
      da[i] += dc[i];
      db[i] += dc[i];
    }
  });
}

Value add_rowwise(Tape& t, Value m, Value v) {
  const Tensor& mv = t.value(m);
  const Tensor& vv = t.value(v);
  if (mv.rank() != 2 || vv.rank() != 1 || mv.cols() != vv.dim(0))
    shape_fail("add_rowwise", mv, vv);
  Tensor out(mv.shape());
  const int rows = mv.rows(), cols = mv.cols();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out.at(r, c) = mv.at(r, c) + vv[static_cast<std::size_t>(c)];
  return t.emit(std::move(out), [m, v, rows, cols](Tape& tp, Value self) {
    const Tensor& dc = tp.grad(self);
    Tensor& dm = tp.grad(m);
    Tensor& dv = tp.grad(v);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        dm.at(r, c) += dc.at(r, c);
        dv[static_cast<std::size_t>(c)] += dc.at(r, c);
      }
  });
}

Value mul(Tape& t, Value a, Value b) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  if (!av.same_shape(bv)) shape_fail("mul", av, bv);
  Tensor out(av.shape());
  for (std::size_t i = 0; i < out.numel(); ++i) out[i] = av[i] * bv[i];
  return t.emit(std::move(out), [a, b](Tape& tp, Value self) {
    const auto& dc = tp.grad(self).vec();
    const auto& avv = tp.value(a).vec();
    const auto& bvv = tp.value(b).vec();
    auto& da = tp.grad(a).vec();
    auto& db = tp.grad(b).vec();
    for (std::size_t i = 0; i < dc.size(); ++i) {
      da[i] += dc[i] * bvv[i];
      db[i] += dc[i] * avv[i];
    }
  });
}

Value scale(Tape& t, Value a, double c) {
  const Tensor& av = t.value(a);
  Tensor out(av.shape());
  for (std::size_t i = 0; i < out.numel(); ++i) out[i] = av[i] * c;
  return t.emit(std::move(out), [a, c](Tape& tp, Value self) {
    const auto& dc = tp.grad(self).vec();
    auto& da = tp.grad(a).vec();
    for (std::size_t i = 0; i < dc.size(); ++i) da[i] += dc[i] * c;
  });
}

Value concat(Tape& t, Value a, Value b, int axis) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  if (av.rank() == 1 && bv.rank() == 1 && axis == 0) {
    const int na = av.dim(0), nb = bv.dim(0);
    Tensor out({na + nb});
    for (int i = 0; i < na; ++i) out[static_cast<std::size_t>(i)] = av[static_cast<std::size_t>(i)];
    for (int i = 0; i < nb; ++i) out[static_cast<std::size_t>(na + i)] = bv[static_cast<std::size_t>(i)];
    return t.emit(std::move(out), [a, b, na, nb](Tape& tp, Value self) {
      const auto& dc = tp.grad(self).vec();
      auto& da = tp.grad(a).vec();
      auto& db = tp.grad(b).vec();
      for (int i = 0; i < na; ++i) da[static_cast<std::size_t>(i)] += dc[static_cast<std::size_t>(i)];
      for (int i = 0; i < nb; ++i) db[static_cast<std::size_t>(i)] += dc[static_cast<std::size_t>(na + i)];
    });
  }
  if (av.rank() == 2 && bv.rank() == 2 && axis == 0) {
    if (av.cols() != bv.cols()) shape_fail("concat", av, bv);
    const int ra = av.rows(), rb = bv.rows(), cols = av.cols();
    Tensor out({ra + rb, cols});
    std::copy(av.vec().begin(), av.vec().end(), out.vec().begin());
    std::copy(bv.vec().begin(), bv.vec().end(), out.vec().begin() + av.numel());
    return t.emit(std::move(out), [a, b, ra, rb, cols](Tape& tp, Value self) {
      const auto& dc = tp.grad(self).vec();
      auto& da = tp.grad(a).vec();
      auto& db = tp.grad(b).vec();
      const std::size_t na = static_cast<std::size_t>(ra) * static_cast<std::size_t>(cols);
      for (std::size_t i = 0; i < na; ++i) da[i] += dc[i];
      const std::size_t nb = static_cast<std::size_t>(rb) * static_cast<std::size_t>(cols);
      for (std::size_t i = 0; i < nb; ++i) db[i] += dc[na + i];
    });
  }
  if (av.rank() == 2 && bv.rank() == 2 && axis == 1) {
    if (av.rows() != bv.rows()) shape_fail("concat", av, bv);
    const int rows = av.rows(), ca = av.cols(), cb = bv.cols();
    Tensor out({rows, ca + cb});
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < ca; ++c) out.at(r, c) = av.at(r, c);
      for (int c = 0; c < cb; ++c) out.at(r, ca + c) = bv.at(r, c);
    }
    return t.emit(std::move(out), [a, b, rows, ca, cb](Tape& tp, Value self) {
      const Tensor& dc = tp.grad(self);
      Tensor& da = tp.grad(a);
      Tensor& db = tp.grad(b);
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < ca; ++c) da.at(r, c) += dc.at(r, c);
        for (int c = 0; c < cb; ++c) db.at(r, c) += dc.at(r, ca + c);
      }
    });
  }
  throw ShapeError("concat: axis " + std::to_string(axis) + " unsupported for " +
                   av.shape_str() + " vs " + bv.shape_str());
}

Value slice(Tape& t, Value v, int begin, int end) {
  const Tensor& vv = t.value(v);
  if (vv.rank() != 1 || begin < 0 || end > vv.dim(0) || begin >= end)
    throw ShapeError("slice: [" + std::to_string(begin) + "," + std::to_string(end) +
                     ") of " + vv.shape_str());
  Tensor out({end - begin});
  for (int i = begin; i < end; ++i) out[static_cast<std::size_t>(i - begin)] = vv[static_cast<std::size_t>(i)];
  return t.emit(std::move(out), [v, begin, end](Tape& tp, Value self) {
    const auto& dc = tp.grad(self).vec();
    auto& dv = tp.grad(v).vec();
    for (int i = begin; i < end; ++i) dv[static_cast<std::size_t>(i)] += dc[static_cast<std::size_t>(i - begin)];
  });
}

Value row(Tape& t, Value m, int r) {
  const Tensor& mv = t.value(m);
  if (mv.rank() != 2 || r < 0 || r >= mv.rows())
    throw ShapeError("row: index " + std::to_string(r) + " of " + mv.shape_str());
  const int cols = mv.cols();
  Tensor out({cols});
  for (int c = 0; c < cols; ++c) out[static_cast<std::size_t>(c)] = mv.at(r, c);
  return t.emit(std::move(out), [m, r, cols](Tape& tp, Value self) {
    const auto& dc = tp.grad(self).vec();
    Tensor& dm = tp.grad(m);
    for (int c = 0; c < cols; ++c) dm.at(r, c) += dc[static_cast<std::size_t>(c)];
  });
}

Value stack_rows(Tape& t, std::span<const Value> rows) {
  if (rows.empty()) throw ShapeError("stack_rows: empty row list");
  const int cols = t.value(rows[0]).dim(0);
  for (Value v : rows)
    if (t.value(v).rank() != 1 || t.value(v).dim(0) != cols)
      shape_fail("stack_rows", t.value(rows[0]), t.value(v));
  const int n = static_cast<int>(rows.size());
  Tensor out({n, cols});
  for (int r = 0; r < n; ++r) {
    const Tensor& rv = t.value(rows[static_cast<std::size_t>(r)]);
    for (int c = 0; c < cols; ++c) out.at(r, c) = rv[static_cast<std::size_t>(c)];
  }
  std::vector<Value> captured(rows.begin(), rows.end());
  return t.emit(std::move(out), [captured, cols](Tape& tp, Value self) {
    const Tensor& dc = tp.grad(self);
    for (int r = 0; r < static_cast<int>(captured.size()); ++r) {
      auto& dr = tp.grad(captured[static_cast<std::size_t>(r)]).vec();
      for (int c = 0; c < cols; ++c) dr[static_cast<std::size_t>(c)] += dc.at(r, c);
    }
  });
}

Value transpose(Tape& t, Value m) {
  const Tensor& mv = t.value(m);
  if (mv.rank() != 2) shape_fail("transpose", mv);
  const int rows = mv.rows(), cols = mv.cols();
  Tensor out({cols, rows});
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out.at(c, r) = mv.at(r, c);
  return t.emit(std::move(out), [m, rows, cols](Tape& tp, Value self) {
    const Tensor& dc = tp.grad(self);
    Tensor& dm = tp.grad(m);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) dm.at(r, c) += dc.at(c, r);
  });
}

Value tanh(Tape& t, Value a) {
  const Tensor& av = t.value(a);
  Tensor out(av.shape());
  for (std::size_t i = 0; i < out.numel(); ++i) out[i] = std::tanh(av[i]);
  return t.emit(std::move(out), [a](Tape& tp, Value self) {
    const auto& y = tp.value(self).vec();
    const auto& dc = tp.grad(self).vec();
    auto& da = tp.grad(a).vec();
    for (std::size_t i = 0; i < dc.size(); ++i) da[i] += dc[i] * (1.0 - y[i] * y[i]);
  });
}

Value relu(Tape& t, Value a) {
  const Tensor& av = t.value(a);
  Tensor out(av.shape());
  for (std::size_t i = 0; i < out.numel(); ++i) out[i] = av[i] > 0.0 ? av[i] : 0.0;
  return t.emit(std::move(out), [a](Tape& tp, Value self) {
    const auto& x = tp.value(a).vec();
    const auto& dc = tp.grad(self).vec();
    auto& da = tp.grad(a).vec();
    for (std::size_t i = 0; i < dc.size(); ++i)
      if (x[i] > 0.0) da[i] += dc[i];
  });
}

Value sigmoid(Tape& t, Value a) {
  const Tensor& av = t.value(a);
  Tensor out(av.shape());
  for (std::size_t i = 0; i < out.numel(); ++i) out[i] = 1.0 / (1.0 + std::exp(-av[i]));
  return t.emit(std::move(out), [a](Tape& tp, Value self) {
    const auto& y = tp.value(self).vec();
    const auto& dc = tp.grad(self).vec();
    auto& da = tp.grad(a).vec();
    for (std::size_t i = 0; i < dc.size(); ++i) da[i] += dc[i] * y[i] * (1.0 - y[i]);
  });
}

Value softmax(Tape& t, Value a, int axis) {
  const Tensor& av = t.value(a);
  const int last = av.rank() - 1;
  if (av.rank() < 1 || (axis != -1 && axis != last))
    throw ShapeError("softmax: only the last axis is supported, got axis " +
                     std::to_string(axis) + " for " + av.shape_str());
  const int cols = av.dim(last);
  const int rows = static_cast<int>(av.numel()) / cols;
  Tensor out(av.shape());
  for (int r = 0; r < rows; ++r) {
    const double* in = av.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(cols);
    double* o = out.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(cols);
    double mx = in[0];
    for (int c = 1; c < cols; ++c) mx = std::max(mx, in[c]);
    double z = 0.0;
    for (int c = 0; c < cols; ++c) {
      o[c] = std::exp(in[c] - mx);
      z += o[c];
    }
    for (int c = 0; c < cols; ++c) o[c] /= z;
  }
  return t.emit(std::move(out), [a, rows, cols](Tape& tp, Value self) {
    const Tensor& y = tp.value(self);
    const Tensor& dy = tp.grad(self);
    Tensor& da = tp.grad(a);
    for (int r = 0; r < rows; ++r) {
      const std::size_t off = static_cast<std::size_t>(r) * static_cast<std::size_t>(cols);
      double dot = 0.0;
      for (int c = 0; c < cols; ++c) dot += y[off + static_cast<std::size_t>(c)] * dy[off + static_cast<std::size_t>(c)];
      for (int c = 0; c < cols; ++c)
        da[off + static_cast<std::size_t>(c)] +=
            y[off + static_cast<std::size_t>(c)] * (dy[off + static_cast<std::size_t>(c)] - dot);
    }
  });
}

Value dropout(Tape& t, Value a, double rate, bool train, Rng& rng) {
  if (rate < 0.0 || rate >= 1.0)
    throw ShapeError("dropout: rate must be in [0,1), got " + std::to_string(rate));
  if (!train || rate == 0.0) return a;  // exact identity
  const Tensor& av = t.value(a);
  const double keep_scale = 1.0 / (1.0 - rate);
  std::vector<std::uint8_t> mask(av.numel());
  Tensor out(av.shape());
  for (std::size_t i = 0; i < out.numel(); ++i) {
    mask[i] = rng.uniform() >= rate ? 1 : 0;
    out[i] = mask[i] ? av[i] * keep_scale : 0.0;
  }
  return t.emit(std::move(out), [a, mask = std::move(mask), keep_scale](Tape& tp, Value self) {
    const auto& dc = tp.grad(self).vec();
    auto& da = tp.grad(a).vec();
    for (std::size_t i = 0; i < dc.size(); ++i)
      if (mask[i]) da[i] += dc[i] * keep_scale;
  });
}

Value embedding_lookup(Tape& t, Parameter& table, std::span<const int> indices) {
  const Tensor& tab = table.tensor;
  if (tab.rank() != 2) throw ShapeError("embedding_lookup: table must be rank 2, got " + tab.shape_str());
  const int vocab = tab.rows(), dim = tab.cols();
  const int n = static_cast<int>(indices.size());
  if (n == 0) throw ShapeError("embedding_lookup: empty index list");
  Tensor out({n, dim});
  for (int i = 0; i < n; ++i) {
    const int ix = indices[static_cast<std::size_t>(i)];
    if (ix < 0 || ix >= vocab)
      throw ShapeError("embedding_lookup: index " + std::to_string(ix) + " outside table " +
                       tab.shape_str());
    for (int c = 0; c < dim; ++c) out.at(i, c) = tab.at(ix, c);
  }
  std::vector<int> captured(indices.begin(), indices.end());
  return t.emit(std::move(out), [&table, captured = std::move(captured), dim](Tape& tp, Value self) {
    // scatter-add straight into the table's gradient; the table itself never
    // becomes a node, so large vocabularies are not copied per step
    const Tensor& dc = tp.grad(self);
    Tensor& dt = table.grad;
    for (int i = 0; i < static_cast<int>(captured.size()); ++i)
      for (int c = 0; c < dim; ++c) dt.at(captured[static_cast<std::size_t>(i)], c) += dc.at(i, c);
  });
}

Value sum(Tape& t, Value a) {
  const Tensor& av = t.value(a);
  double s = 0.0;
  for (std::size_t i = 0; i < av.numel(); ++i) s += av[i];
  return t.emit(Tensor::scalar(s), [a](Tape& tp, Value self) {
    const double d = tp.grad(self)[0];
    auto& da = tp.grad(a).vec();
    for (auto& g : da) g += d;
  });
}

}  // namespace emph::nn
