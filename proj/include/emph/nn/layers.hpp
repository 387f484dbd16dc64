#pragma once

#include <utility>

#include "emph/nn/tape.hpp"

namespace emph::nn {

// Layer parameter structs own stable Parameter pointers; bind() puts the
// weights on a tape once per forward pass so recurrent layers do not re-copy
// them at every timestep.

// Standard LSTM cell with packed gates in the order input, forget,
// candidate, output.
struct LstmParams {
  Parameter* w = nullptr;  // [4H x D]
  Parameter* u = nullptr;  // [4H x H]
  Parameter* b = nullptr;  // [4H]
  int hidden = 0;

  struct Bound {
    Value w, u, b;
    int hidden = 0;
  };
  Bound bind(Tape& t) const { return {t.param(*w), t.param(*u), t.param(*b), hidden}; }
};

// x [D], h_prev/c_prev [H] -> (h, c)
std::pair<Value, Value> lstm_cell(Tape&, Value x, Value h_prev, Value c_prev,
                                  const LstmParams::Bound&);

struct BilstmParams {
  LstmParams fwd, bwd;

  struct Bound {
    LstmParams::Bound fwd, bwd;
  };
  Bound bind(Tape& t) const { return {fwd.bind(t), bwd.bind(t)}; }
};

// sequence [T x D] -> [T x 2H]: forward pass over t=0..T-1 concatenated with
// the backward pass over t=T-1..0, aligned per timestep.
Value bilstm(Tape&, Value sequence, const BilstmParams::Bound&);
inline Value bilstm(Tape& t, Value sequence, const BilstmParams& p) {
  return bilstm(t, sequence, p.bind(t));
}

// y = g (.) relu(Wt x + bt) + (1 - g) (.) x, gate g = sigmoid(Wg x + bg).
struct HighwayParams {
  Parameter* wt = nullptr;  // [d x d]
  Parameter* bt = nullptr;  // [d]
  Parameter* wg = nullptr;  // [d x d]
  Parameter* bg = nullptr;  // [d]

  struct Bound {
    Value wt, bt, wg, bg;
  };
  Bound bind(Tape& t) const {
    return {t.param(*wt), t.param(*bt), t.param(*wg), t.param(*bg)};
  }
};

Value highway(Tape&, Value x, const HighwayParams::Bound&);
inline Value highway(Tape& t, Value x, const HighwayParams& p) {
  return highway(t, x, p.bind(t));
}

// Scaled dot-product self-attention with learned square projections; the
// attention weights of each output row are a softmax over all timesteps.
struct AttentionParams {
  Parameter* wq = nullptr;  // [d x d]
  Parameter* wk = nullptr;
  Parameter* wv = nullptr;

  struct Bound {
    Value wq, wk, wv;
  };
  Bound bind(Tape& t) const { return {t.param(*wq), t.param(*wk), t.param(*wv)}; }
};

Value self_attention(Tape&, Value sequence, const AttentionParams::Bound&);
inline Value self_attention(Tape& t, Value sequence, const AttentionParams& p) {
  return self_attention(t, sequence, p.bind(t));
}

// Time-distributed affine: [T x in] . w [in x out] + b per row.
struct DenseParams {
  Parameter* w = nullptr;  // [in x out]
  Parameter* b = nullptr;  // [out]

  struct Bound {
    Value w, b;
  };
  Bound bind(Tape& t) const { return {t.param(*w), t.param(*b)}; }
};

Value dense(Tape&, Value x, const DenseParams::Bound&);
inline Value dense(Tape& t, Value x, const DenseParams& p) { return dense(t, x, p.bind(t)); }

}  // namespace emph::nn
