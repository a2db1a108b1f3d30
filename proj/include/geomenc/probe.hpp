#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "geomenc/errors.hpp"
#include "geomenc/rng.hpp"

namespace geomenc {

enum class ProbeTask { regression, binary };

struct TrainConfig {
  double train_frac = 0.6;
  double val_frac = 0.2;
  double test_frac = 0.2;
  int max_epochs = 300;
  int batch_size = 256;
  double learning_rate = 1e-3;
  int patience = 50;  // epochs without validation improvement before stopping
  std::uint64_t seed = 0;

  void validate() const {
    if (std::abs(train_frac + val_frac + test_frac - 1.0) > 1e-9)
      throw_error(ErrorCode::config, "split fractions must sum to 1");
    if (max_epochs < 1) throw_error(ErrorCode::config, "max_epochs must be >= 1");
    if (batch_size < 1) throw_error(ErrorCode::config, "batch_size must be >= 1");
    if (!(learning_rate > 0))
      throw_error(ErrorCode::config, "learning_rate must be > 0");
  }
};

// Probe network: input, two fully connected hidden layers of width 128 with
// rectified-linear activations, and a single output neuron. Binary tasks
// apply the sigmoid at evaluation time; training works on logits.
template <typename Scalar>
class Mlp {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  static constexpr int kHidden = 128;

  Mlp() = default;

  static Mlp randomized(int input_dim, Rng& rng) {
    Mlp m;
    m.w1_ = he_init(input_dim, kHidden, rng);
    m.b1_ = Vector::Zero(kHidden);
    m.w2_ = he_init(kHidden, kHidden, rng);
    m.b2_ = Vector::Zero(kHidden);
    m.w3_ = he_init(kHidden, 1, rng);
    m.b3_ = Vector::Zero(1);
    return m;
  }

  int input_dim() const { return static_cast<int>(w1_.rows()); }

  // Raw network output for a row-major batch (n x input_dim): logits for
  // binary tasks, direct predictions for regression.
  Vector forward(const Matrix& x) const {
    Matrix h1 = (x * w1_).rowwise() + b1_.transpose();
    h1 = h1.cwiseMax(Scalar(0));
    Matrix h2 = (h1 * w2_).rowwise() + b2_.transpose();
    h2 = h2.cwiseMax(Scalar(0));
    return (h2 * w3_).col(0).array() + b3_(0);
  }

  Vector predict(const Matrix& x, ProbeTask task) const {
    Vector out = forward(x);
    if (task == ProbeTask::binary)
      out = out.unaryExpr([](Scalar z) { return sigmoid(z); });
    return out;
  }

  // Mean loss over the batch: squared error or binary cross-entropy on
  // logits.
  double loss(const Matrix& x, const Vector& y, ProbeTask task) const {
    Vector out = forward(x);
    return batch_loss(out, y, task);
  }

  struct Gradients {
    Matrix w1, w2, w3;
    Vector b1, b2, b3;
  };

  // Backpropagation; returns the mean batch loss.
  double loss_and_gradients(const Matrix& x, const Vector& y, ProbeTask task,
                            Gradients& g) const {
    const auto n = static_cast<Scalar>(x.rows());
    Matrix z1 = (x * w1_).rowwise() + b1_.transpose();
    Matrix h1 = z1.cwiseMax(Scalar(0));
    Matrix z2 = (h1 * w2_).rowwise() + b2_.transpose();
    Matrix h2 = z2.cwiseMax(Scalar(0));
    Vector out = (h2 * w3_).col(0).array() + b3_(0);

    double loss_value = batch_loss(out, y, task);

    // d(mean loss)/d(out)
    Vector dout(out.size());
    if (task == ProbeTask::regression) {
      dout = Scalar(2) * (out - y) / n;
    } else {
      for (Eigen::Index i = 0; i < out.size(); ++i)
        dout(i) = (sigmoid(out(i)) - y(i)) / n;
    }

    g.w3 = h2.transpose() * dout;
    g.b3 = Vector::Constant(1, dout.sum());
    Matrix dh2 = dout * w3_.transpose();
    Matrix dz2 = (z2.array() > Scalar(0)).template cast<Scalar>() * dh2.array();
    g.w2 = h1.transpose() * dz2;
    g.b2 = dz2.colwise().sum();
    Matrix dh1 = dz2 * w2_.transpose();
    Matrix dz1 = (z1.array() > Scalar(0)).template cast<Scalar>() * dh1.array();
    g.w1 = x.transpose() * dz1;
    g.b1 = dz1.colwise().sum();
    return loss_value;
  }

  // Parameter access in a fixed order; used by the optimizer and the
  // finite-difference checks.
  std::vector<Matrix*> parameters() { return {&w1_, &w2_, &w3_}; }
  std::vector<Vector*> bias_parameters() { return {&b1_, &b2_, &b3_}; }
  std::vector<const Matrix*> parameters() const { return {&w1_, &w2_, &w3_}; }
  std::vector<const Vector*> bias_parameters() const { return {&b1_, &b2_, &b3_}; }

 private:
  static Scalar sigmoid(Scalar z) {
    if (z >= 0) return Scalar(1) / (Scalar(1) + std::exp(-z));
    Scalar e = std::exp(z);
    return e / (Scalar(1) + e);
  }

  static double batch_loss(const Vector& out, const Vector& y, ProbeTask task) {
    const auto n = static_cast<double>(out.size());
    if (task == ProbeTask::regression)
      return (out - y).squaredNorm() / n;
    double total = 0;  // stable logit BCE: max(z,0) - z y + log(1 + exp(-|z|))
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      double z = out(i), t = y(i);
      total += std::max(z, 0.0) - z * t + std::log1p(std::exp(-std::abs(z)));
    }
    return total / n;
  }

  static Matrix he_init(int rows, int cols, Rng& rng) {
    Matrix m(rows, cols);
    double stddev = std::sqrt(2.0 / rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        m(r, c) = static_cast<Scalar>(rng.normal(0, stddev));
    return m;
  }

  Matrix w1_, w2_, w3_;
  Vector b1_, b2_, b3_;
};

namespace detail {

// Adam moments for one tensor.
template <typename TensorT>
struct AdamState {
  TensorT m, v;
  void init(const TensorT& like) {
    m = TensorT::Zero(like.rows(), like.cols());
    v = TensorT::Zero(like.rows(), like.cols());
  }
  void step(TensorT& param, const TensorT& grad, double lr, double t) {
    constexpr double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
    using S = typename TensorT::Scalar;
    m = S(beta1) * m + S(1 - beta1) * grad;
    v = (S(beta2) * v.array() + S(1 - beta2) * grad.array().square()).matrix();
    double bc1 = 1 - std::pow(beta1, t);
    double bc2 = 1 - std::pow(beta2, t);
    param.array() -=
        S(lr / bc1) * m.array() / ((v.array() / S(bc2)).sqrt() + S(eps));
  }
};

}  // namespace detail

template <typename Scalar>
struct FitResult {
  Mlp<Scalar> best;   // parameters with the lowest validation loss
  Mlp<Scalar> last;   // parameters after the final epoch
  int best_epoch = 0;
  int epochs_run = 0;
  double best_val_loss = std::numeric_limits<double>::infinity();
  double last_val_loss = std::numeric_limits<double>::infinity();
};

// Mini-batch Adam with per-epoch shuffling, early stopping on the validation
// loss, and retention of the best-on-validation parameters.
template <typename Scalar>
FitResult<Scalar> fit_mlp(const typename Mlp<Scalar>::Matrix& x_train,
                          const typename Mlp<Scalar>::Vector& y_train,
                          const typename Mlp<Scalar>::Matrix& x_val,
                          const typename Mlp<Scalar>::Vector& y_val,
                          ProbeTask task, const TrainConfig& cfg, Rng& rng) {
  cfg.validate();
  using Matrix = typename Mlp<Scalar>::Matrix;
  using Vector = typename Mlp<Scalar>::Vector;

  const auto n = static_cast<std::size_t>(x_train.rows());
  if (n == 0) throw_error(ErrorCode::training, "no training samples");

  FitResult<Scalar> result;
  Mlp<Scalar> model = Mlp<Scalar>::randomized(static_cast<int>(x_train.cols()), rng);

  std::vector<detail::AdamState<Matrix>> wstate(3);
  std::vector<detail::AdamState<Vector>> bstate(3);
  {
    auto ws = model.parameters();
    auto bs = model.bias_parameters();
    for (int i = 0; i < 3; ++i) {
      wstate[i].init(*ws[i]);
      bstate[i].init(*bs[i]);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  typename Mlp<Scalar>::Gradients grads;
  double adam_t = 0;
  int since_best = 0;
  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t start = 0; start < n; start += cfg.batch_size) {
      std::size_t stop = std::min(n, start + cfg.batch_size);
      Matrix xb(stop - start, x_train.cols());
      Vector yb(stop - start);
      for (std::size_t i = start; i < stop; ++i) {
        xb.row(static_cast<Eigen::Index>(i - start)) =
            x_train.row(static_cast<Eigen::Index>(order[i]));
        yb(static_cast<Eigen::Index>(i - start)) =
            y_train(static_cast<Eigen::Index>(order[i]));
      }
      double batch_loss = model.loss_and_gradients(xb, yb, task, grads);
      if (!std::isfinite(batch_loss))
        throw_error(ErrorCode::training,
                    "training diverged (non-finite loss) at epoch " +
                        std::to_string(epoch));
      adam_t += 1;
      auto ws = model.parameters();
      auto bs = model.bias_parameters();
      const typename Mlp<Scalar>::Matrix* gw[3] = {&grads.w1, &grads.w2, &grads.w3};
      const typename Mlp<Scalar>::Vector* gb[3] = {&grads.b1, &grads.b2, &grads.b3};
      for (int i = 0; i < 3; ++i) {
        wstate[i].step(*ws[i], *gw[i], cfg.learning_rate, adam_t);
        bstate[i].step(*bs[i], *gb[i], cfg.learning_rate, adam_t);
      }
    }

    double val_loss = model.loss(x_val, y_val, task);
    if (!std::isfinite(val_loss))
      throw_error(ErrorCode::training,
                  "validation loss became non-finite at epoch " +
                      std::to_string(epoch));
    result.epochs_run = epoch;
    result.last_val_loss = val_loss;
    if (val_loss < result.best_val_loss) {
      result.best_val_loss = val_loss;
      result.best_epoch = epoch;
      result.best = model;
      since_best = 0;
    } else if (++since_best >= cfg.patience) {
      break;
    }
  }
  result.last = model;
  return result;
}

}  // namespace geomenc
