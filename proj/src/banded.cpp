#include "ew/banded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "ew/errors.hpp"

namespace ew {

BandedMatrix::BandedMatrix(std::size_t n, std::size_t lower, std::size_t upper)
    : n_(n), kl_(lower), ku_(upper), data_(n * (lower + upper + 1), 0.0) {}

double& BandedMatrix::at(std::size_t r, std::size_t c) {
  if (!in_band(r, c)) {
    throw std::out_of_range("BandedMatrix::at: (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside band");
  }
  return data_[index(r, c)];
}

double BandedMatrix::get(std::size_t r, std::size_t c) const {
  return in_band(r, c) ? data_[index(r, c)] : 0.0;
}

std::vector<double> BandedMatrix::multiply(std::span<const double> x) const {
  if (x.size() != n_) {
    throw std::invalid_argument("BandedMatrix::multiply: dimension mismatch");
  }
  std::vector<double> y(n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r) {
    const std::size_t c0 = r > kl_ ? r - kl_ : 0;
    const std::size_t c1 = std::min(n_ - 1, r + ku_);
    double sum = 0.0;
    for (std::size_t c = c0; c <= c1; ++c) {
      sum += data_[index(r, c)] * x[c];
    }
    y[r] = sum;
  }
  return y;
}

double BandedMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t r = 0; r < n_; ++r) {
    double row = 0.0;
    for (std::size_t k = 0; k < width(); ++k) {
      row += std::abs(data_[r * width() + k]);
    }
    best = std::max(best, row);
  }
  return best;
}

double BandedMatrix::max_abs() const {
  double best = 0.0;
  for (double v : data_) {
    best = std::max(best, std::abs(v));
  }
  return best;
}

std::vector<double> BandedMatrix::to_dense() const {
  std::vector<double> dense(n_ * n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      dense[r * n_ + c] = get(r, c);
    }
  }
  return dense;
}

BandedFactorization factorize(const BandedMatrix& m) {
  const std::size_t n = m.size();
  const std::size_t kl = m.lower();
  const std::size_t ku = m.upper();
  const std::size_t uw = kl + ku + 1;
  // Working rows span columns r - kl .. r + kl + ku.
  const std::size_t ww = 2 * kl + ku + 1;
  std::vector<double> work(n * ww, 0.0);
  auto w = [&](std::size_t r, std::size_t c) -> double& { return work[r * ww + (c + kl - r)]; };

  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t c0 = r > kl ? r - kl : 0;
    const std::size_t c1 = std::min(n - 1, r + ku);
    for (std::size_t c = c0; c <= c1; ++c) {
      w(r, c) = m.get(r, c);
    }
  }

  const double tol = 1e-14 * m.max_abs();

  BandedFactorization f;
  f.n_ = n;
  f.kl_ = kl;
  f.uw_ = uw;
  f.multipliers_.assign(n * kl, 0.0);
  f.pivots_.resize(n);

  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t last_row = std::min(n - 1, k + kl);
    const std::size_t last_col = std::min(n - 1, k + kl + ku);

    std::size_t p = k;
    double best = std::abs(w(k, k));
    for (std::size_t r = k + 1; r <= last_row; ++r) {
      if (std::abs(w(r, k)) > best) {
        best = std::abs(w(r, k));
        p = r;
      }
    }
    if (!(best > tol)) {
      throw SingularMatrixError(k, best);
    }
    f.pivots_[k] = p;
    if (p != k) {
      for (std::size_t c = k; c <= last_col; ++c) {
        std::swap(w(k, c), w(p, c));
      }
    }

    const double pivot = w(k, k);
    for (std::size_t r = k + 1; r <= last_row; ++r) {
      const double factor = w(r, k) / pivot;
      f.multipliers_[k * kl + (r - k - 1)] = factor;
      w(r, k) = 0.0;
      if (factor != 0.0) {
        for (std::size_t c = k + 1; c <= last_col; ++c) {
          w(r, c) -= factor * w(k, c);
        }
      }
    }
  }

  f.upper_.assign(n * uw, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t c1 = std::min(n - 1, r + uw - 1);
    for (std::size_t c = r; c <= c1; ++c) {
      f.upper_[r * uw + (c - r)] = w(r, c);
    }
  }
  return f;
}

std::vector<double> solve(const BandedFactorization& f, std::span<const double> rhs) {
  const std::size_t n = f.n_;
  if (rhs.size() != n) {
    throw std::invalid_argument("solve: rhs length " + std::to_string(rhs.size()) + " != " + std::to_string(n));
  }
  std::vector<double> x(rhs.begin(), rhs.end());

  // Forward: apply row interchanges and unit-lower multipliers in elimination order.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = f.pivots_[k];
    if (p != k) {
      std::swap(x[k], x[p]);
    }
    const std::size_t last_row = std::min(n - 1, k + f.kl_);
    for (std::size_t r = k + 1; r <= last_row; ++r) {
      x[r] -= f.multipliers_[k * f.kl_ + (r - k - 1)] * x[k];
    }
  }

  for (std::size_t r = n; r-- > 0;) {
    const double* row = &f.upper_[r * f.uw_];
    const std::size_t c1 = std::min(n - 1, r + f.uw_ - 1);
    double sum = x[r];
    for (std::size_t c = r + 1; c <= c1; ++c) {
      sum -= row[c - r] * x[c];
    }
    x[r] = sum / row[0];
  }
  return x;
}

}  // namespace ew
