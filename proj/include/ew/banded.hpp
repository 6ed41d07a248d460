#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ew {

/// Square matrix stored by diagonals: only entries with -lower <= c - r <= upper
/// exist. Reading outside the band yields zero; writing there throws.
class BandedMatrix {
 public:
  BandedMatrix() = default;
  explicit BandedMatrix(std::size_t n, std::size_t lower = 3, std::size_t upper = 3);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::size_t lower() const { return kl_; }
  [[nodiscard]] std::size_t upper() const { return ku_; }

  [[nodiscard]] bool in_band(std::size_t r, std::size_t c) const {
    return r < n_ && c < n_ && c + kl_ >= r && r + ku_ >= c;
  }

  /// Mutable access; throws std::out_of_range outside the band.
  double& at(std::size_t r, std::size_t c);
  /// Zero outside the band.
  [[nodiscard]] double get(std::size_t r, std::size_t c) const;

  [[nodiscard]] std::vector<double> multiply(std::span<const double> x) const;
  [[nodiscard]] double norm_inf() const;
  [[nodiscard]] double max_abs() const;
  /// Row-major dense copy, for tests and small diagnostics.
  [[nodiscard]] std::vector<double> to_dense() const;

 private:
  [[nodiscard]] std::size_t index(std::size_t r, std::size_t c) const { return r * width() + (c + kl_ - r); }
  [[nodiscard]] std::size_t width() const { return kl_ + ku_ + 1; }

  std::size_t n_ = 0;
  std::size_t kl_ = 0;
  std::size_t ku_ = 0;
  std::vector<double> data_;
};

/// LU factors of a banded matrix computed with partial (row) pivoting. The
/// upper factor has bandwidth lower + upper because of pivoting fill-in.
class BandedFactorization {
 public:
  [[nodiscard]] std::size_t size() const { return n_; }

 private:
  friend BandedFactorization factorize(const BandedMatrix& m);
  friend std::vector<double> solve(const BandedFactorization& f, std::span<const double> rhs);

  std::size_t n_ = 0;
  std::size_t kl_ = 0;
  std::size_t uw_ = 0;                 // upper factor width (kl + ku + 1)
  std::vector<double> upper_;          // row r holds columns r .. r + uw_ - 1
  std::vector<double> multipliers_;    // kl_ per elimination step
  std::vector<std::size_t> pivots_;
};

/// Throws SingularMatrixError when a pivot falls to 1e-14 * max|M| or below.
BandedFactorization factorize(const BandedMatrix& m);

/// Throws std::invalid_argument on a length mismatch.
std::vector<double> solve(const BandedFactorization& f, std::span<const double> rhs);

}  // namespace ew
