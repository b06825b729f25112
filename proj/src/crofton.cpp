#include "germ/crofton.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace germ {

double ball_volume(int k) {
  if (k < 0) throw std::invalid_argument("ball_volume: negative dimension");
  // k = 2m:   pi^m / m!
  // k = 2m+1: 2^(m+1) pi^m / (2m+1)!!
  const int m = k / 2;
  double value = 1;
  if (k % 2 == 0) {
    for (int i = 1; i <= m; ++i) value *= std::numbers::pi / i;
    return value;
  }
  value = 2;
  for (int i = 1; i <= m; ++i) value *= 2.0 * std::numbers::pi / (2.0 * i + 1);
  return value;
}

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

CroftonMatrix::CroftonMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n), 0.0) {
  if (n < 1) throw std::invalid_argument("crofton_matrix: n must be >= 1");
  for (int i = 1; i <= n; ++i) {
    entries_[static_cast<std::size_t>((i - 1) * n + (i - 1))] = 1.0;
    for (int j = i + 1; j <= n; ++j) {
      double a = ball_volume(j) / (ball_volume(j - i) * ball_volume(i)) * binom(j, i);
      double b = ball_volume(j - 1) / (ball_volume(j - 1 - i) * ball_volume(i)) * binom(j - 1, i);
      entries_[static_cast<std::size_t>((i - 1) * n + (j - 1))] = a - b;
    }
  }
}

double CroftonMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("CroftonMatrix::at");
  return entries_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
}

std::string CroftonMatrix::format() const {
  std::string out;
  char buf[64];
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      std::snprintf(buf, sizeof buf, "%.12g", at(i, j));
      if (j > 1) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

CroftonMatrix crofton_matrix(int n) { return CroftonMatrix(n); }

}  // namespace germ
