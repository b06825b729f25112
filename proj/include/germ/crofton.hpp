#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace germ {

/// Volume of the unit ball in R^k.
double ball_volume(int k);

/// Upper-triangular matrix relating local polar invariants to local
/// Lipschitz-Killing invariants. Indices are 1-based, as in Lambda_1..Lambda_n.
class CroftonMatrix {
 public:
  explicit CroftonMatrix(int n);

  int n() const noexcept { return n_; }
  double at(int i, int j) const;

  /// Rows separated by newlines, entries by single spaces, 12 significant digits.
  std::string format() const;

 private:
  int n_;
  std::vector<double> entries_;
};

CroftonMatrix crofton_matrix(int n);

}  // namespace germ
