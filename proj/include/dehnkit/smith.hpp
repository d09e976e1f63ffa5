#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace dehnkit {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries. Intermediate entry
/// blow-up during elimination is real even on small inputs.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// Invariant factors d_1 | d_2 | ... | d_k, k = min(rows, cols), d_i >= 0,
/// obtained by unimodular row/column operations. Trailing zeros witness the
/// free rank of the cokernel.
std::vector<BigInt> smith_normal_form(IntMatrix m);

}  // namespace dehnkit
