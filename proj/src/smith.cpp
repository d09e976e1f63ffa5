#include "dehnkit/smith.hpp"

#include <algorithm>
#include <utility>

namespace dehnkit {

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row[a] -= q * row[b]
void row_op(IntMatrix& m, int a, int b, const BigInt& q) {
  if (q == 0) return;
  for (int c = 0; c < m.cols; ++c) m.at(a, c) -= q * m.at(b, c);
}

void col_op(IntMatrix& m, int a, int b, const BigInt& q) {
  if (q == 0) return;
  for (int r = 0; r < m.rows; ++r) m.at(r, a) -= q * m.at(r, b);
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntMatrix m) {
  const int k = std::min(m.rows, m.cols);
  std::vector<BigInt> diag;
  for (int t = 0; t < k; ++t) {
    // Pivot: smallest nonzero magnitude in the remaining block.
    int pr = -1, pc = -1;
    BigInt best = 0;
    for (int r = t; r < m.rows; ++r)
      for (int c = t; c < m.cols; ++c) {
        if (m.at(r, c) == 0) continue;
        BigInt mag = abs(m.at(r, c));
        if (pr < 0 || mag < best) {
          best = mag;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // rest is zero
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);
    for (;;) {
      bool again = false;
      for (int r = t + 1; r < m.rows; ++r) {
        if (m.at(r, t) == 0) continue;
        BigInt q = m.at(r, t) / m.at(t, t);
        row_op(m, r, t, q);
        if (m.at(r, t) != 0) {
          swap_rows(m, t, r);  // Euclidean step: remainder becomes the pivot
          again = true;
        }
      }
      for (int c = t + 1; c < m.cols; ++c) {
        if (m.at(t, c) == 0) continue;
        BigInt q = m.at(t, c) / m.at(t, t);
        col_op(m, c, t, q);
        if (m.at(t, c) != 0) {
          swap_cols(m, t, c);
          again = true;
        }
      }
      if (!again) break;
    }
    diag.push_back(abs(m.at(t, t)));
  }
  // Fix the divisibility chain d_i | d_{i+1} by gcd/lcm folding.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[i] == 0 && diag[j] == 0) continue;
      BigInt g = gcd(diag[i], diag[j]);
      if (g == 0) continue;
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::sort(diag.begin(), diag.end(), [](const BigInt& a, const BigInt& b) {
    if (a == 0) return false;  // zeros trail
    if (b == 0) return true;
    return a < b;
  });
  diag.resize(k, BigInt(0));
  return diag;
}

}  // namespace dehnkit
