#include "sparserips/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace sparse_rips {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t k = 2; static_cast<std::uint64_t>(k) * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  if (base == 0) throw std::domain_error("zero has no inverse");
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

ModpMatrix ModpMatrix::identity(std::size_t n) {
  ModpMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

ModVector ModpMatrix::apply(std::span<const std::uint32_t> v, std::uint32_t p) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix");
  ModVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<std::uint64_t>(at(r, c)) * v[c] % p;
    out[r] = static_cast<std::uint32_t>(acc % p);
  }
  return out;
}

ModpMatrix multiply(const ModpMatrix& a, const ModpMatrix& b, std::uint32_t p) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not chain");
  ModpMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc += static_cast<std::uint64_t>(a.at(r, k)) * b.at(k, c) % p;
      out.at(r, c) = static_cast<std::uint32_t>(acc % p);
    }
  return out;
}

std::vector<ModVector> kernel_basis(const ModpMatrix& m, std::uint32_t p) {
  // reduced row echelon form, then one kernel vector per free column
  ModpMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a.at(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(sel, c), a.at(row, c));
    const std::uint64_t inv = inverse_mod(a.at(row, col), p);
    for (std::size_t c = 0; c < cols; ++c) a.at(row, c) = static_cast<std::uint32_t>(a.at(row, c) * inv % p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      const std::uint64_t factor = a.at(r, col);
      for (std::size_t c = 0; c < cols; ++c)
        a.at(r, c) = static_cast<std::uint32_t>((a.at(r, c) + (p - factor) * a.at(row, c)) % p);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<ModVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ModVector v(cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v[pivot_cols[k]] = (p - a.at(k, free)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

void EchelonBasis::reduce(ModVector& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint64_t factor = v[pivots_[k]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c)
      v[c] = static_cast<std::uint32_t>((v[c] + (p_ - factor) * rows_[k][c]) % p_);
  }
}

bool EchelonBasis::insert(ModVector v) {
  if (v.size() != dim_) throw std::invalid_argument("vector length does not match basis");
  reduce(v);
  auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  if (lead == v.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(lead - v.begin());
  const std::uint64_t inv = inverse_mod(*lead, p_);
  for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % p_);
  // keep existing rows free of the new pivot so reduce() stays a single pass
  for (auto& row : rows_) {
    const std::uint64_t factor = row[pivot];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c)
      row[c] = static_cast<std::uint32_t>((row[c] + (p_ - factor) * v[c]) % p_);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(ModVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length does not match basis");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

}  // namespace sparse_rips
