#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sparse_rips {

using ModVector = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t p);

/// Multiplicative inverse of a nonzero residue modulo prime p.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// Dense row-major matrix over Z_p.
class ModpMatrix {
 public:
  ModpMatrix() = default;
  ModpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static ModpMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ModVector apply(std::span<const std::uint32_t> v, std::uint32_t p) const;

  friend bool operator==(const ModpMatrix&, const ModpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

ModpMatrix multiply(const ModpMatrix& a, const ModpMatrix& b, std::uint32_t p);

/// Basis of the null space, one vector of length cols() each.
std::vector<ModVector> kernel_basis(const ModpMatrix& m, std::uint32_t p);

/// Incrementally maintained echelon basis of a subspace of Z_p^dim.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t dim, std::uint32_t p) : dim_(dim), p_(p) {}

  /// Adds v to the span; returns false (and changes nothing) if v was already in it.
  bool insert(ModVector v);
  bool contains(ModVector v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  /// Reduces v in place against the stored rows.
  void reduce(ModVector& v) const;

  std::size_t dim_;
  std::uint32_t p_;
  std::vector<ModVector> rows_;    // each row normalised to leading coefficient 1
  std::vector<std::size_t> pivots_;
};

}  // namespace sparse_rips
