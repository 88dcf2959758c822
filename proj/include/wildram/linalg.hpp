#pragma once

#include <optional>
#include <vector>

#include "wildram/field.hpp"

namespace wildram {

/// Dense row-major matrix over a finite field.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<FieldElem> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  FieldElem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  FieldElem at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  void append_row(const std::vector<FieldElem>& row);
};

struct Echelon {
  Matrix r;                       // reduced row echelon form, zero rows removed
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(const Field& k, Matrix m);
std::size_t rank(const Field& k, const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<std::vector<FieldElem>> nullspace(const Field& k, const Matrix& m);
/// Some x with m x = b, or nullopt.
std::optional<std::vector<FieldElem>> solve(const Field& k, const Matrix& m, const std::vector<FieldElem>& b);
Matrix transpose(const Matrix& m);

}  // namespace wildram
