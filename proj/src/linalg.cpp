#include "wildram/linalg.hpp"

namespace wildram {

void Matrix::append_row(const std::vector<FieldElem>& row) {
  if (rows == 0 && cols == 0) cols = row.size();
  if (row.size() != cols) throw Error(ErrorKind::InvalidArgument, "row length mismatch");
  a.insert(a.end(), row.begin(), row.end());
  ++rows;
}

Echelon rref(const Field& k, Matrix m) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c).v == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const FieldElem inv = k.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = k.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const FieldElem f = m.at(i, c);
      if (f.v == 0) continue;
      const FieldElem nf = k.neg(f);
      for (std::size_t j = c; j < m.cols; ++j)
        if (m.at(r, j).v) m.at(i, j) = k.add(m.at(i, j), k.mul(nf, m.at(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.rows = r;
  m.a.resize(r * m.cols);
  out.r = std::move(m);
  return out;
}

std::size_t rank(const Field& k, const Matrix& m) { return rref(k, m).pivots.size(); }

std::vector<std::vector<FieldElem>> nullspace(const Field& k, const Matrix& m) {
  const Echelon e = rref(k, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElem> x(m.cols);
    x[f] = k.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = k.neg(e.r.at(i, f));
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<FieldElem>> solve(const Field& k, const Matrix& m, const std::vector<FieldElem>& b) {
  Matrix aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  const Echelon e = rref(k, aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols) return std::nullopt;
  std::vector<FieldElem> x(m.cols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.r.at(i, m.cols);
  return x;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

}  // namespace wildram
