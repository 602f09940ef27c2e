#pragma once

#include <cstdint>
#include <vector>

namespace ugt {

// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_(words_per_row(cols)),
        data_(rows * words_per_row(cols), 0) {}

  static std::size_t words_per_row(std::size_t cols) { return (cols + 63) / 64; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    uint64_t mask = uint64_t(1) << (c % 64);
    if (v)
      data_[r * words_ + c / 64] |= mask;
    else
      data_[r * words_ + c / 64] &= ~mask;
  }
  void xor_rows(std::size_t dst, std::size_t src) {
    uint64_t* d = &data_[dst * words_];
    const uint64_t* s = &data_[src * words_];
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_; ++w)
      std::swap(data_[a * words_ + w], data_[b * words_ + w]);
  }
  bool row_empty(std::size_t r) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (data_[r * words_ + w]) return false;
    return true;
  }
  void append_row(const std::vector<uint32_t>& support) {
    data_.resize((rows_ + 1) * words_, 0);
    ++rows_;
    for (uint32_t c : support) set(rows_ - 1, c);
  }

  // In-place reduction to reduced row echelon form.  Returns the rank and
  // records, for each pivot row, its pivot column.
  std::size_t rref(std::vector<uint32_t>* pivot_cols = nullptr) {
    std::size_t rank = 0;
    if (pivot_cols) pivot_cols->clear();
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      std::size_t piv = rank;
      while (piv < rows_ && !get(piv, c)) ++piv;
      if (piv == rows_) continue;
      swap_rows(rank, piv);
      for (std::size_t r = 0; r < rows_; ++r)
        if (r != rank && get(r, c)) xor_rows(r, rank);
      if (pivot_cols) pivot_cols->push_back(static_cast<uint32_t>(c));
      ++rank;
    }
    return rank;
  }

  // Drops all-zero rows; assumes the matrix is already in echelon form.
  void shrink_to_rank(std::size_t rank) {
    data_.resize(rank * words_);
    rows_ = rank;
  }

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  const std::vector<uint64_t>& words() const { return data_; }

private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<uint64_t> data_;
};

// Homogeneous system given by sparse equations (each a list of variable
// indices whose sum must vanish).
inline std::size_t f2_rank(const std::vector<std::vector<uint32_t>>& equations,
                           std::size_t nvars) {
  BitMatrix m(equations.size(), nvars);
  for (std::size_t r = 0; r < equations.size(); ++r)
    for (uint32_t c : equations[r]) m.set(r, c, !m.get(r, c));
  return m.rref();
}

// Canonical (RREF) basis of the solution space of a homogeneous system.
inline BitMatrix f2_nullspace(const std::vector<std::vector<uint32_t>>& equations,
                              std::size_t nvars) {
  BitMatrix m(equations.size(), nvars);
  for (std::size_t r = 0; r < equations.size(); ++r)
    for (uint32_t c : equations[r]) m.set(r, c, !m.get(r, c));
  std::vector<uint32_t> pivots;
  std::size_t rank = m.rref(&pivots);

  std::vector<uint8_t> is_pivot(nvars, 0);
  for (uint32_t c : pivots) is_pivot[c] = 1;

  BitMatrix basis(nvars - rank, nvars);
  std::size_t r = 0;
  for (std::size_t free_col = 0; free_col < nvars; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.set(r, free_col);
    for (std::size_t p = 0; p < rank; ++p)
      if (m.get(p, free_col)) basis.set(r, pivots[p]);
    ++r;
  }
  basis.rref();
  return basis;
}

// Membership of a 0/1 vector in the row space of an RREF basis.
inline bool in_row_space(const BitMatrix& rref_basis, std::vector<uint8_t> vec) {
  for (std::size_t r = 0; r < rref_basis.rows(); ++r) {
    std::size_t lead = 0;
    while (lead < rref_basis.cols() && !rref_basis.get(r, lead)) ++lead;
    if (lead == rref_basis.cols()) continue;
    if (vec[lead])
      for (std::size_t c = lead; c < rref_basis.cols(); ++c)
        if (rref_basis.get(r, c)) vec[c] ^= 1;
  }
  for (uint8_t v : vec)
    if (v) return false;
  return true;
}

}  // namespace ugt
