#include "wld/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace wld {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void IntMatrix::append_row(const std::vector<Integer>& row) {
  if (rows_ == 0 && data_.empty()) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

bool IntMatrix::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(r, c) != 0) return false;
  return true;
}

std::string to_string(const IntMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += " ";
      out += m(r, c).get_str();
    }
    out += "]";
    if (r + 1 < m.rows()) out += "\n";
  }
  return out;
}

namespace {

// row_a -= q * row_b
void sub_row(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q, std::size_t from = 0) {
  if (q == 0) return;
  for (std::size_t c = from; c < m.cols(); ++c) m(a, c) -= q * m(b, c);
}

void sub_col(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, a) -= q * m(r, b);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix hnf(const IntMatrix& input) {
  IntMatrix m = input;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
    while (true) {
      std::size_t best = m.rows();
      for (std::size_t r = pr; r < m.rows(); ++r)
        if (m(r, col) != 0 && (best == m.rows() || abs(m(r, col)) < abs(m(best, col)))) best = r;
      if (best == m.rows()) break;
      m.swap_rows(pr, best);
      bool clean = true;
      for (std::size_t r = pr + 1; r < m.rows(); ++r) {
        if (m(r, col) == 0) continue;
        sub_row(m, r, pr, tdiv(m(r, col), m(pr, col)), col);
        if (m(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(pr, col) == 0) continue;
    if (m(pr, col) < 0)
      for (std::size_t c = col; c < m.cols(); ++c) m(pr, c) = -m(pr, c);
    for (std::size_t r = 0; r < pr; ++r) sub_row(m, r, pr, fdiv(m(r, col), m(pr, col)), col);
    ++pr;
  }
  return m;
}

std::size_t rank(const IntMatrix& m) {
  const IntMatrix h = hnf(m);
  std::size_t r = 0;
  while (r < h.rows() && !h.row_is_zero(r)) ++r;
  return r;
}

std::vector<Integer> snf(const IntMatrix& input) {
  IntMatrix m = input;
  std::vector<Integer> out;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    bool found = false;
    while (true) {
      // smallest nonzero entry of the trailing block moves to (t, t)
      std::size_t br = 0, bc = 0;
      found = false;
      for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c)
          if (m(r, c) != 0 && (!found || abs(m(r, c)) < abs(m(br, bc)))) {
            br = r;
            bc = c;
            found = true;
          }
      if (!found) break;
      m.swap_rows(t, br);
      swap_cols(m, t, bc);
      bool dirty = false;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        sub_row(m, r, t, tdiv(m(r, t), m(t, t)));
        if (m(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        sub_col(m, c, t, tdiv(m(t, c), m(t, t)));
        if (m(t, c) != 0) dirty = true;
      }
      if (dirty) continue;
      // pivot must divide the rest of the block
      std::size_t bad = m.rows();
      for (std::size_t r = t + 1; r < m.rows() && bad == m.rows(); ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
            bad = r;
            break;
          }
      if (bad == m.rows()) break;
      for (std::size_t c = t; c < m.cols(); ++c) m(t, c) += m(bad, c);
    }
    if (!found) break;
    out.push_back(abs(m(t, t)));
  }
  return out;
}

}  // namespace wld
