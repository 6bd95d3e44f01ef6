#include "adet/errors.hpp"
#include "adet/matrix.hpp"

namespace adet {

RatMatrix evaluate(const PolyMatrix& m, const Rational& a) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).eval(a);
  return out;
}

PolyMatrix to_poly(const RatMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = PolyQ(m(r, c));
  return out;
}

PolyMatrix scale(const RatMatrix& m, const PolyQ& p) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) out(r, c) = p * m(r, c);
  return out;
}

PolyQ trace(const PolyMatrix& m) {
  PolyQ t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t generic_rank(PolyMatrix m) {
  // Bareiss: after each step the trailing entries are minors of the input, so
  // the division by the previous pivot is exact in Q[alpha].
  std::size_t r = 0;
  PolyQ prev(1);
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const PolyQ pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const PolyQ lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        PolyQ v = pivot * m(i, j);
        if (!lead.is_zero()) v -= lead * m(r, j);
        m(i, j) = div_exact(v, prev);
      }
      m(i, c) = PolyQ();
    }
    prev = pivot;
    ++r;
  }
  return r;
}

std::size_t rank_at(const PolyMatrix& m, const Rational& a) { return rank(evaluate(m, a)); }

RatMatrix solve_exact(RatMatrix a, RatMatrix b) {
  if (a.rows() != a.cols() || b.rows() != a.rows())
    throw SizeMismatch("solve_exact: A must be square with as many rows as B");
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw SingularMatrix("solve_exact: matrix is singular");
    a.swap_rows(p, c);
    b.swap_rows(p, c);
    const Rational inv = 1 / a(c, c);
    for (std::size_t j = c; j < n; ++j) a(c, j) *= inv;
    for (std::size_t j = 0; j < b.cols(); ++j) b(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(c, j);
    }
  }
  return b;
}

RatMatrix nullspace(RatMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix out(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    out(free_cols[k], k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) out(pivots[r], k) = -m(r, free_cols[k]);
  }
  return out;
}

} // namespace adet
