#include <cstdlib>
#include <numeric>

#include "biquandle/coloring.hpp"

namespace biq {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "Smith normal form entry overflow");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "Smith normal form entry overflow");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "Smith normal form entry overflow");
  return r;
}

std::int64_t magnitude(std::int64_t v) {
  if (v == INT64_MIN) throw Error(ErrorKind::overflow, "Smith normal form entry overflow");
  return v < 0 ? -v : v;
}

}  // namespace

std::vector<std::int64_t> smith_diagonal(const RelationMatrix& input) {
  RelationMatrix a = input;
  const int rows = a.rows, cols = a.cols;
  std::vector<std::int64_t> diagonal;

  auto swap_rows = [&](int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < cols; ++c) std::swap(a.at(r1, c), a.at(r2, c));
  };
  auto swap_cols = [&](int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < rows; ++r) std::swap(a.at(r, c1), a.at(r, c2));
  };

  for (int t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      int pr = -1, pc = -1;
      std::int64_t best = 0;
      for (int r = t; r < rows; ++r) {
        for (int c = t; c < cols; ++c) {
          const std::int64_t v = magnitude(a.at(r, c));
          if (v != 0 && (pr == -1 || v < best)) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == -1) return diagonal;
      swap_rows(t, pr);
      swap_cols(t, pc);
      const std::int64_t p = a.at(t, t);

      bool clean = true;
      for (int r = t + 1; r < rows; ++r) {
        const std::int64_t q = a.at(r, t) / p;
        if (q != 0)
          for (int c = t; c < cols; ++c) a.at(r, c) = sub(a.at(r, c), mul(q, a.at(t, c)));
        if (a.at(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < cols; ++c) {
        const std::int64_t q = a.at(t, c) / p;
        if (q != 0)
          for (int r = t; r < rows; ++r) a.at(r, c) = sub(a.at(r, c), mul(q, a.at(r, t)));
        if (a.at(t, c) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder now exists; re-pivot

      // Divisibility: fold any offending row into the pivot row and retry.
      int offender = -1;
      for (int r = t + 1; r < rows && offender == -1; ++r)
        for (int c = t + 1; c < cols; ++c)
          if (a.at(r, c) % p != 0) {
            offender = r;
            break;
          }
      if (offender == -1) break;
      for (int c = t; c < cols; ++c) a.at(t, c) = add(a.at(t, c), a.at(offender, c));
    }
    diagonal.push_back(magnitude(a.at(t, t)));
  }
  return diagonal;
}

std::uint64_t count_solutions_snf(const RelationMatrix& m) {
  if (m.modulus < 1) throw Error(ErrorKind::invalid_parameter, "modulus must be >= 1");
  if (static_cast<std::size_t>(m.rows) * static_cast<std::size_t>(m.cols) != m.entries.size())
    throw Error(ErrorKind::shape, "relation matrix entry count does not match its shape");
  // Solutions mod n only see entries mod n; reducing first keeps the
  // elimination small.
  RelationMatrix reduced = m;
  for (auto& e : reduced.entries) e = ((e % m.modulus) + m.modulus) % m.modulus;
  const auto diagonal = smith_diagonal(reduced);
  const auto n = static_cast<std::uint64_t>(m.modulus);
  std::uint64_t count = 1;
  auto times = [&](std::uint64_t f) {
    if (__builtin_mul_overflow(count, f, &count)) throw Error(ErrorKind::overflow, "solution count exceeds 2^64");
  };
  for (int i = static_cast<int>(diagonal.size()); i < m.cols; ++i) times(n);
  for (std::int64_t d : diagonal) times(std::gcd(static_cast<std::uint64_t>(d), n));
  return count;
}

}  // namespace biq
