// Independent reference computations used to cross-check the library.
// Nothing here calls the library's elimination or quotient code.
#ifndef JOINALG_TESTS_ORACLES_HPP
#define JOINALG_TESTS_ORACLES_HPP

#include <array>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "joinalg/classical.hpp"
#include "joinalg/linalg.hpp"

namespace oracle {

using joinalg::FiniteGroup;
using joinalg::FiniteGSet;
using joinalg::Matrix;
using joinalg::Scalar;

// Plain row reduction on a dense copy.
inline std::size_t rank(const Matrix& m) {
  std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < a.size(); ++c) {
    std::size_t p = rk;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rk || a[r][c] == 0) continue;
      Scalar f = a[r][c] / a[rk][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rk][k];
    }
    ++rk;
  }
  return rk;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_bias = 2) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), coin(0, zero_bias);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) == 0) m(r, c) = Scalar(num(rng), den(rng));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c).canonicalize();
  return m;
}

// Δ(δ_g) = Σ_{ab=g} δ_a⊗δ_b straight from the table.
inline Matrix convolution_coproduct(const FiniteGroup& g) {
  const std::size_t n = g.order();
  Matrix d(n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d(a * n + b, g.mul(a, b)) += 1;
  return d;
}

inline std::size_t orbit_count(const FiniteGSet& x) {
  std::set<std::set<std::size_t>> orbits;
  for (std::size_t p = 0; p < x.size(); ++p) {
    std::set<std::size_t> o;
    for (std::size_t g = 0; g < x.group().order(); ++g) o.insert(x.act(p, g));
    orbits.insert(o);
  }
  return orbits.size();
}

// Points of the discrete join, by canonical keys rather than union-find.
inline std::size_t join_points(std::size_t nx, std::size_t ny, std::size_t m) {
  std::set<std::tuple<std::size_t, long, long>> keys;
  for (std::size_t t = 0; t <= m; ++t)
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y) {
        if (t == 0) keys.insert({t, -1, static_cast<long>(y)});
        else if (t == m) keys.insert({t, static_cast<long>(x), -1});
        else keys.insert({t, static_cast<long>(x), static_cast<long>(y)});
      }
  return keys.size();
}

inline std::size_t gauged_points(const FiniteGSet& x, std::size_t m) {
  std::set<std::tuple<std::size_t, long, long>> keys;
  for (std::size_t t = 0; t <= m; ++t)
    for (std::size_t p = 0; p < x.size(); ++p)
      for (std::size_t h = 0; h < x.group().order(); ++h) {
        if (t == 0) keys.insert({t, -1, static_cast<long>(h)});
        else if (t == m) keys.insert({t, static_cast<long>(x.act(p, h)), -1});
        else keys.insert({t, static_cast<long>(p), static_cast<long>(h)});
      }
  return keys.size();
}

// Orbits of the gauged join under [(t,x,h)]k = [(t,x,hk)], by brute force.
inline std::size_t gauged_orbits(const FiniteGSet& x, std::size_t m) {
  const FiniteGroup& g = x.group();
  auto key = [&](std::size_t t, std::size_t p, std::size_t h) -> std::tuple<std::size_t, long, long> {
    if (t == 0) return {t, -1, static_cast<long>(h)};
    if (t == m) return {t, static_cast<long>(x.act(p, h)), -1};
    return {t, static_cast<long>(p), static_cast<long>(h)};
  };
  std::set<std::set<std::tuple<std::size_t, long, long>>> orbits;
  for (std::size_t t = 0; t <= m; ++t)
    for (std::size_t p = 0; p < x.size(); ++p)
      for (std::size_t h = 0; h < g.order(); ++h) {
        std::set<std::tuple<std::size_t, long, long>> o;
        for (std::size_t k = 0; k < g.order(); ++k) o.insert(key(t, p, g.mul(h, k)));
        orbits.insert(o);
      }
  return orbits.size();
}

// ℓ(δ_g) = Σ_h δ_h ⊗ δ_{hg} for the regular coaction on Fun(G).
inline Matrix regular_connection(const FiniteGroup& g) {
  const std::size_t n = g.order();
  Matrix ell(n * n, n);
  for (std::size_t gg = 0; gg < n; ++gg)
    for (std::size_t h = 0; h < n; ++h) ell(h * n + g.mul(h, gg), gg) = 1;
  return ell;
}

}  // namespace oracle

#endif  // JOINALG_TESTS_ORACLES_HPP
