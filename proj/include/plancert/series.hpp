#ifndef PLANCERT_SERIES_HPP
#define PLANCERT_SERIES_HPP

// Truncated power series over a ball-like coefficient type (Ball or CBall).
// All operations are formally exact to the stated truncation order, with
// coefficientwise interval enclosures. Nothing here knows about convergence;
// callers choose orders long enough for what they extract.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "plancert/ball.hpp"

namespace plancert {

template <typename T>
using Series = std::vector<T>;

namespace ser {

template <typename T>
Series<T> mul(const Series<T>& a, const Series<T>& b, std::size_t order) {
  if (a.empty() || b.empty()) throw std::invalid_argument("series mul: empty");
  Series<T> out;
  out.reserve(order);
  for (std::size_t k = 0; k < order; ++k) {
    T acc = a[0].zero_like();
    std::size_t i0 = (k + 1 > b.size()) ? k + 1 - b.size() : 0;
    for (std::size_t i = i0; i < std::min(k + 1, a.size()); ++i)
      acc += a[i] * b[k - i];
    out.push_back(std::move(acc));
  }
  return out;
}

template <typename T>
Series<T> add(const Series<T>& a, const Series<T>& b) {
  if (a.empty() && b.empty()) return {};
  Series<T> out(std::max(a.size(), b.size()),
                (a.empty() ? b[0] : a[0]).zero_like());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

template <typename T, typename S>
Series<T> scale(const Series<T>& a, const S& c) {
  Series<T> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x * c);
  return out;
}

// a / b, b[0] invertible.
template <typename T>
Series<T> div(const Series<T>& a, const Series<T>& b, std::size_t order) {
  if (b.empty()) throw std::invalid_argument("series div: empty divisor");
  T inv0 = b[0].recip();
  Series<T> q;
  q.reserve(order);
  for (std::size_t k = 0; k < order; ++k) {
    T acc = k < a.size() ? a[k] : a[0].zero_like();
    for (std::size_t i = 1; i <= std::min(k, b.size() - 1); ++i)
      acc -= b[i] * q[k - i];
    q.push_back(acc * inv0);
  }
  return q;
}

template <typename T>
Series<T> deriv(const Series<T>& a) {
  Series<T> out;
  if (a.size() <= 1) return out;
  out.reserve(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k)
    out.push_back(a[k] * static_cast<long>(k));
  return out;
}

template <typename T>
Series<T> sqrt(const Series<T>& a, std::size_t order) {
  Series<T> s;
  s.reserve(order);
  s.push_back(a[0].sqrt());
  T inv = (s[0] + s[0]).recip();
  for (std::size_t k = 1; k < order; ++k) {
    T acc = k < a.size() ? a[k] : a[0].zero_like();
    for (std::size_t i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s.push_back(acc * inv);
  }
  return s;
}

template <typename T>
Series<T> log(const Series<T>& a, std::size_t order) {
  Series<T> out;
  out.reserve(order);
  out.push_back(a[0].log());
  if (order == 1) return out;
  Series<T> q = div(deriv(a), a, order - 1);
  for (std::size_t k = 1; k < order; ++k)
    out.push_back(q[k - 1] / static_cast<long>(k));
  return out;
}

template <typename T>
Series<T> exp(const Series<T>& a, std::size_t order) {
  Series<T> e;
  e.reserve(order);
  e.push_back(a[0].exp());
  for (std::size_t k = 1; k < order; ++k) {
    T acc = a[0].zero_like();
    for (std::size_t j = 1; j <= std::min(k, a.size() - 1); ++j)
      acc += a[j] * static_cast<long>(j) * e[k - j];
    e.push_back(acc / static_cast<long>(k));
  }
  return e;
}

// a^e for rational e via exp(e log a); a[0] must be invertible with a
// certifiable branch.
template <typename T>
Series<T> pow_q(const Series<T>& a, const mpq_class& e, std::size_t order) {
  Series<T> l = log(a, order);
  Ball eb = Ball::from_q(e, l[0].prec());
  Series<T> scaled;
  scaled.reserve(order);
  for (const auto& x : l) scaled.push_back(x * eb);
  return exp(scaled, order);
}

}  // namespace ser
}  // namespace plancert

#endif
