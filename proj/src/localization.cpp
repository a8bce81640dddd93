#include "hilbk3/localization.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hilbk3 {

int YTab::size() const {
  int n = 0;
  for (int h : heights) n += h;
  return n;
}

std::vector<YTab> all_ytabs(int n) {
  // Partitions of n in weakly decreasing order.
  std::vector<YTab> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(YTab{cur});
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Weight> tangent_weights(const YTab& t) {
  const int n = t.size();
  std::vector<long> b(n + 1, 0);
  for (size_t i = 0; i < t.heights.size(); ++i) b[i] = t.heights[i];
  std::vector<Weight> w;
  w.reserve(2 * n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (long s = b[j]; s <= b[j - 1] - 1; ++s) {
        w.push_back({i - j - 1, b[i - 1] - s - 1});
        w.push_back({j - i, s - b[i - 1]});
      }
  if (static_cast<int>(w.size()) != 2 * n)
    throw std::logic_error("tangent_weights: wrong factor count");
  for (const Weight& x : w)
    if (x.is_zero()) throw std::logic_error("tangent_weights: zero weight");
  return w;
}

Weight zform(const YTab& t) {
  Weight z;
  for (size_t i = 0; i < t.heights.size(); ++i) {
    z.ca += static_cast<long>(i) * t.heights[i];
    z.cb += static_cast<long>(t.heights[i]) * (t.heights[i] - 1) / 2;
  }
  return z;
}

namespace {

std::vector<Chart> charts_for(Surface s) {
  if (s == Surface::P2)
    return {{{1, 0}, {0, 1}}, {{1, -1}, {0, -1}}, {{-1, 1}, {-1, 0}}};
  return {{{1, 0}, {0, 1}}, {{-1, 0}, {0, 1}}, {{1, 0}, {0, -1}}, {{-1, 0}, {0, -1}}};
}

}  // namespace

std::vector<FixedPoint> fixed_points(Surface s, int n) {
  const std::vector<Chart> charts = charts_for(s);
  const int k = static_cast<int>(charts.size());
  // Cache tableaux and their chart data per total size.
  std::vector<std::vector<YTab>> tabs(n + 1);
  for (int m = 0; m <= n; ++m) tabs[m] = all_ytabs(m);

  std::vector<FixedPoint> out;
  std::vector<YTab> comp(k);
  std::function<void(int, int)> rec = [&](int ci, int left) {
    if (ci == k - 1) {
      for (const YTab& t : tabs[left]) {
        comp[ci] = t;
        FixedPoint fp;
        fp.surface = s;
        fp.components = comp;
        for (int c = 0; c < k; ++c) {
          for (const Weight& w : tangent_weights(comp[c]))
            fp.weights.push_back(charts[c].substitute(w));
          fp.z = fp.z + charts[c].substitute(zform(comp[c]));
        }
        out.push_back(std::move(fp));
      }
      return;
    }
    for (int m = 0; m <= left; ++m)
      for (const YTab& t : tabs[m]) {
        comp[ci] = t;
        rec(ci + 1, left - m);
      }
  };
  rec(0, n);
  return out;
}

Int vector_partition_count(int components, int n) {
  // Partition counts p(0..n), then the k-fold convolution coefficient.
  std::vector<Int> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  std::vector<Int> acc(n + 1, 0);
  acc[0] = 1;
  for (int c = 0; c < components; ++c) {
    std::vector<Int> next(n + 1, 0);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) next[i + j] += acc[i] * p[j];
    acc = std::move(next);
  }
  return acc[n];
}

const TorusSpec& primary_spec() {
  static const TorusSpec s{rat(1), rat(4999, 4993)};
  return s;
}

const TorusSpec& secondary_spec() {
  static const TorusSpec s{rat(1), rat(5003, 4987)};
  return s;
}

namespace {

// Elementary symmetric polynomial values e_0..e_k of the given rationals.
std::vector<Rat> elementary_symmetric(const std::vector<Rat>& vals, int k) {
  std::vector<Rat> e(k + 1, Rat(0));
  e[0] = 1;
  for (const Rat& v : vals)
    for (int i = k; i >= 1; --i) e[i] += v * e[i - 1];
  return e;
}

Rat bott_integral_spec(Surface s, int n, int zpow, const std::vector<int>& mu,
                       const TorusSpec& spec) {
  Rat total(0);
  for (const FixedPoint& fp : fixed_points(s, n)) {
    std::vector<Rat> vals;
    vals.reserve(fp.weights.size());
    for (const Weight& w : fp.weights) vals.push_back(spec.eval(w));
    const std::vector<Rat> e = elementary_symmetric(vals, 2 * n);
    if (e[2 * n] == 0)
      throw std::logic_error("bott_integral: vanishing equivariant Euler class");
    Rat num = qpow(spec.eval(fp.z), zpow);
    for (int k : mu) num *= e[k];
    total += num / e[2 * n];
  }
  return total;
}

}  // namespace

Rat bott_integral(Surface s, int n, int zpow, const std::vector<int>& mu) {
  int deg = zpow;
  for (int k : mu) deg += k;
  if (deg != 2 * n)
    throw std::invalid_argument("bott_integral: degree must balance at 2n");
  const Rat a = bott_integral_spec(s, n, zpow, mu, primary_spec());
  const Rat b = bott_integral_spec(s, n, zpow, mu, secondary_spec());
  if (a != b)
    throw std::logic_error("bott_integral: specialization disagreement");
  return a;
}

namespace {

// Dense vector of APoly coefficients of s^0..s^cap.
using Graded = std::vector<APoly>;

Graded graded_mul(const Graded& x, const Graded& y, int cap) {
  Graded r(cap + 1);
  for (int i = 0; i <= cap; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; i + j <= cap; ++j) {
      if (y[j].is_zero()) continue;
      r[i + j] += x[i] * y[j];
    }
  }
  return r;
}

// z^n coefficient of the genus series under one specialization.
APoly genus_coeff_spec(Surface s, int n, const TorusSpec& spec,
                       std::vector<APoly>* low_parts) {
  const int cap = 2 * n;
  Graded total(cap + 1);
  for (const FixedPoint& fp : fixed_points(s, n)) {
    // exp(s zval) with zval the specialized z-form.
    const Rat zval = spec.eval(fp.z);
    Graded acc(cap + 1);
    Rat zpow(1), fact(1);
    for (int m = 0; m <= cap; ++m) {
      if (m > 0) {
        zpow *= zval;
        fact *= m;
      }
      acc[m] = APoly::constant(zpow / fact);
    }
    // Universal genus factor Phi(s w) = 1 + a_1 (w s) + a_2 (w s)^2 + ...
    // per tangent weight.
    std::vector<Rat> vals;
    for (const Weight& w : fp.weights) vals.push_back(spec.eval(w));
    for (const Rat& w : vals) {
      Graded phi(cap + 1);
      phi[0] = APoly::constant(Rat(1));
      Rat wp(1);
      for (int m = 1; m <= std::min(cap, kAWeightCap); ++m) {
        wp *= w;
        phi[m] = APoly::gen(m) * wp;
      }
      acc = graded_mul(acc, phi, cap);
    }
    const std::vector<Rat> e = elementary_symmetric(vals, 2 * n);
    if (e[2 * n] == 0)
      throw std::logic_error("genus_bott_series: vanishing equivariant Euler class");
    const Rat inv = Rat(1) / e[2 * n];
    for (int m = 0; m <= cap; ++m) total[m] += acc[m] * inv;
  }
  // Everything below the top graded piece must cancel across fixed points
  // (no negative powers in the equivariant integral).
  for (int m = 0; m < cap; ++m) {
    if (low_parts) low_parts->push_back(total[m]);
    if (!total[m].is_zero())
      throw std::logic_error("genus_bott_series: nonzero negative-degree part");
  }
  return total[cap];
}

}  // namespace

Series<APoly> genus_bott_series(Surface s) {
  static Series<APoly> cache[2];
  static bool have[2] = {false, false};
  const int idx = s == Surface::P2 ? 0 : 1;
  if (!have[idx]) {
    Series<APoly> f;
    for (int n = 0; n <= kZOrder; ++n) {
      const APoly a = genus_coeff_spec(s, n, primary_spec(), nullptr);
      const APoly b = genus_coeff_spec(s, n, secondary_spec(), nullptr);
      if (!(a == b))
        throw std::logic_error("genus_bott_series: specialization disagreement");
      f.c[n] = a;
    }
    cache[idx] = std::move(f);
    have[idx] = true;
  }
  return cache[idx];
}

}  // namespace hilbk3
