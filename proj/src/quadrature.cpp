#include "bellwave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "bellwave/units.hpp"

namespace bellwave {

namespace {

// Orthonormal Hermite recurrence at z: returns p_n(z) and stores p_{n-1}(z).
double hermite_orthonormal(int n, double z, double& prev) {
  double p1 = std::pow(std::numbers::pi, -0.25), p2 = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
  }
  prev = p2;
  return p1;
}

// Number of roots of H_n below z: Sturm count on the Jacobi matrix
// (zero diagonal, off-diagonal sqrt(j/2)).
int roots_below(int n, double z) {
  int count = 0;
  double q = -z;
  if (q < 0.0) ++count;
  for (int j = 1; j < n; ++j) {
    const double qq = q != 0.0 ? q : std::numeric_limits<double>::min();
    q = -z - 0.5 * j / qq;
    if (q < 0.0) ++count;
  }
  return count;
}

// Each non-negative root is isolated by bisection on its index, then
// polished by Newton on the orthonormal recurrence, which also yields the
// weight 2 / p_n'(x)^2.
HermiteRule build_hermite_rule(int n) {
  std::vector<double> x(n), w(n);
  const double bound = std::sqrt(2.0 * n + 1.0);
  for (int k = n / 2; k < n; ++k) {
    double lo = 0.0, hi = bound;
    if (n % 2 == 1 && k == n / 2) {
      lo = hi = 0.0;
    } else {
      while (hi - lo > 1e-13 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        (roots_below(n, mid) <= k ? lo : hi) = mid;
      }
    }
    double z = 0.5 * (lo + hi);
    double prev = 0.0;
    for (int it = 0; it < 3; ++it) {
      const double p = hermite_orthonormal(n, z, prev);
      const double dz = p / (std::sqrt(2.0 * n) * prev);
      if (!std::isfinite(dz)) break;
      z -= dz;
    }
    hermite_orthonormal(n, z, prev);
    const double pp = std::sqrt(2.0 * n) * prev;
    x[k] = z;
    w[k] = 2.0 / (pp * pp);
    x[n - 1 - k] = -z;
    w[n - 1 - k] = w[k];
  }

  HermiteRule rule;
  rule.nodes = x;
  rule.weights = w;
  rule.unweighted.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.unweighted[i] = std::exp(std::log(w[i]) + x[i] * x[i]);
  }
  return rule;
}

struct Grid1D {
  std::vector<double> x;
  std::vector<double> w;
};

Grid1D axis_grid(const AxisScale& axis, int n) {
  const HermiteRule& rule = hermite_rule(n);
  const double scale = std::numbers::sqrt2 * axis.width;
  Grid1D g;
  g.x.resize(n);
  g.w.resize(n);
  for (int i = 0; i < n; ++i) {
    g.x[i] = axis.center + scale * rule.nodes[i];
    g.w[i] = scale * rule.unweighted[i];
  }
  return g;
}

// Sums the slab with first-axis index i0 in lexicographic order.
void sum_slab(const MultiIntegrand& f, const std::vector<Grid1D>& grids, int i0,
              std::span<cplx> acc) {
  const std::size_t dims = grids.size();
  const std::size_t comps = acc.size();
  const int n = static_cast<int>(grids[0].x.size());
  std::vector<int> idx(dims, 0);
  idx[0] = i0;
  std::vector<double> point(dims);
  std::vector<cplx> value(comps);
  while (true) {
    double weight = 1.0;
    for (std::size_t k = 0; k < dims; ++k) {
      point[k] = grids[k].x[idx[k]];
      weight *= grids[k].w[idx[k]];
    }
    std::fill(value.begin(), value.end(), cplx{});
    f(point, value);
    for (std::size_t c = 0; c < comps; ++c) acc[c] += weight * value[c];

    std::size_t k = dims;
    while (k > 1) {
      --k;
      if (++idx[k] < n) break;
      idx[k] = 0;
      if (k == 1) return;
    }
    if (dims == 1) return;
  }
}

}  // namespace

const HermiteRule& hermite_rule(int n) {
  if (n < 1 || n > kMaxHermiteNodes) {
    std::ostringstream msg;
    msg << "Hermite rule order " << n << " outside [1, " << kMaxHermiteNodes << "]";
    throw ValidationError(msg.str());
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<HermiteRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<HermiteRule>(build_hermite_rule(n));
  return *slot;
}

void QuadratureSpec::validate() const {
  if (axes.empty() || axes.size() > 4) throw ValidationError("quadrature supports 1 to 4 dimensions");
  for (const auto& a : axes) {
    if (!(a.width > 0.0) || !std::isfinite(a.width) || !std::isfinite(a.center)) {
      throw ValidationError("quadrature envelope widths must be positive and finite");
    }
  }
  if (nodes_per_axis < 8) throw ValidationError("nodes_per_axis must be at least 8");
  if (max_nodes_per_axis > kMaxHermiteNodes) {
    throw ValidationError("max_nodes_per_axis exceeds the largest available Hermite rule");
  }
  if (nodes_per_axis > max_nodes_per_axis) {
    throw ValidationError("nodes_per_axis must not exceed max_nodes_per_axis");
  }
  if (!(target_rel_tol > 0.0)) throw ValidationError("target_rel_tol must be positive");
  if (threads < 1) throw ValidationError("threads must be at least 1");
}

std::vector<cplx> integrate_fixed(const MultiIntegrand& f, std::size_t components,
                                  const std::vector<AxisScale>& axes, int n, int threads) {
  if (axes.empty() || axes.size() > 4) throw ValidationError("quadrature supports 1 to 4 dimensions");
  std::vector<Grid1D> grids;
  grids.reserve(axes.size());
  for (const auto& a : axes) grids.push_back(axis_grid(a, n));

  // One partial sum per first-axis slab, combined in slab order so the
  // result does not depend on the thread count.
  std::vector<std::vector<cplx>> partial(n, std::vector<cplx>(components));
  const int workers = std::clamp(threads, 1, n);
  if (workers == 1) {
    for (int i0 = 0; i0 < n; ++i0) sum_slab(f, grids, i0, partial[i0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (int i0 = t; i0 < n; i0 += workers) sum_slab(f, grids, i0, partial[i0]);
      });
    }
  }
  std::vector<cplx> total(components);
  for (const auto& slab : partial)
    for (std::size_t c = 0; c < components; ++c) total[c] += slab[c];
  return total;
}

std::vector<QuadResult> integrate(const MultiIntegrand& f, std::size_t components,
                                  const QuadratureSpec& spec) {
  spec.validate();
  const std::size_t dims = spec.axes.size();
  auto count = [dims](int n) {
    long long c = 1;
    for (std::size_t k = 0; k < dims; ++k) c *= n;
    return c;
  };

  int n = spec.nodes_per_axis;
  std::vector<cplx> coarse = integrate_fixed(f, components, spec.axes, n, spec.threads);
  long long used = count(n);
  double last_err = std::numeric_limits<double>::infinity();
  while (2 * n <= spec.max_nodes_per_axis) {
    std::vector<cplx> fine = integrate_fixed(f, components, spec.axes, 2 * n, spec.threads);
    used += count(2 * n);
    double err = 0.0, scale = 0.0;
    for (std::size_t c = 0; c < components; ++c) {
      err = std::max(err, std::abs(fine[c] - coarse[c]));
      scale = std::max(scale, std::abs(fine[c]));
    }
    last_err = err;
    std::vector<QuadResult> out(components);
    for (std::size_t c = 0; c < components; ++c) {
      out[c] = {fine[c], std::abs(fine[c] - coarse[c]), count(2 * n)};
    }
    if (err <= spec.target_rel_tol * scale) return out;
    coarse = std::move(fine);
    n *= 2;
  }

  std::vector<QuadResult> best(components);
  for (std::size_t c = 0; c < components; ++c) best[c] = {coarse[c], last_err, count(n)};
  std::ostringstream msg;
  msg << "quadrature did not reach relative tolerance " << spec.target_rel_tol << " within "
      << spec.max_nodes_per_axis << " nodes per axis (last n = " << n
      << ", error estimate " << last_err << ", " << used << " evaluations)";
  throw NonConvergenceError(msg.str(), std::move(best));
}

QuadResult integrate(const Integrand& f, const QuadratureSpec& spec) {
  MultiIntegrand wrapped = [&f](std::span<const double> x, std::span<cplx> out) { out[0] = f(x); };
  return integrate(wrapped, 1, spec).front();
}

}  // namespace bellwave
