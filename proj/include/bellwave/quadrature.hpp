#pragma once

// Tensor-product Gauss-Hermite quadrature for integrands that decay like a
// real Gaussian along every axis. Each axis is mapped affinely onto the
// Hermite weight using the axis' Gaussian envelope, and the remaining
// (polynomial times phase) factor is left to the rule. Convergence is
// judged by comparing n and 2n nodes per axis.

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace bellwave {

using cplx = std::complex<double>;

struct HermiteRule {
  std::vector<double> nodes;    // ascending, symmetric about 0
  std::vector<double> weights;  // for the weight function exp(-x^2)
  // weights[i] * exp(nodes[i]^2), for integrands that carry their own decay
  std::vector<double> unweighted;
};

inline constexpr int kMaxHermiteNodes = 256;

/// n-point Gauss-Hermite rule, exact for x^k exp(-x^2), k <= 2n - 1.
/// Throws ValidationError for n outside [1, kMaxHermiteNodes]. Rules are
/// cached; the returned reference stays valid for the program lifetime.
const HermiteRule& hermite_rule(int n);

/// Per-axis placement: an axis with centre c and envelope width s carries
/// nodes at c + sqrt(2) s u_i, matching an envelope exp(-(x-c)^2 / (2 s^2)).
struct AxisScale {
  double center = 0.0;
  double width = 1.0;
};

struct QuadratureSpec {
  int nodes_per_axis = 8;
  std::vector<AxisScale> axes;  // one per dimension
  double target_rel_tol = 1e-8;
  int max_nodes_per_axis = 128;
  int threads = 1;  // worker threads for one integral; result is thread-count independent

  void validate() const;
};

struct QuadResult {
  cplx value{};
  double abs_err_estimate = 0.0;
  long long nodes_used = 0;
};

/// Raised when doubling stops at max_nodes_per_axis without meeting the
/// tolerance. Carries the finest estimates computed.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, std::vector<QuadResult> best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const std::vector<QuadResult>& best() const { return best_; }

 private:
  std::vector<QuadResult> best_;
};

/// Scalar integrand over R^dims.
using Integrand = std::function<cplx(std::span<const double>)>;

/// Vector integrand: writes one value per component into the output span.
/// Must be safe to call concurrently.
using MultiIntegrand = std::function<void(std::span<const double>, std::span<cplx>)>;

/// Fixed-order tensor rule with n nodes per axis; dims = axes.size().
std::vector<cplx> integrate_fixed(const MultiIntegrand& f, std::size_t components,
                                  const std::vector<AxisScale>& axes, int n, int threads = 1);

/// Integrates all components on a shared grid, doubling n until
/// max_k |I_n,k - I_2n,k| <= target_rel_tol * max_k |I_2n,k|.
/// Every returned QuadResult carries the 2n value and its own |I_n - I_2n|.
std::vector<QuadResult> integrate(const MultiIntegrand& f, std::size_t components,
                                  const QuadratureSpec& spec);

QuadResult integrate(const Integrand& f, const QuadratureSpec& spec);

}  // namespace bellwave
