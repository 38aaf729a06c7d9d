#include "rwl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace rwl {

namespace {

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;
  double tol;
  int depth;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

constexpr int kMaxDepth = 60;

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& opts) {
  QuadratureResult out;
  if (a == b) return out;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double coarse = simpson(a, b, fa, fm, fb);
  const double budget = std::max(opts.abs_tol, opts.rel_tol * std::abs(coarse));

  std::vector<Panel> stack{{a, b, fa, fm, fb, coarse, budget, 0}};
  std::size_t live = 1;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + mid), rm = 0.5 * (mid + p.b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(p.a, mid, p.fa, flm, p.fm);
    const double right = simpson(mid, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    const bool capped = live >= opts.max_intervals || p.depth >= kMaxDepth;
    if (std::abs(delta) <= 15.0 * p.tol || capped) {
      if (capped && std::abs(delta) > 15.0 * p.tol) out.converged = false;
      out.value += left + right + delta / 15.0;
      out.error_estimate += std::abs(delta) / 15.0;
      continue;
    }
    ++live;
    stack.push_back({mid, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol, p.depth + 1});
    stack.push_back({p.a, mid, p.fa, flm, p.fm, left, 0.5 * p.tol, p.depth + 1});
  }
  out.intervals = live;
  return out;
}

}  // namespace rwl
