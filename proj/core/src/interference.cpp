#include "triphoton/interference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "triphoton/permanent.hpp"

namespace triphoton {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Brent's derivative-free local minimizer on [a, b] with absolute tolerance t.
// The relative floor is machine epsilon, not its square root: the coincidence
// probability touches zero, so its quadratic signal stays above the evaluation
// noise all the way down and the usual sqrt(eps) floor would stall refinement.
double brent_minimize(const std::function<double(double)>& f, double a, double b, double t,
                      double* f_at_min) {
  const double golden = 0.5 * (3.0 - std::sqrt(5.0));
  const double eps = std::numeric_limits<double>::epsilon();

  double sa = a, sb = b;
  double x = sa + golden * (sb - sa);
  double w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;

  for (;;) {
    const double m = 0.5 * (sa + sb);
    const double tol = eps * std::fabs(x) + t;
    const double tol2 = 2.0 * tol;
    if (std::fabs(x - m) <= tol2 - 0.5 * (sb - sa)) break;

    double p = 0.0, q = 0.0, r = 0.0;
    if (tol < std::fabs(e)) {
      // parabola through (v,fv), (w,fw), (x,fx)
      r = (x - w) * (fx - fv);
      q = (x - v) * (fx - fw);
      p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::fabs(q);
      r = e;
      e = d;
    }
    double u;
    if (std::fabs(p) < std::fabs(0.5 * q * r) && q * (sa - x) < p && p < q * (sb - x)) {
      d = p / q;
      u = x + d;
      if (u - sa < tol2 || sb - u < tol2) d = (x < m) ? tol : -tol;
    } else {
      e = (x < m) ? sb - x : sa - x;
      d = golden * e;
    }
    u = (tol <= std::fabs(d)) ? x + d : (d > 0.0 ? x + tol : x - tol);
    const double fu = f(u);

    if (fu <= fx) {
      if (u < x) sb = x; else sa = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) sa = u; else sb = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  if (f_at_min) *f_at_min = fx;
  return x;
}

}  // namespace

OutputState evolve(const DeviceParams& d, const Occupation& input) {
  if (input.total() > 12) throw std::invalid_argument("evolve: photon total capped at 12");
  const Matrix3c v = transfer_matrix(d);
  const std::vector<Occupation> basis = enumerate_basis(input.total());
  std::vector<cdouble> amps(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    amps[i] = transition_amplitude(v, input, basis[i]);
  }
  return OutputState(input, std::move(amps));
}

OutputState evolve_multinomial(const DeviceParams& d, const Occupation& input) {
  if (input.total() > 6) throw std::invalid_argument("evolve_multinomial: photon total capped at 6");
  const Matrix3c v = transfer_matrix(d);

  // Expand prod_j (sum_l V_jl adag_l)^{input_j} |0> over creation-operator
  // monomials, then convert monomial coefficients to Fock amplitudes.
  std::map<Occupation, cdouble> monomials;
  monomials[Occupation(0, 0, 0)] = 1.0;
  for (int mode = 0; mode < 3; ++mode) {
    for (int rep = 0; rep < input[mode]; ++rep) {
      std::map<Occupation, cdouble> next;
      for (const auto& [occ, coeff] : monomials) {
        for (int l = 0; l < 3; ++l) {
          Occupation bumped(occ[0] + (l == 0), occ[1] + (l == 1), occ[2] + (l == 2));
          next[bumped] += coeff * v(mode, l);
        }
      }
      monomials = std::move(next);
    }
  }

  double in_norm = 1.0;
  for (int mode = 0; mode < 3; ++mode) in_norm *= factorial(input[mode]);

  const std::vector<Occupation> basis = enumerate_basis(input.total());
  std::vector<cdouble> amps(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto it = monomials.find(basis[i]);
    if (it == monomials.end()) continue;
    double out_norm = 1.0;
    for (int mode = 0; mode < 3; ++mode) out_norm *= factorial(basis[i][mode]);
    amps[i] = it->second * std::sqrt(out_norm / in_norm);
  }
  return OutputState(input, std::move(amps));
}

cdouble coincidence_amplitude(const DeviceParams& d) {
  static const Occupation one_each(1, 1, 1);
  return transition_amplitude(transfer_matrix(d), one_each, one_each);
}

std::string ContourBranch::label() const {
  if (!analytic) return "numeric";
  std::string s = "o";
  s += (outer_sign > 0) ? '+' : '-';
  s += 'i';
  s += (inner_sign > 0) ? '+' : '-';
  s += 'n';
  s += static_cast<char>('0' + n);
  return s;
}

std::vector<ContourPoint> hom_contour_analytic(double G, double residual_tol) {
  std::vector<ContourPoint> out;

  const double poly = 20.0 * std::cos(G) +
                      3.0 * (8.0 * std::cos(2.0 * G) + 4.0 * std::cos(3.0 * G) +
                             3.0 * std::cos(4.0 * G) + 5.0);
  const double sin_half_sq = std::sin(0.5 * G) * std::sin(0.5 * G);
  if (!(sin_half_sq > 0.0) || poly < 0.0) return out;  // pole or complex-valued branch

  const double q = std::sqrt(2.0) * std::sqrt(poly) / (sin_half_sq * (3.0 * std::cos(G) + 2.0));

  for (int inner : {+1, -1}) {
    const double u = 8.0 + inner * q;
    // arcsec(4/sqrt(u)) is real only for u in [0, 16]
    if (!std::isfinite(u) || u < 0.0 || u > 16.0) continue;
    const double alpha = std::acos(std::sqrt(u) / 4.0);
    for (int n : {0, 1}) {
      for (int outer : {+1, -1}) {
        const double theta = n * kPi + outer * alpha;
        const double residual = std::abs(coincidence_amplitude({G, theta, 0.0, 0.0}));
        if (residual <= residual_tol) {
          out.push_back({G, theta, residual, {true, outer, inner, n}});
        }
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const ContourPoint& a, const ContourPoint& b) { return a.theta < b.theta; });
  // branches can coincide (alpha = 0 or q = 0); keep one point per theta
  out.erase(std::unique(out.begin(), out.end(),
                        [](const ContourPoint& a, const ContourPoint& b) {
                          return std::fabs(a.theta - b.theta) <= 1e-12;
                        }),
            out.end());
  return out;
}

std::vector<ContourPoint> hom_contour_numeric(const std::vector<double>& g_grid,
                                              double theta_min, double theta_max,
                                              double accept_tol) {
  if (g_grid.empty()) throw std::invalid_argument("hom_contour_numeric: empty G grid");
  if (!(theta_max > theta_min) || !std::isfinite(theta_min) || !std::isfinite(theta_max)) {
    throw std::invalid_argument("hom_contour_numeric: invalid theta window");
  }

  const double width = theta_max - theta_min;
  const int n_samples = std::max(721, static_cast<int>(std::ceil(720.0 * width / kPi)) + 1);

  std::vector<ContourPoint> out;
  std::vector<double> fs(static_cast<std::size_t>(n_samples));
  for (double G : g_grid) {
    const auto f = [G](double theta) {
      return std::norm(coincidence_amplitude({G, theta, 0.0, 0.0}));
    };
    const auto theta_at = [&](int i) { return theta_min + width * i / (n_samples - 1); };
    for (int i = 0; i < n_samples; ++i) fs[static_cast<std::size_t>(i)] = f(theta_at(i));

    std::vector<ContourPoint> found;
    for (int i = 1; i + 1 < n_samples; ++i) {
      const auto fi = fs[static_cast<std::size_t>(i)];
      if (fi > fs[static_cast<std::size_t>(i - 1)] || fi > fs[static_cast<std::size_t>(i + 1)]) {
        continue;
      }
      // sub-scan the bracket so nearly-merged minima refine separately
      const double lo = theta_at(i - 1), hi = theta_at(i + 1);
      constexpr int kSub = 64;
      std::array<double, kSub + 1> sub;
      for (int s = 0; s <= kSub; ++s) sub[static_cast<std::size_t>(s)] = f(lo + (hi - lo) * s / kSub);
      for (int s = 1; s < kSub; ++s) {
        if (sub[static_cast<std::size_t>(s)] > sub[static_cast<std::size_t>(s - 1)] ||
            sub[static_cast<std::size_t>(s)] > sub[static_cast<std::size_t>(s + 1)]) {
          continue;
        }
        double f_min = 0.0;
        const double theta = brent_minimize(f, lo + (hi - lo) * (s - 1) / kSub,
                                            lo + (hi - lo) * (s + 1) / kSub, 1e-12, &f_min);
        if (f_min <= accept_tol) {
          found.push_back({G, theta, std::sqrt(f_min), {false, 0, 0, 0}});
        }
      }
    }

    std::sort(found.begin(), found.end(),
              [](const ContourPoint& a, const ContourPoint& b) { return a.theta < b.theta; });
    for (const ContourPoint& p : found) {
      if (!out.empty() && out.back().G == p.G && std::fabs(out.back().theta - p.theta) <= 1e-10) {
        if (p.c111_abs < out.back().c111_abs) out.back() = p;
        continue;
      }
      out.push_back(p);
    }
  }
  return out;
}

Landscape coincidence_landscape(double g_min, double g_max, double theta_min, double theta_max,
                                int g_res, int theta_res) {
  if (g_res < 2 || theta_res < 2) {
    throw std::invalid_argument("coincidence_landscape: resolution must be at least 2 per axis");
  }
  Landscape l;
  l.g_values.resize(static_cast<std::size_t>(g_res));
  l.theta_values.resize(static_cast<std::size_t>(theta_res));
  for (int i = 0; i < g_res; ++i) {
    l.g_values[static_cast<std::size_t>(i)] = g_min + (g_max - g_min) * i / (g_res - 1);
  }
  for (int j = 0; j < theta_res; ++j) {
    l.theta_values[static_cast<std::size_t>(j)] =
        theta_min + (theta_max - theta_min) * j / (theta_res - 1);
  }
  l.prob.resize(static_cast<std::size_t>(g_res) * static_cast<std::size_t>(theta_res));
  for (int i = 0; i < g_res; ++i) {
    for (int j = 0; j < theta_res; ++j) {
      const double p = std::norm(coincidence_amplitude(
          {l.g_values[static_cast<std::size_t>(i)], l.theta_values[static_cast<std::size_t>(j)],
           0.0, 0.0}));
      l.prob[static_cast<std::size_t>(i) * static_cast<std::size_t>(theta_res) +
             static_cast<std::size_t>(j)] = std::clamp(p, 0.0, 1.0);
    }
  }
  return l;
}

double two_photon_coincidence(const DeviceParams& d, int mode_j, int mode_k) {
  if (mode_j < 1 || mode_j > 3 || mode_k < 1 || mode_k > 3 || mode_j == mode_k) {
    throw std::invalid_argument("two_photon_coincidence: modes must be distinct and in 1..3");
  }
  const Matrix3c v = transfer_matrix(d);
  const int j = mode_j - 1, k = mode_k - 1;
  return std::abs(v(j, j) * v(k, k) + v(j, k) * v(k, j));
}

}  // namespace triphoton
