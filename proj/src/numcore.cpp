#include "jlp/numcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <vector>

namespace jlp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.414213562373095048801688724209698079;

}  // namespace

// ---------------------------------------------------------------------------
// LogValue

LogValue LogValue::from_value(double v) {
  if (std::isnan(v)) throw std::domain_error("LogValue: NaN");
  if (v == 0.0) return {0.0, 0};
  return {std::log(std::fabs(v)), v > 0.0 ? +1 : -1};
}

LogValue LogValue::from_log(double log_magnitude, int sign) {
  if (sign == 0) return {0.0, 0};
  return {log_magnitude, sign > 0 ? +1 : -1};
}

double LogValue::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude);
}

LogValue LogValue::operator*(const LogValue& rhs) const {
  if (sign == 0 || rhs.sign == 0) return {0.0, 0};
  return {log_magnitude + rhs.log_magnitude, sign * rhs.sign};
}

LogValue LogValue::operator/(const LogValue& rhs) const {
  if (rhs.sign == 0) throw std::domain_error("LogValue: division by zero");
  if (sign == 0) return {0.0, 0};
  return {log_magnitude - rhs.log_magnitude, sign * rhs.sign};
}

// ---------------------------------------------------------------------------
// Model odds

ModelOdds posterior_model_odds(double prior_odds, double bf10) {
  if (!(prior_odds > 0.0) || !std::isfinite(prior_odds))
    throw std::domain_error("posterior_model_odds: prior odds must be positive finite");
  if (!(bf10 > 0.0) || !std::isfinite(bf10))
    throw std::domain_error("posterior_model_odds: Bayes factor must be positive finite");
  return {prior_odds, bf10, bf10 * prior_odds};
}

// ---------------------------------------------------------------------------
// Special functions

double log_gamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("log_gamma: requires x > 0");
#ifdef __GLIBC__
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

namespace {

// Continued fraction for I_x(a,b), modified Lentz.
double beta_continued_fraction(double x, double a, double b) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("regularized_incomplete_beta: continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("regularized_incomplete_beta: requires a > 0 and b > 0");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("regularized_incomplete_beta: requires 0 <= x <= 1");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = a * std::log(x) + b * std::log1p(-x) -
                           (log_gamma(a) + log_gamma(b) - log_gamma(a + b));
  if (x < (a + 1.0) / (a + b + 2.0))
    return std::exp(log_front) * beta_continued_fraction(x, a, b) / a;
  return 1.0 - std::exp(log_front) * beta_continued_fraction(1.0 - x, b, a) / b;
}

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

namespace {

// Rational initial guess for Phi^-1 (Acklam), then one Halley step.
double normal_quantile_guess(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("normal_quantile: requires 0 < p < 1");
  double z = normal_quantile_guess(p);
  for (int i = 0; i < 2; ++i) {
    const double e = normal_cdf(z) - p;
    const double u = e / normal_pdf(z);
    z -= u / (1.0 + 0.5 * z * u);  // Halley
  }
  return z;
}

double student_t_pdf(double t, double df) {
  if (!(df > 0.0)) throw std::domain_error("student_t_pdf: requires df > 0");
  const double log_norm = log_gamma(0.5 * (df + 1.0)) - log_gamma(0.5 * df) -
                          0.5 * std::log(df * kPi);
  return std::exp(log_norm - 0.5 * (df + 1.0) * std::log1p(t * t / df));
}

double student_t_cdf(double t, double df) {
  if (!(df > 0.0)) throw std::domain_error("student_t_cdf: requires df > 0");
  if (t == 0.0) return 0.5;
  const double x = df / (df + t * t);
  const double tail = 0.5 * regularized_incomplete_beta(x, 0.5 * df, 0.5);
  return t > 0.0 ? 1.0 - tail : tail;
}

double student_t_quantile(double p, double df) {
  if (!(df > 0.0)) throw std::domain_error("student_t_quantile: requires df > 0");
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("student_t_quantile: requires 0 < p < 1");
  if (p == 0.5) return 0.0;
  // expand a bracket and invert the CDF
  double hi = 1.0;
  const bool upper = p > 0.5;
  for (int i = 0; i < 2100; ++i) {
    const double q = upper ? student_t_cdf(hi, df) : student_t_cdf(-hi, df);
    if (upper ? q >= p : q <= p) break;
    hi *= 2.0;
  }
  const double lo = upper ? 0.0 : -hi;
  const double up = upper ? hi : 0.0;
  return find_root([&](double t) { return student_t_cdf(t, df) - p; }, lo, up,
                   1e-13 * std::max(1.0, hi));
}

// ---------------------------------------------------------------------------
// Quadrature: globally adaptive Gauss-Kronrod 7-15

namespace {

// G7-K15 abscissae/weights on [-1, 1]
const double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                        0.741531185599394, 0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.000000000000000};
const double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                        0.140653259715525, 0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469};

struct Segment {
  double a, b;
  double value;
  double error;
  long index;  // creation order, for deterministic tie-breaking
};

struct SegmentWorse {
  bool operator()(const Segment& s1, const Segment& s2) const {
    if (s1.error != s2.error) return s1.error < s2.error;
    return s1.index > s2.index;
  }
};

Segment gk15(const std::function<double(double)>& f, double a, double b,
             long index) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double result_k = kWgk[7] * fc;
  double result_g = kWg[3] * fc;
  double result_abs = std::fabs(result_k);
  for (int j = 0; j < 7; ++j) {
    const double x = half * kXgk[j];
    const double f1 = f(center - x);
    const double f2 = f(center + x);
    const double sum = f1 + f2;
    result_k += kWgk[j] * sum;
    result_abs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) result_g += kWg[j / 2] * sum;
  }
  const double value = result_k * half;
  double err = std::fabs((result_k - result_g) * half);
  // quadpack-style sharpening of the raw difference
  const double scale = result_abs * half;
  if (scale > 0.0 && err > 0.0)
    err = scale * std::min(1.0, std::pow(200.0 * err / scale, 1.5));
  return {a, b, value, err, index};
}

QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureOptions& opts, long budget) {
  std::priority_queue<Segment, std::vector<Segment>, SegmentWorse> queue;
  long evaluations = 15;
  long next_index = 1;
  queue.push(gk15(f, a, b, 0));
  double total = queue.top().value;
  double total_err = queue.top().error;
  while (true) {
    const double tol = std::max(opts.abs_tol, opts.rel_tol * std::fabs(total));
    if (total_err <= tol) break;
    if (evaluations + 30 > budget) {
      QuadratureResult best{total, total_err, evaluations};
      throw QuadratureError("integrate: evaluation budget exhausted", best);
    }
    Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at floating-point resolution; accept its estimate
      worst.error = 0.0;
      queue.push(worst);
      if (queue.top().error == 0.0) break;
      continue;
    }
    const Segment left = gk15(f, worst.a, mid, next_index++);
    const Segment right = gk15(f, mid, worst.b, next_index++);
    evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  // re-sum for a tighter error estimate
  double err = 0.0;
  while (!queue.empty()) {
    err += queue.top().error;
    queue.pop();
  }
  return {total, err, evaluations};
}

}  // namespace

long eval_budget() {
  static const long value = [] {
    if (const char* env = std::getenv("JLP_EVAL_BUDGET")) {
      const long v = std::atol(env);
      if (v > 0) return v;
    }
    return 2000000L;
  }();
  return value;
}

QuadratureResult integrate(const std::function<double(double)>& f,
                           Interval domain, QuadratureOptions opts) {
  if (!(opts.abs_tol > 0.0) || !(opts.rel_tol > 0.0))
    throw std::domain_error("integrate: tolerances must be positive");
  const long budget = opts.max_evaluations > 0 ? opts.max_evaluations : eval_budget();

  // u = x/(1+|x|) maps each infinite direction onto [0,1)
  if (domain.lo_infinite && domain.hi_infinite) {
    QuadratureOptions half = opts;
    half.abs_tol = 0.5 * opts.abs_tol;
    half.max_evaluations = budget;
    const QuadratureResult left = integrate(f, Interval::upto(0.0), half);
    half.max_evaluations = budget - left.evaluations;
    const QuadratureResult right = integrate(f, Interval::from(0.0), half);
    return {left.value + right.value,
            left.abs_error_estimate + right.abs_error_estimate,
            left.evaluations + right.evaluations};
  }
  if (domain.hi_infinite) {
    const double a = domain.lo;
    auto g = [&f, a](double u) {
      const double om = 1.0 - u;
      const double x = a + u / om;
      const double v = f(x);
      return v == 0.0 ? 0.0 : v / (om * om);
    };
    QuadratureOptions sub = opts;
    sub.max_evaluations = budget;
    return integrate_finite(g, 0.0, 1.0, sub, budget);
  }
  if (domain.lo_infinite) {
    const double b = domain.hi;
    auto g = [&f, b](double u) {
      const double om = 1.0 - u;
      const double x = b - u / om;
      const double v = f(x);
      return v == 0.0 ? 0.0 : v / (om * om);
    };
    QuadratureOptions sub = opts;
    sub.max_evaluations = budget;
    return integrate_finite(g, 0.0, 1.0, sub, budget);
  }
  if (!(domain.lo < domain.hi)) {
    if (domain.lo == domain.hi) return {0.0, 0.0, 1};
    throw std::domain_error("integrate: empty interval");
  }
  return integrate_finite(f, domain.lo, domain.hi, opts, budget);
}

// ---------------------------------------------------------------------------
// Root finding (Brent)

double find_root(const std::function<double(double)>& g, double lo, double hi,
                 double x_tol, int max_iterations) {
  if (!(x_tol > 0.0)) throw std::domain_error("find_root: x_tol must be positive");
  double a = lo, b = hi;
  double fa = g(a), fb = g(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw BracketError("find_root: bracket does not straddle a sign change");
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a; fc = fa; d = b - a; e = d;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) +
                        0.5 * x_tol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {  // secant
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {  // inverse quadratic interpolation
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::fabs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = g(b);
  }
  throw SearchBudgetError("find_root: iteration budget exhausted");
}

}  // namespace jlp
