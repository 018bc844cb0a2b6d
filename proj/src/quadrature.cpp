#include "evenzeta/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace evenzeta {
namespace {

// Kronrod abscissae (descending), with weights for K15 and the embedded G7.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for nodes 1, 3, 5 and the centre.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  int depth;
  bool operator<(const Segment& other) const { return error < other.error; }
};

double eval_checked(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw std::invalid_argument("adaptive_quad: integrand not finite at x=" + std::to_string(x));
  }
  return y;
}

Segment gauss_kronrod(const Integrand& f, double a, double b, int depth, long& evaluations) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = eval_checked(f, centre);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = eval_checked(f, centre - dx) + eval_checked(f, centre + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) {
      gauss += kGaussWeights[i / 2] * pair;
    }
  }
  evaluations += 15;
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::fabs(kronrod - gauss), depth};
}

}  // namespace

QuadratureResult adaptive_quad(const Integrand& f, double a, double b, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("adaptive_quad: tolerance must be positive");
  }
  if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
    throw std::invalid_argument("adaptive_quad: require finite a <= b");
  }
  QuadratureResult result;
  if (a == b) {
    return result;
  }

  std::vector<Segment> heap;
  heap.push_back(gauss_kronrod(f, a, b, 0, result.evaluations));
  double total_error = heap.front().error;

  while (total_error > tol) {
    std::pop_heap(heap.begin(), heap.end());
    const Segment worst = heap.back();
    if (worst.depth >= kMaxQuadDepth) {
      throw QuadratureError("adaptive_quad: maximum subdivision depth " +
                            std::to_string(kMaxQuadDepth) + " exceeded on [" +
                            std::to_string(worst.a) + ", " + std::to_string(worst.b) +
                            "], error estimate " + std::to_string(total_error));
    }
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    heap.push_back(gauss_kronrod(f, worst.a, mid, worst.depth + 1, result.evaluations));
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(gauss_kronrod(f, mid, worst.b, worst.depth + 1, result.evaluations));
    std::push_heap(heap.begin(), heap.end());

    // Re-summed each pass; a running difference can stall above tol.
    total_error = 0.0;
    for (const Segment& s : heap) {
      total_error += s.error;
    }
  }

  // Sum the pieces in ascending order of |value| for a stable total.
  std::vector<double> values;
  values.reserve(heap.size());
  for (const Segment& s : heap) {
    values.push_back(s.value);
  }
  std::sort(values.begin(), values.end(),
            [](double x, double y) { return std::fabs(x) < std::fabs(y); });
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  result.value = sum;
  result.error_estimate = total_error;
  return result;
}

QuadratureResult integrate_signed(const Integrand& f, double a, double b, double tol) {
  if (a <= b) {
    return adaptive_quad(f, a, b, tol);
  }
  QuadratureResult r = adaptive_quad(f, b, a, tol);
  r.value = -r.value;
  return r;
}

}  // namespace evenzeta
