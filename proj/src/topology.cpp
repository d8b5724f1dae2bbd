#include "cvml/topology.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace cvml {

namespace {

bool approx_zero(Complex v, double eps) {
  return std::abs(v.real()) <= eps && std::abs(v.imag()) <= eps;
}

void require_subset(const FiniteSpace& space, std::span<const Index> a_set) {
  for (const Index a : a_set) {
    if (a < 0 || a >= space.size()) {
      throw InvalidInput("subset index out of range");
    }
  }
}

// Running componentwise maximum of residual-family members, remembering the
// lexicographically smallest pair attaining each component.
struct PairMax {
  double best_re = -1.0;
  double best_im = -1.0;
  Complex re_member = {0.0, 0.0};
  Complex im_member = {0.0, 0.0};
  std::pair<int, int> re_pair = {0, 0};
  std::pair<int, int> im_pair = {0, 0};
  bool seen = false;

  void feed(Complex member, int i, int j) {
    const std::pair<int, int> p{i, j};
    if (!seen || member.real() > best_re ||
        (member.real() == best_re && p < re_pair)) {
      best_re = member.real();
      re_member = member;
      re_pair = p;
    }
    if (!seen || member.imag() > best_im ||
        (member.imag() == best_im && p < im_pair)) {
      best_im = member.imag();
      im_member = member;
      im_pair = p;
    }
    seen = true;
  }

  void merge(const PairMax& other) {
    if (!other.seen) return;
    if (!seen || other.best_re > best_re ||
        (other.best_re == best_re && other.re_pair < re_pair)) {
      best_re = other.best_re;
      re_member = other.re_member;
      re_pair = other.re_pair;
    }
    if (!seen || other.best_im > best_im ||
        (other.best_im == best_im && other.im_pair < im_pair)) {
      best_im = other.best_im;
      im_member = other.im_member;
      im_pair = other.im_pair;
    }
    seen = true;
  }
};

DiameterResult finish(const PairMax& acc, Tolerance tol, bool sampled) {
  DiameterResult result;
  result.value = {acc.best_re, acc.best_im};
  const bool re_dominates = acc.best_re >= acc.best_im;
  const Complex member = re_dominates ? acc.re_member : acc.im_member;
  result.witness = re_dominates ? acc.re_pair : acc.im_pair;
  const bool realizes = member.real() >= acc.best_re - tol.eps &&
                        member.imag() >= acc.best_im - tol.eps;
  result.attained = !sampled && realizes;
  return result;
}

}  // namespace

Complex residual(const DistanceFn& d, Complex x0, Complex a) {
  require_finite(x0, "residual");
  require_finite(a, "residual");
  return abs_c(d(a, x0) - d(x0, x0));
}

Complex residual(const FiniteSpace& space, Index x0, Index a) {
  return abs_c(space.matrix(a, x0) - space.matrix(x0, x0));
}

bool ball_contains(const DistanceFn& d, const BallSpec& ball, Complex y,
                   Tolerance tol) {
  if (!lt_strict(Complex{0.0, 0.0}, ball.radius, tol)) {
    throw InvalidInput("ball radius must be strictly positive in both components");
  }
  require_finite(y, "ball_contains");
  return lt_strict(abs_c(d(ball.center, y) - d(ball.center, ball.center)),
                   ball.radius, tol);
}

bool ball_contains(const FiniteSpace& space, Index center, Complex radius,
                   Index y, Tolerance tol) {
  if (!lt_strict(Complex{0.0, 0.0}, radius, tol)) {
    throw InvalidInput("ball radius must be strictly positive in both components");
  }
  return lt_strict(abs_c(space.matrix(center, y) - space.matrix(center, center)),
                   radius, tol);
}

std::vector<Index> closure(const FiniteSpace& space,
                           std::span<const Index> a_set, Tolerance tol) {
  require_subset(space, a_set);
  std::vector<bool> in_a(static_cast<std::size_t>(space.size()), false);
  for (const Index a : a_set) in_a[static_cast<std::size_t>(a)] = true;

  std::vector<Index> result;
  for (Index x0 = 0; x0 < space.size(); ++x0) {
    bool member = in_a[static_cast<std::size_t>(x0)];
    for (const Index a : a_set) {
      if (member) break;
      member = approx_zero(residual(space, x0, a), tol.eps);
    }
    if (member) result.push_back(x0);
  }
  return result;
}

std::vector<Index> limit_points(const FiniteSpace& space,
                                std::span<const Index> a_set, Tolerance tol) {
  require_subset(space, a_set);
  std::vector<Index> result;
  for (Index x0 = 0; x0 < space.size(); ++x0) {
    for (const Index a : a_set) {
      if (a == x0) continue;
      if (approx_zero(residual(space, x0, a), tol.eps)) {
        result.push_back(x0);
        break;
      }
    }
  }
  return result;
}

bool is_closed(const FiniteSpace& space, std::span<const Index> a_set,
               Tolerance tol) {
  require_subset(space, a_set);
  std::vector<bool> in_a(static_cast<std::size_t>(space.size()), false);
  for (const Index a : a_set) in_a[static_cast<std::size_t>(a)] = true;
  for (const Index p : limit_points(space, a_set, tol)) {
    if (!in_a[static_cast<std::size_t>(p)]) return false;
  }
  return true;
}

DiameterResult diam_c(std::span<const Complex> points, const DistanceFn& d,
                      Tolerance tol, bool sampled) {
  if (points.empty()) throw InvalidInput("diam_c: point set is empty");
  for (const Complex p : points) require_finite(p, "diam_c point");

  const int n = static_cast<int>(points.size());
  std::vector<Complex> self(points.size());
  for (int i = 0; i < n; ++i) {
    self[static_cast<std::size_t>(i)] =
        d(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(i)]);
  }

  auto scan_rows = [&](int row_begin, int row_end, PairMax& acc) {
    for (int i = row_begin; i < row_end; ++i) {
      const Complex pi = points[static_cast<std::size_t>(i)];
      const Complex di = self[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) {
        const Complex v = d(pi, points[static_cast<std::size_t>(j)]);
        acc.feed(abs_c(v - di), i, j);
        acc.feed(abs_c(v - self[static_cast<std::size_t>(j)]), i, j);
      }
    }
  };

  const long long pair_count = static_cast<long long>(n) * n;
  unsigned workers = std::thread::hardware_concurrency();
  if (workers < 2 || pair_count < 1'000'000) workers = 1;

  PairMax total;
  if (workers == 1) {
    scan_rows(0, n, total);
  } else {
    std::vector<PairMax> partial(workers);
    std::vector<std::thread> threads;
    const int chunk = (n + static_cast<int>(workers) - 1) / static_cast<int>(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const int lo = static_cast<int>(w) * chunk;
      const int hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back(scan_rows, lo, hi, std::ref(partial[w]));
    }
    for (auto& t : threads) t.join();
    // Chunks cover disjoint row ranges; merging in chunk order yields the
    // same lexicographic tie-breaks as a single sweep.
    for (const PairMax& p : partial) total.merge(p);
  }

  return finish(total, tol, sampled);
}

DiameterResult diam_c(const FiniteSpace& space, std::span<const Index> subset,
                      Tolerance tol) {
  if (subset.empty()) throw InvalidInput("diam_c: point set is empty");
  require_subset(space, subset);

  PairMax acc;
  const int k = static_cast<int>(subset.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const Index a = subset[static_cast<std::size_t>(i)];
      const Index b = subset[static_cast<std::size_t>(j)];
      const Complex v = space.matrix(a, b);
      acc.feed(abs_c(v - space.matrix(a, a)), i, j);
      acc.feed(abs_c(v - space.matrix(b, b)), i, j);
    }
  }
  return finish(acc, tol, false);
}

}  // namespace cvml
