#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace zakspace::oracle {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

cplx expi(double a) { return {std::cos(a), std::sin(a)}; }

}  // namespace

int conjugacy_class_count(const Table& t) {
  const int n = static_cast<int>(t.size());
  long commuting = 0;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) commuting += t[g][h] == t[h][g];
  return static_cast<int>(commuting / n);
}

std::vector<int> orbit_labels(const Perm& perm) {
  const int m = static_cast<int>(perm[0].size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& p : perm)
    for (int x = 0; x < m; ++x) {
      const int a = find_root(parent, x), b = find_root(parent, p[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> label(m);
  for (int x = 0; x < m; ++x) label[x] = find_root(parent, x);
  return label;  // label = smallest point of the orbit
}

std::vector<double> orbit_measures(const Perm& perm, const std::vector<double>& w) {
  const auto label = orbit_labels(perm);
  const int m = static_cast<int>(label.size());
  const double order = static_cast<double>(perm.size());
  std::vector<double> out;
  for (int x = 0; x < m; ++x) {
    if (label[x] != x) continue;
    const long size = std::count(label.begin(), label.end(), x);
    out.push_back(w[x] * static_cast<double>(size) / order);
  }
  return out;
}

cplx weil_value(const Perm& perm, const std::vector<double>& w, const std::vector<cplx>& f) {
  const auto label = orbit_labels(perm);
  cplx s = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) s += f[x] * w[label[x]];
  return s;
}

cplx mackey_bruhat_value(const std::vector<double>& w, const std::vector<cplx>& f) {
  cplx s = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) s += f[x] * w[x];
  return s;
}

Sides cyclic_poisson(const std::vector<cplx>& f, const std::vector<int>& H) {
  const int n = static_cast<int>(f.size());
  Sides s{0.0, 0.0};
  for (int h : H) s.lhs += f[h];
  s.lhs /= static_cast<double>(H.size());
  for (int j = 0; j < n; ++j) {
    bool trivial = true;
    for (int h : H) trivial = trivial && (static_cast<long>(j) * h) % n == 0;
    if (!trivial) continue;
    cplx fj = 0.0;
    for (int g = 0; g < n; ++g) fj += f[g] * expi(-2.0 * std::numbers::pi * j * g / n);
    s.rhs += fj / static_cast<double>(n);
  }
  return s;
}

Eigen::MatrixXcd zak_sum(const Perm& perm, const Table& table, const std::vector<Eigen::MatrixXcd>& sigma,
                         const std::vector<cplx>& f, int x0) {
  const int n = static_cast<int>(table.size());
  int e = 0;
  for (int g = 0; g < n; ++g) {
    bool neutral = true;
    for (int x = 0; x < n; ++x) neutral = neutral && table[g][x] == x;
    if (neutral) e = g;
  }
  const long d = sigma[0].rows();
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(d, d);
  for (int g = 0; g < n; ++g) {
    int gi = 0;
    while (table[g][gi] != e) ++gi;
    z += f[perm[gi][x0]] * sigma[g].adjoint();
  }
  return z;
}

cplx classic_zak_direct(const std::vector<cplx>& samples, const std::vector<int>& cells,
                        const std::vector<int>& periods, const std::vector<int>& x0,
                        const std::vector<double>& k) {
  const std::size_t d = cells.size();
  std::vector<int> grid(d);
  long count = 1;
  for (std::size_t a = 0; a < d; ++a) {
    grid[a] = cells[a] * periods[a];
    count *= periods[a];
  }
  cplx s = 0.0;
  for (long vi = 0; vi < count; ++vi) {
    std::vector<long> v(d);
    long r = vi;
    for (int a = static_cast<int>(d) - 1; a >= 0; --a) {
      v[a] = r % periods[a];
      r /= periods[a];
    }
    long idx = 0;
    double phase = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
      long pos = (x0[a] - v[a] * cells[a]) % grid[a];
      if (pos < 0) pos += grid[a];
      idx = idx * grid[a] + pos;
      phase += k[a] * static_cast<double>(v[a]);
    }
    s += samples[static_cast<std::size_t>(idx)] * expi(-phase);
  }
  return s;
}

std::vector<double> ring_spectrum(double t, const std::vector<double>& onsite, int periods) {
  const int m = static_cast<int>(onsite.size());
  const int L = m * periods;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(L, L);
  for (int x = 0; x < L; ++x) {
    h(x, x) += onsite[x % m];
    h(x, (x + 1) % L) -= t;
    h((x + 1) % L, x) -= t;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + L);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> circulant_band(double t, double v, int periods) {
  std::vector<double> out;
  for (int j = 0; j < periods; ++j) out.push_back(v - 2.0 * t * std::cos(2.0 * std::numbers::pi * j / periods));
  std::sort(out.begin(), out.end());
  return out;
}

cplx quadrature_fourier(const std::vector<Eigen::Vector3d>& points, const std::vector<double>& w,
                        const std::vector<double>& density, const Eigen::Vector3d& l) {
  cplx s = 0.0;
  for (std::size_t x = 0; x < points.size(); ++x) s += w[x] * density[x] * expi(-l.dot(points[x]));
  return s;
}

long screw_word_count(int word_length, double radius, double advance) {
  const long by_radius = static_cast<long>(std::floor(radius / advance + 1e-12));
  return 2 * std::min<long>(word_length, by_radius) + 1;
}

}  // namespace zakspace::oracle
