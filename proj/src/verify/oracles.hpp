#pragma once

// Brute-force reference values. Deliberately written against plain arrays and
// closed forms so they share no code path with the library algorithms.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace zakspace::oracle {

using cplx = std::complex<double>;
using Table = std::vector<std::vector<int>>;
using Perm = std::vector<std::vector<int>>;

// Number of conjugacy classes via Burnside: #{(g,h) : gh = hg} / |G|.
int conjugacy_class_count(const Table& table);

// Orbit labels by union-find over all generators' images.
std::vector<int> orbit_labels(const Perm& perm);

// Orbit measure from orbit-stabilizer: m(O) = w(min O) |O| / |G|, listed by
// orbit in order of smallest point.
std::vector<double> orbit_measures(const Perm& perm, const std::vector<double>& weights);

// Both sides of the Weil identity collapse to sum_x f(x) w(min orbit(x)).
cplx weil_value(const Perm& perm, const std::vector<double>& weights, const std::vector<cplx>& f);
cplx mackey_bruhat_value(const std::vector<double>& weights, const std::vector<cplx>& f);

// Z_N Poisson sides with explicit characters exp(2 pi i j g / N).
struct Sides {
  cplx lhs;
  cplx rhs;
};
Sides cyclic_poisson(const std::vector<cplx>& f, const std::vector<int>& subgroup);

// Z(x0, sigma) by the defining sum.
Eigen::MatrixXcd zak_sum(const Perm& perm, const Table& table, const std::vector<Eigen::MatrixXcd>& sigma,
                         const std::vector<cplx>& f, int x0);

// Classic Zak by direct summation at a real dual vector k:
// sum_v f(x0 - v M) e^{-i k.v}, row-major grid of shape cells*periods.
cplx classic_zak_direct(const std::vector<cplx>& samples, const std::vector<int>& cells,
                        const std::vector<int>& periods, const std::vector<int>& x0,
                        const std::vector<double>& k);

// Sorted spectrum of the N*M ring with hopping t and onsite V (dense solve).
std::vector<double> ring_spectrum(double t, const std::vector<double>& onsite, int periods);
// Closed form for M = 1: V - 2 t cos(2 pi j / N), sorted.
std::vector<double> circulant_band(double t, double v, int periods);

// sum_x w phi e^{-i l.x}
cplx quadrature_fourier(const std::vector<Eigen::Vector3d>& points, const std::vector<double>& weights,
                        const std::vector<double>& density, const Eigen::Vector3d& l);

// Elements generated by one screw (or translation) of step length `advance`
// under word bound L and radius r: 2 min(L, floor(r / advance)) + 1.
long screw_word_count(int word_length, double radius, double advance);

}  // namespace zakspace::oracle
