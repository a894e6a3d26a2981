#include "zakspace/lattice_zak.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "zakspace/error.hpp"
#include "zakspace/parallel.hpp"

namespace zakspace {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

long product(const std::vector<int>& v) {
  long p = 1;
  for (int x : v) p *= x;
  return p;
}

// Row-major unravel / ravel.
std::vector<int> unravel(long idx, const std::vector<int>& shape) {
  std::vector<int> out(shape.size());
  for (int a = static_cast<int>(shape.size()) - 1; a >= 0; --a) {
    out[a] = static_cast<int>(idx % shape[a]);
    idx /= shape[a];
  }
  return out;
}

long ravel(const std::vector<int>& idx, const std::vector<int>& shape) {
  long out = 0;
  for (std::size_t a = 0; a < shape.size(); ++a) out = out * shape[a] + idx[a];
  return out;
}

// FFT over the period axes. direction = FFTW_BACKWARD realizes e^{+i k.u}.
class PeriodFft {
 public:
  PeriodFft(const std::vector<int>& periods, int direction) : n_(product(periods)) {
    in_ = fftw_alloc_complex(static_cast<std::size_t>(n_));
    out_ = fftw_alloc_complex(static_cast<std::size_t>(n_));
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_ = fftw_plan_dft(static_cast<int>(periods.size()), periods.data(), in_, out_, direction,
                          FFTW_ESTIMATE);
  }
  ~PeriodFft() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }
  PeriodFft(const PeriodFft&) = delete;
  PeriodFft& operator=(const PeriodFft&) = delete;

  // Thread-safe: buffers are caller-owned and allocated with fftw_malloc.
  void run(fftw_complex* in, fftw_complex* out) const { fftw_execute_dft(plan_, in, out); }
  long size() const { return n_; }

 private:
  long n_;
  fftw_complex* in_;
  fftw_complex* out_;
  fftw_plan plan_;
};

struct Buffers {
  fftw_complex* in;
  fftw_complex* out;
  explicit Buffers(long n)
      : in(fftw_alloc_complex(static_cast<std::size_t>(n))),
        out(fftw_alloc_complex(static_cast<std::size_t>(n))) {}
  ~Buffers() {
    fftw_free(in);
    fftw_free(out);
  }
  Buffers(const Buffers&) = delete;
  Buffers& operator=(const Buffers&) = delete;
};

}  // namespace

std::vector<int> LatticeShape::grid() const {
  std::vector<int> g(cells.size());
  for (std::size_t a = 0; a < cells.size(); ++a) g[a] = cells[a] * periods[a];
  return g;
}
long LatticeShape::grid_size() const { return product(grid()); }
long LatticeShape::cell_count() const { return product(cells); }
long LatticeShape::period_count() const { return product(periods); }

LatticeShape lattice_shape(const std::vector<int>& grid, const std::vector<int>& cells) {
  if (grid.empty() || grid.size() != cells.size())
    fail(ErrorCode::ShapeMismatch, "grid and cell shapes must have the same positive rank");
  LatticeShape s;
  for (std::size_t a = 0; a < grid.size(); ++a) {
    if (grid[a] <= 0 || cells[a] <= 0 || grid[a] % cells[a] != 0)
      fail(ErrorCode::ShapeMismatch, "grid axis " + std::to_string(a) + " of size " +
                                         std::to_string(grid[a]) + " is not divisible by cell size " +
                                         std::to_string(cells[a]));
    s.cells.push_back(cells[a]);
    s.periods.push_back(grid[a] / cells[a]);
  }
  return s;
}

cplx LatticeZakGrid::at(const std::vector<int>& x0, const std::vector<long>& j) const {
  std::vector<int> jr(j.size());
  for (std::size_t a = 0; a < j.size(); ++a) {
    const long n = shape.periods[a];
    jr[a] = static_cast<int>(((j[a] % n) + n) % n);
  }
  return at(ravel(x0, shape.cells), ravel(jr, shape.periods));
}

std::vector<double> LatticeZakGrid::k_value(long j) const {
  const std::vector<int> idx = unravel(j, shape.periods);
  std::vector<double> k(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) k[a] = kTwoPi * idx[a] / shape.periods[a];
  return k;
}

LatticeZakGrid classic_zak(const std::vector<cplx>& samples, const LatticeShape& shape, int jobs) {
  if (static_cast<long>(samples.size()) != shape.grid_size())
    fail(ErrorCode::ShapeMismatch, "sample count does not match the grid shape");
  const std::vector<int> grid = shape.grid();
  const long nc = shape.cell_count();
  const long np = shape.period_count();
  LatticeZakGrid out;
  out.shape = shape;
  out.values.resize(static_cast<std::size_t>(nc * np));
  const PeriodFft fft(shape.periods, FFTW_BACKWARD);
  const int d = shape.dims();
  parallel_for(static_cast<std::size_t>(nc), jobs, [&](std::size_t c) {
    Buffers buf(np);
    const std::vector<int> x0 = unravel(static_cast<long>(c), shape.cells);
    std::vector<int> pos(d);
    // g(u) = f(x0 + u M); its backward DFT is sum_v f(x0 - v M) e^{-i k.v}.
    for (long u = 0; u < np; ++u) {
      const std::vector<int> uv = unravel(u, shape.periods);
      for (int a = 0; a < d; ++a) pos[a] = x0[a] + uv[a] * shape.cells[a];
      const cplx v = samples[static_cast<std::size_t>(ravel(pos, grid))];
      buf.in[u][0] = v.real();
      buf.in[u][1] = v.imag();
    }
    fft.run(buf.in, buf.out);
    for (long j = 0; j < np; ++j)
      out.values[static_cast<std::size_t>(static_cast<long>(c) * np + j)] = {buf.out[j][0], buf.out[j][1]};
  });
  return out;
}

std::vector<cplx> classic_zak_inverse(const LatticeZakGrid& z, int jobs) {
  const LatticeShape& shape = z.shape;
  const std::vector<int> grid = shape.grid();
  const long nc = shape.cell_count();
  const long np = shape.period_count();
  if (static_cast<long>(z.values.size()) != nc * np)
    fail(ErrorCode::ShapeMismatch, "Zak grid has the wrong number of values");
  std::vector<cplx> f(static_cast<std::size_t>(shape.grid_size()));
  const PeriodFft fft(shape.periods, FFTW_FORWARD);
  const int d = shape.dims();
  const double norm = 1.0 / static_cast<double>(np);
  parallel_for(static_cast<std::size_t>(nc), jobs, [&](std::size_t c) {
    Buffers buf(np);
    for (long j = 0; j < np; ++j) {
      const cplx v = z.values[static_cast<std::size_t>(static_cast<long>(c) * np + j)];
      buf.in[j][0] = v.real();
      buf.in[j][1] = v.imag();
    }
    fft.run(buf.in, buf.out);
    const std::vector<int> x0 = unravel(static_cast<long>(c), shape.cells);
    std::vector<int> pos(d);
    for (long u = 0; u < np; ++u) {
      const std::vector<int> uv = unravel(u, shape.periods);
      for (int a = 0; a < d; ++a) pos[a] = x0[a] + uv[a] * shape.cells[a];
      f[static_cast<std::size_t>(ravel(pos, grid))] = cplx(buf.out[u][0], buf.out[u][1]) * norm;
    }
  });
  return f;
}

LatticeUnitarity lattice_unitarity(const LatticeZakGrid& z, const std::vector<cplx>& samples) {
  LatticeUnitarity u;
  for (const cplx& v : samples) u.lhs += std::norm(v);
  for (const cplx& v : z.values) u.rhs += std::norm(v);
  u.rhs /= static_cast<double>(z.shape.period_count());
  u.residual = std::abs(u.lhs - u.rhs);
  return u;
}

}  // namespace zakspace
