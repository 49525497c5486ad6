#include "littlewood/spectrum.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "littlewood/numbers.hpp"

namespace littlewood {
namespace {

// fftw_plan_* and fftw_destroy_plan are not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <class T>
FftwBuffer<T> fftw_buffer(std::size_t count) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * (count == 0 ? 1 : count)));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer<T>(p);
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {
    if (plan_ == nullptr) throw std::runtime_error("FFTW planning failed");
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

std::vector<double> folded(std::span<const std::int8_t> coeffs, std::size_t m) {
  std::vector<double> out(m, 0.0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) out[j % m] += coeffs[j];
  return out;
}

}  // namespace

Complex root_of_unity(std::int64_t k, std::int64_t m) {
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(mod_floor(k, m)) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

std::vector<Complex> evaluate_on_roots(std::span<const std::int8_t> coeffs, std::size_t m) {
  if (m == 0) return {};
  auto buf = fftw_buffer<fftw_complex>(m);
  const auto values = folded(coeffs, m);
  std::unique_ptr<Plan> plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = std::make_unique<Plan>(fftw_plan_dft_1d(static_cast<int>(m), buf.get(), buf.get(),
                                                   FFTW_BACKWARD, FFTW_ESTIMATE));
  }
  for (std::size_t k = 0; k < m; ++k) {
    buf[k][0] = values[k];
    buf[k][1] = 0.0;
  }
  plan->execute();
  std::vector<Complex> out(m);
  for (std::size_t k = 0; k < m; ++k) out[k] = {buf[k][0], buf[k][1]};
  return out;
}

std::vector<double> half_power_spectrum(std::span<const std::int8_t> coeffs, std::size_t m) {
  if (m == 0) return {};
  const std::size_t half = m / 2 + 1;
  auto in = fftw_buffer<double>(m);
  auto out = fftw_buffer<fftw_complex>(half);
  std::unique_ptr<Plan> plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = std::make_unique<Plan>(
        fftw_plan_dft_r2c_1d(static_cast<int>(m), in.get(), out.get(), FFTW_ESTIMATE));
  }
  const auto values = folded(coeffs, m);
  std::copy(values.begin(), values.end(), in.get());
  plan->execute();
  std::vector<double> power(half);
  for (std::size_t k = 0; k < half; ++k) {
    power[k] = out[k][0] * out[k][0] + out[k][1] * out[k][1];
  }
  return power;
}

std::vector<double> fft_autocorrelation(std::span<const std::int8_t> coeffs) {
  const std::size_t n = coeffs.size();
  if (n == 0) return {};
  const std::size_t size = std::bit_ceil(2 * n);
  const std::size_t half = size / 2 + 1;
  auto real = fftw_buffer<double>(size);
  auto spec = fftw_buffer<fftw_complex>(half);
  std::unique_ptr<Plan> forward;
  std::unique_ptr<Plan> backward;
  {
    std::lock_guard lock(planner_mutex());
    forward = std::make_unique<Plan>(
        fftw_plan_dft_r2c_1d(static_cast<int>(size), real.get(), spec.get(), FFTW_ESTIMATE));
    backward = std::make_unique<Plan>(
        fftw_plan_dft_c2r_1d(static_cast<int>(size), spec.get(), real.get(), FFTW_ESTIMATE));
  }
  for (std::size_t j = 0; j < size; ++j) real[j] = j < n ? coeffs[j] : 0.0;
  forward->execute();
  for (std::size_t k = 0; k < half; ++k) {
    spec[k][0] = spec[k][0] * spec[k][0] + spec[k][1] * spec[k][1];
    spec[k][1] = 0.0;
  }
  backward->execute();
  std::vector<double> c(n);
  const double scale = 1.0 / static_cast<double>(size);
  for (std::size_t u = 0; u < n; ++u) c[u] = real[u] * scale;
  return c;
}

std::vector<Complex> evaluate_on_roots_direct(std::span<const std::int8_t> coeffs,
                                              std::size_t m) {
  std::vector<Complex> out(m);
  const auto mm = static_cast<std::int64_t>(m);
  for (std::int64_t k = 0; k < mm; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      acc += static_cast<double>(coeffs[j]) *
             root_of_unity(static_cast<std::int64_t>(j) * k % mm, mm);
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace littlewood
