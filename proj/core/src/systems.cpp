// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#include "walshlab/systems.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "walshlab/parallel.hpp"

namespace walshlab {

std::string to_string(SystemKind system) {
  return system == SystemKind::Walsh ? "walsh" : "kaczmarz";
}

SystemKind system_from_string(const std::string& name) {
  if (name == "walsh") return SystemKind::Walsh;
  if (name == "kaczmarz") return SystemKind::Kaczmarz;
  throw std::invalid_argument("unknown system '" + name + "' (want walsh|kaczmarz)");
}

int rademacher(int k, const DyadicPoint& x) {
  return x.coordinate(k) == 0 ? 1 : -1;
}

int msb_index(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("msb_index: undefined for n = 0");
  return std::bit_width(n) - 1;
}

std::uint64_t reverse_bits(std::uint64_t v, int bits) {
  std::uint64_t r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | ((v >> i) & 1u);
  }
  return r;
}

namespace {

void require_index(std::uint64_t n, Resolution res, const char* who) {
  if (n >= res.cells()) {
    throw std::invalid_argument(std::string(who) + ": index " + std::to_string(n) +
                                " out of range at resolution " + std::to_string(res.bits()));
  }
}

// w_n(cell j) = (-1)^popcount(n & reverse_bits(j, N)): bit k of n pairs with
// coordinate x_k, which lives at bit N-1-k of the cell index.
inline int walsh_sign(std::uint64_t n, std::size_t cell, int nbits) {
  return (std::popcount(n & reverse_bits(cell, nbits)) & 1) ? -1 : 1;
}

}  // namespace

int walsh(std::uint64_t n, const DyadicPoint& x) {
  require_index(n, x.resolution(), "walsh");
  return walsh_sign(n, x.cell(), x.resolution().bits());
}

std::uint64_t kaczmarz_index_map(std::uint64_t n) {
  if (n == 0) return 0;  // kappa_0 = w_0 = 1 pins rho(0) = 0
  const int s = msb_index(n);
  const std::uint64_t top = std::uint64_t{1} << s;
  return top + reverse_bits(n - top, s);
}

int kaczmarz(std::uint64_t n, const DyadicPoint& x) {
  require_index(n, x.resolution(), "kaczmarz");
  if (n == 0) return 1;
  const int s = msb_index(n);
  int sign = rademacher(s, x);
  for (int k = 0; k < s; ++k) {
    if ((n >> k) & 1u) sign *= rademacher(s - 1 - k, x);
  }
  return sign;
}

GridFunction system_function(SystemKind system, std::uint64_t n, Resolution res) {
  require_index(n, res, "system_function");
  const std::uint64_t walsh_index = system == SystemKind::Walsh ? n : kaczmarz_index_map(n);
  const int nbits = res.bits();
  std::vector<double> values(res.cells());
  for (std::size_t j = 0; j < values.size(); ++j) {
    values[j] = walsh_sign(walsh_index, j, nbits);
  }
  return GridFunction(res, std::move(values));
}

namespace {

// In-place Sylvester butterfly: H[i][j] = (-1)^popcount(i & j), H^2 = 2^N I.
void sylvester_butterfly(std::vector<double>& a) {
  const std::size_t n = a.size();
  for (std::size_t half = 1; half < n; half <<= 1) {
    const std::size_t stride = half << 1;
    const std::size_t blocks = n / stride;
    parallel_for(blocks, [&](std::size_t b0, std::size_t b1) {
      for (std::size_t b = b0; b < b1; ++b) {
        const std::size_t base = b * stride;
        for (std::size_t i = base; i < base + half; ++i) {
          const double u = a[i];
          const double v = a[i + half];
          a[i] = u + v;
          a[i + half] = u - v;
        }
      }
    });
  }
}

void bit_reversal_permute(std::vector<double>& a, int nbits) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t r = reverse_bits(i, nbits);
    if (r > i) std::swap(a[i], a[r]);
  }
}

}  // namespace

std::vector<double> fwht(std::vector<double> values, TransformDirection direction) {
  const std::size_t n = values.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("fwht: length must be a power of two");
  }
  const int nbits = msb_index(n);
  // The Paley-ordered matrix W[i][j] = (-1)^popcount(i & rev(j)) factors as
  // the Sylvester butterfly composed with one bit-reversal permutation
  // (the two commute), and W^2 = 2^N I.
  bit_reversal_permute(values, nbits);
  sylvester_butterfly(values);
  if (direction == TransformDirection::Forward) {
    for (double& v : values) v = std::ldexp(v, -nbits);
  }
  return values;
}

SpectralCoeffs fourier_coeffs(const GridFunction& f, SystemKind system) {
  std::vector<double> walsh_coeffs = fwht(f.values(), TransformDirection::Forward);
  if (system == SystemKind::Walsh) {
    return SpectralCoeffs{f.resolution(), system, std::move(walsh_coeffs)};
  }
  // kappa_i = w_rho(i), so the Kaczmarz coefficient i is the Walsh
  // coefficient rho(i); rho is an involution.
  std::vector<double> coeffs(walsh_coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i] = walsh_coeffs[kaczmarz_index_map(i)];
  }
  return SpectralCoeffs{f.resolution(), system, std::move(coeffs)};
}

GridFunction synthesize(const SpectralCoeffs& coeffs) {
  if (coeffs.coeffs.size() != coeffs.resolution.cells()) {
    throw std::invalid_argument("synthesize: coefficient count does not match resolution");
  }
  std::vector<double> walsh_coeffs;
  if (coeffs.system == SystemKind::Walsh) {
    walsh_coeffs = coeffs.coeffs;
  } else {
    walsh_coeffs.resize(coeffs.coeffs.size());
    for (std::size_t i = 0; i < walsh_coeffs.size(); ++i) {
      walsh_coeffs[kaczmarz_index_map(i)] = coeffs.coeffs[i];
    }
  }
  return GridFunction(coeffs.resolution, fwht(std::move(walsh_coeffs), TransformDirection::Inverse));
}

}  // namespace walshlab
