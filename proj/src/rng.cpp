#include "wychan/rng.hpp"

#include <cmath>
#include <numbers>

namespace wychan {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // SplitMix64 step applied to master advanced by the stream index.
  std::uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double RandomStream::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_open() {
  return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::gaussian() {
  const double u = uniform_open();
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

Complex RandomStream::complex_gaussian() {
  const double u = uniform_open();
  const double v = uniform();
  const double radius = std::sqrt(-std::log(u));
  return Complex(radius * std::cos(2.0 * std::numbers::pi * v),
                 radius * std::sin(2.0 * std::numbers::pi * v));
}

}  // namespace wychan
