#include "iwkit/kernels.hpp"

namespace iwkit::kernels {

using u128 = unsigned __int128;

void axpy_mod_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                     std::uint64_t w, std::uint64_t m) noexcept {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::uint64_t>((static_cast<u128>(w) * src[i] + dst[i]) % m);
  }
}

void scale_mod_scalar(std::span<std::uint64_t> dst, std::uint64_t w, std::uint64_t m) noexcept {
  for (auto& x : dst) {
    x = static_cast<std::uint64_t>(static_cast<u128>(w) * x % m);
  }
}

}  // namespace iwkit::kernels
