#include "montyhall/random.hpp"

namespace montyhall {

std::uint64_t derive_substream_seed(std::uint64_t master_seed, std::uint64_t point, std::uint64_t chunk) noexcept {
    std::uint64_t h = mix64(master_seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ mix64(point + 0x6a09e667f3bcc909ULL));
    h = mix64(h ^ mix64(chunk + 0xbb67ae8584caa73bULL));
    return h;
}

}  // namespace montyhall
