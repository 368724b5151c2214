#include "mfdkf/rng.hpp"

#include <cmath>
#include <numbers>

namespace mfdkf {

namespace {

// splitmix64 finalizer; good avalanche, cheap, well studied.
std::uint64_t mix(std::uint64_t s, std::uint64_t v) {
    s += 0x9e3779b97f4a7c15ULL + v;
    s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ULL;
    s = (s ^ (s >> 27)) * 0x94d049bb133111ebULL;
    return s ^ (s >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t domain,
                          std::uint64_t index) {
    return mix(mix(master, domain), index);
}

double RngStream::normal() {
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::exponential() {
    return -std::log(uniform_open());
}

}  // namespace mfdkf
