#pragma once

#include <cstdint>
#include <random>

namespace mfdkf {

// Derives an independent child seed from (master, domain, index).
// Used to give every consumer (calibration per node, truth per run,
// observations per run/node, EM restarts) its own stream such that
// adding runs or nodes never perturbs the draws of existing ones.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t domain,
                          std::uint64_t index);

// Seed-domain tags for derive_seed. Kept in one place so two call
// sites can never collide by accident.
namespace seed_domain {
inline constexpr std::uint64_t kCalibration = 1;  // index = node
inline constexpr std::uint64_t kEmInit = 2;       // index = node
inline constexpr std::uint64_t kRun = 3;          // index = run
inline constexpr std::uint64_t kTruth = 4;        // from run seed
inline constexpr std::uint64_t kObservation = 5;  // from run seed, index = node
}  // namespace seed_domain

// A self-contained random stream. All distributions are hand-mapped
// from raw 64-bit draws so sequences are identical across platforms
// and standard-library versions.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1); safe to feed into log().
    double uniform_open() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller. Consumes exactly two draws per
    // call and keeps no cached spare, so the stream position is a pure
    // function of the call count.
    double normal();

    // Exponential with unit mean.
    double exponential();

  private:
    std::mt19937_64 gen_;
};

}  // namespace mfdkf
