#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "mfdkf/rng.hpp"
#include "mfdkf/types.hpp"

namespace mfdkf {

// --- Observation-noise families -------------------------------------------

// General (possibly multivariate) Gaussian. A 1-dimensional spec is
// broadcast i.i.d. per coordinate when a wider noise vector is requested.
struct GaussianSpec {
    Vec mean;        // noise units
    Mat covariance;  // noise units^2, symmetric PSD
};

// Two-component scalar mixture: mixing*N(mean, variance_1) +
// (1-mixing)*N(mean, variance_2).
struct MixedGaussianSpec {
    double mixing;      // in [0, 1], weight of the variance_1 component
    double mean;
    double variance_1;  // > 0
    double variance_2;  // > 0
};

// Symmetric-about-location heavy-tailed family defined by its
// characteristic function exp{j*location*t - dispersion*|t|^a *
// [1 + j*symmetry*sign(t)*omega(t,a)]}.
struct AlphaStableSpec {
    double char_exponent;  // a in (0, 2]
    double symmetry;       // b in [-1, 1]
    double dispersion;     // zeta > 0
    double location;       // varpi
};

using NoiseSpec = std::variant<GaussianSpec, MixedGaussianSpec, AlphaStableSpec>;

// Throws ConfigError if the spec violates its parameter ranges.
void validate(const NoiseSpec& spec);

// Dimension of one draw: rows of the Gaussian mean, 1 for the scalar
// families.
int native_dimension(const NoiseSpec& spec);

// Draws `count` i.i.d. noise vectors of dimension `dim`. Scalar specs
// (and 1-d Gaussian specs) fill the coordinates of a wider vector
// independently; a multivariate Gaussian spec must match `dim` exactly.
// Alpha-stable draws use the Chambers-Mallows-Stuck transform.
std::vector<Vec> sample(const NoiseSpec& spec, RngStream& rng, long count,
                        int dim = 1);

// Single scalar draw from a 1-d spec component; building block for the
// vector sampler and cheap to call in simulation loops.
double sample_scalar(const NoiseSpec& spec, RngStream& rng);

// --- Gaussian mixture model and EM fitting --------------------------------

struct GmmModel {
    int kappa = 0;                 // component count
    std::vector<double> weights;   // sum to 1
    std::vector<Vec> means;
    std::vector<Mat> covariances;  // sorted ascending by trace
};

struct EmConfig {
    int max_iterations = 500;
    double rel_tolerance = 1e-8;  // relative log-likelihood change
    int max_restarts = 5;
    std::uint64_t seed = 0;       // initialization (k-means++ style seeding)
};

// Fit diagnostics, mainly for tests: per-iteration log-likelihood of
// the accepted (final) attempt, restart count.
struct EmReport {
    std::vector<double> log_likelihood;  // one entry per completed iteration
    int iterations = 0;
    int restarts = 0;
    bool converged = false;
};

// Fits a kappa-component GMM by EM. Components come back sorted
// ascending by covariance trace. Throws DataError on an empty/too-small
// sample set and NumericalError if every restart collapses.
GmmModel em_fit_gmm(const std::vector<Vec>& samples, int kappa,
                    const EmConfig& config = {}, EmReport* report = nullptr);

// Second moment of the whole mixture about its own mean:
//   sum_i w_i (R_i + mu_i mu_i^T) - mu_bar mu_bar^T.
// This is the single static covariance a filter uses when it ignores
// the mixture structure.
Mat overall_covariance(const GmmModel& model);

}  // namespace mfdkf
