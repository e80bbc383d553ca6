#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>

#include <Eigen/Core>

#include "ctk/linear_operator.hpp"
#include "ctk/tensor3.hpp"

namespace ctk {

/// Truncated Gaussian within-channel blur: a_kl = exp(-(k-l)^2 / (2 sigma^2)) / (sigma sqrt(2 pi))
/// for |k - l| <= bandwidth, zero elsewhere. Zero boundary conditions.
struct GaussianBlurSpec {
    std::size_t size = 0;
    double sigma = 4.0;
    std::size_t bandwidth = 6;

    void validate() const;
};

Eigen::MatrixXd gaussian_band_matrix(const GaussianBlurSpec& spec);

/// 3x3 cross-channel mixing with unit row sums and the symmetric circular structure
/// a_rr = a_gg = a_bb, a_rg = a_gr, a_rb = a_br, a_gb = a_bg.
struct CrossChannelSpec {
    Eigen::Matrix3d mixing = Eigen::Matrix3d::Identity();

    /// Throws UnsupportedModelError when the structure above is violated.
    void validate() const;

    static CrossChannelSpec identity() { return {}; }
    /// 0.8 on the diagonal, 0.1 elsewhere.
    static CrossChannelSpec paper_default();
};

/// Blur tensors for X -> A *c X *c B: A(:,:,k) = coef_k A2 with (coef_1, coef_2, coef_3) =
/// (a_rr, a_gr, a_br), B(:,:,1) = A1^T and the other slices of B zero.
struct BlurModel {
    Tensor3 a;
    Tensor3 b;
    LinearTensorOperator op;
};

BlurModel build_blur_operator(const Eigen::MatrixXd& within1, const Eigen::MatrixXd& within2,
                              const CrossChannelSpec& cross);

inline constexpr std::size_t kKronOracleMaxSize = 64;

/// Applies (A_color kron A1 kron A2) to [vec X_1; vec X_2; vec X_3] through the dense
/// 3n^2 x 3n^2 matrix and reshapes the result. Throws DimensionError for n > 64.
Tensor3 kron_oracle(const Eigen::MatrixXd& within1, const Eigen::MatrixXd& within2,
                    const CrossChannelSpec& cross, const Tensor3& x);

/// The 3x3 matrix acting across channels when the blur tensors are applied with the
/// cosine product. With identity within-channel blur, build_blur_operator(I, I, cross) maps
/// channel j of X to column j of this matrix.
Eigen::Matrix3d tensor_form_mixing(const CrossChannelSpec& cross);

struct NoisyObservation {
    Tensor3 observed;
    Tensor3 noise;
};

/// Gaussian noise rescaled so ||noise|| = nu ||clean|| exactly.
NoisyObservation add_noise(const Tensor3& clean, double nu, std::uint64_t seed);

/// ||restored - truth|| / ||truth||.
double relative_error(const Tensor3& restored, const Tensor3& truth);

/// 10 log10(||truth - mean(truth)||^2 / ||restored - truth||^2); +infinity when they match.
double snr(const Tensor3& restored, const Tensor3& truth);

struct BlurParameters {
    GaussianBlurSpec within1;
    GaussianBlurSpec within2;
    CrossChannelSpec cross = CrossChannelSpec::paper_default();
    double noise_level = 1e-3;
    std::uint64_t seed = 0;
};

struct BlurProblem {
    Tensor3 ground_truth;
    Tensor3 blurred_clean;
    Tensor3 observed;
    double noise_level;
    std::uint64_t rng_seed;
    BlurModel model;
};

/// Blurs ground_truth (n x n x 3) with the tensor-form operator and adds noise. The
/// within-channel spec sizes are overwritten with n.
BlurProblem make_blur_problem(const Tensor3& ground_truth, BlurParameters params);

/// 8-bit RGB PNG in, entries in [0, 1] out. Non-square images are center-cropped to a
/// square with a warning on stderr. Throws IoError on unreadable or non-colour files.
Tensor3 load_image(const std::filesystem::path& path);

/// Writes an n1 x n2 x 3 tensor as 8-bit RGB, clamping to [0, 1] and rounding.
void save_image(const Tensor3& t, const std::filesystem::path& path);

}  // namespace ctk
