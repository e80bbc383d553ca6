#include "ctk/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "ctk/cproduct.hpp"
#include "ctk/error.hpp"

namespace ctk {

void GaussianBlurSpec::validate() const {
    if (size == 0) throw DimensionError("GaussianBlurSpec: size must be positive");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw NumericError("GaussianBlurSpec: sigma must be positive");
    }
    if (bandwidth >= size) {
        throw DimensionError("GaussianBlurSpec: bandwidth " + std::to_string(bandwidth) +
                             " must be below size " + std::to_string(size));
    }
}

Eigen::MatrixXd gaussian_band_matrix(const GaussianBlurSpec& spec) {
    spec.validate();
    const auto n = static_cast<Eigen::Index>(spec.size);
    const auto r = static_cast<Eigen::Index>(spec.bandwidth);
    const double scale = 1.0 / (spec.sigma * std::sqrt(2.0 * std::numbers::pi));
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index k = std::max<Eigen::Index>(0, l - r); k <= std::min(n - 1, l + r); ++k) {
            const double d = static_cast<double>(k - l);
            a(k, l) = scale * std::exp(-d * d / (2.0 * spec.sigma * spec.sigma));
        }
    }
    return a;
}

void CrossChannelSpec::validate() const {
    constexpr double tol = 1e-12;
    if (!mixing.allFinite()) throw UnsupportedModelError("cross-channel mixing has non-finite entries");
    for (int i = 0; i < 3; ++i) {
        if (std::abs(mixing.row(i).sum() - 1.0) > tol) {
            throw UnsupportedModelError("cross-channel mixing row " + std::to_string(i + 1) +
                                        " does not sum to one");
        }
    }
    const auto& m = mixing;
    const bool circular = std::abs(m(0, 0) - m(1, 1)) <= tol && std::abs(m(0, 0) - m(2, 2)) <= tol &&
                          std::abs(m(0, 1) - m(1, 0)) <= tol && std::abs(m(0, 2) - m(2, 0)) <= tol &&
                          std::abs(m(1, 2) - m(2, 1)) <= tol;
    if (!circular) {
        throw UnsupportedModelError(
            "cross-channel mixing must have equal diagonal entries and be symmetric");
    }
}

CrossChannelSpec CrossChannelSpec::paper_default() {
    CrossChannelSpec c;
    c.mixing << 0.8, 0.1, 0.1, 0.1, 0.8, 0.1, 0.1, 0.1, 0.8;
    return c;
}

namespace {

void require_square(const Eigen::MatrixXd& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionError(std::string(what) + " must be square and nonempty");
    }
    if (!m.allFinite()) throw NumericError(std::string(what) + " has non-finite entries");
}

}  // namespace

BlurModel build_blur_operator(const Eigen::MatrixXd& within1, const Eigen::MatrixXd& within2,
                              const CrossChannelSpec& cross) {
    require_square(within1, "within-channel matrix A1");
    require_square(within2, "within-channel matrix A2");
    cross.validate();
    const auto n2 = static_cast<std::size_t>(within2.rows());
    const auto n1 = static_cast<std::size_t>(within1.rows());
    Tensor3 a(n2, n2, 3);
    Tensor3 b(n1, n1, 3);
    for (std::size_t k = 0; k < 3; ++k) a.slice(k) = cross.mixing(static_cast<Eigen::Index>(k), 0) * within2;
    b.slice(0) = within1.transpose();
    LinearTensorOperator op = sandwich_operator(a, b);
    return BlurModel{std::move(a), std::move(b), std::move(op)};
}

Tensor3 kron_oracle(const Eigen::MatrixXd& within1, const Eigen::MatrixXd& within2,
                    const CrossChannelSpec& cross, const Tensor3& x) {
    require_square(within1, "within-channel matrix A1");
    require_square(within2, "within-channel matrix A2");
    const auto rows = static_cast<std::size_t>(within2.rows());
    const auto cols = static_cast<std::size_t>(within1.rows());
    if (x.dims() != Dims{rows, cols, 3}) {
        throw DimensionError("kron_oracle: image dims " + x.dims().to_string());
    }
    if (rows > kKronOracleMaxSize || cols > kKronOracleMaxSize) {
        throw DimensionError("kron_oracle: size exceeds " + std::to_string(kKronOracleMaxSize));
    }
    const Eigen::MatrixXd inner_kron = Eigen::kroneckerProduct(within1, within2);
    const Eigen::Index blk = inner_kron.rows();
    Eigen::MatrixXd full(3 * blk, 3 * blk);
    for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j) {
            full.block(i * blk, j * blk, blk, blk) = cross.mixing(i, j) * inner_kron;
        }
    }
    // Frontal-slice-major storage is exactly [vec X_1; vec X_2; vec X_3].
    const Eigen::Map<const Eigen::VectorXd> xv(x.data().data(), static_cast<Eigen::Index>(x.size()));
    const Eigen::VectorXd cv = full * xv;
    return Tensor3(x.dims(), std::vector<double>(cv.data(), cv.data() + cv.size()));
}

Eigen::Matrix3d tensor_form_mixing(const CrossChannelSpec& cross) {
    const Eigen::MatrixXd one = Eigen::MatrixXd::Identity(1, 1);
    const BlurModel model = build_blur_operator(one, one, cross);
    Eigen::Matrix3d out;
    for (std::size_t j = 0; j < 3; ++j) {
        Tensor3 e(1, 1, 3);
        e(0, 0, j) = 1.0;
        const Tensor3 col = model.op.apply(e);
        for (std::size_t i = 0; i < 3; ++i) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col(0, 0, i);
    }
    return out;
}

NoisyObservation add_noise(const Tensor3& clean, double nu, std::uint64_t seed) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw NumericError("add_noise: noise level must be >= 0");
    require_finite(clean, "add_noise");
    Tensor3 noise(clean.dims());
    const double target = nu * fro_norm(clean);
    if (target > 0.0) {
        noise = Tensor3::random_normal(clean.dims(), seed);
        noise *= target / fro_norm(noise);
    }
    return NoisyObservation{clean + noise, std::move(noise)};
}

double relative_error(const Tensor3& restored, const Tensor3& truth) {
    require_same_dims(restored, truth, "relative_error");
    const double denom = fro_norm(truth);
    if (denom == 0.0) throw NumericError("relative_error: zero reference image");
    return fro_norm(restored - truth) / denom;
}

double snr(const Tensor3& restored, const Tensor3& truth) {
    require_same_dims(restored, truth, "snr");
    double mean = 0.0;
    for (double v : truth.data()) mean += v;
    mean /= static_cast<double>(truth.size());
    double signal = 0.0;
    for (double v : truth.data()) signal += (v - mean) * (v - mean);
    const double err = fro_norm(restored - truth);
    if (err == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(signal / (err * err));
}

BlurProblem make_blur_problem(const Tensor3& ground_truth, BlurParameters params) {
    if (ground_truth.tubes() != 3 || ground_truth.rows() != ground_truth.cols()) {
        throw DimensionError("make_blur_problem: expected n x n x 3, got " + ground_truth.dims().to_string());
    }
    require_finite(ground_truth, "make_blur_problem");
    params.within1.size = ground_truth.cols();
    params.within2.size = ground_truth.rows();
    BlurModel model = build_blur_operator(gaussian_band_matrix(params.within1),
                                          gaussian_band_matrix(params.within2), params.cross);
    Tensor3 clean = model.op.apply(ground_truth);
    NoisyObservation obs = add_noise(clean, params.noise_level, params.seed);
    return BlurProblem{ground_truth, std::move(clean), std::move(obs.observed), params.noise_level,
                       params.seed, std::move(model)};
}

}  // namespace ctk
