#include "ctk/tensor3.hpp"

#include <algorithm>
#include <cmath>

#include "ctk/error.hpp"
#include "ctk/kernels.hpp"

namespace ctk {

std::string Dims::to_string() const {
    return std::to_string(n1) + "x" + std::to_string(n2) + "x" + std::to_string(n3);
}

namespace {

void check_extents(const Dims& d) {
    if (d.n1 == 0 || d.n2 == 0 || d.n3 == 0) {
        throw DimensionError("tensor extents must be positive, got " + d.to_string());
    }
}

}  // namespace

Tensor3::Tensor3(Dims dims) : dims_(dims) {
    check_extents(dims_);
    data_.assign(dims_.size(), 0.0);
}

Tensor3::Tensor3(Dims dims, std::vector<double> data) : dims_(dims), data_(std::move(data)) {
    check_extents(dims_);
    if (data_.size() != dims_.size()) {
        throw DimensionError("tensor data length " + std::to_string(data_.size()) +
                             " does not match extents " + dims_.to_string());
    }
    require_finite(*this, "Tensor3");
}

Tensor3 Tensor3::constant(Dims dims, double value) {
    Tensor3 t(dims);
    std::fill(t.data_.begin(), t.data_.end(), value);
    require_finite(t, "Tensor3::constant");
    return t;
}

Tensor3 Tensor3::random_normal(Dims dims, std::mt19937_64& rng) {
    Tensor3 t(dims);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (double& x : t.data_) x = normal(rng);
    return t;
}

Tensor3 Tensor3::random_normal(Dims dims, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_normal(dims, rng);
}

Tensor3 Tensor3::from_slices(std::span<const Eigen::MatrixXd> slices) {
    if (slices.empty()) throw DimensionError("from_slices: no slices");
    const auto rows = static_cast<std::size_t>(slices.front().rows());
    const auto cols = static_cast<std::size_t>(slices.front().cols());
    Tensor3 t(Dims{rows, cols, slices.size()});
    for (std::size_t k = 0; k < slices.size(); ++k) {
        if (static_cast<std::size_t>(slices[k].rows()) != rows ||
            static_cast<std::size_t>(slices[k].cols()) != cols) {
            throw DimensionError("from_slices: slices differ in shape");
        }
        t.slice(k) = slices[k];
    }
    require_finite(t, "Tensor3::from_slices");
    return t;
}

SliceMap Tensor3::slice(std::size_t k) {
    return SliceMap(data_.data() + k * dims_.slice_size(), static_cast<Eigen::Index>(dims_.n1),
                    static_cast<Eigen::Index>(dims_.n2));
}

ConstSliceMap Tensor3::slice(std::size_t k) const {
    return ConstSliceMap(data_.data() + k * dims_.slice_size(), static_cast<Eigen::Index>(dims_.n1),
                         static_cast<Eigen::Index>(dims_.n2));
}

bool Tensor3::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

Tensor3& Tensor3::operator+=(const Tensor3& other) { return add_scaled(1.0, other); }

Tensor3& Tensor3::operator-=(const Tensor3& other) { return add_scaled(-1.0, other); }

Tensor3& Tensor3::operator*=(double alpha) {
    kernels::active().scal(alpha, data_.data(), data_.size());
    return *this;
}

Tensor3& Tensor3::add_scaled(double alpha, const Tensor3& other) {
    require_same_dims(*this, other, "add_scaled");
    kernels::active().axpy(alpha, other.data_.data(), data_.data(), data_.size());
    return *this;
}

void require_same_dims(const Tensor3& a, const Tensor3& b, const char* where) {
    if (a.dims() != b.dims()) {
        throw DimensionError(std::string(where) + ": dimension mismatch " + a.dims().to_string() +
                             " vs " + b.dims().to_string());
    }
}

void require_finite(const Tensor3& t, const char* where) {
    if (!t.all_finite()) throw NumericError(std::string(where) + ": non-finite tensor entry");
}

}  // namespace ctk
