#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace ctk {

/// Extents of a third-order tensor: n1 rows, n2 columns, n3 frontal slices.
struct Dims {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t n3 = 0;

    std::size_t size() const { return n1 * n2 * n3; }
    std::size_t slice_size() const { return n1 * n2; }
    bool operator==(const Dims&) const = default;
    std::string to_string() const;
};

using SliceMap = Eigen::Map<Eigen::MatrixXd>;
using ConstSliceMap = Eigen::Map<const Eigen::MatrixXd>;

/// Dense real n1 x n2 x n3 tensor.
///
/// Storage is frontal-slice-major: slice k occupies a contiguous column-major
/// n1 x n2 panel, so entry (i, j, k) lives at k*n1*n2 + j*n1 + i. Every public
/// constructor rejects zero extents and non-finite data.
class Tensor3 {
public:
    /// Zero tensor.
    explicit Tensor3(Dims dims);
    Tensor3(std::size_t n1, std::size_t n2, std::size_t n3) : Tensor3(Dims{n1, n2, n3}) {}
    Tensor3(Dims dims, std::vector<double> data);

    static Tensor3 zeros(Dims dims) { return Tensor3(dims); }
    static Tensor3 constant(Dims dims, double value);
    /// iid standard normal entries.
    static Tensor3 random_normal(Dims dims, std::mt19937_64& rng);
    static Tensor3 random_normal(Dims dims, std::uint64_t seed);
    /// Tensor with the given frontal slices (all the same shape).
    static Tensor3 from_slices(std::span<const Eigen::MatrixXd> slices);

    const Dims& dims() const { return dims_; }
    std::size_t rows() const { return dims_.n1; }
    std::size_t cols() const { return dims_.n2; }
    std::size_t tubes() const { return dims_.n3; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[k * dims_.n1 * dims_.n2 + j * dims_.n1 + i];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[k * dims_.n1 * dims_.n2 + j * dims_.n1 + i];
    }

    std::span<double> data() { return data_; }
    std::span<const double> data() const { return data_; }

    SliceMap slice(std::size_t k);
    ConstSliceMap slice(std::size_t k) const;

    bool all_finite() const;

    Tensor3& operator+=(const Tensor3& other);
    Tensor3& operator-=(const Tensor3& other);
    Tensor3& operator*=(double alpha);
    /// this += alpha * other
    Tensor3& add_scaled(double alpha, const Tensor3& other);

    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(double alpha, Tensor3 a) { return a *= alpha; }
    friend Tensor3 operator*(Tensor3 a, double alpha) { return a *= alpha; }

    bool operator==(const Tensor3& other) const = default;

private:
    Dims dims_;
    std::vector<double> data_;
};

/// Throws DimensionError unless a and b have equal extents.
void require_same_dims(const Tensor3& a, const Tensor3& b, const char* where);

/// Throws NumericError when t holds NaN or Inf.
void require_finite(const Tensor3& t, const char* where);

}  // namespace ctk
