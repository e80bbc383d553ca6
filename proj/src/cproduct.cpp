#include "ctk/cproduct.hpp"

#include <cmath>

#include "ctk/error.hpp"
#include "ctk/kernels.hpp"

namespace ctk {

Tensor3 facewise_product(const Tensor3& a, const Tensor3& b) {
    if (a.cols() != b.rows() || a.tubes() != b.tubes()) {
        throw DimensionError("facewise_product: " + a.dims().to_string() + " times " +
                             b.dims().to_string());
    }
    const Dims out_dims{a.rows(), b.cols(), a.tubes()};
    Tensor3 out(out_dims);
    const auto& k = kernels::active();
    for (std::size_t s = 0; s < a.tubes(); ++s) {
        k.gemm(a.rows(), a.cols(), b.cols(), a.data().data() + s * a.dims().slice_size(),
               b.data().data() + s * b.dims().slice_size(),
               out.data().data() + s * out_dims.slice_size());
    }
    return out;
}

Tensor3 cosine_product(const Tensor3& a, const Tensor3& b) {
    if (a.tubes() != b.tubes()) {
        throw DimensionError("cosine_product: tube length mismatch " + a.dims().to_string() +
                             " vs " + b.dims().to_string());
    }
    return cosine_product(a, b, make_transform(a.tubes()));
}

Tensor3 cosine_product(const Tensor3& a, const Tensor3& b, const TubeTransform& t) {
    if (a.cols() != b.rows() || a.tubes() != b.tubes()) {
        throw DimensionError("cosine_product: " + a.dims().to_string() + " times " +
                             b.dims().to_string());
    }
    const Tensor3 at = transform_mode3(a, t, TransformDirection::forward);
    const Tensor3 bt = transform_mode3(b, t, TransformDirection::forward);
    return transform_mode3(facewise_product(at, bt), t, TransformDirection::inverse);
}

Tensor3 cosine_product_adjoint(const Tensor3& a, const Tensor3& y) {
    return cosine_product_adjoint(a, y, make_transform(a.tubes()));
}

Tensor3 cosine_product_adjoint(const Tensor3& a, const Tensor3& y, const TubeTransform& t) {
    if (a.rows() != y.rows() || a.tubes() != y.tubes()) {
        throw DimensionError("cosine_product_adjoint: " + a.dims().to_string() + " against " +
                             y.dims().to_string());
    }
    const Tensor3 at_t = transpose(transform_mode3(a, t, TransformDirection::forward));
    const Tensor3 yt = apply_tube_matrix(y, t.inverse.transpose());
    return apply_tube_matrix(facewise_product(at_t, yt), t.forward.transpose());
}

Tensor3 transpose(const Tensor3& a) {
    Tensor3 out(Dims{a.cols(), a.rows(), a.tubes()});
    for (std::size_t k = 0; k < a.tubes(); ++k) out.slice(k) = a.slice(k).transpose();
    return out;
}

Tensor3 identity_tensor(std::size_t n, std::size_t n3) {
    if (n == 0 || n3 == 0) throw DimensionError("identity_tensor: extents must be positive");
    Tensor3 stack(Dims{n, n, n3});
    for (std::size_t k = 0; k < n3; ++k) stack.slice(k).setIdentity();
    return transform_mode3(stack, make_transform(n3), TransformDirection::inverse);
}

double inner(const Tensor3& a, const Tensor3& b) {
    require_same_dims(a, b, "inner");
    return kernels::active().dot(a.data().data(), b.data().data(), a.size());
}

double fro_norm(const Tensor3& a) { return std::sqrt(inner(a, a)); }

}  // namespace ctk
