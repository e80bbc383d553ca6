#include "ctk/linear_operator.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "ctk/cproduct.hpp"
#include "ctk/error.hpp"
#include "ctk/transform.hpp"

namespace ctk {

LinearTensorOperator::LinearTensorOperator(Dims domain, Dims range, Map apply, Map apply_adjoint)
    : domain_(domain), range_(range), apply_(std::move(apply)), adjoint_(std::move(apply_adjoint)) {
    if (domain_.size() == 0 || range_.size() == 0) {
        throw DimensionError("LinearTensorOperator: empty domain or range");
    }
}

Tensor3 LinearTensorOperator::apply(const Tensor3& x) const {
    if (x.dims() != domain_) {
        throw DimensionError("operator apply: got " + x.dims().to_string() + ", domain is " +
                             domain_.to_string());
    }
    return apply_(x);
}

Tensor3 LinearTensorOperator::apply_adjoint(const Tensor3& y) const {
    if (y.dims() != range_) {
        throw DimensionError("operator adjoint: got " + y.dims().to_string() + ", range is " +
                             range_.to_string());
    }
    return adjoint_(y);
}

LinearTensorOperator identity_operator(Dims dims) {
    auto id = [](const Tensor3& x) { return x; };
    return LinearTensorOperator(dims, dims, id, id);
}

namespace {

// Transform-domain factors shared by the product operators. The adjoint maps through
// forward^{-T} on the way in and forward^T on the way out.
struct TransformedFactor {
    Tensor3 fwd;
    Tensor3 fwd_t;

    TransformedFactor(const Tensor3& a, const TubeTransform& t)
        : fwd(transform_mode3(a, t, TransformDirection::forward)), fwd_t(transpose(fwd)) {}
};

struct ProductState {
    TubeTransform transform;
    Eigen::MatrixXd adjoint_in;   // forward^{-T}
    Eigen::MatrixXd adjoint_out;  // forward^T

    explicit ProductState(std::size_t n3)
        : transform(make_transform(n3)),
          adjoint_in(transform.inverse.transpose()),
          adjoint_out(transform.forward.transpose()) {}
};

}  // namespace

LinearTensorOperator left_product_operator(const Tensor3& a, std::size_t width) {
    require_finite(a, "left_product_operator");
    if (width == 0) throw DimensionError("left_product_operator: width must be positive");
    struct State : ProductState {
        TransformedFactor a;
        State(const Tensor3& at) : ProductState(at.tubes()), a(at, transform) {}
    };
    auto st = std::make_shared<const State>(a);
    const Dims domain{a.cols(), width, a.tubes()};
    const Dims range{a.rows(), width, a.tubes()};
    auto fwd = [st](const Tensor3& x) {
        const Tensor3 xt = transform_mode3(x, st->transform, TransformDirection::forward);
        return transform_mode3(facewise_product(st->a.fwd, xt), st->transform,
                               TransformDirection::inverse);
    };
    auto adj = [st](const Tensor3& y) {
        const Tensor3 yt = apply_tube_matrix(y, st->adjoint_in);
        return apply_tube_matrix(facewise_product(st->a.fwd_t, yt), st->adjoint_out);
    };
    return LinearTensorOperator(domain, range, fwd, adj);
}

LinearTensorOperator sandwich_operator(const Tensor3& a, const Tensor3& b) {
    require_finite(a, "sandwich_operator");
    require_finite(b, "sandwich_operator");
    if (a.tubes() != b.tubes()) {
        throw DimensionError("sandwich_operator: tube lengths differ " + a.dims().to_string() +
                             " vs " + b.dims().to_string());
    }
    struct State : ProductState {
        TransformedFactor a;
        TransformedFactor b;
        State(const Tensor3& at, const Tensor3& bt)
            : ProductState(at.tubes()), a(at, transform), b(bt, transform) {}
    };
    auto st = std::make_shared<const State>(a, b);
    const Dims domain{a.cols(), b.rows(), a.tubes()};
    const Dims range{a.rows(), b.cols(), a.tubes()};
    auto fwd = [st](const Tensor3& x) {
        const Tensor3 xt = transform_mode3(x, st->transform, TransformDirection::forward);
        return transform_mode3(facewise_product(facewise_product(st->a.fwd, xt), st->b.fwd),
                               st->transform, TransformDirection::inverse);
    };
    auto adj = [st](const Tensor3& y) {
        const Tensor3 yt = apply_tube_matrix(y, st->adjoint_in);
        return apply_tube_matrix(facewise_product(facewise_product(st->a.fwd_t, yt), st->b.fwd_t),
                                 st->adjoint_out);
    };
    return LinearTensorOperator(domain, range, fwd, adj);
}

double adjoint_check(const LinearTensorOperator& op, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw DimensionError("adjoint_check: trials must be positive");
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const Tensor3 x = Tensor3::random_normal(op.domain_dims(), rng);
        const Tensor3 y = Tensor3::random_normal(op.range_dims(), rng);
        const Tensor3 ax = op.apply(x);
        const double denom = fro_norm(ax) * fro_norm(y);
        const double defect = std::abs(inner(ax, y) - inner(x, op.apply_adjoint(y)));
        worst = std::max(worst, denom > 0.0 ? defect / denom : defect);
    }
    return worst;
}

}  // namespace ctk
