#include "ctk/oracle.hpp"

#include <string>

#include "ctk/error.hpp"

namespace ctk::oracle {

Eigen::MatrixXd mat(const Tensor3& a, std::size_t max_rows) {
    const std::size_t n1 = a.rows(), n2 = a.cols(), n = a.tubes();
    if (n1 * n > max_rows || n2 * n > max_rows) {
        throw DimensionError("oracle mat: " + a.dims().to_string() + " exceeds the " +
                             std::to_string(max_rows) + "-row materialization cap");
    }
    const auto r1 = static_cast<Eigen::Index>(n1);
    const auto r2 = static_cast<Eigen::Index>(n2);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r1 * static_cast<Eigen::Index>(n),
                                              r2 * static_cast<Eigen::Index>(n));
    // 1-based block indices p, q; Hankel term A_{p+q} when p+q <= n, A_{2n+2-p-q} when
    // p+q >= n+2, zero on the anti-diagonal p+q = n+1.
    for (std::size_t p = 1; p <= n; ++p) {
        for (std::size_t q = 1; q <= n; ++q) {
            auto block = m.block(static_cast<Eigen::Index>(p - 1) * r1,
                                 static_cast<Eigen::Index>(q - 1) * r2, r1, r2);
            const std::size_t toeplitz = (p > q ? p - q : q - p) + 1;
            block = a.slice(toeplitz - 1);
            const std::size_t s = p + q;
            if (s <= n) {
                block += a.slice(s - 1);
            } else if (s >= n + 2) {
                block += a.slice(2 * n + 2 - s - 1);
            }
        }
    }
    return m;
}

Tensor3 ten(const Eigen::MatrixXd& m, std::size_t n1, std::size_t n2, std::size_t n3) {
    if (static_cast<std::size_t>(m.rows()) != n1 * n3 ||
        static_cast<std::size_t>(m.cols()) != n2 * n3) {
        throw DimensionError("oracle ten: matrix shape does not match requested extents");
    }
    const auto r1 = static_cast<Eigen::Index>(n1);
    const auto r2 = static_cast<Eigen::Index>(n2);
    Tensor3 t(Dims{n1, n2, n3});
    t.slice(n3 - 1) = m.block(static_cast<Eigen::Index>(n3 - 1) * r1, 0, r1, r2);
    for (std::size_t p = n3 - 1; p-- > 0;) {
        t.slice(p) = m.block(static_cast<Eigen::Index>(p) * r1, 0, r1, r2) - t.slice(p + 1);
    }
    return t;
}

Tensor3 product(const Tensor3& a, const Tensor3& b, std::size_t max_rows) {
    if (a.cols() != b.rows() || a.tubes() != b.tubes()) {
        throw DimensionError("oracle product: " + a.dims().to_string() + " times " +
                             b.dims().to_string());
    }
    const Eigen::MatrixXd c = mat(a, max_rows) * mat(b, max_rows);
    return ten(c, a.rows(), b.cols(), a.tubes());
}

}  // namespace ctk::oracle
