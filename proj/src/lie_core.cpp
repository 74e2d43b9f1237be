#include "grassflow/lie_core.hpp"

namespace grassflow {

SkewMatrix::SkewMatrix(const Mat& m, double tol) {
    if (m.rows() != m.cols())
        throw parameter_error("SkewMatrix: matrix must be square");
    const double defect = max_abs(m + m.adjoint());
    if (defect > tol)
        throw domain_error("SkewMatrix: input is not skew-Hermitian (defect " +
                           std::to_string(defect) + ")");
    m_ = 0.5 * (m - m.adjoint().eval());
}

OrbitParams make_base_point(int n, int k) {
    if (n < 1 || k < 1 || k >= n)
        throw parameter_error("make_base_point: need 1 <= k < n");
    Mat a = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i)
        a(i, i) = (i < k) ? cplx(0.0, 0.5) : cplx(0.0, -0.5);
    return OrbitParams{n, k, a};
}

double inner(const Mat& x, const Mat& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw parameter_error("inner: dimension mismatch");
    return -(x * y).trace().real();
}

double inner(const SkewMatrix& x, const SkewMatrix& y) {
    return inner(x.mat(), y.mat());
}

Mat par_part(const Mat& x, const OrbitParams& p) {
    Mat out = Mat::Zero(p.n, p.n);
    out.topLeftCorner(p.k, p.k) = x.topLeftCorner(p.k, p.k);
    out.bottomRightCorner(p.n - p.k, p.n - p.k) =
        x.bottomRightCorner(p.n - p.k, p.n - p.k);
    return out;
}

Mat perp_part(const Mat& x, const OrbitParams& p) {
    Mat out = Mat::Zero(p.n, p.n);
    out.topRightCorner(p.k, p.n - p.k) = x.topRightCorner(p.k, p.n - p.k);
    out.bottomLeftCorner(p.n - p.k, p.k) = x.bottomLeftCorner(p.n - p.k, p.k);
    return out;
}

BlockSplit project(const SkewMatrix& x, const OrbitParams& p) {
    if (x.n() != p.n) throw parameter_error("project: dimension mismatch");
    return BlockSplit{SkewMatrix(par_part(x.mat(), p)),
                      SkewMatrix(perp_part(x.mat(), p))};
}

Mat ad(const Mat& x, const Mat& y) {
    if (x.rows() != y.rows())
        throw parameter_error("ad: dimension mismatch");
    return x * y - y * x;
}

SkewMatrix ad(const SkewMatrix& x, const SkewMatrix& y) {
    return SkewMatrix(ad(x.mat(), y.mat()));
}

Mat ad_a_inv(const Mat& v, const OrbitParams& p, double perp_tol) {
    const double par_norm = max_abs(par_part(v, p));
    if (par_norm > perp_tol)
        throw domain_error("ad_a_inv: input has u(n)_a component of size " +
                           std::to_string(par_norm));
    return -ad(p.a, v);
}

SkewMatrix ad_a_inv(const SkewMatrix& v, const OrbitParams& p, double perp_tol) {
    return SkewMatrix(ad_a_inv(v.mat(), p, perp_tol));
}

Mat ad_a_inv_proj(const Mat& v, const OrbitParams& p) {
    return -ad(p.a, perp_part(v, p));
}

double orbit_residual(const Mat& x, const OrbitParams& p) {
    const Mat sq = x * x + 0.25 * Mat::Identity(p.n, p.n);
    const double alg = frob(sq);
    const double want = 0.5 * (2.0 * p.k - p.n);
    const double tr = (cplx(0.0, -1.0) * x.trace()).real();
    return alg + std::abs(tr - want);
}

double orbit_residual(const SkewMatrix& x, const OrbitParams& p) {
    return orbit_residual(x.mat(), p);
}

Mat offblock(const Mat& q, const OrbitParams& p) {
    if (q.rows() != p.k || q.cols() != p.n - p.k)
        throw parameter_error("offblock: block must be k x (n-k)");
    Mat out = Mat::Zero(p.n, p.n);
    out.topRightCorner(p.k, p.n - p.k) = q;
    out.bottomLeftCorner(p.n - p.k, p.k) = -q.adjoint();
    return out;
}

Mat block_of(const Mat& u, const OrbitParams& p) {
    return u.topRightCorner(p.k, p.n - p.k);
}

}  // namespace grassflow
