#pragma once

#include "grassflow/types.hpp"

namespace grassflow {

// Base point a = diag((i/2) I_k, -(i/2) I_{n-k}) and the block decomposition
// u(n) = u(n)_a + u(n)_a^perp it induces.
struct OrbitParams {
    int n = 0;
    int k = 0;
    Mat a;
};

// A validated element of u(n).  Construction symmetrizes inputs that are
// skew-Hermitian within `tol` in max norm and rejects anything worse.
class SkewMatrix {
  public:
    static constexpr double kSkewTol = 1e-12;

    explicit SkewMatrix(const Mat& m, double tol = kSkewTol);

    const Mat& mat() const { return m_; }
    int n() const { return static_cast<int>(m_.rows()); }

  private:
    Mat m_;
};

struct BlockSplit {
    SkewMatrix par;   // block-diagonal part, in u(n)_a
    SkewMatrix perp;  // off-block part, in u(n)_a^perp
};

OrbitParams make_base_point(int n, int k);

// <x,y> = -Re tr(xy); the invariant inner product on u(n).
double inner(const SkewMatrix& x, const SkewMatrix& y);
double inner(const Mat& x, const Mat& y);

BlockSplit project(const SkewMatrix& x, const OrbitParams& p);

// Raw-block helpers used pervasively by the field-valued modules.  They do
// not re-validate skewness; callers hold matrices that are skew by
// construction.
Mat par_part(const Mat& x, const OrbitParams& p);
Mat perp_part(const Mat& x, const OrbitParams& p);

Mat ad(const Mat& x, const Mat& y);
SkewMatrix ad(const SkewMatrix& x, const SkewMatrix& y);

// Inverse of ad(a) on u(n)_a^perp, where ad(a)^2 = -id makes it -ad(a).
// Throws domain_error if v has a u(n)_a component above `perp_tol`.
Mat ad_a_inv(const Mat& v, const OrbitParams& p, double perp_tol = 1e-10);
SkewMatrix ad_a_inv(const SkewMatrix& v, const OrbitParams& p,
                    double perp_tol = 1e-10);

// Unchecked variant: projects the input to u(n)_a^perp first.  Used by the
// development/hierarchy pipelines where tiny par components are round-off.
Mat ad_a_inv_proj(const Mat& v, const OrbitParams& p);

// Nonnegative, zero exactly on the adjoint orbit of a: combines the
// algebraic test x^2 = -(1/4) I with the trace test fixing multiplicities.
double orbit_residual(const Mat& x, const OrbitParams& p);
double orbit_residual(const SkewMatrix& x, const OrbitParams& p);

// Off-block embedding of a k x (n-k) block q:  [[0, q], [-q^*, 0]].
Mat offblock(const Mat& q, const OrbitParams& p);
// Top-right block of a perp-valued matrix.
Mat block_of(const Mat& u, const OrbitParams& p);

}  // namespace grassflow
