#include "minmaxcert/conic.hpp"

#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <stdexcept>

// Homogeneous self-dual interior-point method for the cone LP
//
//   min c'v  s.t.  A v = b,  G v + s = h,  s in K,
//
// with K a product of a nonnegative orthant and second-order cones,
// following the standard predictor-corrector scheme with Nesterov-Todd
// scaling (Andersen/Dahl/Vandenberghe style). The embedding variables are
// (v, y, z, s, tau, kappa); tau > 0 at convergence gives the optimum,
// kappa > 0 gives an infeasibility certificate.

namespace minmax {

const char* to_string(SolveStatus status) {
    switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::Inaccurate: return "inaccurate";
    }
    return "unknown";
}

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;
using Eigen::VectorXd;

struct ConeDims {
    int nl = 0;                // leading LP rows
    std::vector<int> soc;      // second-order cone sizes
    int total() const {
        int t = nl;
        for (int s : soc) t += s;
        return t;
    }
    int degree() const { return nl + static_cast<int>(soc.size()); }
};

VectorXd cone_identity(const ConeDims& dims) {
    VectorXd e = VectorXd::Zero(dims.total());
    e.head(dims.nl).setOnes();
    int off = dims.nl;
    for (int s : dims.soc) {
        e(off) = 1.0;
        off += s;
    }
    return e;
}

// Jordan product u o v.
VectorXd jordan_product(const ConeDims& dims, const VectorXd& u, const VectorXd& v) {
    VectorXd out(dims.total());
    out.head(dims.nl) = u.head(dims.nl).cwiseProduct(v.head(dims.nl));
    int off = dims.nl;
    for (int s : dims.soc) {
        const auto u1 = u.segment(off + 1, s - 1);
        const auto v1 = v.segment(off + 1, s - 1);
        out(off) = u.segment(off, s).dot(v.segment(off, s));
        out.segment(off + 1, s - 1) = u(off) * v1 + v(off) * u1;
        off += s;
    }
    return out;
}

// Solve lambda o x = d for x.
VectorXd jordan_solve(const ConeDims& dims, const VectorXd& lambda, const VectorXd& d) {
    VectorXd out(dims.total());
    out.head(dims.nl) = d.head(dims.nl).cwiseQuotient(lambda.head(dims.nl));
    int off = dims.nl;
    for (int s : dims.soc) {
        const double l0 = lambda(off);
        const auto l1 = lambda.segment(off + 1, s - 1);
        const double det = l0 * l0 - l1.squaredNorm();
        const double d0 = d(off);
        const auto d1 = d.segment(off + 1, s - 1);
        const double x0 = (l0 * d0 - l1.dot(d1)) / det;
        out(off) = x0;
        out.segment(off + 1, s - 1) = (d1 - x0 * l1) / l0;
        off += s;
    }
    return out;
}

// Nesterov-Todd scaling: W z = W^{-1} s = lambda.
struct NTScaling {
    ConeDims dims;
    VectorXd w_lp;                  // per LP row, W = diag(w_lp)
    std::vector<double> eta;        // per SOC, W = eta^{1/2} (2 v v' - J)
    std::vector<VectorXd> v;        // per SOC, v'Jv = 1
    VectorXd lambda;

    void compute(const VectorXd& s, const VectorXd& z) {
        lambda.resize(dims.total());
        w_lp = (s.head(dims.nl).cwiseQuotient(z.head(dims.nl))).cwiseSqrt();
        lambda.head(dims.nl) = (s.head(dims.nl).cwiseProduct(z.head(dims.nl))).cwiseSqrt();
        eta.assign(dims.soc.size(), 0.0);
        v.assign(dims.soc.size(), VectorXd());
        int off = dims.nl;
        for (size_t ci = 0; ci < dims.soc.size(); ++ci) {
            const int sz = dims.soc[ci];
            const VectorXd sb = s.segment(off, sz);
            const VectorXd zb = z.segment(off, sz);
            const double res_s = sb(0) * sb(0) - sb.tail(sz - 1).squaredNorm();
            const double res_z = zb(0) * zb(0) - zb.tail(sz - 1).squaredNorm();
            const VectorXd sn = sb / std::sqrt(res_s);
            const VectorXd zn = zb / std::sqrt(res_z);
            const double gamma = std::sqrt((1.0 + sn.dot(zn)) / 2.0);
            VectorXd Jzn = zn;
            Jzn.tail(sz - 1) = -zn.tail(sz - 1);
            v[ci] = (sn + Jzn) / (2.0 * gamma);
            eta[ci] = std::sqrt(res_s / res_z);
            lambda.segment(off, sz) = apply_soc(ci, zb, off, /*inverse=*/false);
            off += sz;
        }
    }

    // W = eta^{1/2} [a q'; q I + qq'/(1+a)] with (a, q) = v, v'Jv = 1.
    // Then W^2 = eta (2vv' - J); the inverse swaps v for Jv = (a, -q).
    VectorXd apply_soc(size_t ci, const VectorXd& u, int /*off*/, bool inverse) const {
        const int sz = static_cast<int>(u.size());
        const double a = v[ci](0);
        VectorXd q = v[ci].tail(sz - 1);
        if (inverse) q = -q;
        const double qu = q.dot(u.tail(sz - 1));
        VectorXd out(sz);
        out(0) = a * u(0) + qu;
        out.tail(sz - 1) = u(0) * q + u.tail(sz - 1) + q * (qu / (1.0 + a));
        const double scale = std::sqrt(eta[ci]);
        out *= inverse ? 1.0 / scale : scale;
        return out;
    }

    VectorXd apply(const VectorXd& u, bool inverse) const {
        VectorXd out(dims.total());
        if (!inverse)
            out.head(dims.nl) = w_lp.cwiseProduct(u.head(dims.nl));
        else
            out.head(dims.nl) = u.head(dims.nl).cwiseQuotient(w_lp);
        int off = dims.nl;
        for (size_t ci = 0; ci < dims.soc.size(); ++ci) {
            const int sz = dims.soc[ci];
            out.segment(off, sz) = apply_soc(ci, u.segment(off, sz), off, inverse);
            off += sz;
        }
        return out;
    }

    // Dense blocks of W^2 for the KKT matrix.
    void add_w2_triplets(std::vector<Triplet>& trips, int base) const {
        for (int i = 0; i < dims.nl; ++i)
            trips.emplace_back(base + i, base + i, -(w_lp(i) * w_lp(i)));
        int off = dims.nl;
        for (size_t ci = 0; ci < dims.soc.size(); ++ci) {
            const int sz = dims.soc[ci];
            Eigen::MatrixXd W2 = 2.0 * v[ci] * v[ci].transpose();
            for (int r = 0; r < sz; ++r)
                W2(r, r) -= (r == 0 ? 1.0 : -1.0); // subtract J
            W2 *= eta[ci];
            for (int r = 0; r < sz; ++r)
                for (int cidx = 0; cidx < sz; ++cidx)
                    trips.emplace_back(base + off + r, base + off + cidx, -W2(r, cidx));
            off += sz;
        }
    }
};

// Largest step alpha with u + alpha du staying in the cone; capped at `cap`.
double max_step(const ConeDims& dims, const VectorXd& u, const VectorXd& du, double cap) {
    double alpha = cap;
    for (int i = 0; i < dims.nl; ++i)
        if (du(i) < 0.0) alpha = std::min(alpha, -u(i) / du(i));
    int off = dims.nl;
    for (int sz : dims.soc) {
        const double u0 = u(off), d0 = du(off);
        const auto u1 = u.segment(off + 1, sz - 1);
        const auto d1 = du.segment(off + 1, sz - 1);
        // (u0 + a d0)^2 - ||u1 + a d1||^2 >= 0 and u0 + a d0 >= 0
        const double qa = d0 * d0 - d1.squaredNorm();
        const double qb = u0 * d0 - u1.dot(d1);
        const double qc = u0 * u0 - u1.squaredNorm();
        double root = cap;
        const double disc = qb * qb - qa * qc;
        if (qa < 0.0)
            root = (qb + std::sqrt(std::max(disc, 0.0))) / (-qa);
        else if (qb < 0.0 && disc >= 0.0)
            root = qc / (-qb + std::sqrt(disc));
        if (d0 < 0.0) root = std::min(root, -u0 / d0);
        alpha = std::min(alpha, root);
        off += sz;
    }
    return alpha;
}

struct ConelpResult {
    SolveStatus status = SolveStatus::Inaccurate;
    VectorXd x, y, z, s;
    double pobj = std::numeric_limits<double>::quiet_NaN();
    double pres = std::numeric_limits<double>::infinity();
    double dres = std::numeric_limits<double>::infinity();
    double gap = std::numeric_limits<double>::infinity();
    int iters = 0;
};

class KKTSolver {
  public:
    KKTSolver(const SpMat& A, const SpMat& G) : A_(A), G_(G) {
        n_ = static_cast<int>(A.cols());
        p_ = static_cast<int>(A.rows());
        mg_ = static_cast<int>(G.rows());
    }

    void factor(const NTScaling& W) {
        const double delta = 1e-10;
        std::vector<Triplet> trips;
        trips.reserve(static_cast<size_t>(A_.nonZeros()) * 2 + G_.nonZeros() * 2 + n_ + p_ + mg_ * 4);
        for (int i = 0; i < n_; ++i) trips.emplace_back(i, i, delta);
        for (int i = 0; i < p_; ++i) trips.emplace_back(n_ + i, n_ + i, -delta);
        for (int i = 0; i < mg_; ++i) trips.emplace_back(n_ + p_ + i, n_ + p_ + i, -delta);
        for (int k = 0; k < A_.outerSize(); ++k)
            for (SpMat::InnerIterator it(A_, k); it; ++it) {
                trips.emplace_back(n_ + it.row(), it.col(), it.value());
                trips.emplace_back(it.col(), n_ + it.row(), it.value());
            }
        for (int k = 0; k < G_.outerSize(); ++k)
            for (SpMat::InnerIterator it(G_, k); it; ++it) {
                trips.emplace_back(n_ + p_ + it.row(), it.col(), it.value());
                trips.emplace_back(it.col(), n_ + p_ + it.row(), it.value());
            }
        W.add_w2_triplets(trips, n_ + p_);
        M_.resize(n_ + p_ + mg_, n_ + p_ + mg_);
        M_.setFromTriplets(trips.begin(), trips.end());
        lu_.compute(M_);
        ok_ = (lu_.info() == Eigen::Success);
        W_ = &W;
    }

    bool ok() const { return ok_; }

    // Solve [0 A' G'; A 0 0; G 0 -W^2] [dx;dy;dz] = [bx;by;bz]
    // with two rounds of iterative refinement against the regularized factor.
    void solve3(const VectorXd& bx, const VectorXd& by, const VectorXd& bz, VectorXd& dx,
                VectorXd& dy, VectorXd& dz) const {
        VectorXd rhs(n_ + p_ + mg_);
        rhs << bx, by, bz;
        VectorXd d = lu_.solve(rhs);
        for (int it = 0; it < 2; ++it) {
            VectorXd r = rhs - apply_unregularized(d);
            d += lu_.solve(r);
        }
        dx = d.head(n_);
        dy = d.segment(n_, p_);
        dz = d.tail(mg_);
    }

  private:
    VectorXd apply_unregularized(const VectorXd& d) const {
        VectorXd dx = d.head(n_), dy = d.segment(n_, p_), dz = d.tail(mg_);
        VectorXd out(n_ + p_ + mg_);
        out.head(n_) = A_.transpose() * dy + G_.transpose() * dz;
        out.segment(n_, p_) = A_ * dx;
        out.tail(mg_) = G_ * dx - W_->apply(W_->apply(dz, false), false);
        return out;
    }

    const SpMat& A_;
    const SpMat& G_;
    const NTScaling* W_ = nullptr;
    int n_, p_, mg_;
    SpMat M_;
    Eigen::SparseLU<SpMat> lu_;
    bool ok_ = false;
};

ConelpResult solve_conelp(const SpMat& A, const VectorXd& b, const SpMat& G, const VectorXd& h,
                          const VectorXd& c, const ConeDims& dims, const SolveOptions& opts) {
    const int n = static_cast<int>(c.size());
    const int p = static_cast<int>(b.size());
    const int mg = static_cast<int>(h.size());

    ConelpResult res;
    VectorXd x = VectorXd::Zero(n), y = VectorXd::Zero(p);
    VectorXd s = cone_identity(dims), z = cone_identity(dims);
    double tau = 1.0, kappa = 1.0;

    const double normb = b.norm(), normh = h.norm(), normc = c.norm();
    const int deg = dims.degree();

    KKTSolver kkt(A, G);
    NTScaling W;
    W.dims = dims;

    double best_err = std::numeric_limits<double>::infinity();

    for (int iter = 0; iter <= opts.max_iters; ++iter) {
        res.iters = iter;
        // HSD residuals (all should vanish)
        VectorXd rx = A.transpose() * y + G.transpose() * z + c * tau;
        VectorXd ry = A * x - b * tau;
        VectorXd rz = G * x + s - h * tau;
        const double rt = c.dot(x) + b.dot(y) + h.dot(z) + kappa;
        const double mu = (s.dot(z) + tau * kappa) / (deg + 1);

        // convergence metrics at the de-homogenized point
        const double pres = std::max((A * x - b * tau).norm() / (1.0 + normb),
                                     (G * x + s - h * tau).norm() / (1.0 + normh)) /
                            tau;
        const double dres = rx.norm() / (1.0 + normc) / tau;
        const double pobj = c.dot(x) / tau;
        const double dobj = (-b.dot(y) - h.dot(z)) / tau;
        const double gap = s.dot(z) / (tau * tau);
        const double relgap = gap / std::max(1.0, std::abs(pobj));

        const double err = std::max({pres, dres, std::min(gap, relgap)});
        if (err < best_err) {
            best_err = err;
            res.x = x / tau;
            res.y = y / tau;
            res.z = z / tau;
            res.s = s / tau;
            res.pobj = pobj;
            res.pres = pres;
            res.dres = dres;
            res.gap = gap;
        }

        if (pres <= opts.feas_tol && dres <= opts.feas_tol &&
            (gap <= opts.gap_tol || relgap <= opts.gap_tol)) {
            res.status = SolveStatus::Optimal;
            return res;
        }

        // Infeasibility certificates. (y, z) with A'y + G'z ~ 0 and
        // b'y + h'z < 0 proves primal infeasibility; x with Ax ~ 0,
        // Gx + s ~ 0 and c'x < 0 proves dual infeasibility (unboundedness).
        const double byhz = b.dot(y) + h.dot(z);
        if (byhz < -1e-14) {
            const double certres = (A.transpose() * y + G.transpose() * z).norm() / (-byhz);
            if (certres <= opts.feas_tol * (1.0 + normc) && tau <= 1e-6 * std::max(kappa, 1e-12)) {
                res.status = SolveStatus::Infeasible;
                res.y = y / (-byhz);
                res.z = z / (-byhz);
                res.pobj = std::numeric_limits<double>::infinity();
                return res;
            }
        }
        const double cx = c.dot(x);
        if (cx < -1e-14) {
            const double certres =
                std::max((A * x).norm(), (G * x + s).norm()) / (-cx);
            if (certres <= opts.feas_tol * (1.0 + normb + normh) &&
                tau <= 1e-6 * std::max(kappa, 1e-12)) {
                res.status = SolveStatus::Unbounded;
                res.x = x / (-cx);
                res.pobj = -std::numeric_limits<double>::infinity();
                return res;
            }
        }

        if (iter == opts.max_iters) break;

        W.compute(s, z);
        kkt.factor(W);
        if (!kkt.ok()) break;

        // constant-rhs solve reused by both directions
        VectorXd x1, y1, z1;
        kkt.solve3(-c, b, h, x1, y1, z1);
        const double S1 = c.dot(x1) + b.dot(y1) + h.dot(z1);

        const VectorXd lambda = W.lambda;
        const VectorXd lamlam = jordan_product(dims, lambda, lambda);

        auto direction = [&](double sigma, const VectorXd& ds_cor, double dk_cor, VectorXd& dx,
                             VectorXd& dy, VectorXd& dz, VectorXd& ds, double& dtau,
                             double& dkappa) {
            const double w = 1.0 - sigma;
            VectorXd dsr = -lamlam - ds_cor;
            dsr.head(dims.nl).array() += sigma * mu;
            {
                int off = dims.nl;
                for (int sz : dims.soc) {
                    dsr(off) += sigma * mu;
                    off += sz;
                }
            }
            const double dkr = -tau * kappa - dk_cor + sigma * mu;
            // eliminate ds: rz-row rhs picks up -W(lambda \ dsr)
            const VectorXd ls = jordan_solve(dims, lambda, dsr);
            VectorXd x2, y2, z2;
            kkt.solve3(-w * rx, -w * ry, -w * rz - W.apply(ls, false), x2, y2, z2);
            const double S2 = c.dot(x2) + b.dot(y2) + h.dot(z2);
            const double R = -w * rt;
            // from tau*(R - S2 - dtau*S1) + kappa*dtau = dkr
            dtau = (dkr - tau * R + tau * S2) / (kappa - tau * S1);
            dx = x2 + dtau * x1;
            dy = y2 + dtau * y1;
            dz = z2 + dtau * z1;
            ds = W.apply(ls - W.apply(dz, false), false);
            dkappa = R - (c.dot(dx) + b.dot(dy) + h.dot(dz));
        };

        // predictor
        VectorXd dx, dy, dz, ds;
        double dtau, dkappa;
        direction(0.0, VectorXd::Zero(dims.total()), 0.0, dx, dy, dz, ds, dtau, dkappa);

        double alpha = max_step(dims, s, ds, 1e10);
        alpha = std::min(alpha, max_step(dims, z, dz, 1e10));
        if (dtau < 0.0) alpha = std::min(alpha, -tau / dtau);
        if (dkappa < 0.0) alpha = std::min(alpha, -kappa / dkappa);
        const double alpha_aff = std::min(1.0, alpha);
        const double sigma = std::pow(1.0 - alpha_aff, 3);

        // corrector (Mehrotra second-order term)
        const VectorXd ws_aff = W.apply(ds, true);  // W^{-1} ds
        const VectorXd wz_aff = W.apply(dz, false); // W dz
        const VectorXd ds_cor = jordan_product(dims, ws_aff, wz_aff);
        const double dk_cor = dtau * dkappa;
        direction(sigma, ds_cor, dk_cor, dx, dy, dz, ds, dtau, dkappa);

        alpha = max_step(dims, s, ds, 1e10);
        alpha = std::min(alpha, max_step(dims, z, dz, 1e10));
        if (dtau < 0.0) alpha = std::min(alpha, -tau / dtau);
        if (dkappa < 0.0) alpha = std::min(alpha, -kappa / dkappa);
        alpha = std::min(1.0, 0.99 * alpha);

        x += alpha * dx;
        y += alpha * dy;
        z += alpha * dz;
        s += alpha * ds;
        tau += alpha * dtau;
        kappa += alpha * dkappa;

        if (!(tau > 0.0) || !std::isfinite(tau)) break;
    }

    res.status = SolveStatus::Inaccurate;
    return res;
}

} // namespace

int ConicProgram::add_variable() { return add_variables(1); }

int ConicProgram::add_variables(int count) {
    check_mutable();
    if (count < 1) throw std::invalid_argument("add_variables: count must be positive");
    const int first = num_vars_;
    num_vars_ += count;
    cone_tagged_.resize(num_vars_, 0);
    return first;
}

void ConicProgram::set_sense(Sense sense) {
    check_mutable();
    sense_ = sense;
}

void ConicProgram::set_objective_term(int var, double coeff) {
    check_mutable();
    check_var(var);
    objective_.emplace_back(var, coeff);
}

int ConicProgram::add_equality(const std::vector<Term>& terms, double rhs) {
    check_mutable();
    for (const auto& [v, coeff] : terms) check_var(v);
    eq_terms_.push_back(terms);
    eq_rhs_.push_back(rhs);
    return static_cast<int>(eq_rhs_.size()) - 1;
}

void ConicProgram::add_inequality(const std::vector<Term>& terms, double rhs) {
    check_mutable();
    const int slack = add_variable();
    mark_nonneg(slack);
    std::vector<Term> eq = terms;
    eq.emplace_back(slack, 1.0);
    add_equality(eq, rhs);
}

void ConicProgram::mark_nonneg(int var) {
    check_mutable();
    check_var(var);
    if (cone_tagged_[var])
        throw std::invalid_argument("mark_nonneg: variable already belongs to a cone");
    cone_tagged_[var] = 1;
    nonneg_.push_back(var);
}

void ConicProgram::add_soc(const std::vector<int>& vars) {
    check_mutable();
    if (vars.size() < 2) throw std::invalid_argument("add_soc: need a bound and a vector part");
    for (int v : vars) {
        check_var(v);
        if (cone_tagged_[v])
            throw std::invalid_argument("add_soc: variable already belongs to a cone");
    }
    for (int v : vars) cone_tagged_[v] = 1;
    socs_.push_back(vars);
}

void ConicProgram::finalize() { finalized_ = true; }

void ConicProgram::check_var(int var) const {
    if (var < 0 || var >= num_vars_)
        throw std::out_of_range("ConicProgram: variable index out of range");
}

void ConicProgram::check_mutable() const {
    if (finalized_) throw std::logic_error("ConicProgram: already finalized");
}

ConicSolution ConicProgram::solve(const SolveOptions& opts) {
    finalize();
    const int n = num_vars_;
    const int p = num_equalities();

    VectorXd c = VectorXd::Zero(n);
    const double obj_sign = sense_ == Sense::Maximize ? -1.0 : 1.0;
    for (const auto& [v, coeff] : objective_) c(v) += obj_sign * coeff;

    std::vector<Triplet> atrips;
    VectorXd b(p);
    for (int r = 0; r < p; ++r) {
        for (const auto& [v, coeff] : eq_terms_[r]) atrips.emplace_back(r, v, coeff);
        b(r) = eq_rhs_[r];
    }
    SpMat A(p, n);
    A.setFromTriplets(atrips.begin(), atrips.end());

    ConeDims dims;
    dims.nl = static_cast<int>(nonneg_.size());
    std::vector<Triplet> gtrips;
    int row = 0;
    for (int v : nonneg_) gtrips.emplace_back(row++, v, -1.0);
    for (const auto& soc : socs_) {
        dims.soc.push_back(static_cast<int>(soc.size()));
        for (int v : soc) gtrips.emplace_back(row++, v, -1.0);
    }
    const int mg = row;
    SpMat G(mg, n);
    G.setFromTriplets(gtrips.begin(), gtrips.end());
    VectorXd h = VectorXd::Zero(mg);

    ConicSolution sol;
    if (mg == 0) {
        // No cone constraints: a pure linear-equality problem.
        Eigen::MatrixXd Ad(A);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Ad);
        VectorXd x0 = VectorXd::Zero(n);
        if (p > 0) x0 = qr.solve(b);
        if (p > 0 && (Ad * x0 - b).norm() > 1e-9 * (1.0 + b.norm())) {
            sol.status = SolveStatus::Infeasible;
            return sol;
        }
        VectorXd yls = VectorXd::Zero(p);
        if (p > 0) {
            Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qrt(Ad.transpose());
            yls = qrt.solve(-c);
        }
        if ((p > 0 ? (Ad.transpose() * yls + c).norm() : c.norm()) > 1e-9 * (1.0 + c.norm())) {
            sol.status = SolveStatus::Unbounded;
            return sol;
        }
        sol.status = SolveStatus::Optimal;
        sol.primal = x0;
        sol.eq_duals = yls;
        sol.objective = obj_sign * c.dot(x0);
        sol.primal_residual = p > 0 ? (Ad * x0 - b).norm() / (1.0 + b.norm()) : 0.0;
        sol.dual_residual = 0.0;
        sol.duality_gap = 0.0;
        return sol;
    }

    ConelpResult r = solve_conelp(A, b, G, h, c, dims, opts);
    sol.status = r.status;
    sol.iterations = r.iters;
    sol.primal = r.x;
    sol.eq_duals = r.y;
    sol.primal_residual = r.pres;
    sol.dual_residual = r.dres;
    sol.duality_gap = r.gap;
    if (r.status == SolveStatus::Optimal || r.status == SolveStatus::Inaccurate)
        sol.objective = obj_sign * r.pobj;
    else if (r.status == SolveStatus::Infeasible)
        sol.objective = obj_sign * std::numeric_limits<double>::infinity();
    else if (r.status == SolveStatus::Unbounded)
        sol.objective = -obj_sign * std::numeric_limits<double>::infinity();
    return sol;
}

void ConicProgram::dump(std::ostream& os) const {
    os << (sense_ == Sense::Minimize ? "minimize" : "maximize");
    for (const auto& [v, coeff] : objective_) os << " " << coeff << "*v" << v;
    os << "\nequalities:\n";
    for (size_t r = 0; r < eq_rhs_.size(); ++r) {
        for (const auto& [v, coeff] : eq_terms_[r]) os << " " << coeff << "*v" << v;
        os << " = " << eq_rhs_[r] << "\n";
    }
    os << "nonneg:";
    for (int v : nonneg_) os << " v" << v;
    os << "\nsoc:";
    for (const auto& soc : socs_) {
        os << " (";
        for (size_t i = 0; i < soc.size(); ++i) os << (i ? "," : "") << "v" << soc[i];
        os << ")";
    }
    os << "\n";
}

} // namespace minmax
