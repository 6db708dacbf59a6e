#include "minmaxcert/convert.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace minmax {

namespace {

void check(const ReluNet1H& net) {
    if (net.h < 1 || net.d < 1)
        throw std::invalid_argument("ReluNet1H: h and d must be >= 1");
    if (net.W1.rows() != net.h || net.W1.cols() != net.d || net.b1.size() != net.h ||
        net.w2.size() != net.h)
        throw std::invalid_argument("ReluNet1H: inconsistent shapes");
    if (!net.W1.allFinite() || !net.b1.allFinite() || !net.w2.allFinite() ||
        !std::isfinite(net.b2))
        throw std::invalid_argument("ReluNet1H: non-finite entries");
}

} // namespace

double evaluate(const ReluNet1H& net, const Vector& x) {
    check(net);
    if (x.size() != net.d) throw std::invalid_argument("evaluate: input dimension mismatch");
    const Vector pre = net.W1 * x + net.b1;
    return net.w2.dot(pre.cwiseMax(0.0)) + net.b2;
}

MinMaxModel relu_to_minmax(const ReluNet1H& net, int cap) {
    check(net);
    std::vector<int> pos, neg;
    for (int k = 0; k < net.h; ++k) {
        if (net.w2(k) > 0.0)
            pos.push_back(k);
        else if (net.w2(k) < 0.0)
            neg.push_back(k);
    }
    const int np = static_cast<int>(pos.size());
    const int nn = static_cast<int>(neg.size());
    if (np > cap || nn > cap)
        throw std::invalid_argument(
            "relu_to_minmax: refusing conversion with " + std::to_string(nn) +
            " negative and " + std::to_string(np) + " positive units (would produce " +
            std::to_string(1LL << nn) + " x " + std::to_string(1LL << np) +
            " affine pieces; cap is 2^" + std::to_string(cap) + ")");

    const int m = 1 << nn;
    const int n = 1 << np;
    const int d = net.d;

    // per-subset sums of the positive part p (pieces) and negative part q
    Matrix pa(n, d);
    Vector pb(n);
    for (int S = 0; S < n; ++S) {
        Vector slope = Vector::Zero(d);
        double offset = net.b2;
        for (int q = 0; q < np; ++q)
            if (S & (1 << q)) {
                slope += net.w2(pos[q]) * net.W1.row(pos[q]).transpose();
                offset += net.w2(pos[q]) * net.b1(pos[q]);
            }
        pa.row(S) = slope.transpose();
        pb(S) = offset;
    }

    Matrix a(static_cast<Eigen::Index>(m) * n, d);
    Matrix b(m, n);
    for (int T = 0; T < m; ++T) {
        Vector qslope = Vector::Zero(d);
        double qoffset = 0.0;
        for (int q = 0; q < nn; ++q)
            if (T & (1 << q)) {
                qslope += -net.w2(neg[q]) * net.W1.row(neg[q]).transpose();
                qoffset += -net.w2(neg[q]) * net.b1(neg[q]);
            }
        for (int S = 0; S < n; ++S) {
            a.row(T * n + S) = (pa.row(S).transpose() - qslope).transpose();
            b(T, S) = pb(S) - qoffset;
        }
    }
    return MinMaxModel(m, n, d, std::move(a), std::move(b));
}

} // namespace minmax
