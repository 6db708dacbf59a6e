#pragma once

#include "minmaxcert/model.hpp"

namespace minmax {

/// Single-hidden-layer scalar ReLU network f(x) = w2 . relu(W1 x + b1) + b2.
struct ReluNet1H {
    int d = 0;
    int h = 0;
    Matrix W1; // h x d
    Vector b1; // h
    Vector w2; // h
    double b2 = 0.0;
};

double evaluate(const ReluNet1H& net, const Vector& x);

/// Exact conversion to a min-max affine model via the difference of two
/// max-affine functions: f = p - q with p collecting the positive-weight
/// units (max over subsets S) and q the negative-weight units (max over
/// subsets T), giving f = min_T max_S (affine). The result has m = 2^|N|
/// components and n = 2^|P| pieces; subsets are enumerated in increasing
/// bitmask order. Zero-weight units are dropped first. Throws when either
/// unit count exceeds cap.
MinMaxModel relu_to_minmax(const ReluNet1H& net, int cap = 14);

} // namespace minmax
