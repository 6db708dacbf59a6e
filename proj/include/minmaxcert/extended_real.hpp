#pragma once

#include <cmath>
#include <ostream>

namespace minmax {

/// Value in R ∪ {+inf}, with the infinity tagged explicitly rather than
/// carried in a sentinel double. Arithmetic is only defined where it is
/// unambiguous for convex calculus (+inf absorbs addition and comparisons).
class ExtReal {
  public:
    ExtReal() : value_(0.0), finite_(true) {}
    ExtReal(double v) : value_(v), finite_(true) {}

    static ExtReal infinity() {
        ExtReal r;
        r.finite_ = false;
        return r;
    }

    bool is_finite() const { return finite_; }
    /// Finite value; meaningless when !is_finite().
    double value() const { return value_; }

    ExtReal operator+(const ExtReal& o) const {
        if (!finite_ || !o.finite_) return infinity();
        return ExtReal(value_ + o.value_);
    }
    bool operator<=(double rhs) const { return finite_ && value_ <= rhs; }
    bool operator==(const ExtReal& o) const {
        if (finite_ != o.finite_) return false;
        return !finite_ || value_ == o.value_;
    }

  private:
    double value_;
    bool finite_;
};

inline std::ostream& operator<<(std::ostream& os, const ExtReal& r) {
    if (r.is_finite())
        os << r.value();
    else
        os << "inf";
    return os;
}

} // namespace minmax
