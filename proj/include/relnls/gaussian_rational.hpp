#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace relnls {

// Exact complex rational a + b*i. All arithmetic is exact; mpq_class keeps
// numerator/denominator reduced with positive denominator.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(const mpq_class& re, const mpq_class& im = mpq_class(0))
        : re_(re), im_(im) {}

    static GaussianRational i() { return GaussianRational(0, 1); }
    static GaussianRational ratio(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    GaussianRational inverse() const;  // throws std::domain_error on zero
    GaussianRational pow(long e) const;

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

    // "3", "-1/2", "i", "-i", "2/3*i", or both parts as "1/2+3*i" / "1/2-3*i".
    std::string to_string() const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re_, -a.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_,
                                a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  private:
    mpq_class re_, im_;
};

}  // namespace relnls
