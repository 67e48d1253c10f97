#pragma once

#include <complex>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace lgkit {

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
///
/// GMP keeps both parts canonical (reduced, positive denominator), so
/// structural equality is value equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
    /// Parses "p" or "p/q" as a real rational.
    static GaussianRational from_rational_string(const std::string& text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, always real.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Compact text form accepted back by the polynomial parser,
    /// e.g. "3/2", "-i", "(1/2+3*i)".
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

}  // namespace lgkit
