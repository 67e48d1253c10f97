#include "lgkit/gaussian_rational.hpp"

#include "lgkit/errors.hpp"

namespace lgkit {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::from_rational_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) {
        throw ParseError("invalid rational number '" + text + "'");
    }
    q.canonicalize();
    return {q, 0};
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Gaussian rational arithmetic");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("division by zero in Gaussian rational arithmetic");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = im_.get_str() + "*i";
    }
    if (sgn(re_) == 0) return sgn(im_) < 0 && im_ != -1 ? "(" + imag + ")" : imag;
    std::string out = "(" + re_.get_str();
    if (sgn(im_) > 0) out += "+";
    return out + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) { return os << q.to_string(); }

}  // namespace lgkit
