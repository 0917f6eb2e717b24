// Copyright 2026 The foliage authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "foliage/exact/scalar.hpp"

#include "foliage/error.hpp"

namespace foliage::exact {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

Scalar Scalar::fraction(long num, long den)
{
    if (den == 0) throw DomainError("zero denominator in rational constant");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

bool Scalar::is_integer() const { return is_real() && re_.get_den() == 1; }

Scalar &Scalar::operator+=(const Scalar &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
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

Scalar Scalar::inverse() const
{
    if (is_zero()) throw DomainError("division by zero");
    if (is_real()) return Scalar(mpq_class(1) / re_);
    mpq_class n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar &Scalar::operator/=(const Scalar &o)
{
    if (o.is_zero()) throw DomainError("division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this, acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

std::optional<mpq_class> rational_sqrt(const mpq_class &a)
{
    if (sgn(a) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(a.get_num_mpz_t()) || !mpz_perfect_square_p(a.get_den_mpz_t()))
        return std::nullopt;
    mpz_class n = sqrt(a.get_num()), d = sqrt(a.get_den());
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

std::optional<Scalar> Scalar::sqrt() const
{
    if (is_zero()) return Scalar();
    if (is_real()) {
        if (sgn(re_) > 0) {
            auto r = rational_sqrt(re_);
            if (!r) return std::nullopt;
            return Scalar(*r);
        }
        auto r = rational_sqrt(-re_);
        if (!r) return std::nullopt;
        return Scalar(mpq_class(0), *r);
    }
    // (u + iv)^2 = a + ib  with  u^2 = (a + |z|)/2, v = b/(2u).
    auto modulus = rational_sqrt(norm());
    if (!modulus) return std::nullopt;
    auto u = rational_sqrt((re_ + *modulus) / 2);
    if (!u || sgn(*u) == 0) return std::nullopt;
    mpq_class v = im_ / (2 * *u);
    return Scalar(*u, v);
}

std::string Scalar::str() const
{
    if (is_real()) return re_.get_str();
    if (sgn(re_) == 0) return "(" + im_.get_str() + "*i)";
    std::string s = "(" + re_.get_str();
    if (sgn(im_) > 0) s += "+";
    return s + im_.get_str() + "*i)";
}

int compare(const Scalar &a, const Scalar &b)
{
    int c = cmp(a.re(), b.re());
    if (c != 0) return c < 0 ? -1 : 1;
    c = cmp(a.im(), b.im());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

} // namespace foliage::exact
