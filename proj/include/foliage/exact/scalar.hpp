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

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace foliage::exact {

/// Element of Q(i), kept as a pair of canonical GMP rationals.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(int v) : re_(v) {}
    Scalar(mpq_class re, mpq_class im = 0);

    static Scalar imaginary_unit();
    static Scalar fraction(long num, long den);

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_integer() const;

    Scalar conj() const { return Scalar(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;
    Scalar pow(long e) const;

    // Square root in Q(i) when one exists. The root returned has positive real part,
    // or zero real part and nonnegative imaginary part.
    std::optional<Scalar> sqrt() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
    friend bool operator==(const Scalar &a, const Scalar &b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

    // Debug rendering, e.g. "3/2", "(1+2*i)".
    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

// Total order used for canonical output only: real part, then imaginary part.
int compare(const Scalar &a, const Scalar &b);

// Rational square root when a is a perfect square in Q.
std::optional<mpq_class> rational_sqrt(const mpq_class &a);

} // namespace foliage::exact
