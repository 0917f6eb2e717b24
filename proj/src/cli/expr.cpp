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

#include "foliage/cli/expr.hpp"

#include "foliage/error.hpp"

#include <cctype>
#include <limits>

namespace foliage::cli {

using exact::Poly;
using exact::RatFunc;
using exact::Scalar;

namespace {

class Parser {
public:
    Parser(std::string_view text, const exact::Space &space) : text_(text), space_(space) {}

    RatFunc run()
    {
        skip();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        RatFunc r = expr();
        skip();
        if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return r;
    }

private:
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr()
    {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        RatFunc acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RatFunc term()
    {
        RatFunc acc = factor();
        while (true) {
            skip();
            std::size_t at = pos_;
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                RatFunc d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RatFunc factor()
    {
        RatFunc b = base();
        skip();
        std::size_t at = pos_;
        if (!accept('^')) return b;
        bool negative = accept('-');
        skip();
        std::size_t start = pos_;
        mpz_class e = integer();
        if (!e.fits_slong_p() || abs(e) > 100000) throw ParseError("exponent too large", start);
        long n = e.get_si();
        if (negative) {
            if (b.is_zero()) throw ParseError("zero raised to a negative power", at);
            n = -n;
        }
        return b.pow(n);
    }

    mpz_class integer()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(pos_ == text_.size() ? "unexpected end of input" : "expected integer", pos_);
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    RatFunc base()
    {
        skip();
        std::size_t n = space_.arity();
        if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc::constant(n, Scalar(mpq_class(integer())));
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!accept(')')) throw ParseError(pos_ == text_.size() ? "unexpected end of input" : "expected ')'", pos_);
            return r;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "i") return RatFunc::constant(n, Scalar::imaginary_unit());
            auto idx = space_.index_of(name);
            if (!idx) throw ParseError("undeclared name '" + name + "'", start);
            return RatFunc::variable(n, *idx);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    std::string_view text_;
    const exact::Space &space_;
    std::size_t pos_ = 0;
};

std::string monomial_string(const exact::Exponents &e, const std::vector<std::string> &names)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

// Sign and unsigned body of one term.
std::pair<bool, std::string> term_string(const exact::Term &t, const std::vector<std::string> &names)
{
    std::string mono = monomial_string(t.exps, names);
    const Scalar &c = t.coef;
    bool negative = false;
    std::string mag;
    if (c.is_real() || sgn(c.re()) == 0) {
        mpq_class v = c.is_real() ? c.re() : c.im();
        negative = sgn(v) < 0;
        mpq_class a = abs(v);
        if (c.is_real())
            mag = (a == 1 && !mono.empty()) ? "" : a.get_str();
        else
            mag = a == 1 ? "i" : a.get_str() + "*i";
    } else {
        mag = "(" + c.re().get_str() + (sgn(c.im()) > 0 ? "+" : "-");
        mpq_class a = abs(c.im());
        mag += (a == 1 ? std::string("i") : a.get_str() + "*i") + ")";
    }
    std::string body;
    if (mag.empty())
        body = mono;
    else if (mono.empty())
        body = mag;
    else
        body = mag + "*" + mono;
    return {negative, body};
}

bool is_single_power(const Poly &p)
{
    if (p.size() != 1 || !p.leading_coefficient().is_one()) return false;
    int vars = 0;
    for (int e : p.leading_term().exps)
        if (e) ++vars;
    return vars == 1;
}

} // namespace

RatFunc parse_expression(std::string_view text, const exact::Space &space)
{
    return Parser(text, space).run();
}

std::string print_scalar(const Scalar &c)
{
    exact::Term t{exact::Exponents{}, c};
    if (c.is_zero()) return "0";
    auto [neg, body] = term_string(t, {});
    return neg ? "-" + body : body;
}

std::string print_poly(const Poly &p, const std::vector<std::string> &names)
{
    if (names.size() < p.arity()) throw DomainError("not enough variable names for printing");
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto &t : p.terms()) {
        auto [neg, body] = term_string(t, names);
        if (first)
            s = neg ? "-" + body : body;
        else
            s += (neg ? " - " : " + ") + body;
        first = false;
    }
    return s;
}

std::string print_ratfunc(const RatFunc &r, const std::vector<std::string> &names)
{
    std::string num = print_poly(r.num(), names);
    if (r.den().is_one()) return num;
    if (r.num().size() > 1) num = "(" + num + ")";
    std::string den = print_poly(r.den(), names);
    if (!is_single_power(r.den())) den = "(" + den + ")";
    return num + "/" + den;
}

} // namespace foliage::cli
