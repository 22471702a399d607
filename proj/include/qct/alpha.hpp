#pragma once

#include <array>
#include <ostream>
#include <sstream>
#include <string>

#include "dyadic.hpp"
#include "errors.hpp"
#include "integer.hpp"

namespace qct
{

    /** An element of the field Z_3, used as the codomain of the residue maps. */
    struct Residue3
    {
        int v = 0;

        Residue3() = default;
        Residue3(int value) : v(((value % 3) + 3) % 3) {}

        bool operator==(const Residue3 &o) const { return v == o.v; }
        bool operator!=(const Residue3 &o) const { return v != o.v; }

        Residue3 operator+(const Residue3 &o) const { return Residue3(v + o.v); }
        Residue3 operator-(const Residue3 &o) const { return Residue3(v - o.v); }
        Residue3 operator*(const Residue3 &o) const { return Residue3(v * o.v); }

        friend std::ostream &operator<<(std::ostream &os, const Residue3 &r)
        {
            return os << r.v;
        }
    };

    /**
     * AlphaPoly: the ring Z[alpha] with alpha = sin(2 pi / 9), stored as six
     * dyadic coefficients C0 + C1*alpha + ... + C5*alpha^5. Products reduce via
     * the minimal relation 64 alpha^6 - 96 alpha^4 + 36 alpha^2 - 3 = 0, i.e.
     * alpha^6 = 3/2^6 - (9/2^4) alpha^2 + (3/2) alpha^4.
     */
    class AlphaPoly
    {
    public:
        AlphaPoly() = default;

        explicit AlphaPoly(Dyadic constant)
        {
            _c[0] = std::move(constant);
        }

        AlphaPoly(Dyadic c0, Dyadic c1, Dyadic c2, Dyadic c3, Dyadic c4, Dyadic c5)
            : _c{std::move(c0), std::move(c1), std::move(c2),
                 std::move(c3), std::move(c4), std::move(c5)}
        {
        }

        static AlphaPoly one() { return AlphaPoly(Dyadic(Integer(1))); }

        const Dyadic &coeff(int j) const { return _c[static_cast<std::size_t>(j)]; }

        bool is_zero() const
        {
            for (const auto &c : _c)
            {
                if (!c.is_zero())
                {
                    return false;
                }
            }
            return true;
        }

        bool operator==(const AlphaPoly &other) const { return _c == other._c; }
        bool operator!=(const AlphaPoly &other) const { return !(*this == other); }

        AlphaPoly operator+(const AlphaPoly &other) const
        {
            AlphaPoly r;
            for (std::size_t j = 0; j < 6; ++j)
            {
                r._c[j] = _c[j] + other._c[j];
            }
            return r;
        }

        AlphaPoly operator-(const AlphaPoly &other) const
        {
            AlphaPoly r;
            for (std::size_t j = 0; j < 6; ++j)
            {
                r._c[j] = _c[j] - other._c[j];
            }
            return r;
        }

        AlphaPoly operator-() const
        {
            AlphaPoly r;
            for (std::size_t j = 0; j < 6; ++j)
            {
                r._c[j] = -_c[j];
            }
            return r;
        }

        AlphaPoly operator*(const AlphaPoly &other) const
        {
            std::array<Dyadic, 11> prod;
            for (std::size_t j = 0; j < 6; ++j)
            {
                if (_c[j].is_zero())
                {
                    continue;
                }
                for (std::size_t k = 0; k < 6; ++k)
                {
                    if (!other._c[k].is_zero())
                    {
                        prod[j + k] = prod[j + k] + _c[j] * other._c[k];
                    }
                }
            }
            return reduce(prod);
        }

        AlphaPoly operator*(const Integer &s) const
        {
            AlphaPoly r;
            for (std::size_t j = 0; j < 6; ++j)
            {
                r._c[j] = _c[j] * s;
            }
            return r;
        }

        // Multiplication by alpha^m, m >= 0.
        AlphaPoly mul_alpha_power(int m) const
        {
            AlphaPoly r = *this;
            while (m >= 6)
            {
                r = r.shift_by(5);
                m -= 5;
            }
            if (m > 0)
            {
                r = r.shift_by(m);
            }
            return r;
        }

        // The residue rho(q) = q mod alpha in Z_3, computed from the constant
        // coefficient: rho(a / 2^b) = 2^b a mod 3.
        Residue3 residue() const { return Residue3(_c[0].residue_mod3()); }

        // Exact division by alpha; requires residue() == 0. Uses
        // 3 / alpha = 36 alpha - 96 alpha^3 + 64 alpha^5.
        AlphaPoly divide_by_alpha() const
        {
            if (residue() != Residue3(0))
            {
                throw InternalError("AlphaPoly::divide_by_alpha: not divisible");
            }
            const Dyadic c0p = _c[0].div3();
            AlphaPoly r;
            r._c[0] = _c[1];
            r._c[1] = _c[2] + c0p * Integer(36);
            r._c[2] = _c[3];
            r._c[3] = _c[4] - c0p * Integer(96);
            r._c[4] = _c[5];
            r._c[5] = c0p * Integer(64);
            return r;
        }

        void append_key(std::string &out) const
        {
            for (const auto &c : _c)
            {
                c.append_key(out);
            }
        }

        std::string to_string() const
        {
            std::ostringstream os;
            bool first = true;
            for (std::size_t j = 0; j < 6; ++j)
            {
                if (_c[j].is_zero())
                {
                    continue;
                }
                if (!first)
                {
                    os << (_c[j].num() < 0 ? "" : "+");
                }
                os << _c[j].to_string();
                if (j >= 1)
                {
                    os << "*a";
                    if (j > 1)
                    {
                        os << j;
                    }
                }
                first = false;
            }
            if (first)
            {
                os << "0";
            }
            return os.str();
        }

        friend std::ostream &operator<<(std::ostream &os, const AlphaPoly &p)
        {
            return os << p.to_string();
        }

    private:
        AlphaPoly shift_by(int m) const
        {
            std::array<Dyadic, 11> prod;
            for (std::size_t j = 0; j < 6; ++j)
            {
                prod[j + static_cast<std::size_t>(m)] = _c[j];
            }
            return reduce(prod);
        }

        static AlphaPoly reduce(std::array<Dyadic, 11> &prod)
        {
            // alpha^j = alpha^{j-6} (3/2^6 - (9/2^4) alpha^2 + (3/2) alpha^4)
            static const Dyadic k0(Integer(3), 6);
            static const Dyadic k2(Integer(-9), 4);
            static const Dyadic k4(Integer(3), 1);
            for (std::size_t j = 10; j >= 6; --j)
            {
                if (!prod[j].is_zero())
                {
                    prod[j - 6] = prod[j - 6] + prod[j] * k0;
                    prod[j - 4] = prod[j - 4] + prod[j] * k2;
                    prod[j - 2] = prod[j - 2] + prod[j] * k4;
                    prod[j] = Dyadic();
                }
            }
            AlphaPoly r;
            for (std::size_t j = 0; j < 6; ++j)
            {
                r._c[j] = std::move(prod[j]);
            }
            return r;
        }

        std::array<Dyadic, 6> _c;
    };

    /**
     * AlphaRational: the ring Z[1/2, 1/alpha], stored as numerator / alpha^aexp
     * with aexp least (aexp = 0 or rho(numerator) != 0). By the least-
     * denominator-exponent characterization, the stored aexp is the LDE.
     */
    class AlphaRational
    {
    public:
        AlphaRational() : _num(), _aexp(0) {}

        explicit AlphaRational(Dyadic constant) : _num(AlphaPoly(std::move(constant))), _aexp(0) {}
        AlphaRational(long constant) : _num(AlphaPoly(Dyadic(constant))), _aexp(0) {}

        AlphaRational(AlphaPoly numerator, int aexp)
            : _num(std::move(numerator)), _aexp(aexp)
        {
            if (aexp < 0)
            {
                throw DomainError("AlphaRational: negative alpha exponent");
            }
            reduce();
        }

        static AlphaRational one() { return AlphaRational(AlphaPoly::one(), 0); }

        const AlphaPoly &numerator() const { return _num; }
        int aexp() const { return _aexp; }

        // Least denominator exponent; equals the stored exponent by invariant.
        int lde() const { return _aexp; }

        bool is_zero() const { return _num.is_zero(); }

        bool operator==(const AlphaRational &other) const
        {
            return _aexp == other._aexp && _num == other._num;
        }
        bool operator!=(const AlphaRational &other) const { return !(*this == other); }

        AlphaRational operator+(const AlphaRational &other) const
        {
            if (_aexp == other._aexp)
            {
                return AlphaRational(_num + other._num, _aexp);
            }
            if (_aexp < other._aexp)
            {
                return AlphaRational(_num.mul_alpha_power(other._aexp - _aexp) + other._num,
                                     other._aexp);
            }
            return AlphaRational(_num + other._num.mul_alpha_power(_aexp - other._aexp), _aexp);
        }

        AlphaRational operator-(const AlphaRational &other) const { return *this + (-other); }

        AlphaRational operator-() const
        {
            AlphaRational r;
            r._num = -_num;
            r._aexp = _aexp;
            return r;
        }

        AlphaRational operator*(const AlphaRational &other) const
        {
            return AlphaRational(_num * other._num, _aexp + other._aexp);
        }

        AlphaRational pow(unsigned e) const
        {
            AlphaRational result = one();
            AlphaRational base = *this;
            while (e > 0)
            {
                if (e & 1u)
                {
                    result = result * base;
                }
                base = base * base;
                e >>= 1;
            }
            return result;
        }

        void append_key(std::string &out) const
        {
            out.push_back(static_cast<char>(_aexp & 0xff));
            out.push_back(static_cast<char>((_aexp >> 8) & 0xff));
            _num.append_key(out);
        }

        std::string to_string() const
        {
            std::ostringstream os;
            if (_aexp == 0)
            {
                os << _num;
            }
            else
            {
                os << "(" << _num << ")/a";
                if (_aexp > 1)
                {
                    os << _aexp;
                }
            }
            return os.str();
        }

        friend std::ostream &operator<<(std::ostream &os, const AlphaRational &x)
        {
            return os << x.to_string();
        }

    private:
        void reduce()
        {
            while (_aexp > 0 && _num.residue() == Residue3(0))
            {
                _num = _num.divide_by_alpha();
                --_aexp;
            }
            if (_num.is_zero())
            {
                _aexp = 0;
            }
        }

        AlphaPoly _num;
        int _aexp;
    };

    inline Residue3 rho(const AlphaPoly &q) { return q.residue(); }

    // k-residue rho_k(q) = rho(alpha^k q). Requires k to be a denominator
    // exponent of q; strictly above the LDE the residue vanishes.
    inline Residue3 rho_k(const AlphaRational &q, int k)
    {
        if (k < q.aexp())
        {
            throw DomainError("rho_k: k is not a denominator exponent");
        }
        if (k > q.aexp())
        {
            return Residue3(0);
        }
        return q.numerator().residue();
    }

    inline int lde(const AlphaRational &q) { return q.lde(); }

    // 1/3 as an element of Z[1/2, 1/alpha]: (1/64 - (3/16) alpha^2 +
    // (1/2) alpha^4) / alpha^6, since three times that numerator is alpha^6.
    inline const AlphaRational &alpha_inv3()
    {
        static const AlphaRational v(
            AlphaPoly(Dyadic(Integer(1), 6), Dyadic(), Dyadic(Integer(-3), 4), Dyadic(),
                      Dyadic(Integer(1), 1), Dyadic()),
            6);
        return v;
    }

} // namespace qct
