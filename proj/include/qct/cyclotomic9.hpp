#pragma once

#include <array>
#include <ostream>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "integer.hpp"

namespace qct
{

    /**
     * CycInt9: cyclotomic integers of degree 9, i.e. Z[zeta] with
     * zeta = e^{2 pi i / 9}. Elements are stored as six coefficients
     * c0 + c1*zeta + ... + c5*zeta^5; products are reduced modulo the minimal
     * polynomial Phi_9(x) = x^6 + x^3 + 1 (so zeta^6 = -1 - zeta^3).
     */
    class CycInt9
    {
    public:
        CycInt9() noexcept { _c.fill(0); }

        explicit CycInt9(Integer constant)
        {
            _c.fill(0);
            _c[0] = std::move(constant);
        }

        CycInt9(Integer c0, Integer c1, Integer c2, Integer c3, Integer c4, Integer c5)
            : _c{std::move(c0), std::move(c1), std::move(c2),
                 std::move(c3), std::move(c4), std::move(c5)}
        {
        }

        // zeta^j for any j (reduced modulo 9, negative allowed).
        static CycInt9 zeta_power(int j)
        {
            j %= 9;
            if (j < 0)
            {
                j += 9;
            }
            std::array<Integer, 9> raw{};
            raw[j] = 1;
            return reduce_degree9(raw);
        }

        // omega = zeta^3, the primitive cube root of unity.
        static CycInt9 omega_power(int j) { return zeta_power(3 * ((j % 3 + 3) % 3)); }

        const Integer &coeff(int j) const { return _c[static_cast<std::size_t>(j)]; }

        bool is_zero() const
        {
            for (const auto &c : _c)
            {
                if (c != 0)
                {
                    return false;
                }
            }
            return true;
        }

        bool operator==(const CycInt9 &other) const { return _c == other._c; }
        bool operator!=(const CycInt9 &other) const { return !(*this == other); }

        CycInt9 operator+(const CycInt9 &other) const
        {
            CycInt9 r;
            for (std::size_t j = 0; j < 6; ++j)
            {
                r._c[j] = _c[j] + other._c[j];
            }
            return r;
        }

        CycInt9 operator-(const CycInt9 &other) const
        {
            CycInt9 r;
            for (std::size_t j = 0; j < 6; ++j)
            {
                r._c[j] = _c[j] - other._c[j];
            }
            return r;
        }

        CycInt9 operator-() const
        {
            CycInt9 r;
            for (std::size_t j = 0; j < 6; ++j)
            {
                r._c[j] = -_c[j];
            }
            return r;
        }

        CycInt9 operator*(const CycInt9 &other) const
        {
            std::array<Integer, 11> prod{};
            for (std::size_t j = 0; j < 6; ++j)
            {
                if (_c[j] == 0)
                {
                    continue;
                }
                for (std::size_t k = 0; k < 6; ++k)
                {
                    if (other._c[k] != 0)
                    {
                        prod[j + k] += _c[j] * other._c[k];
                    }
                }
            }
            std::array<Integer, 9> raw{};
            // Fold degrees 9 and 10 first: x^9 = 1, x^10 = x.
            for (std::size_t j = 0; j < 9; ++j)
            {
                raw[j] = std::move(prod[j]);
            }
            raw[0] += prod[9];
            raw[1] += prod[10];
            return reduce_degree9(raw);
        }

        CycInt9 operator*(const Integer &s) const
        {
            CycInt9 r;
            for (std::size_t j = 0; j < 6; ++j)
            {
                r._c[j] = _c[j] * s;
            }
            return r;
        }

        // Complex conjugation, the automorphism zeta -> zeta^8.
        CycInt9 conj() const
        {
            std::array<Integer, 9> raw{};
            // zeta^j conjugates to zeta^{(9-j) mod 9}.
            raw[0] = _c[0];
            raw[8] = _c[1];
            raw[7] = _c[2];
            raw[6] = _c[3];
            raw[5] = _c[4];
            raw[4] = _c[5];
            return reduce_degree9(raw);
        }

        // Image under the residue map Z[zeta] -> Z[zeta]/(gamma) = Z_3, zeta -> 1.
        int residue_mod_gamma() const
        {
            Integer sum = 0;
            for (const auto &c : _c)
            {
                sum += c;
            }
            return mod3(sum);
        }

        void append_key(std::string &out) const
        {
            for (const auto &c : _c)
            {
                append_integer_bytes(out, c);
            }
        }

        std::string to_string() const
        {
            std::ostringstream os;
            os << *this;
            return os.str();
        }

        friend std::ostream &operator<<(std::ostream &os, const CycInt9 &x)
        {
            bool first = true;
            for (std::size_t j = 0; j < 6; ++j)
            {
                const Integer &c = x._c[j];
                if (c == 0)
                {
                    continue;
                }
                if (!first && c > 0)
                {
                    os << "+";
                }
                if (j == 0)
                {
                    os << c;
                }
                else
                {
                    if (c == -1)
                    {
                        os << "-";
                    }
                    else if (c != 1)
                    {
                        os << c;
                    }
                    os << "z";
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
            return os;
        }

    private:
        // Reduce an array of coefficients for x^0..x^8 modulo Phi_9.
        static CycInt9 reduce_degree9(std::array<Integer, 9> &raw)
        {
            for (std::size_t j = 8; j >= 6; --j)
            {
                if (raw[j] != 0)
                {
                    raw[j - 3] -= raw[j];
                    raw[j - 6] -= raw[j];
                    raw[j] = 0;
                }
            }
            CycInt9 r;
            for (std::size_t j = 0; j < 6; ++j)
            {
                r._c[j] = std::move(raw[j]);
            }
            return r;
        }

        std::array<Integer, 6> _c;
    };

    inline const CycInt9 &gamma_element()
    {
        static const CycInt9 g(1, -1, 0, 0, 0, 0); // 1 - zeta
        return g;
    }

    // Exact division by gamma = 1 - zeta. Requires residue_mod_gamma() == 0.
    // Solves (1 - zeta) q = n by back-substitution on the coefficients.
    inline CycInt9 divide_by_gamma(const CycInt9 &n)
    {
        const Integer t = 2 * n.coeff(0) - n.coeff(1) - n.coeff(2) - n.coeff(3) -
                          n.coeff(4) - n.coeff(5);
        if (t % 3 != 0)
        {
            throw InternalError("divide_by_gamma: numerator not divisible by gamma");
        }
        Integer q0 = t / 3;
        Integer q1 = n.coeff(1) + q0;
        Integer q2 = n.coeff(2) + q1;
        Integer q3 = n.coeff(0) - n.coeff(4) - n.coeff(5) - q0;
        Integer q4 = n.coeff(4) + q3;
        Integer q5 = n.coeff(5) + q4;
        return CycInt9(std::move(q0), std::move(q1), std::move(q2),
                       std::move(q3), std::move(q4), std::move(q5));
    }

    /**
     * GammaRational: elements of Z[1/gamma], stored as numerator / gamma^gexp
     * with the invariant that either gexp = 0 or gamma does not divide the
     * numerator. Reduced values compare field-by-field.
     */
    class GammaRational
    {
    public:
        GammaRational() : _num(), _gexp(0) {}

        explicit GammaRational(Integer constant) : _num(std::move(constant)), _gexp(0) {}

        GammaRational(CycInt9 numerator, int gexp)
            : _num(std::move(numerator)), _gexp(gexp)
        {
            if (gexp < 0)
            {
                throw DomainError("GammaRational: negative gamma exponent");
            }
            reduce();
        }

        static GammaRational zeta_power(int j) { return GammaRational(CycInt9::zeta_power(j), 0); }

        const CycInt9 &numerator() const { return _num; }
        int gexp() const { return _gexp; }

        bool is_zero() const { return _num.is_zero(); }

        bool operator==(const GammaRational &other) const
        {
            return _gexp == other._gexp && _num == other._num;
        }
        bool operator!=(const GammaRational &other) const { return !(*this == other); }

        GammaRational operator+(const GammaRational &other) const
        {
            if (_gexp == other._gexp)
            {
                return GammaRational(_num + other._num, _gexp);
            }
            if (_gexp < other._gexp)
            {
                return GammaRational(scale_gamma(_num, other._gexp - _gexp) + other._num,
                                     other._gexp);
            }
            return GammaRational(_num + scale_gamma(other._num, _gexp - other._gexp), _gexp);
        }

        GammaRational operator-(const GammaRational &other) const { return *this + (-other); }

        GammaRational operator-() const
        {
            GammaRational r;
            r._num = -_num;
            r._gexp = _gexp;
            return r;
        }

        GammaRational operator*(const GammaRational &other) const
        {
            return GammaRational(_num * other._num, _gexp + other._gexp);
        }

        // Complex conjugation. Since gamma / conj(gamma) = -zeta, the conjugate of
        // n / gamma^k is conj(n) (-zeta)^k / gamma^k.
        GammaRational conj() const
        {
            CycInt9 n = _num.conj();
            if (_gexp > 0)
            {
                CycInt9 unit = CycInt9::zeta_power(_gexp % 9);
                if (_gexp % 2 == 1)
                {
                    unit = -unit;
                }
                n = n * unit;
            }
            return GammaRational(std::move(n), _gexp);
        }

        void append_key(std::string &out) const
        {
            out.push_back(static_cast<char>(_gexp & 0xff));
            out.push_back(static_cast<char>((_gexp >> 8) & 0xff));
            _num.append_key(out);
        }

        std::string to_string() const
        {
            std::ostringstream os;
            if (_gexp == 0)
            {
                os << _num;
            }
            else
            {
                os << "(" << _num << ")/g" << _gexp;
            }
            return os.str();
        }

        friend std::ostream &operator<<(std::ostream &os, const GammaRational &x)
        {
            return os << x.to_string();
        }

    private:
        static CycInt9 scale_gamma(const CycInt9 &n, int k)
        {
            CycInt9 r = n;
            for (int i = 0; i < k; ++i)
            {
                r = r * gamma_element();
            }
            return r;
        }

        void reduce()
        {
            while (_gexp > 0 && _num.residue_mod_gamma() == 0)
            {
                _num = divide_by_gamma(_num);
                --_gexp;
            }
            if (_num.is_zero())
            {
                _gexp = 0;
            }
        }

        CycInt9 _num;
        int _gexp;
    };

    // gamma_reduce from the ring layer's contract: the reduced representative of
    // numerator / gamma^gexp.
    inline GammaRational gamma_reduce(CycInt9 numerator, int gexp)
    {
        return GammaRational(std::move(numerator), gexp);
    }

} // namespace qct
