#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "integer.hpp"

namespace qct
{

    /**
     * Dyadic: the ring Z[1/2] of dyadic fractions a / 2^b, stored reduced
     * (b = 0 or a odd).
     */
    class Dyadic
    {
    public:
        Dyadic() : _num(0), _dexp(0) {}

        Dyadic(Integer num, int dexp) : _num(std::move(num)), _dexp(dexp)
        {
            if (dexp < 0)
            {
                throw DomainError("Dyadic: negative denominator exponent");
            }
            reduce();
        }

        explicit Dyadic(Integer num) : _num(std::move(num)), _dexp(0) {}
        Dyadic(long num) : _num(num), _dexp(0) {}

        static Dyadic half() { return Dyadic(Integer(1), 1); }

        const Integer &num() const { return _num; }
        int dexp() const { return _dexp; }

        bool is_zero() const { return _num == 0; }

        bool operator==(const Dyadic &other) const
        {
            return _num == other._num && _dexp == other._dexp;
        }
        bool operator!=(const Dyadic &other) const { return !(*this == other); }

        Dyadic operator+(const Dyadic &other) const
        {
            if (_dexp == other._dexp)
            {
                return Dyadic(_num + other._num, _dexp);
            }
            if (_dexp < other._dexp)
            {
                return Dyadic((_num << (other._dexp - _dexp)) + other._num, other._dexp);
            }
            return Dyadic(_num + (other._num << (_dexp - other._dexp)), _dexp);
        }

        Dyadic operator-(const Dyadic &other) const { return *this + (-other); }

        Dyadic operator-() const
        {
            Dyadic r;
            r._num = -_num;
            r._dexp = _dexp;
            return r;
        }

        Dyadic operator*(const Dyadic &other) const
        {
            return Dyadic(_num * other._num, _dexp + other._dexp);
        }

        Dyadic operator*(const Integer &s) const { return Dyadic(_num * s, _dexp); }

        // Exact division by 3; requires the numerator to be divisible.
        Dyadic div3() const
        {
            if (_num % 3 != 0)
            {
                throw InternalError("Dyadic::div3: numerator not divisible by 3");
            }
            Dyadic r;
            r._num = _num / 3;
            r._dexp = _dexp;
            return r;
        }

        // Residue modulo 3 under the embedding of Z[1/2] in Z_3 (1/2 = 2 mod 3):
        // rho(a / 2^b) = a * 2^b mod 3.
        int residue_mod3() const
        {
            int r = mod3(_num);
            return (_dexp & 1) ? (2 * r) % 3 : r;
        }

        void append_key(std::string &out) const
        {
            out.push_back(static_cast<char>(_dexp & 0xff));
            out.push_back(static_cast<char>((_dexp >> 8) & 0xff));
            append_integer_bytes(out, _num);
        }

        std::string to_string() const
        {
            std::ostringstream os;
            os << _num;
            if (_dexp > 0)
            {
                os << "/2";
                if (_dexp > 1)
                {
                    os << "^" << _dexp;
                }
            }
            return os.str();
        }

        friend std::ostream &operator<<(std::ostream &os, const Dyadic &d)
        {
            return os << d.to_string();
        }

    private:
        void reduce()
        {
            if (_num == 0)
            {
                _dexp = 0;
                return;
            }
            if (_dexp == 0)
            {
                return;
            }
            Integer mag = _num < 0 ? Integer(-_num) : _num;
            const int tz = static_cast<int>(lsb(mag));
            const int shift = tz < _dexp ? tz : _dexp;
            if (shift > 0)
            {
                mag >>= shift;
                _num = _num < 0 ? Integer(-mag) : mag;
                _dexp -= shift;
            }
        }

        Integer _num;
        int _dexp;
    };

} // namespace qct
