#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qct
{

    // Arbitrary-precision integers and rationals. Coefficients grow with the
    // T-count, so fixed-width types are not an option anywhere in the ring layer.
    using Integer = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    // Nonnegative remainder modulo 3.
    inline int mod3(const Integer &x)
    {
        Integer r = x % 3;
        if (r < 0)
        {
            r += 3;
        }
        return static_cast<int>(r);
    }

    inline Integer pow_integer(Integer base, unsigned exp)
    {
        Integer result = 1;
        while (exp > 0)
        {
            if (exp & 1u)
            {
                result *= base;
            }
            base *= base;
            exp >>= 1;
        }
        return result;
    }

    // Appends a canonical byte encoding of x (sign, length, magnitude bytes).
    // Used to build exact hash keys for matrices and adjoint representations.
    inline void append_integer_bytes(std::string &out, const Integer &x)
    {
        if (x == 0)
        {
            out.push_back('\x00');
            return;
        }
        out.push_back(x < 0 ? '\x02' : '\x01');
        std::string mag;
        Integer a = x < 0 ? Integer(-x) : x;
        export_bits(a, std::back_inserter(mag), 8);
        const std::uint32_t n = static_cast<std::uint32_t>(mag.size());
        out.push_back(static_cast<char>(n & 0xff));
        out.push_back(static_cast<char>((n >> 8) & 0xff));
        out.push_back(static_cast<char>((n >> 16) & 0xff));
        out.push_back(static_cast<char>((n >> 24) & 0xff));
        out += mag;
    }

} // namespace qct
