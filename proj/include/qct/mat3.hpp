#pragma once

#include <array>
#include <ostream>
#include <sstream>
#include <string>

#include "cyclotomic9.hpp"
#include "errors.hpp"

namespace qct
{

    /**
     * Mat3: exact 3x3 matrices over Z[1/gamma], the operator domain of the
     * Clifford+T group. Equality is entrywise equality of reduced values.
     */
    class Mat3
    {
    public:
        Mat3() = default;

        static Mat3 identity()
        {
            Mat3 m;
            for (int i = 0; i < 3; ++i)
            {
                m.at(i, i) = GammaRational(Integer(1));
            }
            return m;
        }

        static Mat3 zero() { return Mat3(); }

        GammaRational &at(int r, int c) { return _e[static_cast<std::size_t>(3 * r + c)]; }
        const GammaRational &at(int r, int c) const
        {
            return _e[static_cast<std::size_t>(3 * r + c)];
        }

        bool operator==(const Mat3 &other) const { return _e == other._e; }
        bool operator!=(const Mat3 &other) const { return !(*this == other); }

        Mat3 operator*(const Mat3 &other) const
        {
            Mat3 r;
            for (int i = 0; i < 3; ++i)
            {
                for (int j = 0; j < 3; ++j)
                {
                    GammaRational acc = at(i, 0) * other.at(0, j);
                    acc = acc + at(i, 1) * other.at(1, j);
                    acc = acc + at(i, 2) * other.at(2, j);
                    r.at(i, j) = acc;
                }
            }
            return r;
        }

        Mat3 operator*(const GammaRational &s) const
        {
            Mat3 r;
            for (std::size_t k = 0; k < 9; ++k)
            {
                r._e[k] = _e[k] * s;
            }
            return r;
        }

        // Conjugate transpose.
        Mat3 dagger() const
        {
            Mat3 r;
            for (int i = 0; i < 3; ++i)
            {
                for (int j = 0; j < 3; ++j)
                {
                    r.at(i, j) = at(j, i).conj();
                }
            }
            return r;
        }

        GammaRational det() const
        {
            return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                   at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                   at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
        }

        GammaRational trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

        bool is_unitary() const { return (*this) * dagger() == identity(); }

        // Canonical byte serialization of the nine reduced entries, usable as an
        // exact hash key.
        std::string key() const
        {
            std::string out;
            out.reserve(192);
            for (const auto &e : _e)
            {
                e.append_key(out);
            }
            return out;
        }

        std::string to_string() const
        {
            std::ostringstream os;
            for (int i = 0; i < 3; ++i)
            {
                os << (i == 0 ? "[" : " ");
                for (int j = 0; j < 3; ++j)
                {
                    os << at(i, j) << (j < 2 ? ", " : "");
                }
                os << (i == 2 ? "]" : ";\n");
            }
            return os.str();
        }

        friend std::ostream &operator<<(std::ostream &os, const Mat3 &m)
        {
            return os << m.to_string();
        }

    private:
        std::array<GammaRational, 9> _e;
    };

} // namespace qct
