#pragma once

#include <array>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "alpha.hpp"
#include "cyclotomic9.hpp"
#include "dyadic.hpp"
#include "errors.hpp"
#include "integer.hpp"

namespace qct
{

    /**
     * Cyc36: the cyclotomic field of conductor 36 in the power basis of
     * eta = e^{2 pi i / 36}, with coefficients in Coeff (Integer or Rational).
     * Degree phi(36) = 12; products reduce modulo Phi_36(x) = x^12 - x^6 + 1.
     *
     * This is artifact plumbing: the smallest common home of zeta = eta^4,
     * i = eta^9, omega = eta^12 and alpha = sin(2 pi / 9), used to convert
     * exact traces into the alpha-basis of the adjoint representation.
     */
    template <typename Coeff>
    class Cyc36
    {
    public:
        Cyc36() { _c.fill(Coeff(0)); }

        explicit Cyc36(Coeff constant)
        {
            _c.fill(Coeff(0));
            _c[0] = std::move(constant);
        }

        explicit Cyc36(std::array<Coeff, 12> coeffs) : _c(std::move(coeffs)) {}

        // eta^e for any exponent (reduced modulo 36).
        static Cyc36 eta_power(int e)
        {
            e %= 36;
            if (e < 0)
            {
                e += 36;
            }
            const auto &tab = eta_table();
            Cyc36 r;
            for (std::size_t j = 0; j < 12; ++j)
            {
                r._c[j] = Coeff(tab[static_cast<std::size_t>(e)][j]);
            }
            return r;
        }

        const Coeff &coeff(int j) const { return _c[static_cast<std::size_t>(j)]; }
        const std::array<Coeff, 12> &coeffs() const { return _c; }

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

        bool operator==(const Cyc36 &other) const { return _c == other._c; }
        bool operator!=(const Cyc36 &other) const { return !(*this == other); }

        Cyc36 operator+(const Cyc36 &other) const
        {
            Cyc36 r;
            for (std::size_t j = 0; j < 12; ++j)
            {
                r._c[j] = _c[j] + other._c[j];
            }
            return r;
        }

        Cyc36 operator-(const Cyc36 &other) const
        {
            Cyc36 r;
            for (std::size_t j = 0; j < 12; ++j)
            {
                r._c[j] = _c[j] - other._c[j];
            }
            return r;
        }

        Cyc36 operator-() const
        {
            Cyc36 r;
            for (std::size_t j = 0; j < 12; ++j)
            {
                r._c[j] = -_c[j];
            }
            return r;
        }

        Cyc36 operator*(const Cyc36 &other) const
        {
            std::array<Coeff, 23> prod;
            prod.fill(Coeff(0));
            for (std::size_t j = 0; j < 12; ++j)
            {
                if (_c[j] == 0)
                {
                    continue;
                }
                for (std::size_t k = 0; k < 12; ++k)
                {
                    if (other._c[k] != 0)
                    {
                        prod[j + k] += _c[j] * other._c[k];
                    }
                }
            }
            // x^j = x^{j-6} - x^{j-12} for j >= 12
            for (std::size_t j = 22; j >= 12; --j)
            {
                if (prod[j] != 0)
                {
                    prod[j - 6] += prod[j];
                    prod[j - 12] -= prod[j];
                    prod[j] = Coeff(0);
                }
            }
            Cyc36 r;
            for (std::size_t j = 0; j < 12; ++j)
            {
                r._c[j] = std::move(prod[j]);
            }
            return r;
        }

        Cyc36 operator*(const Coeff &s) const
        {
            Cyc36 r;
            for (std::size_t j = 0; j < 12; ++j)
            {
                r._c[j] = _c[j] * s;
            }
            return r;
        }

        // Complex conjugation, eta -> eta^{-1}.
        Cyc36 conj() const
        {
            const auto &tab = eta_table();
            Cyc36 r;
            for (std::size_t j = 0; j < 12; ++j)
            {
                if (_c[j] == 0)
                {
                    continue;
                }
                const std::size_t e = j == 0 ? 0 : 36 - j;
                for (std::size_t k = 0; k < 12; ++k)
                {
                    if (tab[e][k] != 0)
                    {
                        r._c[k] += _c[j] * Coeff(tab[e][k]);
                    }
                }
            }
            return r;
        }

        bool is_real() const { return *this == conj(); }

        Cyc36 pow(unsigned e) const
        {
            Cyc36 result(Coeff(1));
            Cyc36 base = *this;
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

        std::string to_string() const
        {
            std::ostringstream os;
            bool first = true;
            for (std::size_t j = 0; j < 12; ++j)
            {
                if (_c[j] == 0)
                {
                    continue;
                }
                if (!first)
                {
                    os << " + ";
                }
                os << _c[j];
                if (j >= 1)
                {
                    os << "*e" << j;
                }
                first = false;
            }
            if (first)
            {
                os << "0";
            }
            return os.str();
        }

        friend std::ostream &operator<<(std::ostream &os, const Cyc36 &x)
        {
            return os << x.to_string();
        }

    private:
        // Reduced coefficient vectors of eta^e for e in [0, 36).
        static const std::array<std::array<int, 12>, 36> &eta_table()
        {
            static const std::array<std::array<int, 12>, 36> table = [] {
                std::array<std::array<int, 12>, 36> t{};
                for (std::size_t e = 0; e < 12; ++e)
                {
                    t[e][e] = 1;
                }
                for (std::size_t e = 12; e < 36; ++e)
                {
                    for (std::size_t j = 0; j < 12; ++j)
                    {
                        t[e][j] = t[e - 6][j] - t[e - 12][j];
                    }
                }
                return t;
            }();
            return table;
        }

        std::array<Coeff, 12> _c;
    };

    using Cyc36Rational = Cyc36<Rational>;
    using Cyc36Int = Cyc36<Integer>;

    // zeta^j (ninth root) embedded as eta^{4j}.
    template <typename Coeff>
    inline Cyc36<Coeff> cyc36_from_cyc9(const CycInt9 &x)
    {
        Cyc36<Coeff> r;
        for (int j = 0; j < 6; ++j)
        {
            if (x.coeff(j) != 0)
            {
                r = r + Cyc36<Coeff>::eta_power(4 * j) * Coeff(x.coeff(j));
            }
        }
        return r;
    }

    // Field inverse, via the 12x12 linear system y * x = 1. Phi_36 is
    // irreducible, so this fails only for x = 0.
    inline Cyc36Rational cyc36_inverse(const Cyc36Rational &x)
    {
        if (x.is_zero())
        {
            throw DomainError("cyc36_inverse: zero element");
        }
        // columns: coordinates of x * eta^j
        std::array<std::array<Rational, 13>, 12> m{};
        for (int j = 0; j < 12; ++j)
        {
            const Cyc36Rational col = x * Cyc36Rational::eta_power(j);
            for (int r = 0; r < 12; ++r)
            {
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = col.coeff(r);
            }
        }
        m[0][12] = 1;
        // Gauss-Jordan
        for (int col = 0; col < 12; ++col)
        {
            int pivot = -1;
            for (int r = col; r < 12; ++r)
            {
                if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0)
                {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0)
            {
                throw InternalError("cyc36_inverse: singular multiplication matrix");
            }
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
            const Rational inv = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int c = col; c <= 12; ++c)
            {
                m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= inv;
            }
            for (int r = 0; r < 12; ++r)
            {
                if (r == col)
                {
                    continue;
                }
                const Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                if (f != 0)
                {
                    for (int c = col; c <= 12; ++c)
                    {
                        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                            f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
                    }
                }
            }
        }
        std::array<Rational, 12> y;
        for (int j = 0; j < 12; ++j)
        {
            y[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)][12];
        }
        return Cyc36Rational(std::move(y));
    }

    namespace detail
    {

        // Exact change of basis between the alpha-power basis of the real subfield
        // and the eta-power basis. Columns are the coordinates of (2 alpha)^j,
        // which are integral because 2 alpha = eta + eta^5 - eta^7.
        struct AlphaSolver
        {
            std::array<std::array<Integer, 6>, 12> basis;   // (2 alpha)^j coords
            std::array<int, 6> pivot_rows;
            std::array<std::array<Integer, 6>, 6> inverse_num; // delta * A_P^{-1}
            Integer delta;

            AlphaSolver()
            {
                Cyc36Int two_alpha;
                {
                    const Cyc36Int e1 = Cyc36Int::eta_power(1);
                    const Cyc36Int e5 = Cyc36Int::eta_power(5);
                    const Cyc36Int e7 = Cyc36Int::eta_power(7);
                    two_alpha = e1 + e5 - e7;
                }
                Cyc36Int p(Integer(1));
                for (int j = 0; j < 6; ++j)
                {
                    for (int r = 0; r < 12; ++r)
                    {
                        basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = p.coeff(r);
                    }
                    p = p * two_alpha;
                }

                // Select 6 independent rows by rational elimination.
                std::array<std::array<Rational, 6>, 12> work;
                for (int r = 0; r < 12; ++r)
                {
                    for (int j = 0; j < 6; ++j)
                    {
                        work[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                            Rational(basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
                    }
                }
                std::array<bool, 12> used{};
                for (int col = 0; col < 6; ++col)
                {
                    int pivot = -1;
                    for (int r = 0; r < 12; ++r)
                    {
                        if (!used[static_cast<std::size_t>(r)] &&
                            work[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0)
                        {
                            pivot = r;
                            break;
                        }
                    }
                    if (pivot < 0)
                    {
                        throw InternalError("AlphaSolver: basis matrix is rank deficient");
                    }
                    used[static_cast<std::size_t>(pivot)] = true;
                    pivot_rows[static_cast<std::size_t>(col)] = pivot;
                    for (int r = 0; r < 12; ++r)
                    {
                        if (used[static_cast<std::size_t>(r)] && r != pivot)
                        {
                            continue;
                        }
                        if (r == pivot)
                        {
                            continue;
                        }
                        const Rational f = work[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                                           work[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)];
                        if (f != 0)
                        {
                            for (int c = 0; c < 6; ++c)
                            {
                                work[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                                    f * work[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(c)];
                            }
                        }
                    }
                }

                // Invert the pivot submatrix exactly; store as integer matrix / delta.
                std::array<std::array<Rational, 12>, 6> aug{};
                for (int r = 0; r < 6; ++r)
                {
                    for (int c = 0; c < 6; ++c)
                    {
                        aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Rational(
                            basis[static_cast<std::size_t>(pivot_rows[static_cast<std::size_t>(r)])]
                                 [static_cast<std::size_t>(c)]);
                    }
                    aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(6 + r)] = 1;
                }
                for (int col = 0; col < 6; ++col)
                {
                    int pivot = -1;
                    for (int r = col; r < 6; ++r)
                    {
                        if (aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0)
                        {
                            pivot = r;
                            break;
                        }
                    }
                    if (pivot < 0)
                    {
                        throw InternalError("AlphaSolver: pivot submatrix singular");
                    }
                    std::swap(aug[static_cast<std::size_t>(pivot)], aug[static_cast<std::size_t>(col)]);
                    const Rational inv = aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
                    for (int c = 0; c < 12; ++c)
                    {
                        aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= inv;
                    }
                    for (int r = 0; r < 6; ++r)
                    {
                        if (r == col)
                        {
                            continue;
                        }
                        const Rational f = aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                        if (f != 0)
                        {
                            for (int c = 0; c < 12; ++c)
                            {
                                aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                                    f * aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
                            }
                        }
                    }
                }
                delta = 1;
                for (int r = 0; r < 6; ++r)
                {
                    for (int c = 0; c < 6; ++c)
                    {
                        const Integer den = denominator(
                            aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(6 + c)]);
                        delta = delta / gcd(delta, den) * den;
                    }
                }
                for (int r = 0; r < 6; ++r)
                {
                    for (int c = 0; c < 6; ++c)
                    {
                        const Rational v =
                            aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(6 + c)] * delta;
                        inverse_num[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                            numerator(v);
                    }
                }
            }
        };

        inline const AlphaSolver &alpha_solver()
        {
            static const AlphaSolver solver;
            return solver;
        }

        // Splits n into 2^a 3^b m; returns false (leaving m) when m != 1.
        inline bool split_2_3(Integer n, int &a, int &b)
        {
            a = 0;
            b = 0;
            if (n < 0)
            {
                n = -n;
            }
            if (n == 0)
            {
                return false;
            }
            if (n > 1)
            {
                a = static_cast<int>(lsb(n));
                n >>= a;
            }
            while (n % 3 == 0)
            {
                n /= 3;
                ++b;
            }
            return n == 1;
        }

    } // namespace detail

    /**
     * Converts exact integer eta-coordinates of a real element into its unique
     * representation in Z[1/2, 1/alpha]. Throws DomainError when the
     * coordinates do not lie in the real subfield.
     */
    inline AlphaRational alpha_from_real_coords(const std::array<Integer, 12> &xi)
    {
        const auto &solver = detail::alpha_solver();
        std::array<Integer, 6> b_num;
        for (int r = 0; r < 6; ++r)
        {
            Integer acc = 0;
            for (int c = 0; c < 6; ++c)
            {
                acc += solver.inverse_num[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                       xi[static_cast<std::size_t>(
                           solver.pivot_rows[static_cast<std::size_t>(c)])];
            }
            b_num[static_cast<std::size_t>(r)] = std::move(acc);
        }
        // Consistency on all 12 rows: A * b == delta * xi.
        for (int r = 0; r < 12; ++r)
        {
            Integer acc = 0;
            for (int j = 0; j < 6; ++j)
            {
                acc += solver.basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *
                       b_num[static_cast<std::size_t>(j)];
            }
            if (acc != solver.delta * xi[static_cast<std::size_t>(r)])
            {
                throw DomainError("alpha_from_real_coords: element not in the real subfield");
            }
        }
        // c_j = 2^j b_j / delta must have denominator 2^a 3^e.
        std::array<Dyadic, 6> coeffs;
        std::array<int, 6> three_exp{};
        int max_three = 0;
        for (int j = 0; j < 6; ++j)
        {
            Rational c(b_num[static_cast<std::size_t>(j)] * (Integer(1) << j), solver.delta);
            const Integer den = denominator(c);
            int a = 0;
            int b = 0;
            if (den != 1 && !detail::split_2_3(den, a, b))
            {
                throw DomainError("alpha_from_real_coords: not representable over Z[1/2, 1/alpha]");
            }
            coeffs[static_cast<std::size_t>(j)] = Dyadic(numerator(c), a);
            three_exp[static_cast<std::size_t>(j)] = b;
            max_three = b > max_three ? b : max_three;
        }
        AlphaPoly poly;
        {
            std::array<Dyadic, 6> scaled;
            for (int j = 0; j < 6; ++j)
            {
                scaled[static_cast<std::size_t>(j)] =
                    coeffs[static_cast<std::size_t>(j)] *
                    pow_integer(3, static_cast<unsigned>(
                                       max_three - three_exp[static_cast<std::size_t>(j)]));
            }
            poly = AlphaPoly(scaled[0], scaled[1], scaled[2], scaled[3], scaled[4], scaled[5]);
        }
        AlphaRational value(std::move(poly), 0);
        if (max_three > 0)
        {
            value = value * alpha_inv3().pow(static_cast<unsigned>(max_three));
        }
        return value;
    }

    /**
     * real_to_alpha: exact conversion of a real element of the conductor-36
     * field into Z[1/2, 1/alpha]. Throws when the input is not real or needs a
     * prime other than 2 or 3 in a denominator.
     */
    inline AlphaRational real_to_alpha(const Cyc36Rational &x)
    {
        if (!x.is_real())
        {
            throw DomainError("real_to_alpha: input not fixed by conjugation");
        }
        Integer l = 1;
        for (int j = 0; j < 12; ++j)
        {
            const Integer den = denominator(x.coeff(j));
            l = l / gcd(l, den) * den;
        }
        int a = 0;
        int b = 0;
        if (l != 1 && !detail::split_2_3(l, a, b))
        {
            throw DomainError("real_to_alpha: not representable over Z[1/2, 1/alpha]");
        }
        std::array<Integer, 12> xi;
        for (int j = 0; j < 12; ++j)
        {
            xi[static_cast<std::size_t>(j)] = numerator(Rational(x.coeff(j) * l));
        }
        AlphaRational value = alpha_from_real_coords(xi);
        if (a > 0)
        {
            value = value * AlphaRational(Dyadic(Integer(1), a));
        }
        if (b > 0)
        {
            value = value * alpha_inv3().pow(static_cast<unsigned>(b));
        }
        return value;
    }

    // alpha itself as a field element.
    inline const Cyc36Rational &cyc36_alpha()
    {
        static const Cyc36Rational a = [] {
            Cyc36Rational v = Cyc36Rational::eta_power(1) + Cyc36Rational::eta_power(5) -
                              Cyc36Rational::eta_power(7);
            return v * Rational(1, 2);
        }();
        return a;
    }

    // Embedding of Z[1/2, 1/alpha] into the field.
    inline Cyc36Rational cyc36_from_alpha(const AlphaRational &q)
    {
        static const Cyc36Rational alpha_inv = cyc36_inverse(cyc36_alpha());
        Cyc36Rational acc;
        for (int j = 0; j < 6; ++j)
        {
            const Dyadic &d = q.numerator().coeff(j);
            if (d.is_zero())
            {
                continue;
            }
            const Rational c(d.num(), Integer(1) << d.dexp());
            acc = acc + cyc36_alpha().pow(static_cast<unsigned>(j)) * c;
        }
        if (q.aexp() > 0)
        {
            acc = acc * alpha_inv.pow(static_cast<unsigned>(q.aexp()));
        }
        return acc;
    }

    // Embedding of Z[1/gamma] into the field (gamma^{-1} computed once).
    inline Cyc36Rational cyc36_from_gamma(const GammaRational &x)
    {
        static const Cyc36Rational gamma_inv =
            cyc36_inverse(cyc36_from_cyc9<Rational>(gamma_element()));
        Cyc36Rational acc = cyc36_from_cyc9<Rational>(x.numerator());
        if (x.gexp() > 0)
        {
            acc = acc * gamma_inv.pow(static_cast<unsigned>(x.gexp()));
        }
        return acc;
    }

} // namespace qct
