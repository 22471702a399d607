#pragma once

#include "circuit.hpp"
#include "cyclotomic9.hpp"
#include "mat3.hpp"

namespace qct
{

    namespace detail
    {

        inline Mat3 make_x()
        {
            Mat3 m;
            m.at(0, 2) = GammaRational(Integer(1));
            m.at(1, 0) = GammaRational(Integer(1));
            m.at(2, 1) = GammaRational(Integer(1));
            return m;
        }

        inline Mat3 make_z()
        {
            Mat3 m;
            m.at(0, 0) = GammaRational(Integer(1));
            m.at(1, 1) = GammaRational(CycInt9::omega_power(1), 0);
            m.at(2, 2) = GammaRational(CycInt9::omega_power(2), 0);
            return m;
        }

        inline Mat3 make_t()
        {
            Mat3 m;
            m.at(0, 0) = GammaRational(Integer(1));
            m.at(1, 1) = GammaRational::zeta_power(1);
            m.at(2, 2) = GammaRational::zeta_power(8);
            return m;
        }

        // S = zeta^8 diag(1, 1, omega); the global phase makes det S = 1.
        inline Mat3 make_s()
        {
            Mat3 m;
            m.at(0, 0) = GammaRational::zeta_power(8);
            m.at(1, 1) = GammaRational::zeta_power(8);
            m.at(2, 2) = GammaRational::zeta_power(8) * GammaRational(CycInt9::omega_power(1), 0);
            return m;
        }

        // 1/sqrt(-3) = gamma^{-3} (-1 + z - z^2 - z^3 + 2 z^4 - 2 z^5); the
        // determinant-1 Hadamard is that scalar times the omega Fourier matrix.
        inline Mat3 make_h()
        {
            const GammaRational scale(CycInt9(-1, 1, -1, -1, 2, -2), 3);
            Mat3 m;
            const GammaRational one(Integer(1));
            const GammaRational w1(CycInt9::omega_power(1), 0);
            const GammaRational w2(CycInt9::omega_power(2), 0);
            m.at(0, 0) = one;
            m.at(0, 1) = one;
            m.at(0, 2) = one;
            m.at(1, 0) = one;
            m.at(1, 1) = w1;
            m.at(1, 2) = w2;
            m.at(2, 0) = one;
            m.at(2, 1) = w2;
            m.at(2, 2) = w1;
            return m * scale;
        }

    } // namespace detail

    /** Exact matrix of a generator. */
    inline const Mat3 &generator_matrix(Gate g)
    {
        static const Mat3 h = detail::make_h();
        static const Mat3 s = detail::make_s();
        static const Mat3 t = detail::make_t();
        static const Mat3 x = detail::make_x();
        static const Mat3 z = detail::make_z();
        switch (g)
        {
        case Gate::H:
            return h;
        case Gate::S:
            return s;
        case Gate::T:
            return t;
        case Gate::X:
            return x;
        case Gate::Z:
            return z;
        }
        throw InternalError("generator_matrix: bad gate");
    }

    /** Left-to-right product of the generator matrices of a word. */
    inline Mat3 word_to_matrix(const Word &w)
    {
        Mat3 m = Mat3::identity();
        for (Gate g : w)
        {
            m = m * generator_matrix(g);
        }
        return m;
    }

    /**
     * T-power reduction: any T^a is a Pauli operator or Clifford equivalent to
     * T. With a reduced modulo 9 (T^9 = Id),
     *   a = 0 mod 3:  T^a = Z^{a/3}
     *   a = 1 mod 3:  T^a = T Z^{(a-1)/3}
     *   a = 2 mod 3:  T^a = H^2 T H^2 Z^{(a+1)/3}
     */
    struct TPowerForm
    {
        enum class Prefix
        {
            Empty,
            T,
            H2TH2
        };
        Prefix prefix = Prefix::Empty;
        int z_exp = 0; // power of Z in [0, 3)
    };

    inline TPowerForm t_power_reduce(long a)
    {
        long r = a % 9;
        if (r < 0)
        {
            r += 9;
        }
        TPowerForm f;
        switch (r % 3)
        {
        case 0:
            f.prefix = TPowerForm::Prefix::Empty;
            f.z_exp = static_cast<int>((r / 3) % 3);
            break;
        case 1:
            f.prefix = TPowerForm::Prefix::T;
            f.z_exp = static_cast<int>(((r - 1) / 3) % 3);
            break;
        default:
            f.prefix = TPowerForm::Prefix::H2TH2;
            f.z_exp = static_cast<int>(((r + 1) / 3) % 3);
            break;
        }
        return f;
    }

    /** The matrix realized by a reduced T power. */
    inline Mat3 t_power_form_matrix(const TPowerForm &f)
    {
        const Mat3 &h = generator_matrix(Gate::H);
        const Mat3 &t = generator_matrix(Gate::T);
        const Mat3 &z = generator_matrix(Gate::Z);
        Mat3 m = Mat3::identity();
        switch (f.prefix)
        {
        case TPowerForm::Prefix::Empty:
            break;
        case TPowerForm::Prefix::T:
            m = t;
            break;
        case TPowerForm::Prefix::H2TH2:
            m = h * h * t * h * h;
            break;
        }
        for (int i = 0; i < f.z_exp; ++i)
        {
            m = m * z;
        }
        return m;
    }

} // namespace qct
