#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qct/alpha.hpp"
#include "qct/cyclotomic9.hpp"
#include "qct/dyadic.hpp"

using namespace qct;

namespace
{

    CycInt9 random_cyc9(std::mt19937_64 &rng)
    {
        std::uniform_int_distribution<int> d(-9, 9);
        return CycInt9(d(rng), d(rng), d(rng), d(rng), d(rng), d(rng));
    }

    Dyadic random_dyadic(std::mt19937_64 &rng)
    {
        std::uniform_int_distribution<int> num(-24, 24);
        std::uniform_int_distribution<int> ex(0, 4);
        return Dyadic(Integer(num(rng)), ex(rng));
    }

    AlphaPoly random_alpha_poly(std::mt19937_64 &rng)
    {
        return AlphaPoly(random_dyadic(rng), random_dyadic(rng), random_dyadic(rng),
                         random_dyadic(rng), random_dyadic(rng), random_dyadic(rng));
    }

    AlphaRational random_alpha_rational(std::mt19937_64 &rng)
    {
        std::uniform_int_distribution<int> ex(0, 4);
        return AlphaRational(random_alpha_poly(rng), ex(rng));
    }

    // 1/sqrt(-3) = gamma^{-3} (-1 + z - z^2 - z^3 + 2z^4 - 2z^5)
    const CycInt9 inv_sqrt_m3_num(-1, 1, -1, -1, 2, -2);

} // namespace

TEST_CASE("CycInt9 arithmetic", "[rings]")
{
    const CycInt9 zeta = CycInt9::zeta_power(1);

    SECTION("zeta * zeta^5 reduces through Phi_9")
    {
        // zeta^6 = -1 - zeta^3
        CHECK(zeta * CycInt9::zeta_power(5) == CycInt9(-1, 0, 0, -1, 0, 0));
    }

    SECTION("conjugation sends zeta to zeta^8")
    {
        CHECK(zeta.conj() == CycInt9(0, 0, -1, 0, 0, -1));
        CHECK(zeta.conj() == CycInt9::zeta_power(8));
    }

    SECTION("additive identity")
    {
        std::mt19937_64 rng(7);
        const CycInt9 x = random_cyc9(rng);
        CHECK(x + CycInt9() == x);
    }

    SECTION("conjugation is an involutive ring automorphism")
    {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i)
        {
            const CycInt9 a = random_cyc9(rng);
            const CycInt9 b = random_cyc9(rng);
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a + b).conj() == a.conj() + b.conj());
        }
    }

    SECTION("zeta has order nine")
    {
        CycInt9 p(Integer(1));
        for (int i = 0; i < 9; ++i)
        {
            p = p * zeta;
        }
        CHECK(p == CycInt9(Integer(1)));
    }

    SECTION("omega sums to minus one with its square")
    {
        const CycInt9 omega = CycInt9::omega_power(1);
        CHECK(CycInt9(Integer(1)) + omega + omega * omega == CycInt9());
    }
}

TEST_CASE("gamma_reduce", "[rings]")
{
    SECTION("exact cancellation")
    {
        const CycInt9 gz = gamma_element() * CycInt9::zeta_power(1);
        const GammaRational r = gamma_reduce(gz, 1);
        CHECK(r.gexp() == 0);
        CHECK(r.numerator() == CycInt9::zeta_power(1));
    }

    SECTION("the 1/sqrt(-3) numerator is gamma-free")
    {
        const GammaRational r = gamma_reduce(inv_sqrt_m3_num, 3);
        CHECK(r.gexp() == 3);
        CHECK(r.numerator() == inv_sqrt_m3_num);
        // Multiplying back: (numerator / gamma^3)^2 = -1/3, i.e.
        // 3 * numerator^2 = -gamma^6.
        CycInt9 g6(Integer(1));
        for (int i = 0; i < 6; ++i)
        {
            g6 = g6 * gamma_element();
        }
        CHECK(inv_sqrt_m3_num * inv_sqrt_m3_num * Integer(3) == -g6);
    }

    SECTION("already integral")
    {
        const GammaRational r = gamma_reduce(CycInt9(Integer(3)), 0);
        CHECK(r.gexp() == 0);
        CHECK(r.numerator() == CycInt9(Integer(3)));
    }

    SECTION("reduction is stable under extra gamma factors")
    {
        std::mt19937_64 rng(23);
        std::uniform_int_distribution<int> nd(0, 6);
        for (int i = 0; i < 300; ++i)
        {
            const CycInt9 x = random_cyc9(rng);
            const int k = nd(rng);
            const int n = nd(rng);
            CycInt9 scaled = x;
            for (int j = 0; j < n; ++j)
            {
                scaled = scaled * gamma_element();
            }
            CHECK(gamma_reduce(scaled, k + n) == gamma_reduce(x, k));
        }
    }

    SECTION("zero normalizes to exponent zero")
    {
        CHECK(gamma_reduce(CycInt9(), 5) == GammaRational());
    }
}

TEST_CASE("GammaRational field operations", "[rings]")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> ed(0, 4);
    for (int i = 0; i < 200; ++i)
    {
        const GammaRational a(random_cyc9(rng), ed(rng));
        const GammaRational b(random_cyc9(rng), ed(rng));
        CHECK((a + b) - b == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("Dyadic", "[rings]")
{
    CHECK(Dyadic(Integer(6), 4) == Dyadic(Integer(3), 3));
    CHECK(Dyadic(Integer(0), 7) == Dyadic());
    CHECK(Dyadic::half() + Dyadic::half() == Dyadic(Integer(1)));
    CHECK(Dyadic(Integer(-8), 3) == Dyadic(Integer(-1)));
    CHECK(Dyadic(Integer(1), 1) * Dyadic(Integer(1), 1) == Dyadic(Integer(1), 2));
    CHECK(Dyadic(Integer(1), 1).residue_mod3() == 2);
    CHECK(Dyadic(Integer(3)).residue_mod3() == 0);
}

TEST_CASE("rho", "[rings]")
{
    SECTION("paper values")
    {
        CHECK(rho(AlphaPoly(Dyadic(Integer(3)))) == Residue3(0));
        CHECK(rho(AlphaPoly(Dyadic::half())) == Residue3(2));
        // sqrt(3) = 6a - 8a^3
        const AlphaPoly sqrt3(Dyadic(0), Dyadic(6), Dyadic(0), Dyadic(-8), Dyadic(0), Dyadic(0));
        CHECK(rho(sqrt3) == Residue3(0));
    }

    SECTION("rho is a ring homomorphism")
    {
        std::mt19937_64 rng(41);
        for (int i = 0; i < 1000; ++i)
        {
            const AlphaPoly a = random_alpha_poly(rng);
            const AlphaPoly b = random_alpha_poly(rng);
            CHECK(rho(a * b) == rho(a) * rho(b));
            CHECK(rho(a + b) == rho(a) + rho(b));
        }
    }
}

TEST_CASE("rho_k and lde", "[rings]")
{
    // t1 = (-1/4 + 2a^2 - 2a^4) / a^2 and t3 = (-1/16 + a^2/2 - a^4) / a^3
    const AlphaRational t1(
        AlphaPoly(Dyadic(Integer(-1), 2), Dyadic(0), Dyadic(2), Dyadic(0), Dyadic(-2), Dyadic(0)),
        2);
    const AlphaRational minus_t3(
        AlphaPoly(Dyadic(Integer(1), 4), Dyadic(0), Dyadic(Integer(-1), 1), Dyadic(0), Dyadic(1),
                  Dyadic(0)),
        3);

    SECTION("spec examples")
    {
        CHECK(rho_k(t1, 2) == Residue3(2)); // rho(-1/4) = (-1 * 2^2) mod 3
        CHECK(rho_k(AlphaRational::one(), 0) == Residue3(1));
        CHECK(rho_k(minus_t3, 3) == Residue3(1)); // rho(1/16) = 2^4 mod 3
        CHECK(lde(t1) == 2);
        CHECK(lde(AlphaRational(Dyadic(Integer(5)))) == 0);
        CHECK(lde(AlphaRational(AlphaPoly::one(), 1)) == 1);
    }

    SECTION("k below the stored exponent is rejected")
    {
        CHECK_THROWS_AS(rho_k(t1, 1), DomainError);
    }

    SECTION("above the LDE the residue vanishes")
    {
        CHECK(rho_k(t1, 3) == Residue3(0));
        CHECK(rho_k(t1, 7) == Residue3(0));
    }

    SECTION("residue algebra on random pairs")
    {
        std::mt19937_64 rng(43);
        std::uniform_int_distribution<int> extra(0, 3);
        for (int i = 0; i < 1000; ++i)
        {
            const AlphaRational a = random_alpha_rational(rng);
            const AlphaRational b = random_alpha_rational(rng);
            const int k = std::max(a.lde(), b.lde()) + extra(rng);
            CHECK(rho_k(a + b, k) == rho_k(a, k) + rho_k(b, k));
            const int k1 = a.lde() + extra(rng);
            const int k2 = b.lde() + extra(rng);
            CHECK(rho_k(a * b, k1 + k2) == rho_k(a, k1) * rho_k(b, k2));
            CHECK(rho_k(a, a.lde() + 1 + extra(rng)) == Residue3(0));
        }
    }

    SECTION("the stored exponent satisfies the LDE characterization")
    {
        std::mt19937_64 rng(47);
        for (int i = 0; i < 500; ++i)
        {
            const AlphaRational q = random_alpha_rational(rng);
            if (q.lde() > 0)
            {
                CHECK(rho_k(q, q.lde()) != Residue3(0));
            }
        }
    }
}

TEST_CASE("alpha relations", "[rings]")
{
    const AlphaPoly alpha(Dyadic(0), Dyadic(1), Dyadic(0), Dyadic(0), Dyadic(0), Dyadic(0));
    AlphaPoly a2 = alpha * alpha;
    AlphaPoly a4 = a2 * a2;
    AlphaPoly a6 = a4 * a2;

    // 3 = 36 a^2 - 96 a^4 + 64 a^6
    CHECK(a2 * Integer(36) - a4 * Integer(96) + a6 * Integer(64) ==
          AlphaPoly(Dyadic(Integer(3))));

    // 1/2 = -1 + 18 a^2 - 48 a^4 + 32 a^6
    CHECK(AlphaPoly(Dyadic(Integer(-1))) + a2 * Integer(18) - a4 * Integer(48) +
              a6 * Integer(32) ==
          AlphaPoly(Dyadic::half()));

    // sqrt(3)^2 = 3 with sqrt(3) = 6a - 8a^3
    const AlphaPoly sqrt3(Dyadic(0), Dyadic(6), Dyadic(0), Dyadic(-8), Dyadic(0), Dyadic(0));
    CHECK(sqrt3 * sqrt3 == AlphaPoly(Dyadic(Integer(3))));

    // 1/3 times 3 is one
    CHECK(alpha_inv3() * AlphaRational(Dyadic(Integer(3))) == AlphaRational::one());
}

TEST_CASE("AlphaRational ring laws", "[rings]")
{
    std::mt19937_64 rng(53);
    for (int i = 0; i < 300; ++i)
    {
        const AlphaRational a = random_alpha_rational(rng);
        const AlphaRational b = random_alpha_rational(rng);
        const AlphaRational c = random_alpha_rational(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a - b) + b == a);
        CHECK(a * b == b * a);
    }
}
