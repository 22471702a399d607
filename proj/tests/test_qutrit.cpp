#include <catch2/catch_amalgamated.hpp>

#include "qct/qutrit.hpp"

using namespace qct;

namespace
{
    Mat3 gm(Gate g) { return generator_matrix(g); }
}

TEST_CASE("generator matrices", "[qutrit]")
{
    SECTION("T = diag(1, zeta, zeta^8)")
    {
        const Mat3 &t = generator_matrix(Gate::T);
        CHECK(t.at(0, 0) == GammaRational(Integer(1)));
        CHECK(t.at(1, 1) == GammaRational::zeta_power(1));
        CHECK(t.at(2, 2) == GammaRational::zeta_power(8));
        CHECK(t.at(0, 1).is_zero());
    }

    SECTION("all generators are unitary")
    {
        for (Gate g : {Gate::H, Gate::S, Gate::T, Gate::X, Gate::Z})
        {
            CHECK(generator_matrix(g).is_unitary());
        }
    }

    SECTION("H and S have determinant one")
    {
        CHECK(gm(Gate::H).det() == GammaRational(Integer(1)));
        CHECK(gm(Gate::S).det() == GammaRational(Integer(1)));
    }

    SECTION("H entries carry the gamma^3 denominator")
    {
        CHECK(gm(Gate::H).at(0, 0).gexp() == 3);
    }
}

TEST_CASE("word_to_matrix", "[qutrit]")
{
    SECTION("empty word is the identity")
    {
        CHECK(word_to_matrix({}) == Mat3::identity());
    }

    SECTION("T T T = Z")
    {
        CHECK(word_to_matrix({Gate::T, Gate::T, Gate::T}) == gm(Gate::Z));
    }

    SECTION("T^9 = Id")
    {
        CHECK(word_to_matrix(Word(9, Gate::T)) == Mat3::identity());
    }

    SECTION("left-to-right order")
    {
        CHECK(word_to_matrix({Gate::H, Gate::S}) == gm(Gate::H) * gm(Gate::S));
    }
}

TEST_CASE("commutation relations", "[qutrit]")
{
    const Mat3 h = gm(Gate::H);
    const Mat3 s = gm(Gate::S);
    const Mat3 t = gm(Gate::T);
    const Mat3 x = gm(Gate::X);
    const Mat3 z = gm(Gate::Z);
    const Mat3 h2 = h * h;
    const Mat3 omega = Mat3::identity() * GammaRational(CycInt9::omega_power(1), 0);

    CHECK(s * t == t * s);                   // S T = T S
    CHECK(x * t == t * s * x);               // X T = T S X
    CHECK(omega * t == t * omega);           // omega T = T omega
    CHECK(t * t == h2 * t * h2 * z);         // T T = H^2 T H^2 Z
    CHECK(t * h2 * t == h2);                 // T H^2 T = H^2
    CHECK(h2 * h2 == Mat3::identity());      // M = {Id, H^2} has order two
}

TEST_CASE("t_power_reduce", "[qutrit]")
{
    SECTION("lemma cases")
    {
        const TPowerForm f3 = t_power_reduce(3);
        CHECK(f3.prefix == TPowerForm::Prefix::Empty);
        CHECK(f3.z_exp == 1);

        const TPowerForm f1 = t_power_reduce(1);
        CHECK(f1.prefix == TPowerForm::Prefix::T);
        CHECK(f1.z_exp == 0);

        const TPowerForm f2 = t_power_reduce(2);
        CHECK(f2.prefix == TPowerForm::Prefix::H2TH2);
        CHECK(f2.z_exp == 1);
    }

    SECTION("matrix agreement over a window of exponents")
    {
        for (long a = -9; a <= 18; ++a)
        {
            Mat3 ta = Mat3::identity();
            const long r = ((a % 9) + 9) % 9;
            for (long i = 0; i < r; ++i)
            {
                ta = ta * gm(Gate::T);
            }
            CHECK(ta == t_power_form_matrix(t_power_reduce(a)));
        }
    }
}

TEST_CASE("Pauli group has 27 elements, 9 mod phase", "[qutrit]")
{
    std::vector<Mat3> seen;
    auto contains = [&](const Mat3 &m) {
        for (const auto &k : seen)
        {
            if (k == m)
            {
                return true;
            }
        }
        return false;
    };
    std::vector<Mat3> frontier{Mat3::identity()};
    seen.push_back(Mat3::identity());
    std::size_t head = 0;
    while (head < frontier.size())
    {
        const Mat3 cur = frontier[head++];
        for (Gate g : {Gate::X, Gate::Z})
        {
            Mat3 nxt = cur * gm(g);
            if (!contains(nxt))
            {
                seen.push_back(nxt);
                frontier.push_back(nxt);
            }
        }
    }
    CHECK(seen.size() == 27);

    // quotient by the omega phases
    const GammaRational w(CycInt9::omega_power(1), 0);
    std::vector<Mat3> reps;
    for (const auto &m : seen)
    {
        bool dup = false;
        for (const auto &r : reps)
        {
            if (m == r || m == r * w || m == r * (w * w))
            {
                dup = true;
                break;
            }
        }
        if (!dup)
        {
            reps.push_back(m);
        }
    }
    CHECK(reps.size() == 9);
}
