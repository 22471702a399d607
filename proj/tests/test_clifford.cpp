#include <catch2/catch_amalgamated.hpp>

#include "qct/clifford.hpp"

using namespace qct;

TEST_CASE("Clifford enumeration", "[clifford]")
{
    const CliffordTables &t = clifford_tables();

    SECTION("group order and mod-phase classes")
    {
        CHECK(t.matrices.size() == 648);
        CHECK(t.phase_reps.size() == 216);
        CHECK(t.matrices[0] == Mat3::identity());
    }

    SECTION("subgroup orders")
    {
        CHECK(t.s_subgroup.size() == 81);
        CHECK(t.ms_subgroup.size() == 162);
        CHECK(t.in_s_subgroup(t.omega_idx));
    }

    SECTION("M S consists of generalized permutation matrices")
    {
        for (int c : t.ms_subgroup)
        {
            const Mat3 &m = t.matrices[static_cast<std::size_t>(c)];
            for (int i = 0; i < 3; ++i)
            {
                int row_nonzero = 0;
                int col_nonzero = 0;
                for (int j = 0; j < 3; ++j)
                {
                    row_nonzero += m.at(i, j).is_zero() ? 0 : 1;
                    col_nonzero += m.at(j, i).is_zero() ? 0 : 1;
                }
                REQUIRE(row_nonzero == 1);
                REQUIRE(col_nonzero == 1);
            }
        }
    }

    SECTION("X and Z are found in the table")
    {
        CHECK(t.x_idx >= 0);
        CHECK(t.z_idx >= 0);
    }
}

TEST_CASE("multiplication and inversion tables", "[clifford]")
{
    const CliffordTables &t = clifford_tables();

    SECTION("mul matches exact matrix products on a sample")
    {
        for (int a : {0, 1, 5, 100, 321, 647})
        {
            for (int b : {0, 2, 7, 99, 500, 640})
            {
                const Mat3 prod = t.matrices[static_cast<std::size_t>(a)] *
                                  t.matrices[static_cast<std::size_t>(b)];
                CHECK(t.find(prod) == t.multiply(a, b));
            }
        }
    }

    SECTION("inverse table")
    {
        for (int a = 0; a < 648; a += 13)
        {
            CHECK(t.multiply(a, t.inverse(a)) == t.id_idx);
        }
    }

    SECTION("every stored word reproduces its matrix")
    {
        for (int c = 0; c < 648; ++c)
        {
            CHECK(word_to_matrix(t.words[static_cast<std::size_t>(c)]) ==
                  t.matrices[static_cast<std::size_t>(c)]);
        }
    }
}

TEST_CASE("coset decomposition C = L M S'", "[clifford]")
{
    const CliffordTables &t = clifford_tables();

    SECTION("identity decomposes trivially")
    {
        const auto [lm, s] = coset_decompose(t.id_idx);
        CHECK(lm == 0);
        CHECK(s == t.id_idx);
    }

    SECTION("H^3 = H * H^2")
    {
        const int h3 = t.multiply(t.h_idx, t.h2_idx);
        const auto [lm, s] = coset_decompose(h3);
        CHECK(t.lm_index[static_cast<std::size_t>(lm)] == h3);
        CHECK(lm == 3); // L = H with M = H^2
        CHECK(s == t.id_idx);
    }

    SECTION("S H lies in the L set")
    {
        const int sh = t.multiply(t.s_idx, t.h_idx);
        const auto [lm, s] = coset_decompose(sh);
        CHECK(lm == 4);
        CHECK(s == t.id_idx);
    }

    SECTION("reconstruction is exact for every element")
    {
        for (int c = 0; c < 648; ++c)
        {
            const auto [lm, s] = coset_decompose(c);
            CHECK(t.multiply(t.lm_index[static_cast<std::size_t>(lm)], s) == c);
            CHECK(t.in_s_subgroup(s));
        }
    }
}

TEST_CASE("T conjugation permutes the S-subgroup", "[clifford]")
{
    const CliffordTables &t = clifford_tables();
    const Mat3 &tm = generator_matrix(Gate::T);
    for (int s : t.s_subgroup)
    {
        const int ss = t.sigma[static_cast<std::size_t>(s)];
        CHECK(t.in_s_subgroup(ss));
        // S' T = T sigma(S')
        CHECK(t.matrices[static_cast<std::size_t>(s)] * tm ==
              tm * t.matrices[static_cast<std::size_t>(ss)]);
    }
}
