#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "mat3.hpp"
#include "qutrit.hpp"

namespace qct
{

    /**
     * CliffordTables: the 648-element single-qutrit Clifford group as exact
     * matrices, enumerated once by breadth-first closure from {H, S} (identity
     * first, discovery order), together with the derived structure used by the
     * normalizer and the synthesizer:
     *
     *  - multiplication and inverse tables over indices,
     *  - the 216 mod-phase classes (quotient by {1, omega, omega^2} I),
     *  - the coset decomposition C = L M S' of Eq-type L in {Id, H, SH, S2H},
     *    M in {Id, H2}, S' in the 81-element subgroup generated by S and X,
     *  - the T-conjugation permutation of that subgroup (S' T = T sigma(S')),
     *  - generator words for every element.
     */
    class CliffordTables
    {
    public:
        static constexpr int order = 648;

        std::vector<Mat3> matrices;          // by index, identity at 0
        std::vector<Word> words;             // generator word over {H, S}
        std::vector<std::uint16_t> mul;      // order x order, row-major
        std::vector<std::uint16_t> inv;      // by index
        std::vector<std::uint16_t> phase_rep; // lowest index in {c, wc, w^2 c}
        std::vector<std::uint16_t> phase_reps; // the 216 class representatives
        std::vector<std::uint8_t> coset_lm;  // index into lm_index, below
        std::vector<std::uint16_t> coset_s;  // Clifford index of the S-part
        std::vector<std::uint16_t> sigma;    // T-conjugation on the S-subgroup
        std::vector<std::uint16_t> s_subgroup;  // the 81 indices, sorted
        std::vector<std::uint16_t> ms_subgroup; // the 162 indices of M S, sorted

        // The eight coset prefixes Id, H2, H, H3, SH, SH3, S2H, S2H3, indexed by
        // lm = 2 * (position of L in {Id, H, SH, S2H}) + (M == H2).
        std::array<std::uint16_t, 8> lm_index{};

        int id_idx = 0;
        int h_idx = -1;
        int s_idx = -1;
        int x_idx = -1;
        int z_idx = -1;
        int h2_idx = -1;
        int omega_idx = -1; // omega * I

        int multiply(int a, int b) const
        {
            return mul[static_cast<std::size_t>(a) * order + static_cast<std::size_t>(b)];
        }

        int inverse(int a) const { return inv[static_cast<std::size_t>(a)]; }

        // Index lookup by exact matrix; -1 when the matrix is not Clifford.
        int find(const Mat3 &m) const
        {
            const auto it = _index.find(m.key());
            return it == _index.end() ? -1 : it->second;
        }

        bool in_s_subgroup(int c) const { return _in_s[static_cast<std::size_t>(c)]; }

        CliffordTables()
        {
            build_closure();
            build_mul_inv();
            build_phase_classes();
            build_cosets();
            build_sigma();
        }

    private:
        std::unordered_map<std::string, int> _index;
        std::vector<bool> _in_s;

        void insert(const Mat3 &m, Word w)
        {
            _index.emplace(m.key(), static_cast<int>(matrices.size()));
            matrices.push_back(m);
            words.push_back(std::move(w));
        }

        void build_closure()
        {
            matrices.reserve(order);
            insert(Mat3::identity(), Word{});
            std::size_t head = 0;
            const std::array<Gate, 2> gens{Gate::H, Gate::S};
            while (head < matrices.size())
            {
                if (matrices.size() > order)
                {
                    throw InternalError("Clifford closure exceeded 648 elements");
                }
                const Mat3 cur = matrices[head];
                const Word cur_word = words[head];
                for (Gate g : gens)
                {
                    Mat3 next = cur * generator_matrix(g);
                    if (_index.find(next.key()) == _index.end())
                    {
                        Word w = cur_word;
                        w.push_back(g);
                        insert(next, std::move(w));
                    }
                }
                ++head;
            }
            if (matrices.size() != order)
            {
                throw InternalError("Clifford closure has wrong order");
            }
            h_idx = find(generator_matrix(Gate::H));
            s_idx = find(generator_matrix(Gate::S));
            x_idx = find(generator_matrix(Gate::X));
            z_idx = find(generator_matrix(Gate::Z));
            h2_idx = find(generator_matrix(Gate::H) * generator_matrix(Gate::H));
            if (h_idx < 0 || s_idx < 0 || x_idx < 0 || z_idx < 0 || h2_idx < 0)
            {
                throw InternalError("generator missing from Clifford closure");
            }
        }

        void build_mul_inv()
        {
            // Right-multiplication permutations for the two generators, then
            // mul[a][b] by walking b's generator word.
            std::array<std::vector<std::uint16_t>, 2> rmul;
            for (int gi = 0; gi < 2; ++gi)
            {
                const Gate g = gi == 0 ? Gate::H : Gate::S;
                rmul[static_cast<std::size_t>(gi)].resize(order);
                for (int c = 0; c < order; ++c)
                {
                    const int t = find(matrices[static_cast<std::size_t>(c)] * generator_matrix(g));
                    if (t < 0)
                    {
                        throw InternalError("Clifford closure not closed under generators");
                    }
                    rmul[static_cast<std::size_t>(gi)][static_cast<std::size_t>(c)] =
                        static_cast<std::uint16_t>(t);
                }
            }
            mul.resize(static_cast<std::size_t>(order) * order);
            for (int a = 0; a < order; ++a)
            {
                for (int b = 0; b < order; ++b)
                {
                    int c = a;
                    for (Gate g : words[static_cast<std::size_t>(b)])
                    {
                        c = rmul[g == Gate::H ? 0 : 1][static_cast<std::size_t>(c)];
                    }
                    mul[static_cast<std::size_t>(a) * order + static_cast<std::size_t>(b)] =
                        static_cast<std::uint16_t>(c);
                }
            }
            // Inverses via the inverse permutations of the generator actions.
            std::array<std::vector<std::uint16_t>, 2> rinv;
            for (int gi = 0; gi < 2; ++gi)
            {
                rinv[static_cast<std::size_t>(gi)].resize(order);
                for (int c = 0; c < order; ++c)
                {
                    rinv[static_cast<std::size_t>(gi)]
                        [rmul[static_cast<std::size_t>(gi)][static_cast<std::size_t>(c)]] =
                            static_cast<std::uint16_t>(c);
                }
            }
            inv.resize(order);
            for (int a = 0; a < order; ++a)
            {
                int c = 0;
                const Word &w = words[static_cast<std::size_t>(a)];
                for (auto it = w.rbegin(); it != w.rend(); ++it)
                {
                    c = rinv[*it == Gate::H ? 0 : 1][static_cast<std::size_t>(c)];
                }
                // c is now the index with c * a = Id... verify both sides.
                if (multiply(c, a) != id_idx || multiply(a, c) != id_idx)
                {
                    throw InternalError("inverse table inconsistent");
                }
                inv[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(c);
            }
        }

        void build_phase_classes()
        {
            // omega I = S^3.
            omega_idx = multiply(multiply(s_idx, s_idx), s_idx);
            {
                const Mat3 w1 = Mat3::identity() * GammaRational(CycInt9::omega_power(1), 0);
                const Mat3 w2 = Mat3::identity() * GammaRational(CycInt9::omega_power(2), 0);
                const int i1 = find(w1);
                const int i2 = find(w2);
                if (i1 < 0 || i2 < 0)
                {
                    throw InternalError("omega I missing from Clifford group");
                }
                if (omega_idx != i1 && omega_idx != i2)
                {
                    throw InternalError("S^3 is not a phase");
                }
                omega_idx = i1;
            }
            phase_rep.resize(order);
            for (int c = 0; c < order; ++c)
            {
                const int c1 = multiply(omega_idx, c);
                const int c2 = multiply(omega_idx, c1);
                int rep = c < c1 ? c : c1;
                rep = rep < c2 ? rep : c2;
                phase_rep[static_cast<std::size_t>(c)] = static_cast<std::uint16_t>(rep);
            }
            for (int c = 0; c < order; ++c)
            {
                if (phase_rep[static_cast<std::size_t>(c)] == c)
                {
                    phase_reps.push_back(static_cast<std::uint16_t>(c));
                }
            }
            if (phase_reps.size() != 216)
            {
                throw InternalError("expected 216 mod-phase classes");
            }
        }

        void build_cosets()
        {
            // The 81-element subgroup generated by S and X, as a closure over
            // indices.
            _in_s.assign(order, false);
            std::vector<int> frontier{id_idx};
            _in_s[static_cast<std::size_t>(id_idx)] = true;
            std::size_t head = 0;
            while (head < frontier.size())
            {
                const int c = frontier[head++];
                for (int g : {s_idx, x_idx})
                {
                    const int t = multiply(c, g);
                    if (!_in_s[static_cast<std::size_t>(t)])
                    {
                        _in_s[static_cast<std::size_t>(t)] = true;
                        frontier.push_back(t);
                    }
                }
            }
            for (int c = 0; c < order; ++c)
            {
                if (_in_s[static_cast<std::size_t>(c)])
                {
                    s_subgroup.push_back(static_cast<std::uint16_t>(c));
                }
            }
            if (s_subgroup.size() != 81)
            {
                throw InternalError("expected an 81-element S-subgroup");
            }
            if (!_in_s[static_cast<std::size_t>(omega_idx)])
            {
                throw InternalError("omega I must lie in the S-subgroup");
            }

            // M S, the 162 generalized permutation matrices.
            for (int c : s_subgroup)
            {
                ms_subgroup.push_back(static_cast<std::uint16_t>(c));
                ms_subgroup.push_back(static_cast<std::uint16_t>(multiply(h2_idx, c)));
            }
            std::sort(ms_subgroup.begin(), ms_subgroup.end());
            ms_subgroup.erase(std::unique(ms_subgroup.begin(), ms_subgroup.end()),
                              ms_subgroup.end());
            if (ms_subgroup.size() != 162)
            {
                throw InternalError("expected a 162-element M S subgroup");
            }

            // L M prefixes in the fixed order Id, H2, H, H3, SH, SH3, S2H, S2H3.
            const int sh = multiply(s_idx, h_idx);
            const int s2h = multiply(s_idx, sh);
            const std::array<int, 4> l_parts{id_idx, h_idx, sh, s2h};
            for (int li = 0; li < 4; ++li)
            {
                for (int mi = 0; mi < 2; ++mi)
                {
                    const int lm = mi == 0 ? l_parts[static_cast<std::size_t>(li)]
                                           : multiply(l_parts[static_cast<std::size_t>(li)], h2_idx);
                    lm_index[static_cast<std::size_t>(2 * li + mi)] =
                        static_cast<std::uint16_t>(lm);
                }
            }

            // Every Clifford factors uniquely as (L M) * S'.
            coset_lm.assign(order, 255);
            coset_s.assign(order, 0);
            for (int lm = 0; lm < 8; ++lm)
            {
                for (int s : s_subgroup)
                {
                    const int c = multiply(lm_index[static_cast<std::size_t>(lm)], s);
                    if (coset_lm[static_cast<std::size_t>(c)] != 255)
                    {
                        throw InternalError("coset decomposition not disjoint");
                    }
                    coset_lm[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(lm);
                    coset_s[static_cast<std::size_t>(c)] = static_cast<std::uint16_t>(s);
                }
            }
            for (int c = 0; c < order; ++c)
            {
                if (coset_lm[static_cast<std::size_t>(c)] == 255)
                {
                    throw InternalError("coset decomposition not exhaustive");
                }
            }
        }

        void build_sigma()
        {
            // sigma(s) = T^dagger s T, an automorphism of the S-subgroup
            // realizing S' T = T sigma(S').
            sigma.assign(order, 0);
            const Mat3 &t = generator_matrix(Gate::T);
            const Mat3 td = t.dagger();
            for (int s : s_subgroup)
            {
                const Mat3 m = td * matrices[static_cast<std::size_t>(s)] * t;
                const int idx = find(m);
                if (idx < 0 || !_in_s[static_cast<std::size_t>(idx)])
                {
                    throw InternalError("S T != T S: conjugated element left the subgroup");
                }
                sigma[static_cast<std::size_t>(s)] = static_cast<std::uint16_t>(idx);
            }
        }
    };

    inline const CliffordTables &clifford_tables()
    {
        static const CliffordTables tables;
        return tables;
    }

    /** The coset decomposition of a Clifford index: C = (L M) S'. */
    inline std::pair<int, int> coset_decompose(int c)
    {
        const CliffordTables &t = clifford_tables();
        return {t.coset_lm[static_cast<std::size_t>(c)],
                t.coset_s[static_cast<std::size_t>(c)]};
    }

    inline const Word &clifford_index_word(int idx)
    {
        const CliffordTables &t = clifford_tables();
        if (idx < 0 || idx >= CliffordTables::order)
        {
            throw DomainError("Clifford index out of range");
        }
        return t.words[static_cast<std::size_t>(idx)];
    }

} // namespace qct
