#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "clifford.hpp"

namespace qct
{

    /**
     * Syllable tags, in the fixed order HT, H3T, SHT, SH3T, S2HT, S2H3T.
     * The Clifford-prefix of tag s is the (s + 2)-nd element of the L M set
     * {Id, H2, H, H3, SH, SH3, S2H, S2H3}.
     */
    enum class Syllable : std::uint8_t
    {
        HT = 0,
        H3T = 1,
        SHT = 2,
        SH3T = 3,
        S2HT = 4,
        S2H3T = 5
    };

    inline const char *syllable_name(Syllable s)
    {
        static const char *names[6] = {"HT", "H3T", "SHT", "SH3T", "S2HT", "S2H3T"};
        return names[static_cast<std::size_t>(s)];
    }

    // Clifford index of a syllable's prefix (an element of L'M).
    inline int syllable_prefix_index(Syllable s)
    {
        return clifford_tables().lm_index[static_cast<std::size_t>(s) + 2];
    }

    enum class Prefix : std::uint8_t
    {
        None = 0, // epsilon
        T = 1,
        H2T = 2
    };

    /**
     * CanonicalForm: a circuit matching
     *   (eps | T | H2 T)(HT | H3T | SHT | SH3T | S2HT | S2H3T)* C
     * with C one of the 648 Clifford operators. Unique per operator and
     * T-optimal.
     */
    struct CanonicalForm
    {
        Prefix prefix = Prefix::None;
        std::vector<Syllable> syllables;
        int final_clifford = 0;

        int t_count() const
        {
            return static_cast<int>(syllables.size()) + (prefix != Prefix::None ? 1 : 0);
        }

        bool operator==(const CanonicalForm &other) const
        {
            return prefix == other.prefix && syllables == other.syllables &&
                   final_clifford == other.final_clifford;
        }
        bool operator!=(const CanonicalForm &other) const { return !(*this == other); }
    };

    inline std::string canonical_to_text(const CanonicalForm &cf)
    {
        std::string out;
        if (cf.prefix == Prefix::T)
        {
            out += "[T]";
        }
        else if (cf.prefix == Prefix::H2T)
        {
            out += "[H2T]";
        }
        for (Syllable s : cf.syllables)
        {
            out += "[";
            out += syllable_name(s);
            out += "]";
        }
        if (!out.empty())
        {
            out += " ";
        }
        out += "C#" + std::to_string(cf.final_clifford);
        return out;
    }

    /** Optional instrumentation for the linearity claim. */
    struct NormalizeStats
    {
        long table_ops = 0; // table lookups performed
    };

    namespace detail
    {

        inline int tail_prefix_index(const CanonicalForm &cf)
        {
            const CliffordTables &t = clifford_tables();
            if (!cf.syllables.empty())
            {
                return syllable_prefix_index(cf.syllables.back());
            }
            if (cf.prefix == Prefix::T)
            {
                return t.id_idx;
            }
            return t.h2_idx; // Prefix::H2T
        }

        inline void pop_tail(CanonicalForm &cf)
        {
            if (!cf.syllables.empty())
            {
                cf.syllables.pop_back();
            }
            else
            {
                cf.prefix = Prefix::None;
            }
        }

        // Multiplies the tail block by H^2 on the right of its Clifford-prefix.
        inline void toggle_tail(CanonicalForm &cf)
        {
            if (!cf.syllables.empty())
            {
                cf.syllables.back() =
                    static_cast<Syllable>(static_cast<std::uint8_t>(cf.syllables.back()) ^ 1u);
            }
            else
            {
                cf.prefix = cf.prefix == Prefix::T ? Prefix::H2T : Prefix::T;
            }
        }

        // One step of the rewriting automaton: right-multiply by T.
        //
        // With the current final Clifford decomposed as C = (L M) S' and
        // S' T = T sigma(S'), the collision (L M) T is either a legal syllable
        // (L != Id, appended as is) or resolves against the rightmost block via
        // T H^2 T = H^2 (cancelling a T) or T T = H^2 T H^2 Z (toggling the
        // rightmost block). The final Clifford absorbs the residue.
        inline void push_t(CanonicalForm &cf, NormalizeStats *stats)
        {
            const CliffordTables &t = clifford_tables();
            const auto [lm, s] = coset_decompose(cf.final_clifford);
            const int s2 = t.sigma[static_cast<std::size_t>(s)];
            if (stats)
            {
                stats->table_ops += 2;
            }
            if (lm >= 2)
            {
                cf.syllables.push_back(static_cast<Syllable>(lm - 2));
                cf.final_clifford = s2;
                return;
            }
            const bool empty_tail = cf.syllables.empty() && cf.prefix == Prefix::None;
            if (lm == 1) // collision block H^2 T
            {
                if (empty_tail)
                {
                    cf.prefix = Prefix::H2T;
                    cf.final_clifford = s2;
                    return;
                }
                const int p = tail_prefix_index(cf);
                pop_tail(cf);
                cf.final_clifford = t.multiply(t.multiply(p, t.h2_idx), s2);
                if (stats)
                {
                    stats->table_ops += 2;
                }
                return;
            }
            // collision block T
            if (empty_tail)
            {
                cf.prefix = Prefix::T;
                cf.final_clifford = s2;
                return;
            }
            toggle_tail(cf);
            cf.final_clifford = t.multiply(t.multiply(t.h2_idx, t.z_idx), s2);
            if (stats)
            {
                stats->table_ops += 2;
            }
        }

        inline int gate_clifford_index(Gate g)
        {
            const CliffordTables &t = clifford_tables();
            switch (g)
            {
            case Gate::H:
                return t.h_idx;
            case Gate::S:
                return t.s_idx;
            case Gate::X:
                return t.x_idx;
            case Gate::Z:
                return t.z_idx;
            case Gate::T:
                break;
            }
            throw InternalError("gate_clifford_index: T is not a Clifford");
        }

    } // namespace detail

    /**
     * normalize: rewrites any circuit into its canonical form, processing one
     * gate per step with O(1) table operations. The T-count of the result never
     * exceeds the number of T tokens in the input.
     */
    inline CanonicalForm normalize(const Word &w, NormalizeStats *stats = nullptr)
    {
        const CliffordTables &t = clifford_tables();
        CanonicalForm cf;
        cf.final_clifford = t.id_idx;
        for (Gate g : w)
        {
            if (g == Gate::T)
            {
                detail::push_t(cf, stats);
            }
            else
            {
                cf.final_clifford =
                    t.multiply(cf.final_clifford, detail::gate_clifford_index(g));
                if (stats)
                {
                    stats->table_ops += 1;
                }
            }
        }
        return cf;
    }

    /** Expands a canonical form back into a plain generator word. */
    inline Word to_word(const CanonicalForm &cf)
    {
        static const std::vector<Gate> block_words[6] = {
            {Gate::H, Gate::T},
            {Gate::H, Gate::H, Gate::H, Gate::T},
            {Gate::S, Gate::H, Gate::T},
            {Gate::S, Gate::H, Gate::H, Gate::H, Gate::T},
            {Gate::S, Gate::S, Gate::H, Gate::T},
            {Gate::S, Gate::S, Gate::H, Gate::H, Gate::H, Gate::T},
        };
        Word w;
        if (cf.prefix == Prefix::T)
        {
            w.push_back(Gate::T);
        }
        else if (cf.prefix == Prefix::H2T)
        {
            w.insert(w.end(), {Gate::H, Gate::H, Gate::T});
        }
        for (Syllable s : cf.syllables)
        {
            const auto &b = block_words[static_cast<std::size_t>(s)];
            w.insert(w.end(), b.begin(), b.end());
        }
        const Word &cw = clifford_tables().words[static_cast<std::size_t>(cf.final_clifford)];
        w.insert(w.end(), cw.begin(), cw.end());
        return w;
    }

    namespace detail
    {

        // Exact matrices of the eight blocks (L M) T, indexed like lm_index.
        inline const std::array<Mat3, 8> &block_matrices()
        {
            static const std::array<Mat3, 8> blocks = [] {
                const CliffordTables &t = clifford_tables();
                std::array<Mat3, 8> b;
                for (int lm = 0; lm < 8; ++lm)
                {
                    b[static_cast<std::size_t>(lm)] =
                        t.matrices[t.lm_index[static_cast<std::size_t>(lm)]] *
                        generator_matrix(Gate::T);
                }
                return b;
            }();
            return blocks;
        }

    } // namespace detail

    /** The exact operator matrix of a canonical form. */
    inline Mat3 to_matrix(const CanonicalForm &cf)
    {
        const CliffordTables &t = clifford_tables();
        const auto &blocks = detail::block_matrices();
        Mat3 m = Mat3::identity();
        bool any = false;
        if (cf.prefix == Prefix::T)
        {
            m = blocks[0];
            any = true;
        }
        else if (cf.prefix == Prefix::H2T)
        {
            m = blocks[1];
            any = true;
        }
        for (Syllable s : cf.syllables)
        {
            const Mat3 &b = blocks[static_cast<std::size_t>(s) + 2];
            m = any ? m * b : b;
            any = true;
        }
        return m * t.matrices[static_cast<std::size_t>(cf.final_clifford)];
    }

    /**
     * Number of canonical forms of T-count at most n: (216/5)(8 * 6^n - 3)
     * mod phase, three times that over all 648 final Cliffords.
     */
    inline Integer count_canonical(int n, bool mod_phase)
    {
        if (n < 0)
        {
            throw DomainError("count_canonical: negative T-count");
        }
        Integer forms = (Integer(8) * pow_integer(6, static_cast<unsigned>(n)) - 3) / 5;
        return forms * (mod_phase ? 216 : 648);
    }

    /**
     * Enumerates every canonical form of T-count <= n, without duplicates, in a
     * fixed deterministic order: prefix epsilon, then T, then H2 T; syllable
     * lists in preorder; final Cliffords by ascending index. The callback may
     * return false to stop early.
     */
    inline void for_each_canonical(int n, bool mod_phase,
                                   const std::function<bool(const CanonicalForm &)> &fn)
    {
        const CliffordTables &t = clifford_tables();
        CanonicalForm cf;
        bool keep_going = true;

        auto emit_finals = [&]() {
            if (mod_phase)
            {
                for (int rep : t.phase_reps)
                {
                    cf.final_clifford = rep;
                    if (!fn(cf))
                    {
                        keep_going = false;
                        return;
                    }
                }
            }
            else
            {
                for (int c = 0; c < CliffordTables::order; ++c)
                {
                    cf.final_clifford = c;
                    if (!fn(cf))
                    {
                        keep_going = false;
                        return;
                    }
                }
            }
        };

        std::function<void(int)> descend = [&](int budget) {
            if (!keep_going)
            {
                return;
            }
            emit_finals();
            if (budget == 0 || !keep_going)
            {
                return;
            }
            for (int s = 0; s < 6 && keep_going; ++s)
            {
                cf.syllables.push_back(static_cast<Syllable>(s));
                descend(budget - 1);
                cf.syllables.pop_back();
            }
        };

        for (int p = 0; p < 3 && keep_going; ++p)
        {
            cf.prefix = static_cast<Prefix>(p);
            cf.syllables.clear();
            const int budget = n - (p == 0 ? 0 : 1);
            if (budget < 0)
            {
                continue;
            }
            descend(budget);
        }
    }

    /**
     * Same enumeration with the exact matrix of each form, sharing partial
     * products along the syllable tree.
     */
    inline void for_each_canonical_with_matrix(
        int n, bool mod_phase,
        const std::function<bool(const CanonicalForm &, const Mat3 &)> &fn)
    {
        const CliffordTables &t = clifford_tables();
        const auto &blocks = detail::block_matrices();
        CanonicalForm cf;
        bool keep_going = true;

        auto emit_finals = [&](const Mat3 &partial) {
            const auto emit = [&](int c) {
                cf.final_clifford = c;
                if (!fn(cf, partial * t.matrices[static_cast<std::size_t>(c)]))
                {
                    keep_going = false;
                }
            };
            if (mod_phase)
            {
                for (int rep : t.phase_reps)
                {
                    emit(rep);
                    if (!keep_going)
                    {
                        return;
                    }
                }
            }
            else
            {
                for (int c = 0; c < CliffordTables::order && keep_going; ++c)
                {
                    emit(c);
                }
            }
        };

        std::function<void(int, const Mat3 &)> descend = [&](int budget, const Mat3 &partial) {
            if (!keep_going)
            {
                return;
            }
            emit_finals(partial);
            if (budget == 0 || !keep_going)
            {
                return;
            }
            for (int s = 0; s < 6 && keep_going; ++s)
            {
                cf.syllables.push_back(static_cast<Syllable>(s));
                descend(budget - 1, partial * blocks[static_cast<std::size_t>(s) + 2]);
                cf.syllables.pop_back();
            }
        };

        for (int p = 0; p < 3 && keep_going; ++p)
        {
            cf.prefix = static_cast<Prefix>(p);
            cf.syllables.clear();
            if (p == 0)
            {
                descend(n, Mat3::identity());
            }
            else if (n >= 1)
            {
                descend(n - 1, blocks[p == 1 ? 0 : 1]);
            }
        }
    }

    /** parse_circuit: see the grammar notes on the token forms.
     *
     * Accepted whitespace-separated tokens:
     *   H S T X Z            single gates
     *   T:5                  gate with repetition count k >= 1
     *   [HT][S2H3T]          canonical-form blocks (one or more per token)
     *   C#123                Clifford by table index, expanded to its H/S word
     *
     * Errors carry the byte offset of the offending character.
     */
    inline Word parse_circuit(const std::string &text)
    {
        Word out;
        std::size_t i = 0;
        const std::size_t n = text.size();
        while (i < n)
        {
            if (std::isspace(static_cast<unsigned char>(text[i])))
            {
                ++i;
                continue;
            }
            const std::size_t start = i;
            std::size_t end = i;
            while (end < n && !std::isspace(static_cast<unsigned char>(text[end])))
            {
                ++end;
            }
            const std::string tok = text.substr(start, end - start);
            if (tok[0] == '[')
            {
                std::size_t p = 0;
                while (p < tok.size())
                {
                    if (tok[p] != '[')
                    {
                        throw ParseError("expected '['", start + p);
                    }
                    const std::size_t close = tok.find(']', p);
                    if (close == std::string::npos)
                    {
                        throw ParseError("unterminated '['", start + p);
                    }
                    detail::parse_block_body(tok.substr(p + 1, close - p - 1), start + p + 1,
                                             out);
                    p = close + 1;
                }
            }
            else if (tok.size() >= 2 && tok[0] == 'C' && tok[1] == '#')
            {
                std::size_t p = 2;
                long idx = 0;
                if (p >= tok.size())
                {
                    throw ParseError("missing Clifford index", start + p);
                }
                for (; p < tok.size(); ++p)
                {
                    if (!std::isdigit(static_cast<unsigned char>(tok[p])))
                    {
                        throw ParseError("bad Clifford index", start + p);
                    }
                    idx = idx * 10 + (tok[p] - '0');
                    if (idx >= CliffordTables::order)
                    {
                        throw ParseError("Clifford index out of range", start + 2);
                    }
                }
                const Word &w = clifford_index_word(static_cast<int>(idx));
                out.insert(out.end(), w.begin(), w.end());
            }
            else
            {
                Gate g;
                if (!detail::gate_from_char(tok[0], g))
                {
                    throw ParseError("unknown token '" + tok + "'", start);
                }
                long repeat = 1;
                if (tok.size() > 1)
                {
                    if (tok[1] != ':')
                    {
                        throw ParseError("unknown token '" + tok + "'", start);
                    }
                    if (tok.size() == 2)
                    {
                        throw ParseError("missing repetition count", start + 2);
                    }
                    repeat = 0;
                    for (std::size_t p = 2; p < tok.size(); ++p)
                    {
                        if (!std::isdigit(static_cast<unsigned char>(tok[p])))
                        {
                            throw ParseError("bad repetition count", start + p);
                        }
                        repeat = repeat * 10 + (tok[p] - '0');
                        if (repeat > 1000000)
                        {
                            throw ParseError("repetition count too large", start + 2);
                        }
                    }
                    if (repeat < 1)
                    {
                        throw ParseError("repetition count must be >= 1", start + 2);
                    }
                }
                out.insert(out.end(), static_cast<std::size_t>(repeat), g);
            }
            i = end;
        }
        return out;
    }

} // namespace qct
