#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "errors.hpp"

namespace qct
{

    enum class Gate : unsigned char
    {
        H,
        S,
        T,
        X,
        Z
    };

    inline char gate_name(Gate g)
    {
        switch (g)
        {
        case Gate::H:
            return 'H';
        case Gate::S:
            return 'S';
        case Gate::T:
            return 'T';
        case Gate::X:
            return 'X';
        case Gate::Z:
            return 'Z';
        }
        return '?';
    }

    /** A circuit: an ordered word over the generators, applied left to right. */
    using Word = std::vector<Gate>;

    inline std::string word_to_text(const Word &w)
    {
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i)
        {
            if (i > 0)
            {
                out.push_back(' ');
            }
            out.push_back(gate_name(w[i]));
        }
        return out;
    }

    namespace detail
    {

        inline bool gate_from_char(char c, Gate &out)
        {
            switch (c)
            {
            case 'H':
                out = Gate::H;
                return true;
            case 'S':
                out = Gate::S;
                return true;
            case 'T':
                out = Gate::T;
                return true;
            case 'X':
                out = Gate::X;
                return true;
            case 'Z':
                out = Gate::Z;
                return true;
            default:
                return false;
            }
        }

        // Parses the gates inside a canonical-form block such as "H2T" or "S2H3T":
        // letters with optional single-digit repeat counts.
        inline void parse_block_body(const std::string &body, std::size_t offset, Word &out)
        {
            std::size_t i = 0;
            while (i < body.size())
            {
                Gate g;
                if (!gate_from_char(body[i], g))
                {
                    throw ParseError("unknown gate '" + std::string(1, body[i]) + "'",
                                     offset + i);
                }
                ++i;
                int repeat = 1;
                if (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
                {
                    repeat = body[i] - '0';
                    if (repeat < 1)
                    {
                        throw ParseError("repeat count must be positive", offset + i);
                    }
                    ++i;
                }
                out.insert(out.end(), static_cast<std::size_t>(repeat), g);
            }
        }

    } // namespace detail

} // namespace qct
