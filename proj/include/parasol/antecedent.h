//
// Copyright (c) 2025-present parasol contributors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#pragma once

#include <parasol/literal.h>

#include <cassert>
#include <cstdint>

namespace parasol {

class Solver;

//! Interface for constraints that can act as the reason of a forced literal.
class Reasoner {
public:
    virtual ~Reasoner() = default;
    //! Appends the reason for the trail literal p to out.
    /*!
     * The antecedent is a nogood N with ~p in N and all other literals of N
     * true; the reason is N minus ~p.
     */
    virtual void reason(const Solver& s, Literal p, LitVec& out) const = 0;
};

//! The antecedent of an assigned literal: decision, assumption, short nogood, or constraint.
/*!
 * Packed into one 64-bit word. Binary and ternary reasons store their
 * literals inline; everything else is a Reasoner pointer (4-byte aligned,
 * so the two tag bits are free).
 */
class Antecedent {
public:
    enum Kind : uint32_t { kind_none = 0, kind_pointer, kind_binary, kind_ternary, kind_external };

    constexpr Antecedent() : data_(0) {}

    static Antecedent decision() { return {}; }
    //! Assumption or enumeration backtracking literal; never resolved.
    static Antecedent external() { return Antecedent(tag_external); }
    //! Reason {other} from a binary nogood {~p, other}.
    static Antecedent binary(Literal other) { return Antecedent((static_cast<uint64_t>(other.id()) << 2) | tag_binary); }
    //! Reason {a, b} from a ternary nogood {~p, a, b}.
    static Antecedent ternary(Literal a, Literal b) {
        return Antecedent((static_cast<uint64_t>(a.id()) << 33) | (static_cast<uint64_t>(b.id()) << 2) | tag_ternary);
    }
    static Antecedent constraint(const Reasoner* r) {
        auto bits = reinterpret_cast<uintptr_t>(r);
        assert((bits & 3u) == 0 && r != nullptr);
        return Antecedent(static_cast<uint64_t>(bits));
    }

    [[nodiscard]] Kind kind() const {
        if (data_ == 0) {
            return kind_none;
        }
        switch (data_ & 3u) {
        case tag_binary: return kind_binary;
        case tag_ternary: return kind_ternary;
        case tag_external: return kind_external;
        default: return kind_pointer;
        }
    }
    [[nodiscard]] bool isNull() const { return data_ == 0; }
    [[nodiscard]] bool isExternal() const { return data_ == tag_external; }

    [[nodiscard]] Literal firstLiteral() const { return Literal::fromId(static_cast<uint32_t>((data_ >> 2) & lit_mask)); }
    [[nodiscard]] Literal secondLiteral() const { return Literal::fromId(static_cast<uint32_t>(data_ >> 33)); }

    [[nodiscard]] const Reasoner* asReasoner() const { return reinterpret_cast<const Reasoner*>(static_cast<uintptr_t>(data_)); }

    //! Appends this antecedent's reason literals for trail literal p to out.
    void reason(const Solver& s, Literal p, LitVec& out) const;

    bool operator==(const Antecedent&) const = default;

private:
    enum Tag : uint64_t { tag_binary = 1, tag_ternary = 2, tag_external = 3 };
    static constexpr uint64_t lit_mask = 0x7fffffffu;

    explicit constexpr Antecedent(uint64_t d) : data_(d) {}

    uint64_t data_;
};

} // namespace parasol
