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

#include <cstdint>
#include <vector>

namespace parasol {

//! Boolean variable, 1-based. Variable 0 is reserved as "no variable".
using Var = uint32_t;

constexpr Var var_invalid = 0;

//! A signed Boolean variable with the sign folded into one integer (2v or 2v+1).
/*!
 * The encoding makes literals directly usable as indices into watch lists
 * and implication-graph nodes; the complement is one xor away.
 */
class Literal {
public:
    constexpr Literal() : id_(0) {}
    constexpr Literal(Var v, bool negative) : id_((v << 1) | static_cast<uint32_t>(negative)) {}

    [[nodiscard]] constexpr Var      var() const { return id_ >> 1; }
    [[nodiscard]] constexpr bool     negative() const { return (id_ & 1u) != 0; }
    [[nodiscard]] constexpr Literal  complement() const { return fromId(id_ ^ 1u); }
    //! Index usable for per-literal arrays (watch lists, implication graph).
    [[nodiscard]] constexpr uint32_t id() const { return id_; }
    [[nodiscard]] constexpr bool     valid() const { return var() != var_invalid; }

    static constexpr Literal fromId(uint32_t id) {
        Literal r;
        r.id_ = id;
        return r;
    }

    constexpr auto operator<=>(const Literal&) const = default;

private:
    uint32_t id_;
};

constexpr Literal lit_invalid = Literal();

constexpr Literal posLit(Var v) { return {v, false}; }
constexpr Literal negLit(Var v) { return {v, true}; }
constexpr Literal operator~(Literal l) { return l.complement(); }

using LitVec = std::vector<Literal>;

//! Truth value of a variable.
enum Value : uint8_t { value_free = 0, value_true = 1, value_false = 2 };

//! The value a variable must take to make literal l true.
constexpr Value trueValue(Literal l) { return l.negative() ? value_false : value_true; }
//! The value a variable must take to make literal l false.
constexpr Value falseValue(Literal l) { return l.negative() ? value_true : value_false; }

} // namespace parasol
