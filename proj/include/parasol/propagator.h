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

namespace parasol {

class Solver;

//! Propagation routine run after unit propagation, ordered by priority class.
class PostPropagator {
public:
    //! Priority classes, executed in ascending order within a fixpoint round.
    enum class Priority : uint32_t {
        single = 0,  //!< deterministic, only extends the current decision level
        multi = 1,   //!< deterministic, may add or remove decision levels
        complex = 2, //!< may be non-deterministic (messages, nogood exchange)
    };

    enum class Result : uint8_t {
        ok,       //!< nothing to do
        changed,  //!< assignment or search state changed; restart the round
        conflict, //!< a nogood is violated; the solver's conflict is set
        halt,     //!< search must stop (terminate/interrupt observed)
    };

    virtual ~PostPropagator() = default;

    [[nodiscard]] virtual Priority priority() const = 0;

    //! Extends the current assignment or reports a conflict.
    virtual Result propagateFixpoint(Solver& s) = 0;

    //! Final check before a total assignment is accepted as a model.
    virtual bool isModelOk(Solver&) { return true; }
};

} // namespace parasol
