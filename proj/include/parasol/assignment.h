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

#include <parasol/antecedent.h>
#include <parasol/literal.h>

#include <cstdint>
#include <vector>

namespace parasol {

//! Ordered assumption literals defining a disjoint subspace of the search tree.
struct GuidingPath {
    LitVec lits;

    [[nodiscard]] bool empty() const { return lits.empty(); }
};

//! Trail of assigned literals with decision levels and reasons.
/*!
 * Strictly thread-local. Values, levels, reasons, and trail positions are
 * stored in parallel per-variable arrays. The root level protects guiding-path
 * assumptions from backjumping; the backtrack level is the enumeration floor.
 */
class Assignment {
public:
    enum class AssignResult : uint8_t { assigned, unchanged, conflict };

    Assignment() = default;

    void resize(uint32_t numVars);
    [[nodiscard]] uint32_t numVars() const { return static_cast<uint32_t>(value_.size()) - 1; }

    // ------------------------------------------------------------------
    // value queries
    [[nodiscard]] Value value(Var v) const { return value_[v]; }
    [[nodiscard]] bool  isTrue(Literal l) const { return value_[l.var()] == trueValue(l); }
    [[nodiscard]] bool  isFalse(Literal l) const { return value_[l.var()] == falseValue(l); }
    [[nodiscard]] bool  isFree(Var v) const { return value_[v] == value_free; }
    [[nodiscard]] bool  isTotal() const { return trail_.size() == numVars(); }

    [[nodiscard]] uint32_t   level(Var v) const { return level_[v]; }
    [[nodiscard]] uint32_t   position(Var v) const { return pos_[v]; }
    [[nodiscard]] Antecedent reason(Var v) const { return reason_[v]; }

    // ------------------------------------------------------------------
    // trail and levels
    [[nodiscard]] const LitVec& trail() const { return trail_; }
    [[nodiscard]] uint32_t      trailSize() const { return static_cast<uint32_t>(trail_.size()); }
    [[nodiscard]] uint32_t      decisionLevel() const { return static_cast<uint32_t>(levels_.size()); }
    [[nodiscard]] uint32_t      rootLevel() const { return rootLevel_; }
    [[nodiscard]] uint32_t      backtrackLevel() const { return backtrackLevel_; }
    //! First trail position of level lev (1-based level).
    [[nodiscard]] uint32_t levelStart(uint32_t lev) const { return levels_[lev - 1].start; }
    //! The decision (or assumption/backtrack) literal that opened level lev.
    [[nodiscard]] Literal decision(uint32_t lev) const { return trail_[levels_[lev - 1].start]; }
    //! True if both branches of the decision at lev have been explored (enumeration).
    [[nodiscard]] bool flipped(uint32_t lev) const { return levels_[lev - 1].flipped; }

    //! Raises the root level to the current decision level (guiding-path setup, splits).
    void pushRootLevel() { pushRootLevel(decisionLevel()); }
    //! Raises the root level to lev <= decisionLevel().
    void pushRootLevel(uint32_t lev) {
        rootLevel_ = lev;
        if (backtrackLevel_ < rootLevel_) {
            backtrackLevel_ = rootLevel_;
        }
    }
    //! Drops all levels and assumption protection; assignment returns to level 0.
    void resetRoot() {
        rootLevel_ = backtrackLevel_ = 0;
    }
    void setBacktrackLevel(uint32_t lev) { backtrackLevel_ = lev; }

    // ------------------------------------------------------------------
    // assignment updates

    //! Assigns l at the given level with the given reason.
    /*!
     * Returns conflict iff the complement of l is already assigned; assigning
     * an already-true literal is a no-op.
     */
    AssignResult assign(Literal l, Antecedent reason, uint32_t level);

    //! Opens a new decision level with decision literal l.
    AssignResult decide(Literal l, bool flippedLevel = false);

    //! Opens a new decision level with guiding-path assumption l.
    /*!
     * Assumptions carry an external antecedent and are excluded from
     * conflict resolution below the root level.
     */
    AssignResult assume(Literal l);

    //! Removes all trail entries above the given decision level.
    /*!
     * Returns false (and leaves the assignment unchanged) if level is below
     * the root level; such requests signal root conflicts to the caller.
     */
    bool backjumpTo(uint32_t level);

    //! Removes exactly the current decision level. Precondition: decisionLevel() > 0.
    void undoLevel();

    //! Checks the recorded invariants; used by tests and debug builds.
    [[nodiscard]] bool consistent() const;

private:
    struct LevelInfo {
        uint32_t start = 0;
        bool     flipped = false;
    };

    std::vector<Value>      value_{value_free};
    std::vector<uint32_t>   level_{0};
    std::vector<uint32_t>   pos_{0};
    std::vector<Antecedent> reason_{Antecedent()};
    LitVec                  trail_;
    std::vector<LevelInfo>  levels_;
    uint32_t                rootLevel_ = 0;
    uint32_t                backtrackLevel_ = 0;
};

} // namespace parasol
