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
#include <parasol/assignment.h>

#include <cassert>

namespace parasol {

void Assignment::resize(uint32_t numVars) {
    value_.assign(numVars + 1, value_free);
    level_.assign(numVars + 1, 0);
    pos_.assign(numVars + 1, 0);
    reason_.assign(numVars + 1, Antecedent());
    trail_.clear();
    trail_.reserve(numVars);
    levels_.clear();
    rootLevel_ = backtrackLevel_ = 0;
}

Assignment::AssignResult Assignment::assign(Literal l, Antecedent reason, uint32_t level) {
    const Var v = l.var();
    assert(v != var_invalid && v < value_.size());
    assert(level <= decisionLevel());
    const Value want = trueValue(l);
    if (value_[v] != value_free) {
        return value_[v] == want ? AssignResult::unchanged : AssignResult::conflict;
    }
    value_[v] = want;
    level_[v] = level;
    pos_[v] = static_cast<uint32_t>(trail_.size());
    reason_[v] = reason;
    trail_.push_back(l);
    return AssignResult::assigned;
}

Assignment::AssignResult Assignment::decide(Literal l, bool flippedLevel) {
    levels_.push_back({static_cast<uint32_t>(trail_.size()), flippedLevel});
    const Antecedent ante = flippedLevel ? Antecedent::external() : Antecedent::decision();
    const AssignResult r = assign(l, ante, decisionLevel());
    assert(r == AssignResult::assigned);
    return r;
}

Assignment::AssignResult Assignment::assume(Literal l) {
    levels_.push_back({static_cast<uint32_t>(trail_.size()), false});
    const AssignResult r = assign(l, Antecedent::external(), decisionLevel());
    assert(r == AssignResult::assigned);
    return r;
}

bool Assignment::backjumpTo(uint32_t level) {
    if (level < rootLevel_) {
        return false;
    }
    if (level >= decisionLevel()) {
        return true;
    }
    const uint32_t keep = levels_[level].start;
    for (uint32_t i = static_cast<uint32_t>(trail_.size()); i > keep;) {
        const Var v = trail_[--i].var();
        value_[v] = value_free;
        reason_[v] = Antecedent();
    }
    trail_.resize(keep);
    levels_.resize(level);
    if (backtrackLevel_ > level) {
        backtrackLevel_ = level;
    }
    return true;
}

void Assignment::undoLevel() {
    assert(decisionLevel() > 0);
    const uint32_t keep = levels_.back().start;
    for (uint32_t i = static_cast<uint32_t>(trail_.size()); i > keep;) {
        const Var v = trail_[--i].var();
        value_[v] = value_free;
        reason_[v] = Antecedent();
    }
    trail_.resize(keep);
    levels_.pop_back();
    if (backtrackLevel_ > decisionLevel()) {
        backtrackLevel_ = decisionLevel();
    }
}

bool Assignment::consistent() const {
    if (rootLevel_ > backtrackLevel_ || backtrackLevel_ > decisionLevel()) {
        return false;
    }
    std::vector<bool> seen(value_.size(), false);
    uint32_t lastLevel = 0;
    for (uint32_t i = 0; i != trail_.size(); ++i) {
        const Literal l = trail_[i];
        const Var v = l.var();
        if (seen[v] || value_[v] != trueValue(l) || pos_[v] != i) {
            return false;
        }
        seen[v] = true;
        if (level_[v] < lastLevel || level_[v] > decisionLevel()) {
            return false;
        }
        lastLevel = level_[v];
    }
    for (Var v = 1; v < value_.size(); ++v) {
        if (value_[v] != value_free && !seen[v]) {
            return false;
        }
    }
    for (uint32_t lev = 1; lev <= decisionLevel(); ++lev) {
        if (levelStart(lev) >= trail_.size()) {
            return false;
        }
        if (level_[decision(lev).var()] != lev) {
            return false;
        }
    }
    return true;
}

} // namespace parasol
