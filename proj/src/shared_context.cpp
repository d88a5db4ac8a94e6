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
#include <parasol/shared_context.h>

#include <parasol/logic_program.h>

#include <cassert>

namespace parasol {

SharedContext::SharedContext() = default;
SharedContext::~SharedContext() = default;

Var SharedContext::addVar(VarType type, std::string name) {
    assert(!finalized_);
    varType_.push_back(type);
    varName_.push_back(std::move(name));
    return ++numVars_;
}

bool SharedContext::addNogood(LitVec lits) {
    assert(!finalized_);
    if (!sanitizeNogood(lits)) {
        return false;
    }
    switch (lits.size()) {
    case 0: unsat_ = true; break;
    case 1: units_.push_back(lits[0]); break;
    case 2:
    case 3: graph_.addStatic(lits); break;
    default:
        longs_.push_back({static_cast<uint32_t>(longPool_.size()), static_cast<uint32_t>(lits.size())});
        longPool_.insert(longPool_.end(), lits.begin(), lits.end());
        break;
    }
    return true;
}

void SharedContext::setSccGraph(std::unique_ptr<asp::SccGraph> g) {
    assert(!finalized_);
    scc_ = std::move(g);
}

void SharedContext::finalize(uint32_t threads) {
    assert(!finalized_ && threads >= 1 && threads <= 64);
    threads_ = threads;
    graph_.finalize(numVars_);
    dist_.configure(dist_.policy(), threads);
    finalized_ = true;
}

} // namespace parasol
