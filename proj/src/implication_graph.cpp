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
#include <parasol/implication_graph.h>

#include <cassert>

namespace parasol {

ImplicationGraph::~ImplicationGraph() {
    for (Node& n : nodes_) {
        for (LearntBlock* b = n.learnt.load(std::memory_order_relaxed); b;) {
            LearntBlock* prev = b->prev;
            delete b;
            b = prev;
        }
    }
}

void ImplicationGraph::addStatic(std::span<const Literal> lits) {
    assert(!finalized_);
    assert(lits.size() == 2 || lits.size() == 3);
    if (lits.size() == 2) {
        pendingBin_.emplace_back(lits[0], ~lits[1]);
        pendingBin_.emplace_back(lits[1], ~lits[0]);
        ++staticBin_;
    }
    else {
        pendingTern_.emplace_back(lits[0], TernEntry{lits[1], lits[2]});
        pendingTern_.emplace_back(lits[1], TernEntry{lits[0], lits[2]});
        pendingTern_.emplace_back(lits[2], TernEntry{lits[0], lits[1]});
        ++staticTern_;
    }
}

void ImplicationGraph::finalize(uint32_t numVars) {
    assert(!finalized_);
    nodes_ = std::vector<Node>(2 * (numVars + 1));
    // counting pass, then offsets, then fill
    std::vector<uint32_t> binCount(nodes_.size(), 0), ternCount(nodes_.size(), 0);
    for (const auto& [l, f] : pendingBin_) {
        ++binCount[l.id()];
    }
    for (const auto& [l, e] : pendingTern_) {
        ++ternCount[l.id()];
    }
    uint32_t binOff = 0, ternOff = 0;
    for (size_t i = 0; i != nodes_.size(); ++i) {
        nodes_[i].binBegin = nodes_[i].binEnd = binOff;
        nodes_[i].ternBegin = nodes_[i].ternEnd = ternOff;
        binOff += binCount[i];
        ternOff += ternCount[i];
    }
    binData_.resize(binOff);
    ternData_.resize(ternOff);
    for (const auto& [l, f] : pendingBin_) {
        binData_[nodes_[l.id()].binEnd++] = f;
    }
    for (const auto& [l, e] : pendingTern_) {
        ternData_[nodes_[l.id()].ternEnd++] = e;
    }
    pendingBin_.clear();
    pendingBin_.shrink_to_fit();
    pendingTern_.clear();
    pendingTern_.shrink_to_fit();
    finalized_ = true;
}

std::span<const Literal> ImplicationGraph::bin(Literal l) const {
    const Node& n = node(l);
    return {binData_.data() + n.binBegin, n.binEnd - n.binBegin};
}

std::span<const ImplicationGraph::TernEntry> ImplicationGraph::tern(Literal l) const {
    const Node& n = node(l);
    return {ternData_.data() + n.ternBegin, n.ternEnd - n.ternBegin};
}

void ImplicationGraph::appendEntry(Literal under, LearntEntry e) {
    Node& n = node(under);
    while (n.lock.test_and_set(std::memory_order_acquire)) {
    }
    LearntBlock* head = n.learnt.load(std::memory_order_relaxed);
    if (!head || head->count.load(std::memory_order_relaxed) == block_entries) {
        auto* nb = new LearntBlock();
        nb->prev = head;
        nb->entries[0] = e;
        nb->count.store(1, std::memory_order_release);
        n.learnt.store(nb, std::memory_order_release);
    }
    else {
        const uint32_t c = head->count.load(std::memory_order_relaxed);
        head->entries[c] = e;
        head->count.store(c + 1, std::memory_order_release);
    }
    n.lock.clear(std::memory_order_release);
}

void ImplicationGraph::addLearnt(std::span<const Literal> lits) {
    assert(finalized_);
    assert(lits.size() == 2 || lits.size() == 3);
    if (lits.size() == 2) {
        appendEntry(lits[0], {~lits[1], lit_invalid});
        appendEntry(lits[1], {~lits[0], lit_invalid});
    }
    else {
        appendEntry(lits[0], {lits[1], lits[2]});
        appendEntry(lits[1], {lits[0], lits[2]});
        appendEntry(lits[2], {lits[0], lits[1]});
    }
    learntCount_.fetch_add(1, std::memory_order_relaxed);
}

} // namespace parasol
