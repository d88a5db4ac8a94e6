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
#include <parasol/distributor.h>

#include <cassert>

namespace parasol {

DistributionList::DistributionList() : head_(new Segment(0)), tail_(head_) {}

DistributionList::~DistributionList() {
    for (Segment* s = head_; s;) {
        Segment* next = s->next.load(std::memory_order_relaxed);
        delete s;
        s = next;
    }
}

DistributionList::Segment* DistributionList::segmentFor(uint64_t idx) {
    Segment* s = tail_.load(std::memory_order_acquire);
    if (idx < s->base) {
        s = head_;
    }
    while (idx >= s->base + segment_slots) {
        Segment* next = s->next.load(std::memory_order_acquire);
        if (!next) {
            auto* fresh = new Segment(s->base + segment_slots);
            if (s->next.compare_exchange_strong(next, fresh, std::memory_order_acq_rel)) {
                next = fresh;
            }
            else {
                delete fresh; // another writer linked first
            }
        }
        s = next;
    }
    tail_.store(s, std::memory_order_release);
    return s;
}

void DistributionList::append(SharedRecord* rec) {
    const uint64_t idx = claim_.fetch_add(1, std::memory_order_relaxed);
    Segment*       seg = segmentFor(idx);
    seg->slots[idx - seg->base].store(rec, std::memory_order_release);
}

Distributor::ExportOutcome Distributor::exportNogood(uint32_t originator, std::span<const Literal> lits,
                                                     NogoodType type, uint32_t lbd, bool keepReference) {
    if (threads_ <= 1 || (type != NogoodType::solution && !policy_.admits(type, lbd))) {
        return {};
    }
    SharedRecord* rec = SharedRecord::create(lits, threads_, originator, type, lbd);
    allocated_.fetch_add(1, std::memory_order_relaxed);
    list_.append(rec);
    if (!keepReference) {
        rec->release(&reclaimed_);
        rec = nullptr;
    }
    return {rec, true};
}

} // namespace parasol
