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
#include <parasol/nogood.h>

#include <parasol/assignment.h>

#include <algorithm>
#include <cassert>
#include <cstring>
#include <new>

namespace parasol {

/////////////////////////////////////////////////////////////////////////////////////////
// SharedRecord
/////////////////////////////////////////////////////////////////////////////////////////
SharedRecord::SharedRecord(std::span<const Literal> l, uint32_t threads, uint32_t originator, NogoodType type,
                           uint32_t lbd)
    : refs_(threads + 1)
    , targetMask_(0)
    , size_(static_cast<uint32_t>(l.size()))
    , lbd_(lbd)
    , type_(type) {
    for (uint32_t t = 0; t != threads; ++t) {
        if (t != originator) {
            targetMask_ |= uint64_t(1) << t;
        }
    }
    std::memcpy(lits(), l.data(), l.size() * sizeof(Literal));
}

SharedRecord* SharedRecord::create(std::span<const Literal> lits, uint32_t threads, uint32_t originator,
                                   NogoodType type, uint32_t lbd) {
    assert(!lits.empty() && threads >= 1 && originator < threads);
    void* mem = ::operator new(sizeof(SharedRecord) + lits.size() * sizeof(Literal));
    return new (mem) SharedRecord(lits, threads, originator, type, lbd);
}

bool SharedRecord::release(std::atomic<uint64_t>* reclaimedCounter) {
    const uint32_t prev = refs_.fetch_sub(1, std::memory_order_acq_rel);
    assert(prev > 0 && "double release of shared record");
    if (prev == 1) {
        if (reclaimedCounter) {
            reclaimedCounter->fetch_add(1, std::memory_order_relaxed);
        }
        this->~SharedRecord();
        ::operator delete(this);
        return true;
    }
    return false;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Nogood
/////////////////////////////////////////////////////////////////////////////////////////
Nogood::Nogood(std::span<const Literal> lits, uint8_t flags, uint32_t lbd)
    : shared_(nullptr)
    , size_(static_cast<uint32_t>(lits.size()))
    , w1_(0)
    , w2_(size_ > 1 ? 1 : 0)
    , cacheIdx_(size_ > 3 ? 2 : 0)
    , cache_(size_ > 3 ? lits[2] : lit_invalid)
    , activity_(0.0f)
    , lbd_(static_cast<uint16_t>(lbd))
    , flags_(flags) {
    std::memcpy(inlineLits(), lits.data(), lits.size() * sizeof(Literal));
}

Nogood::Nogood(SharedRecord* rec, uint8_t flags)
    : shared_(rec)
    , size_(rec->size())
    , w1_(0)
    , w2_(rec->size() > 1 ? 1 : 0)
    , cacheIdx_(rec->size() > 3 ? 2 : 0)
    , cache_(rec->size() > 3 ? rec->literals()[2] : lit_invalid)
    , activity_(0.0f)
    , lbd_(static_cast<uint16_t>(rec->lbd()))
    , flags_(flags) {}

Nogood* Nogood::create(std::span<const Literal> lits, uint8_t flags, uint32_t lbd) {
    assert(!lits.empty());
    void* mem = ::operator new(sizeof(Nogood) + lits.size() * sizeof(Literal));
    return new (mem) Nogood(lits, flags, lbd);
}

Nogood* Nogood::create(SharedRecord* rec, uint8_t flags) {
    rec->share();
    void* mem = ::operator new(sizeof(Nogood));
    return new (mem) Nogood(rec, flags);
}

void Nogood::destroy(std::atomic<uint64_t>* reclaimedCounter) {
    if (shared_) {
        shared_->release(reclaimedCounter);
    }
    this->~Nogood();
    ::operator delete(this);
}

Nogood::WatchResult Nogood::updateWatch(Literal trueLit, const Assignment& a) {
    assert(size_ >= 2);
    if (watch2() == trueLit) {
        std::swap(w1_, w2_);
    }
    assert(watch1() == trueLit);
    // cache literal first: a false one satisfies the nogood, an unassigned one
    // is the spare watch and saves the tail visit
    if (cache_.valid()) {
        if (a.isFalse(cache_)) {
            return {WatchState::satisfied, lit_invalid, lit_invalid};
        }
        if (!a.isTrue(cache_)) {
            assert(cacheIdx_ != w1_ && cacheIdx_ != w2_);
            const Literal  moved = cache_;
            const uint32_t oldWatch = w1_;
            w1_ = cacheIdx_;
            cache_ = trueLit;
            cacheIdx_ = oldWatch;
            return {WatchState::replaced, moved, lit_invalid};
        }
    }
    const auto lits = literals();
    const Literal other = lits[w2_];
    uint32_t replacement = size_;
    for (uint32_t i = 0; i != size_; ++i) {
        if (i == w1_ || i == w2_) {
            continue;
        }
        if (!a.isTrue(lits[i])) {
            if (replacement == size_) {
                replacement = i;
            }
            else {
                cache_ = lits[i];
                cacheIdx_ = i;
                break;
            }
        }
    }
    if (replacement != size_) {
        const uint32_t old = w1_;
        w1_ = replacement;
        if (cache_.valid() && cacheIdx_ == replacement) { // cache got watched; fall back to the old watch
            cache_ = trueLit;
            cacheIdx_ = old;
        }
        return {WatchState::replaced, lits[replacement], lit_invalid};
    }
    if (a.isFalse(other)) {
        return {WatchState::satisfied, lit_invalid, lit_invalid};
    }
    if (a.isTrue(other)) {
        return {WatchState::violated, lit_invalid, other};
    }
    return {WatchState::unit, lit_invalid, other};
}

void Nogood::initWatches(const Assignment& a) {
    assert(size_ >= 2);
    const auto lits = literals();
    // prefer unassigned literals; among assigned ones take the latest
    auto better = [&](uint32_t i, uint32_t j) {
        const bool fi = a.value(lits[i].var()) == value_free;
        const bool fj = a.value(lits[j].var()) == value_free;
        if (fi != fj) {
            return fi;
        }
        if (fi) {
            return i < j;
        }
        return a.position(lits[i].var()) > a.position(lits[j].var());
    };
    uint32_t b1 = 0, b2 = 1;
    if (better(1, 0)) {
        std::swap(b1, b2);
    }
    for (uint32_t i = 2; i != size_; ++i) {
        if (better(i, b1)) {
            b2 = b1;
            b1 = i;
        }
        else if (better(i, b2)) {
            b2 = i;
        }
    }
    w1_ = b1;
    w2_ = b2;
    if (size_ > 3) {
        for (uint32_t i = 0; i != size_; ++i) {
            if (i != w1_ && i != w2_) {
                cache_ = lits[i];
                cacheIdx_ = i;
                break;
            }
        }
    }
}

void Nogood::reason(const Solver&, Literal p, LitVec& out) const {
    const Literal complement = ~p;
    for (const Literal l : literals()) {
        if (l != complement) {
            out.push_back(l);
        }
    }
}

/////////////////////////////////////////////////////////////////////////////////////////
// helpers
/////////////////////////////////////////////////////////////////////////////////////////
bool sanitizeNogood(LitVec& lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (size_t i = 1; i < lits.size(); ++i) {
        if (lits[i].var() == lits[i - 1].var()) {
            return false;
        }
    }
    return true;
}

} // namespace parasol
