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

#include <parasol/nogood.h>

#include <atomic>
#include <cstdint>
#include <span>
#include <string>

namespace parasol {

//! Sender-side distribution filter: nogood type and LBD limit.
struct ExportPolicy {
    enum TypeBit : uint8_t {
        type_conflict = 1u << 0,
        type_loop = 1u << 1,
        type_short = 1u << 2,
    };

    uint8_t  types = 0;
    uint32_t maxLbd = 0;

    static ExportPolicy none() { return {0, 0}; }
    //! Proactive distribution of recorded binary/ternary nogoods only.
    static ExportPolicy shortOnly() { return {type_short, 3}; }
    //! Short nogoods plus long ones whose LBD does not exceed k.
    static ExportPolicy lbd(uint32_t k) { return {type_conflict | type_loop | type_short, k}; }

    //! A nogood is exported iff its type matches and its LBD <= maxLbd.
    [[nodiscard]] bool admits(NogoodType t, uint32_t lbd) const {
        if (lbd > maxLbd) {
            return false;
        }
        switch (t) {
        case NogoodType::conflict: return (types & type_conflict) != 0;
        case NogoodType::loop: return (types & type_loop) != 0;
        case NogoodType::short_: return (types & type_short) != 0;
        case NogoodType::solution: return true; // imperative; never filtered
        }
        return false;
    }
    [[nodiscard]] bool active() const { return types != 0; }

    bool operator==(const ExportPolicy&) const = default;
};

//! Lock-free multi-read-multi-write list of shared nogood records.
/*!
 * Writers claim a slot with one atomic increment and publish the record with
 * one release store; segments are linked on demand with a single pointer CAS.
 * Readers traverse with per-thread cursors and never take a lock. Each cursor
 * passage decrements the record's reference counter once.
 */
class DistributionList {
public:
    static constexpr uint32_t segment_slots = 32;

    struct Segment {
        explicit Segment(uint64_t b) : base(b) {}
        uint64_t                   base;
        std::atomic<Segment*>      next{nullptr};
        std::atomic<SharedRecord*> slots[segment_slots] = {};
    };

    //! Per-thread read position.
    struct Cursor {
        uint64_t idx = 0;
        Segment* seg = nullptr;
    };

    DistributionList();
    ~DistributionList();
    DistributionList(const DistributionList&) = delete;
    DistributionList& operator=(const DistributionList&) = delete;

    void append(SharedRecord* rec);

    //! Visits records published since the cursor's last position.
    /*!
     * f(SharedRecord&) runs before the passage decrement, so the record is
     * alive during the call; keeping it afterwards requires share(). Stops at
     * the first claimed-but-unpublished slot; such records are seen on a
     * later poll. Returns the number of records visited.
     */
    template <typename F>
    uint32_t poll(Cursor& c, std::atomic<uint64_t>& reclaimed, F&& f) {
        if (c.seg == nullptr) {
            c.seg = head_;
        }
        const uint64_t limit = claim_.load(std::memory_order_acquire);
        uint32_t       n = 0;
        while (c.idx < limit) {
            while (c.idx >= c.seg->base + segment_slots) {
                Segment* next = c.seg->next.load(std::memory_order_acquire);
                if (!next) {
                    return n; // slot claimed, segment not yet linked
                }
                c.seg = next;
            }
            SharedRecord* rec = c.seg->slots[c.idx - c.seg->base].load(std::memory_order_acquire);
            if (!rec) {
                return n;
            }
            f(*rec);
            rec->release(&reclaimed);
            ++c.idx;
            ++n;
        }
        return n;
    }

    //! Passage-decrements every remaining record (run teardown).
    uint32_t drain(Cursor& c, std::atomic<uint64_t>& reclaimed) {
        return poll(c, reclaimed, [](SharedRecord&) {});
    }

    [[nodiscard]] uint64_t size() const { return claim_.load(std::memory_order_relaxed); }

private:
    Segment* segmentFor(uint64_t idx);

    std::atomic<uint64_t> claim_{0};
    Segment*              head_;
    std::atomic<Segment*> tail_;
};

//! Global nogood distribution: export filter, shared list, and audit counters.
class Distributor {
public:
    Distributor() = default;

    void configure(ExportPolicy policy, uint32_t threads) {
        policy_ = policy;
        threads_ = threads;
    }
    [[nodiscard]] const ExportPolicy& policy() const { return policy_; }
    [[nodiscard]] uint32_t            threads() const { return threads_; }

    struct ExportOutcome {
        SharedRecord* kept = nullptr; //!< originator's reference, when requested
        bool          exported = false;
    };

    //! Creates and publishes a shared record if the policy admits the nogood.
    /*!
     * With keepReference, the originator's reference stays held and is
     * returned (the local copy switches to the shared tail); otherwise it is
     * dropped immediately. Nothing is exported when the nogood is filtered
     * or only one thread runs; solution nogoods bypass the filter.
     */
    ExportOutcome exportNogood(uint32_t originator, std::span<const Literal> lits, NogoodType type, uint32_t lbd,
                               bool keepReference);

    template <typename F>
    uint32_t poll(DistributionList::Cursor& c, F&& f) {
        return list_.poll(c, reclaimed_, std::forward<F>(f));
    }
    uint32_t drain(DistributionList::Cursor& c) { return list_.drain(c, reclaimed_); }

    std::atomic<uint64_t>& reclaimCounter() { return reclaimed_; }

    [[nodiscard]] uint64_t recordsAllocated() const { return allocated_.load(std::memory_order_relaxed); }
    [[nodiscard]] uint64_t recordsReclaimed() const { return reclaimed_.load(std::memory_order_relaxed); }
    [[nodiscard]] uint64_t listSize() const { return list_.size(); }

private:
    ExportPolicy          policy_ = ExportPolicy::none();
    uint32_t              threads_ = 1;
    DistributionList      list_;
    std::atomic<uint64_t> allocated_{0};
    std::atomic<uint64_t> reclaimed_{0};
};

} // namespace parasol
