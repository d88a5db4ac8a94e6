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

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

namespace parasol {

//! Inferences from binary and ternary nogoods, shared among all threads.
/*!
 * Per literal l, the static part stores bin(l) — literals forced once l
 * becomes true — and tern(l) — residual binary nogoods activated by l — in
 * one contiguous block. The static part is immutable after finalize().
 *
 * The dynamic part holds recorded binary/ternary nogoods in an
 * atomically-published chain of cache-line-sized blocks per literal. Entries
 * are append-only and never removed, so readers need no lock; writers
 * serialize per literal through a fine-grained spinlock.
 */
class ImplicationGraph {
public:
    //! Residual pair of a ternary nogood {l, first, second} stored under l.
    struct TernEntry {
        Literal first, second;
    };
    //! A recorded binary (second invalid: first is the forced complement) or
    //! ternary (residual pair) nogood.
    struct LearntEntry {
        Literal first, second;

        [[nodiscard]] bool binary() const { return !second.valid(); }
    };

    static constexpr uint32_t block_entries = 6; // sized to one 64-byte coherence unit

    struct alignas(64) LearntBlock {
        std::atomic<uint32_t> count{0};
        LearntBlock*          prev{nullptr};
        LearntEntry           entries[block_entries];
    };

    ImplicationGraph() = default;
    ~ImplicationGraph();
    ImplicationGraph(const ImplicationGraph&) = delete;
    ImplicationGraph& operator=(const ImplicationGraph&) = delete;

    //! Registers a binary or ternary problem nogood (before finalize()).
    void addStatic(std::span<const Literal> lits);
    //! Freezes the static part; must be called once before solving starts.
    void finalize(uint32_t numVars);
    [[nodiscard]] bool finalized() const { return finalized_; }

    //! Appends a recorded binary or ternary nogood, visible to all threads.
    /*!
     * Entries are permanent. Safe for concurrent use by multiple writers;
     * never blocks readers.
     */
    void addLearnt(std::span<const Literal> lits);

    [[nodiscard]] std::span<const Literal>   bin(Literal l) const;
    [[nodiscard]] std::span<const TernEntry> tern(Literal l) const;

    //! Applies f to every learnt entry currently visible under l.
    /*!
     * f: bool(const LearntEntry&); returning false stops the walk early.
     * Entries published by other threads during the walk may or may not be
     * seen; they are seen at the latest on the next walk.
     */
    template <typename F>
    bool forLearnt(Literal l, F&& f) const {
        for (const LearntBlock* b = node(l).learnt.load(std::memory_order_acquire); b; b = b->prev) {
            const uint32_t n = b->count.load(std::memory_order_acquire);
            for (uint32_t i = 0; i != n; ++i) {
                if (!f(b->entries[i])) {
                    return false;
                }
            }
        }
        return true;
    }

    [[nodiscard]] uint64_t numLearnt() const { return learntCount_.load(std::memory_order_relaxed); }
    [[nodiscard]] uint32_t numStaticBinary() const { return staticBin_; }
    [[nodiscard]] uint32_t numStaticTernary() const { return staticTern_; }

private:
    struct Node {
        uint32_t                   binBegin = 0, binEnd = 0;
        uint32_t                   ternBegin = 0, ternEnd = 0;
        std::atomic<LearntBlock*>  learnt{nullptr};
        std::atomic_flag           lock = ATOMIC_FLAG_INIT;
    };

    [[nodiscard]] Node&       node(Literal l) { return nodes_[l.id()]; }
    [[nodiscard]] const Node& node(Literal l) const { return nodes_[l.id()]; }

    void appendEntry(Literal under, LearntEntry e);

    // staging area until finalize()
    std::vector<std::pair<Literal, Literal>>  pendingBin_;
    std::vector<std::pair<Literal, TernEntry>> pendingTern_;

    std::vector<Node>      nodes_;
    std::vector<Literal>   binData_;
    std::vector<TernEntry> ternData_;
    std::atomic<uint64_t>  learntCount_{0};
    uint32_t               staticBin_ = 0;
    uint32_t               staticTern_ = 0;
    bool                   finalized_ = false;
};

} // namespace parasol
