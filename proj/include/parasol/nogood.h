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

#include <atomic>
#include <cstdint>
#include <span>

namespace parasol {

class Assignment;

//! Origin of a recorded nogood; used as distribution filter.
enum class NogoodType : uint8_t { conflict = 0, loop = 1, short_ = 2, solution = 3 };

//! Read-only shared tail of a distributed nogood plus distribution metadata.
/*!
 * Created only when a nogood is actually distributed. The reference counter
 * starts at the number of threads plus one: each thread's read cursor
 * decrements it once on passage, the originator once on release, and every
 * integrating thread holds one additional count while sharing the literals.
 */
class SharedRecord {
public:
    //! Allocates a record over lits; refs = threads + 1, mask excludes the originator.
    static SharedRecord* create(std::span<const Literal> lits, uint32_t threads, uint32_t originator,
                                NogoodType type, uint32_t lbd);

    SharedRecord(const SharedRecord&) = delete;
    SharedRecord& operator=(const SharedRecord&) = delete;

    [[nodiscard]] std::span<const Literal> literals() const { return {lits(), size_}; }
    [[nodiscard]] uint32_t                 size() const { return size_; }
    [[nodiscard]] uint32_t                 lbd() const { return lbd_; }
    [[nodiscard]] NogoodType               type() const { return type_; }
    [[nodiscard]] bool                     addressedTo(uint32_t thread) const { return (targetMask_ >> thread) & 1u; }
    [[nodiscard]] uint32_t                 refCount() const { return refs_.load(std::memory_order_relaxed); }

    //! Takes one additional count (integration keeps the literals alive).
    void share() { refs_.fetch_add(1, std::memory_order_relaxed); }
    //! Drops one count; frees the record when the last one is gone.
    /*!
     * Returns true if this call reclaimed the record. reclaimedCounter, when
     * given, is incremented on reclamation (allocation audit).
     */
    bool release(std::atomic<uint64_t>* reclaimedCounter = nullptr);

private:
    SharedRecord(std::span<const Literal> l, uint32_t threads, uint32_t originator, NogoodType type, uint32_t lbd);
    ~SharedRecord() = default;

    [[nodiscard]] Literal*       lits() { return reinterpret_cast<Literal*>(this + 1); }
    [[nodiscard]] const Literal* lits() const { return reinterpret_cast<const Literal*>(this + 1); }

    std::atomic<uint32_t> refs_;
    uint64_t              targetMask_;
    uint32_t              size_;
    uint32_t              lbd_;
    NogoodType            type_;
};

//! A nogood with thread-local dynamic head and inline or shared read-only tail.
/*!
 * The head carries the two watch positions, the cache literal, activity, LBD,
 * and flags. Nogoods of up to five literals always store their tail inline in
 * the same allocation; longer ones may point to a SharedRecord instead.
 */
class Nogood : public Reasoner {
public:
    enum Flag : uint8_t {
        flag_learnt = 1u << 0,   //!< recorded during search (subject to deletion)
        flag_loop = 1u << 1,     //!< unfounded-set loop nogood
        flag_solution = 1u << 2, //!< excludes an enumerated model
        flag_imported = 1u << 3, //!< integrated from another thread
        flag_protect = 1u << 4,  //!< exempt from deletion
        flag_grace = 1u << 5,    //!< inside the import queue's grace period
        flag_delete_mark = 1u << 6, //!< transient mark used during reduction
    };

    //! Creates a nogood with an inline copy of lits.
    static Nogood* create(std::span<const Literal> lits, uint8_t flags, uint32_t lbd = 1);
    //! Creates a nogood whose tail is physically shared; takes one record count.
    static Nogood* create(SharedRecord* rec, uint8_t flags);
    //! Frees the nogood; releases the shared tail if any.
    void destroy(std::atomic<uint64_t>* reclaimedCounter = nullptr);

    Nogood(const Nogood&) = delete;
    Nogood& operator=(const Nogood&) = delete;

    [[nodiscard]] std::span<const Literal> literals() const {
        return shared_ ? shared_->literals() : std::span<const Literal>{inlineLits(), size_};
    }
    [[nodiscard]] uint32_t size() const { return size_; }
    [[nodiscard]] Literal  at(uint32_t i) const { return literals()[i]; }

    [[nodiscard]] Literal watch1() const { return at(w1_); }
    [[nodiscard]] Literal watch2() const { return at(w2_); }
    [[nodiscard]] Literal cache() const { return cache_; }
    [[nodiscard]] bool    shared() const { return shared_ != nullptr; }
    [[nodiscard]] SharedRecord* sharedRecord() const { return shared_; }

    [[nodiscard]] uint32_t lbd() const { return lbd_; }
    void                   setLbd(uint32_t lbd) { lbd_ = lbd < 0xffffu ? static_cast<uint16_t>(lbd) : 0xffffu; }
    [[nodiscard]] float    activity() const { return activity_; }
    void                   bumpActivity(float inc) { activity_ += inc; }
    void                   scaleActivity(float f) { activity_ *= f; }

    [[nodiscard]] bool hasFlag(Flag f) const { return (flags_ & f) != 0; }
    void               setFlag(Flag f) { flags_ |= f; }
    void               clearFlag(Flag f) { flags_ &= static_cast<uint8_t>(~f); }
    [[nodiscard]] NogoodType type() const {
        return hasFlag(flag_solution) ? NogoodType::solution
               : hasFlag(flag_loop)   ? NogoodType::loop
               : size_ <= 3           ? NogoodType::short_
                                      : NogoodType::conflict;
    }

    //! Result of updating a watch after its literal became true.
    enum class WatchState : uint8_t {
        satisfied, //!< some literal is false; keep watch as is
        replaced,  //!< watch moved to another literal
        unit,      //!< all literals but the other watch are true
        violated   //!< every literal is true
    };
    struct WatchResult {
        WatchState state;
        Literal    moveTo; //!< replaced: new watched literal
        Literal    other;  //!< unit/violated: the other watched literal
    };

    //! Updates the watch sitting on trueLit per the cache-first policy.
    /*!
     * The cache literal is inspected before the tail is scanned; a successful
     * replacement opportunistically refreshes the cache from the scan.
     */
    WatchResult updateWatch(Literal trueLit, const Assignment& a);

    //! Picks watch positions for a freshly integrated nogood (most recently
    //! assigned literals first) and refreshes the cache literal.
    void initWatches(const Assignment& a);

    // Reasoner
    void reason(const Solver& s, Literal p, LitVec& out) const override;

private:
    Nogood(std::span<const Literal> lits, uint8_t flags, uint32_t lbd);
    Nogood(SharedRecord* rec, uint8_t flags);
    ~Nogood() override = default;

    [[nodiscard]] Literal*       inlineLits() { return reinterpret_cast<Literal*>(this + 1); }
    [[nodiscard]] const Literal* inlineLits() const { return reinterpret_cast<const Literal*>(this + 1); }

    SharedRecord* shared_;
    uint32_t      size_;
    uint32_t      w1_, w2_;
    uint32_t      cacheIdx_;
    Literal       cache_;
    float         activity_;
    uint16_t      lbd_;
    uint8_t       flags_;
};

//! Sorts lits, removes duplicates, and reports tautologies (l and ~l together).
/*!
 * Returns false iff lits contains a complementary pair (the nogood is
 * trivially satisfiable and should be dropped).
 */
bool sanitizeNogood(LitVec& lits);

} // namespace parasol
