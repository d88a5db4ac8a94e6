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

#include <parasol/assignment.h>
#include <parasol/config.h>
#include <parasol/nogood.h>
#include <parasol/propagator.h>
#include <parasol/shared_context.h>

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

namespace parasol {

class Solver;

//! Per-thread search statistics.
struct SolverStats {
    uint64_t conflicts = 0;
    uint64_t decisions = 0;
    uint64_t propagations = 0;
    uint64_t restarts = 0;
    uint64_t modelsFound = 0;
    uint64_t learnt = 0;
    uint64_t deleted = 0;
    uint64_t splitsServed = 0;
    uint64_t exported = 0;
    uint64_t integrated = 0;
    uint64_t importEvicted = 0;
    uint64_t importDiscarded = 0;
    //! Cumulative conflict counts at the first restarts (schedule inspection).
    std::vector<uint64_t> restartPoints;

    void addRestartPoint(uint64_t conflicts_) {
        if (restartPoints.size() < 16) {
            restartPoints.push_back(conflicts_);
        }
    }
};

//! Receives total assignments; implemented by the enumeration layer.
class ModelHandler {
public:
    enum class Directive : uint8_t { continue_search, stop_search };
    virtual ~ModelHandler() = default;
    virtual Directive onModel(Solver& s) = 0;
};

//! Activity-ordered max-heap over variables; ties break toward lower indices.
class VarHeap {
public:
    void init(uint32_t numVars, const std::vector<double>& act);
    void insert(Var v);
    [[nodiscard]] bool contains(Var v) const { return pos_[v] != UINT32_MAX; }
    [[nodiscard]] bool empty() const { return heap_.empty(); }
    Var  pop();
    void update(Var v); //!< re-establishes order after an activity increase

private:
    [[nodiscard]] bool before(Var a, Var b) const {
        return (*act_)[a] > (*act_)[b] || ((*act_)[a] == (*act_)[b] && a < b);
    }
    void siftUp(uint32_t i);
    void siftDown(uint32_t i);

    const std::vector<double>* act_ = nullptr;
    std::vector<Var>           heap_;
    std::vector<uint32_t>      pos_;
};

//! Per-thread conflict-driven solver: decide, propagate, analyze, backjump.
/*!
 * All state is thread-local; shared data is reached read-only through the
 * SharedContext, concurrent updates only through the implication graph's
 * learnt chain and the distributor. Communication hooks run as post
 * propagators registered by the parallel layer.
 */
class Solver {
public:
    //! How search continues after a committed model.
    enum class ModelContinue : uint8_t {
        stop,       //!< model limit semantics handled by the ModelHandler
        backtrack,  //!< splitting-based enumeration: flip the deepest open decision
        exclusion,  //!< competitive enumeration: record a solution nogood
        constraint, //!< optimize/consequences: a bound or accumulator conflict follows
    };

    enum class StartResult : uint8_t { ok, unsat, halt };
    enum class PathResult : uint8_t { exhausted, stopped };
    enum class PropagateResult : uint8_t { fixpoint, conflict, halt };

    Solver();
    ~Solver();
    Solver(const Solver&) = delete;
    Solver& operator=(const Solver&) = delete;

    //! Binds the solver to the shared context and clones the constraints.
    void attach(SharedContext& ctx, uint32_t id, const SolverConfig& cfg);

    //! Registers p; execution order is ascending priority, stable within one.
    void registerPostPropagator(std::unique_ptr<PostPropagator> p);

    void setModelHandler(ModelHandler* h) { modelHandler_ = h; }
    void setModelContinue(ModelContinue m) { modelContinue_ = m; }

    // ------------------------------------------------------------------
    // search

    //! Assigns the guiding path up to the root level.
    StartResult startPath(const GuidingPath& g);
    //! Runs the search loop until the subspace is exhausted or a message stops it.
    PathResult searchPath();
    //! Gives up the current guiding path: everything above level 0 is undone.
    void clearPath();

    //! One propagation fixpoint: implication graph, long nogoods, post propagators.
    PropagateResult propagateFixpoint();

    // ------------------------------------------------------------------
    // state access (post propagators, tests)

    [[nodiscard]] Assignment&       assignment() { return assign_; }
    [[nodiscard]] const Assignment& assignment() const { return assign_; }
    [[nodiscard]] SharedContext&    shared() const { return *ctx_; }
    [[nodiscard]] uint32_t          id() const { return id_; }
    [[nodiscard]] const SolverConfig& config() const { return config_; }
    [[nodiscard]] SolverStats&      stats() { return stats_; }
    [[nodiscard]] const SolverStats& stats() const { return stats_; }

    [[nodiscard]] bool hasConflict() const { return conflictValid_; }
    [[nodiscard]] const LitVec& conflictLits() const { return conflictLits_; }

    //! Assigns l at the current decision level; false iff ~l already holds.
    bool force(Literal l, Antecedent reason);
    //! Reports a violated nogood (all literals true under the assignment).
    void setConflict(LitVec lits, Nogood* source = nullptr);

    //! Backjumps and re-queues unassigned variables for the heuristic.
    void backjumpTo(uint32_t level);

    //! True if there is an unsplit decision above the backtrack level.
    [[nodiscard]] bool splittable() const {
        return pathActive_ && assign_.decisionLevel() > assign_.backtrackLevel();
    }
    //! Splits off the complement of the lowest unsplit decision.
    /*!
     * Returns the guiding path for the other half; this solver's root level
     * moves past the kept decision.
     */
    GuidingPath split();
    //! The current guiding path: assumptions plus flipped decisions up to the
    //! backtrack level (what split() would pin).
    [[nodiscard]] GuidingPath currentPath() const;

    //! Records a learned nogood from the unfounded-set checker or imports.
    /*!
     * Routes by size (implication graph for binary/ternary unless privateCopy),
     * registers watches for long nogoods, and exports per policy. Returns the
     * antecedent to use for literals forced by the nogood.
     */
    Antecedent recordNogood(std::span<const Literal> lits, uint8_t flags, NogoodType exportType, uint32_t lbd,
                            bool privateCopy = false, Nogood** out = nullptr);

    //! Integrates a shared record into the local database (imports only).
    Nogood* integrateRecord(SharedRecord& rec, uint8_t extraFlags);

    //! Per-variable heuristic activities (import relevance filter).
    [[nodiscard]] const std::vector<double>& activities() const { return activity_; }
    //! Median of all variable activities.
    [[nodiscard]] double medianActivity() const;

    //! Notifies the import queue; evicts the oldest entry when full.
    void pushImport(Nogood* ng);

    //! Checks the total assignment against every problem constraint.
    [[nodiscard]] bool verifyModel();

    //! Number of learned nogoods currently in the database.
    [[nodiscard]] size_t numLearnt() const { return learnt_.size(); }
    [[nodiscard]] const std::vector<Nogood*>& learntNogoods() const { return learnt_; }

    //! Deletes a fraction of the worst unlocked learned nogoods; returns the count.
    uint32_t reduceDB();

    //! After an exhausted path: true if the exhaustion holds independent of
    //! the guiding path (level-0 conflict; the whole problem is refuted).
    [[nodiscard]] bool exhaustedGlobally() const { return lastExhaustGlobal_; }

private:
    friend struct SolverTestAccess;

    struct ConflictInfo {
        LitVec   learned; //!< asserting literal last
        uint32_t assertLevel = 0;
        uint32_t lbd = 0;
    };

    enum class ConflictOutcome : uint8_t { resolved, exhausted };

    bool unitPropagate();
    bool propagateGraph(Literal p);
    bool propagateLong(Literal p);

    ConflictOutcome resolveConflict(NogoodType hint = NogoodType::conflict);
    void            analyze(ConflictInfo& out);
    bool            chronoBacktrack();
    void            bumpVar(Var v);
    void            decayActivities();
    void            decide();
    PathResult      handleModel(bool& keepGoing);
    bool            excludeModel();
    void            restart();

    void attachWatches(Nogood* ng);
    void detachWatches(Nogood* ng);
    [[nodiscard]] bool locked(const Nogood* ng) const;
    void destroyNogood(Nogood* ng);

    SharedContext* ctx_ = nullptr;
    uint32_t       id_ = 0;
    SolverConfig   config_;
    SolverStats    stats_;

    Assignment assign_;
    uint32_t   qGraph_ = 0;
    uint32_t   qLong_ = 0;

    std::vector<std::vector<Nogood*>> watches_;
    std::vector<Nogood*>              problem_;
    std::vector<Nogood*>              learnt_;
    std::vector<Nogood*>              importQueue_;
    size_t                            importHead_ = 0;

    // heuristic
    std::vector<double> activity_;
    VarHeap             heap_;
    double              varInc_ = 1.0;
    std::mt19937        rng_;

    // conflict state
    LitVec  conflictLits_;
    Nogood* conflictSource_ = nullptr;
    bool    conflictValid_ = false;
    // analysis scratch
    std::vector<uint8_t>  seen_;
    std::vector<Var>      toClear_;
    std::vector<uint32_t> levelStamp_;
    uint32_t              stampEpoch_ = 0;
    LitVec                reasonScratch_;

    RestartSchedule restartSched_;
    uint64_t        dbCapacity_ = 0;
    bool            restartPending_ = false;
    bool            lastExhaustGlobal_ = false;

    std::vector<std::unique_ptr<PostPropagator>> postProps_;
    ModelHandler*                                modelHandler_ = nullptr;
    ModelContinue                                modelContinue_ = ModelContinue::stop;
    bool                                         pathActive_ = false;
};

} // namespace parasol
