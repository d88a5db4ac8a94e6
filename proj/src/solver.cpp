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
#include <parasol/solver.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace parasol {

/////////////////////////////////////////////////////////////////////////////////////////
// Antecedent
/////////////////////////////////////////////////////////////////////////////////////////
void Antecedent::reason(const Solver& s, Literal p, LitVec& out) const {
    switch (kind()) {
    case kind_binary: out.push_back(firstLiteral()); break;
    case kind_ternary:
        out.push_back(firstLiteral());
        out.push_back(secondLiteral());
        break;
    case kind_pointer: asReasoner()->reason(s, p, out); break;
    default: assert(false && "literal has no resolvable reason"); break;
    }
}

/////////////////////////////////////////////////////////////////////////////////////////
// RestartPolicy
/////////////////////////////////////////////////////////////////////////////////////////
uint64_t RestartPolicy::threshold(uint32_t i) const {
    switch (kind) {
    case Kind::none: return UINT64_MAX;
    case Kind::fixed: return base;
    case Kind::geometric: {
        double t = static_cast<double>(base);
        for (uint32_t k = 0; k != i; ++k) {
            t *= factor;
        }
        return t < 1e18 ? static_cast<uint64_t>(t) : UINT64_MAX;
    }
    }
    return UINT64_MAX;
}

/////////////////////////////////////////////////////////////////////////////////////////
// VarHeap
/////////////////////////////////////////////////////////////////////////////////////////
void VarHeap::init(uint32_t numVars, const std::vector<double>& act) {
    act_ = &act;
    heap_.clear();
    pos_.assign(numVars + 1, UINT32_MAX);
    for (Var v = 1; v <= numVars; ++v) {
        insert(v);
    }
}

void VarHeap::insert(Var v) {
    if (contains(v)) {
        return;
    }
    pos_[v] = static_cast<uint32_t>(heap_.size());
    heap_.push_back(v);
    siftUp(pos_[v]);
}

Var VarHeap::pop() {
    assert(!heap_.empty());
    const Var top = heap_[0];
    pos_[top] = UINT32_MAX;
    if (heap_.size() > 1) {
        heap_[0] = heap_.back();
        pos_[heap_[0]] = 0;
        heap_.pop_back();
        siftDown(0);
    }
    else {
        heap_.pop_back();
    }
    return top;
}

void VarHeap::update(Var v) {
    if (contains(v)) {
        siftUp(pos_[v]);
    }
}

void VarHeap::siftUp(uint32_t i) {
    const Var v = heap_[i];
    while (i > 0) {
        const uint32_t parent = (i - 1) / 2;
        if (!before(v, heap_[parent])) {
            break;
        }
        heap_[i] = heap_[parent];
        pos_[heap_[i]] = i;
        i = parent;
    }
    heap_[i] = v;
    pos_[v] = i;
}

void VarHeap::siftDown(uint32_t i) {
    const Var      v = heap_[i];
    const uint32_t n = static_cast<uint32_t>(heap_.size());
    for (;;) {
        uint32_t child = 2 * i + 1;
        if (child >= n) {
            break;
        }
        if (child + 1 < n && before(heap_[child + 1], heap_[child])) {
            ++child;
        }
        if (!before(heap_[child], v)) {
            break;
        }
        heap_[i] = heap_[child];
        pos_[heap_[i]] = i;
        i = child;
    }
    heap_[i] = v;
    pos_[v] = i;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Solver: setup
/////////////////////////////////////////////////////////////////////////////////////////
Solver::Solver() = default;

Solver::~Solver() {
    std::atomic<uint64_t>* counter = ctx_ ? &ctx_->distributor().reclaimCounter() : nullptr;
    for (Nogood* ng : problem_) {
        ng->destroy(counter);
    }
    for (Nogood* ng : learnt_) {
        ng->destroy(counter);
    }
}

void Solver::attach(SharedContext& ctx, uint32_t id, const SolverConfig& cfg) {
    assert(ctx.finalized());
    ctx_ = &ctx;
    id_ = id;
    config_ = cfg;
    const uint32_t nv = ctx.numVars();

    assign_.resize(nv);
    watches_.assign(2 * (nv + 1), {});
    seen_.assign(nv + 1, 0);
    levelStamp_.assign(nv + 2, 0);
    stampEpoch_ = 0;
    qGraph_ = qLong_ = 0;

    rng_.seed(cfg.seed);
    activity_.assign(nv + 1, 0.0);
    if (cfg.randomizeInit) {
        std::uniform_real_distribution<double> dist(0.0, 1e-6);
        for (Var v = 1; v <= nv; ++v) {
            activity_[v] = dist(rng_);
        }
    }
    varInc_ = 1.0;
    heap_.init(nv, activity_);

    restartSched_.reset(cfg.restart);
    dbCapacity_ = std::max<uint64_t>(cfg.dbCapacityMin, ctx.numProblemNogoods() / 3);

    // clone the long problem nogoods; short ones live in the implication graph
    problem_.reserve(ctx.numLongNogoods());
    for (uint32_t i = 0; i != ctx.numLongNogoods(); ++i) {
        Nogood* ng = Nogood::create(ctx.longNogood(i), 0);
        attachWatches(ng);
        problem_.push_back(ng);
    }
    // unit nogoods force their complements at level 0
    for (const Literal l : ctx.unitNogoods()) {
        if (!force(~l, Antecedent::external())) {
            setConflict({});
            break;
        }
    }
    if (ctx.unsatByConstruction()) {
        setConflict({});
    }
}

void Solver::registerPostPropagator(std::unique_ptr<PostPropagator> p) {
    auto it = postProps_.begin();
    while (it != postProps_.end() && (*it)->priority() <= p->priority()) {
        ++it;
    }
    postProps_.insert(it, std::move(p));
}

/////////////////////////////////////////////////////////////////////////////////////////
// Solver: propagation
/////////////////////////////////////////////////////////////////////////////////////////
bool Solver::force(Literal l, Antecedent reason) {
    const auto res = assign_.assign(l, reason, assign_.decisionLevel());
    if (res == Assignment::AssignResult::conflict) {
        return false;
    }
    if (res == Assignment::AssignResult::assigned) {
        ++stats_.propagations;
    }
    return true;
}

void Solver::setConflict(LitVec lits, Nogood* source) {
    conflictLits_ = std::move(lits);
    conflictSource_ = source;
    conflictValid_ = true;
}

bool Solver::propagateGraph(Literal p) {
    const ImplicationGraph& g = ctx_->graph();
    for (const Literal f : g.bin(p)) {
        if (!force(f, Antecedent::binary(p))) {
            setConflict({p, ~f});
            return false;
        }
    }
    for (const auto& e : g.tern(p)) {
        if (assign_.isTrue(e.first)) {
            if (!force(~e.second, Antecedent::ternary(p, e.first))) {
                setConflict({p, e.first, e.second});
                return false;
            }
        }
        else if (assign_.isTrue(e.second)) {
            if (!force(~e.first, Antecedent::ternary(p, e.second))) {
                setConflict({p, e.first, e.second});
                return false;
            }
        }
    }
    bool ok = true;
    g.forLearnt(p, [&](const ImplicationGraph::LearntEntry& e) {
        if (e.binary()) {
            if (!force(e.first, Antecedent::binary(p))) {
                setConflict({p, ~e.first});
                ok = false;
            }
        }
        else if (assign_.isTrue(e.first)) {
            if (!force(~e.second, Antecedent::ternary(p, e.first))) {
                setConflict({p, e.first, e.second});
                ok = false;
            }
        }
        else if (assign_.isTrue(e.second)) {
            if (!force(~e.first, Antecedent::ternary(p, e.second))) {
                setConflict({p, e.first, e.second});
                ok = false;
            }
        }
        return ok;
    });
    return ok;
}

bool Solver::propagateLong(Literal p) {
    auto& wl = watches_[p.id()];
    size_t keep = 0;
    bool   ok = true;
    size_t i = 0;
    for (; i != wl.size(); ++i) {
        Nogood*    ng = wl[i];
        const auto r = ng->updateWatch(p, assign_);
        switch (r.state) {
        case Nogood::WatchState::satisfied: wl[keep++] = ng; break;
        case Nogood::WatchState::replaced: watches_[r.moveTo.id()].push_back(ng); break;
        case Nogood::WatchState::unit:
            wl[keep++] = ng;
            force(~r.other, Antecedent::constraint(ng));
            break;
        case Nogood::WatchState::violated: {
            wl[keep++] = ng;
            LitVec lits(ng->literals().begin(), ng->literals().end());
            setConflict(std::move(lits), ng);
            ok = false;
            break;
        }
        }
        if (!ok) {
            for (++i; i != wl.size(); ++i) {
                wl[keep++] = wl[i];
            }
            break;
        }
    }
    wl.resize(keep);
    return ok;
}

bool Solver::unitPropagate() {
    while (qGraph_ != assign_.trailSize() || qLong_ != assign_.trailSize()) {
        while (qGraph_ != assign_.trailSize()) {
            if (!propagateGraph(assign_.trail()[qGraph_++])) {
                return false;
            }
        }
        if (qLong_ != assign_.trailSize()) {
            if (!propagateLong(assign_.trail()[qLong_++])) {
                return false;
            }
        }
    }
    return true;
}

Solver::PropagateResult Solver::propagateFixpoint() {
    if (conflictValid_) {
        return PropagateResult::conflict;
    }
    for (;;) {
        if (!unitPropagate()) {
            return PropagateResult::conflict;
        }
        bool again = false;
        for (auto& p : postProps_) {
            const auto r = p->propagateFixpoint(*this);
            if (r == PostPropagator::Result::conflict) {
                assert(conflictValid_);
                return PropagateResult::conflict;
            }
            if (r == PostPropagator::Result::halt) {
                return PropagateResult::halt;
            }
            if (r == PostPropagator::Result::changed) {
                again = true;
                break;
            }
        }
        if (!again) {
            return PropagateResult::fixpoint;
        }
    }
}

/////////////////////////////////////////////////////////////////////////////////////////
// Solver: conflict analysis
/////////////////////////////////////////////////////////////////////////////////////////
void Solver::bumpVar(Var v) {
    activity_[v] += varInc_;
    if (activity_[v] > 1e100) {
        for (Var u = 1; u < activity_.size(); ++u) {
            activity_[u] *= 1e-100;
        }
        varInc_ *= 1e-100;
    }
    heap_.update(v);
}

void Solver::decayActivities() { varInc_ /= config_.activityDecay; }

void Solver::analyze(ConflictInfo& out) {
    const uint32_t cur = assign_.decisionLevel();
    LitVec&        learned = out.learned;
    learned.clear();
    uint32_t pathCount = 0;

    auto process = [&](Literal q) {
        const Var v = q.var();
        if (seen_[v] || assign_.level(v) == 0) {
            return;
        }
        seen_[v] = 1;
        toClear_.push_back(v);
        bumpVar(v);
        if (assign_.level(v) == cur) {
            ++pathCount;
        }
        else {
            learned.push_back(q);
        }
    };

    for (const Literal q : conflictLits_) {
        process(q);
    }
    assert(pathCount > 0 && "conflict has no literal at the conflict level");

    uint32_t index = assign_.trailSize();
    Literal  p;
    for (;;) {
        do {
            assert(index > 0);
            p = assign_.trail()[--index];
        } while (!seen_[p.var()]);
        if (--pathCount == 0) {
            break;
        }
        const Antecedent r = assign_.reason(p.var());
        assert(!r.isNull() && !r.isExternal() && "resolving a decision before the UIP");
        reasonScratch_.clear();
        r.reason(*this, p, reasonScratch_);
        if (r.kind() == Antecedent::kind_pointer) {
            if (auto* ng = const_cast<Nogood*>(dynamic_cast<const Nogood*>(r.asReasoner()))) {
                ng->bumpActivity(1.0f);
                if (ng->hasFlag(Nogood::flag_learnt)) {
                    // re-derivation: update the LBD downward if it improved
                    ++stampEpoch_;
                    uint32_t lbd = 0;
                    for (const Literal l : ng->literals()) {
                        const uint32_t lev = assign_.level(l.var());
                        if (levelStamp_[lev] != stampEpoch_) {
                            levelStamp_[lev] = stampEpoch_;
                            ++lbd;
                        }
                    }
                    if (lbd < ng->lbd()) {
                        ng->setLbd(lbd);
                    }
                }
            }
        }
        for (const Literal q : reasonScratch_) {
            process(q);
        }
    }
    learned.push_back(p); // the UIP; its complement gets asserted

    out.assertLevel = 0;
    ++stampEpoch_;
    uint32_t lbd = 0;
    for (const Literal q : learned) {
        const uint32_t lev = assign_.level(q.var());
        if (levelStamp_[lev] != stampEpoch_) {
            levelStamp_[lev] = stampEpoch_;
            ++lbd;
        }
        if (q != p && lev > out.assertLevel) {
            out.assertLevel = lev;
        }
    }
    out.lbd = lbd;

    for (const Var v : toClear_) {
        seen_[v] = 0;
    }
    toClear_.clear();
}

bool Solver::chronoBacktrack() {
    uint32_t dl = assign_.decisionLevel();
    while (dl > assign_.rootLevel() && assign_.flipped(dl)) {
        backjumpTo(dl - 1);
        --dl;
    }
    if (dl == assign_.rootLevel()) {
        return false;
    }
    const Literal d = assign_.decision(dl);
    backjumpTo(dl - 1);
    assign_.decide(~d, true);
    assign_.setBacktrackLevel(assign_.decisionLevel());
    return true;
}

Solver::ConflictOutcome Solver::resolveConflict(NogoodType hint) {
    assert(conflictValid_);
    conflictValid_ = false;
    ++stats_.conflicts;
    if (restartSched_.onConflict()) {
        restartPending_ = true;
    }
    if (conflictSource_) {
        conflictSource_->bumpActivity(1.0f);
        conflictSource_ = nullptr;
    }
    uint32_t conflictLevel = 0;
    for (const Literal l : conflictLits_) {
        conflictLevel = std::max(conflictLevel, assign_.level(l.var()));
    }
    if (conflictLevel <= assign_.rootLevel()) {
        lastExhaustGlobal_ = conflictLevel == 0;
        return ConflictOutcome::exhausted;
    }
    if (conflictLevel <= assign_.backtrackLevel()) {
        backjumpTo(conflictLevel);
        if (!chronoBacktrack()) {
            lastExhaustGlobal_ = assign_.rootLevel() == 0;
            return ConflictOutcome::exhausted;
        }
        return ConflictOutcome::resolved;
    }
    backjumpTo(conflictLevel);

    ConflictInfo info;
    analyze(info);
    const Literal  uip = info.learned.back();
    const uint32_t target = std::max(info.assertLevel, assign_.backtrackLevel());
    backjumpTo(target);

    uint8_t flags = Nogood::flag_learnt;
    bool    privateCopy = false;
    if (hint == NogoodType::solution) {
        flags |= Nogood::flag_solution | Nogood::flag_protect;
        privateCopy = true;
    }
    const NogoodType exportType = hint == NogoodType::solution ? NogoodType::solution
                                  : info.learned.size() <= 3   ? NogoodType::short_
                                                               : NogoodType::conflict;
    const Antecedent reason = recordNogood(info.learned, flags, exportType, info.lbd, privateCopy);
    const bool       okAssert = force(~uip, reason);
    assert(okAssert && "asserting literal must be assignable after backjumping");
    static_cast<void>(okAssert);
    decayActivities();
    return ConflictOutcome::resolved;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Solver: nogood recording and integration
/////////////////////////////////////////////////////////////////////////////////////////
Antecedent Solver::recordNogood(std::span<const Literal> lits, uint8_t flags, NogoodType exportType, uint32_t lbd,
                                bool privateCopy, Nogood** out) {
    assert(!lits.empty());
    ++stats_.learnt;
    Distributor::ExportOutcome exp;
    if (lits.size() > 1 || exportType == NogoodType::solution) {
        exp = ctx_->distributor().exportNogood(id_, lits, exportType, lbd, lits.size() >= 6);
    }
    if (exp.exported) {
        ++stats_.exported;
    }
    Nogood* ng = nullptr;
    Antecedent ante;
    if (lits.size() >= 2 && lits.size() <= 3 && !privateCopy) {
        ctx_->graph().addLearnt(lits);
        ante = lits.size() == 2 ? Antecedent::binary(lits[0]) : Antecedent::ternary(lits[0], lits[1]);
        assert(exp.kept == nullptr);
    }
    else {
        ng = exp.kept ? Nogood::create(exp.kept, flags) : Nogood::create(lits, flags, lbd);
        if (exp.kept) {
            // creation took its own count; the originator's is no longer needed
            exp.kept->release(&ctx_->distributor().reclaimCounter());
            ng->setLbd(lbd);
        }
        if (lits.size() == 1) {
            ng->setFlag(Nogood::flag_protect);
        }
        else {
            ng->initWatches(assign_);
            attachWatches(ng);
        }
        learnt_.push_back(ng);
        ante = Antecedent::constraint(ng);
    }
    if (out) {
        *out = ng;
    }
    return ante;
}

Nogood* Solver::integrateRecord(SharedRecord& rec, uint8_t extraFlags) {
    const uint8_t flags = Nogood::flag_learnt | Nogood::flag_imported | Nogood::flag_grace | extraFlags;
    Nogood*       ng = rec.size() >= 6 ? Nogood::create(&rec, flags)
                                       : Nogood::create(rec.literals(), flags, rec.lbd());
    if (ng->size() >= 2) {
        ng->initWatches(assign_);
        attachWatches(ng);
    }
    learnt_.push_back(ng);
    ++stats_.integrated;
    pushImport(ng);
    return ng;
}

void Solver::pushImport(Nogood* ng) {
    importQueue_.push_back(ng);
    if (importQueue_.size() - importHead_ > config_.importGrace) {
        Nogood* old = importQueue_[importHead_++];
        old->clearFlag(Nogood::flag_grace);
        ++stats_.importEvicted;
        if (!config_.importTransferAll && !old->hasFlag(Nogood::flag_protect) && !locked(old)) {
            double sum = 0.0;
            for (const Literal l : old->literals()) {
                sum += activity_[l.var()];
            }
            if (sum < medianActivity()) {
                if (old->size() >= 2) {
                    detachWatches(old);
                }
                auto it = std::find(learnt_.begin(), learnt_.end(), old);
                assert(it != learnt_.end());
                learnt_.erase(it);
                destroyNogood(old);
                ++stats_.importDiscarded;
            }
        }
        if (importHead_ > 4096) {
            importQueue_.erase(importQueue_.begin(), importQueue_.begin() + static_cast<ptrdiff_t>(importHead_));
            importHead_ = 0;
        }
    }
}

double Solver::medianActivity() const {
    const uint32_t nv = assign_.numVars();
    if (nv == 0) {
        return 0.0;
    }
    std::vector<double> copy(activity_.begin() + 1, activity_.end());
    auto mid = copy.begin() + copy.size() / 2;
    std::nth_element(copy.begin(), mid, copy.end());
    return *mid;
}

void Solver::attachWatches(Nogood* ng) {
    assert(ng->size() >= 2);
    watches_[ng->watch1().id()].push_back(ng);
    watches_[ng->watch2().id()].push_back(ng);
}

void Solver::detachWatches(Nogood* ng) {
    for (const Literal w : {ng->watch1(), ng->watch2()}) {
        auto& wl = watches_[w.id()];
        auto  it = std::find(wl.begin(), wl.end(), ng);
        if (it != wl.end()) {
            *it = wl.back();
            wl.pop_back();
        }
    }
}

bool Solver::locked(const Nogood* ng) const {
    for (const Literal l : ng->literals()) {
        if (assign_.isFalse(l)) { // ~l on the trail; forced by this nogood?
            const Antecedent r = assign_.reason(l.var());
            if (r.kind() == Antecedent::kind_pointer && r.asReasoner() == ng) {
                return true;
            }
        }
    }
    return false;
}

void Solver::destroyNogood(Nogood* ng) { ng->destroy(&ctx_->distributor().reclaimCounter()); }

uint32_t Solver::reduceDB() {
    if (learnt_.size() <= dbCapacity_) {
        return 0;
    }
    std::vector<Nogood*> cand;
    cand.reserve(learnt_.size());
    for (Nogood* ng : learnt_) {
        if (!ng->hasFlag(Nogood::flag_protect) && !ng->hasFlag(Nogood::flag_grace) && ng->size() >= 2 &&
            !locked(ng)) {
            cand.push_back(ng);
        }
    }
    std::stable_sort(cand.begin(), cand.end(), [](const Nogood* a, const Nogood* b) {
        if (a->lbd() != b->lbd()) {
            return a->lbd() > b->lbd();
        }
        return a->activity() < b->activity();
    });
    const auto n = static_cast<size_t>(static_cast<double>(cand.size()) * config_.dbReduceFraction);
    for (size_t i = 0; i != n; ++i) {
        cand[i]->setFlag(Nogood::flag_delete_mark);
        detachWatches(cand[i]);
    }
    std::erase_if(learnt_, [&](Nogood* ng) {
        if (ng->hasFlag(Nogood::flag_delete_mark)) {
            destroyNogood(ng);
            return true;
        }
        return false;
    });
    dbCapacity_ = static_cast<uint64_t>(static_cast<double>(dbCapacity_) * config_.dbGrowth);
    stats_.deleted += n;
    return static_cast<uint32_t>(n);
}

/////////////////////////////////////////////////////////////////////////////////////////
// Solver: search
/////////////////////////////////////////////////////////////////////////////////////////
void Solver::backjumpTo(uint32_t level) {
    if (level >= assign_.decisionLevel()) {
        return;
    }
    const uint32_t from = assign_.levelStart(level + 1);
    const auto&    trail = assign_.trail();
    for (uint32_t i = from; i != trail.size(); ++i) {
        heap_.insert(trail[i].var());
    }
    const bool ok = assign_.backjumpTo(level);
    assert(ok);
    static_cast<void>(ok);
    qGraph_ = std::min(qGraph_, assign_.trailSize());
    qLong_ = std::min(qLong_, assign_.trailSize());
}

void Solver::decide() {
    Var v;
    do {
        assert(!heap_.empty());
        v = heap_.pop();
    } while (!assign_.isFree(v));
    assign_.decide(Literal(v, !config_.signPositive));
    ++stats_.decisions;
}

void Solver::restart() {
    restartPending_ = false;
    backjumpTo(assign_.backtrackLevel());
    restartSched_.next();
    ++stats_.restarts;
    stats_.addRestartPoint(stats_.conflicts);
}

void Solver::clearPath() {
    pathActive_ = false;
    assign_.resetRoot();
    backjumpTo(0);
    conflictValid_ = false;
    conflictSource_ = nullptr;
    restartPending_ = false;
}

Solver::StartResult Solver::startPath(const GuidingPath& g) {
    assert(assign_.decisionLevel() == 0 && assign_.rootLevel() == 0);
    auto r = propagateFixpoint();
    if (r == PropagateResult::conflict) {
        conflictValid_ = false;
        lastExhaustGlobal_ = true;
        return StartResult::unsat;
    }
    if (r == PropagateResult::halt) {
        return StartResult::halt;
    }
    for (const Literal l : g.lits) {
        if (assign_.isTrue(l)) {
            continue;
        }
        if (assign_.isFalse(l)) {
            assign_.pushRootLevel();
            lastExhaustGlobal_ = false;
            return StartResult::unsat;
        }
        assign_.assume(l);
        r = propagateFixpoint();
        if (r == PropagateResult::conflict) {
            conflictValid_ = false;
            assign_.pushRootLevel();
            lastExhaustGlobal_ = false;
            return StartResult::unsat;
        }
        if (r == PropagateResult::halt) {
            return StartResult::halt;
        }
    }
    assign_.pushRootLevel();
    pathActive_ = true;
    return StartResult::ok;
}

GuidingPath Solver::currentPath() const {
    GuidingPath gp;
    for (uint32_t lev = 1; lev <= assign_.backtrackLevel(); ++lev) {
        gp.lits.push_back(assign_.decision(lev));
    }
    return gp;
}

GuidingPath Solver::split() {
    assert(splittable());
    const uint32_t s = assign_.backtrackLevel() + 1;
    GuidingPath    gp;
    for (uint32_t lev = 1; lev < s; ++lev) {
        gp.lits.push_back(assign_.decision(lev));
    }
    gp.lits.push_back(~assign_.decision(s));
    assign_.pushRootLevel(s);
    ++stats_.splitsServed;
    return gp;
}

bool Solver::excludeModel() {
    LitVec sol;
    for (uint32_t lev = assign_.rootLevel() + 1; lev <= assign_.decisionLevel(); ++lev) {
        sol.push_back(assign_.decision(lev));
    }
    if (sol.empty()) {
        // the (sub)space has exactly this one model
        lastExhaustGlobal_ = assign_.rootLevel() == 0;
        return false;
    }
    setConflict(std::move(sol));
    const auto r = resolveConflict(NogoodType::solution);
    assert(r == ConflictOutcome::resolved);
    return r == ConflictOutcome::resolved;
}

Solver::PathResult Solver::searchPath() {
    assert(pathActive_);
    for (;;) {
        const auto pr = propagateFixpoint();
        if (pr == PropagateResult::halt) {
            return PathResult::stopped;
        }
        if (pr == PropagateResult::conflict) {
            if (resolveConflict() == ConflictOutcome::exhausted) {
                return PathResult::exhausted;
            }
            if (restartPending_) {
                restart();
            }
            if (learnt_.size() > dbCapacity_) {
                reduceDB();
            }
            continue;
        }
        if (assign_.isTotal()) {
            if (!verifyModel()) {
                throw std::logic_error("total assignment violates a constraint");
            }
            ++stats_.modelsFound;
            const auto d = modelHandler_ ? modelHandler_->onModel(*this) : ModelHandler::Directive::stop_search;
            if (d == ModelHandler::Directive::stop_search) {
                return PathResult::stopped;
            }
            switch (modelContinue_) {
            case ModelContinue::stop: return PathResult::stopped;
            case ModelContinue::backtrack:
                if (!chronoBacktrack()) {
                    lastExhaustGlobal_ = assign_.rootLevel() == 0;
                    return PathResult::exhausted;
                }
                break;
            case ModelContinue::exclusion:
                if (!excludeModel()) {
                    return PathResult::exhausted;
                }
                break;
            case ModelContinue::constraint: break; // bound/accumulator conflict follows
            }
            continue;
        }
        decide();
    }
}

bool Solver::verifyModel() {
    assert(assign_.isTotal());
    for (const Literal l : ctx_->unitNogoods()) {
        if (assign_.isTrue(l)) {
            return false;
        }
    }
    const ImplicationGraph& g = ctx_->graph();
    for (uint32_t id = 2; id != 2 * (assign_.numVars() + 1); ++id) {
        const Literal l = Literal::fromId(id);
        if (!assign_.isTrue(l)) {
            continue;
        }
        for (const Literal f : g.bin(l)) {
            if (assign_.isFalse(f)) {
                return false;
            }
        }
        for (const auto& e : g.tern(l)) {
            if (assign_.isTrue(e.first) && assign_.isTrue(e.second)) {
                return false;
            }
        }
    }
    for (const Nogood* ng : problem_) {
        bool violated = true;
        for (const Literal l : ng->literals()) {
            if (!assign_.isTrue(l)) {
                violated = false;
                break;
            }
        }
        if (violated) {
            return false;
        }
    }
    for (auto& p : postProps_) {
        if (!p->isModelOk(*this)) {
            return false;
        }
    }
    return true;
}

} // namespace parasol
