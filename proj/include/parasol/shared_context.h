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

#include <parasol/distributor.h>
#include <parasol/implication_graph.h>
#include <parasol/literal.h>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace parasol {

namespace asp {
class SccGraph;
}

//! Role of a variable in the encoded problem.
enum class VarType : uint8_t {
    plain, //!< CNF variable
    atom,  //!< logic-program atom
    body,  //!< logic-program rule body
    relax, //!< soft-clause relaxation variable
};

//! One literal of a minimize constraint with weight and priority level.
/*!
 * Priority levels are retained for the representation; the solver runs
 * uniform (single-level) optimization, so building code uses level 0.
 */
struct WeightedLit {
    Literal  lit;
    uint64_t weight = 1;
    uint32_t priority = 0;
};

//! Read-only problem data shared by all solver threads.
/*!
 * Built single-threadedly, then frozen with finalize() before further threads
 * attach. Holds the variables with type information, the symbol table, the
 * problem nogoods (unit literals, binary/ternary implication graph, long
 * nogood pool), the SCC-restricted positive dependency graph for non-tight
 * programs, the minimize constraint, and the nogood distributor.
 */
class SharedContext {
public:
    SharedContext();
    ~SharedContext();
    SharedContext(const SharedContext&) = delete;
    SharedContext& operator=(const SharedContext&) = delete;

    // ------------------------------------------------------------------
    // problem construction (main thread, before finalize)

    //! Adds a fresh variable and returns its index.
    Var addVar(VarType type, std::string name = {});
    void setNumInputVars(uint32_t n) { inputVars_ = n; }

    //! Adds a problem nogood; duplicates removed, tautologies dropped.
    /*!
     * Returns false iff the nogood was a tautology. Empty nogoods mark the
     * problem unsatisfiable.
     */
    bool addNogood(LitVec lits);

    void addMinimizeLit(WeightedLit wl) { minimize_.push_back(wl); }

    void setSccGraph(std::unique_ptr<asp::SccGraph> g);

    //! Freezes the problem for the given number of threads.
    void finalize(uint32_t threads);

    // ------------------------------------------------------------------
    // frozen queries
    [[nodiscard]] bool     finalized() const { return finalized_; }
    [[nodiscard]] uint32_t numVars() const { return numVars_; }
    [[nodiscard]] uint32_t numInputVars() const { return inputVars_ != 0 ? inputVars_ : numVars_; }
    [[nodiscard]] uint32_t concurrency() const { return threads_; }
    [[nodiscard]] bool     unsatByConstruction() const { return unsat_; }

    [[nodiscard]] VarType            varType(Var v) const { return varType_[v]; }
    [[nodiscard]] const std::string& varName(Var v) const { return varName_[v]; }

    [[nodiscard]] const LitVec& unitNogoods() const { return units_; }
    [[nodiscard]] uint32_t      numLongNogoods() const { return static_cast<uint32_t>(longs_.size()); }
    [[nodiscard]] std::span<const Literal> longNogood(uint32_t i) const {
        return {longPool_.data() + longs_[i].begin, longs_[i].size};
    }
    [[nodiscard]] uint64_t numProblemNogoods() const {
        return units_.size() + graph_.numStaticBinary() + graph_.numStaticTernary() + longs_.size();
    }

    [[nodiscard]] ImplicationGraph&       graph() { return graph_; }
    [[nodiscard]] const ImplicationGraph& graph() const { return graph_; }

    [[nodiscard]] const asp::SccGraph* sccGraph() const { return scc_.get(); }

    [[nodiscard]] std::span<const WeightedLit> minimizeLits() const { return minimize_; }
    [[nodiscard]] bool                         hasMinimize() const { return !minimize_.empty(); }

    [[nodiscard]] Distributor&       distributor() { return dist_; }
    [[nodiscard]] const Distributor& distributor() const { return dist_; }

private:
    struct Range {
        uint32_t begin, size;
    };

    std::vector<VarType>     varType_{VarType::plain};
    std::vector<std::string> varName_{std::string()};
    LitVec                   units_;
    std::vector<Literal>     longPool_;
    std::vector<Range>       longs_;
    std::vector<WeightedLit> minimize_;
    ImplicationGraph         graph_;
    std::unique_ptr<asp::SccGraph> scc_;
    Distributor              dist_;
    uint32_t                 numVars_ = 0;
    uint32_t                 inputVars_ = 0;
    uint32_t                 threads_ = 1;
    bool                     unsat_ = false;
    bool                     finalized_ = false;
};

} // namespace parasol
