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

#include <cstdint>
#include <string>
#include <vector>

namespace parasol {

//! Restart schedule: none, fixed interval, or geometric base*factor^i.
struct RestartPolicy {
    enum class Kind : uint8_t { none, fixed, geometric };

    Kind     kind = Kind::geometric;
    uint64_t base = 500;
    double   factor = 1.5;

    static RestartPolicy None() { return {Kind::none, 0, 0.0}; }
    static RestartPolicy Fixed(uint64_t n) { return {Kind::fixed, n, 1.0}; }
    static RestartPolicy Geometric(uint64_t base, double factor) { return {Kind::geometric, base, factor}; }

    //! Threshold for the i-th interval (conflicts since the previous restart).
    [[nodiscard]] uint64_t threshold(uint32_t i) const;

    bool operator==(const RestartPolicy&) const = default;
};

//! Counts conflicts against a RestartPolicy.
class RestartSchedule {
public:
    RestartSchedule() { reset({}); }

    void reset(RestartPolicy p) {
        policy_ = p;
        idx_ = 0;
        sinceLast_ = 0;
    }
    //! Counts one conflict; returns true when the current threshold is hit.
    bool onConflict() {
        if (policy_.kind == RestartPolicy::Kind::none) {
            return false;
        }
        return ++sinceLast_ >= policy_.threshold(idx_);
    }
    //! Advances to the next interval (call when restarting).
    void next() {
        sinceLast_ = 0;
        ++idx_;
    }
    [[nodiscard]] uint32_t index() const { return idx_; }
    [[nodiscard]] uint64_t sinceLast() const { return sinceLast_; }

private:
    RestartPolicy policy_;
    uint32_t      idx_ = 0;
    uint64_t      sinceLast_ = 0;
};

//! Per-thread search strategy: heuristic, restart, and deletion parameters.
struct SolverConfig {
    double        activityDecay = 0.95;  //!< per-conflict decay of variable activities
    bool          signPositive = false;  //!< preferred polarity of decisions
    bool          randomizeInit = false; //!< seed initial activities with small random values
    RestartPolicy restart = RestartPolicy::Geometric(500, 1.5);
    uint32_t      seed = 1;

    // learned-database deletion
    uint32_t dbCapacityMin = 1000; //!< capacity floor: max(this, #problem nogoods / 3)
    double   dbGrowth = 1.1;       //!< capacity growth per reduction
    double   dbReduceFraction = 0.5;

    // nogood integration
    uint32_t importGrace = 32;         //!< import-queue capacity (grace period)
    bool     importTransferAll = true; //!< evicted imports move to the database (vs. activity filter)
    bool     importOpenFilter = false; //!< filter open imports by heuristic activity

    bool operator==(const SolverConfig&) const = default;
};

//! Parallel search strategy per the four evaluated modes.
enum class Strategy : uint8_t {
    port,       //!< portfolio of competing threads on the full space
    gp,         //!< search space splitting via guiding paths, uniform configuration
    port_gp,    //!< splitting with a portfolio of configurations
    port_gp_gr, //!< splitting portfolio with global restarts
};

[[nodiscard]] constexpr bool usesSplitting(Strategy s) { return s != Strategy::port; }
[[nodiscard]] constexpr bool usesPortfolio(Strategy s) { return s != Strategy::gp; }
[[nodiscard]] constexpr bool usesGlobalRestarts(Strategy s) { return s == Strategy::port_gp_gr; }

//! Reasoning mode of a run.
enum class EnumMode : uint8_t {
    enumerate, //!< report up to modelLimit models (0 = all)
    brave,     //!< union of all models' true atoms
    cautious,  //!< intersection of all models' true atoms
    optimize,  //!< branch-and-bound minimization
};

//! A complete run configuration; the CLI and tests build these.
struct RunConfig {
    uint32_t     threads = 1; //!< 1..64
    Strategy     strategy = Strategy::port;
    ExportPolicy exchange = ExportPolicy::none();
    EnumMode     enumMode = EnumMode::enumerate;
    uint64_t     modelLimit = 1; //!< 0 = all (enumerate mode only)
    uint32_t     seed = 1;
    double       timeLimit = 0.0; //!< seconds; 0 = none

    // global restarts (port_gp_gr)
    uint32_t      globalRestartLimit = 10;
    RestartPolicy globalRestartPolicy = RestartPolicy::Geometric(500, 1.5);

    //! Explicit per-thread configurations; when empty, buildPortfolio applies.
    std::vector<SolverConfig> portfolio;

    [[nodiscard]] bool valid(std::string* why = nullptr) const;
};

//! Deterministic per-thread configuration list for a run.
/*!
 * Thread 0 always runs the default configuration. Portfolio strategies vary
 * decay, sign, restart policy, and initial-activity randomization; plain gp
 * uses the uniform default configuration. Seeds always differ per thread.
 */
std::vector<SolverConfig> buildPortfolio(const RunConfig& cfg);

//! Parses a portfolio file: one configuration per line, key=value pairs.
/*!
 * Keys: decay, sign (pos/neg), restart (none | fixed:N | geo:BASE:FACTOR),
 * init (rand/zero). Lines beyond the thread count are ignored; missing lines
 * cycle. Throws std::runtime_error with a line number on malformed input.
 */
std::vector<SolverConfig> parsePortfolioFile(const std::string& text, uint32_t threads, uint32_t seed);

} // namespace parasol
