#ifndef LFMRA_ANALYSIS_HPP
#define LFMRA_ANALYSIS_HPP

#include <string>
#include <vector>

#include "lfmra/mra.hpp"

namespace lfmra {

/// Finite quotient K_{-Nw}/K_M: points are digit vectors over GF(p^s) for
/// indices -Nw..M-1 (lowest index first), flat-indexed base p^s with the
/// lowest index least significant. Cell measure is p^{-sM}.
struct QuotientGrid {
    const FieldParams* f = nullptr;
    int Nw = 0;
    int M = 0;

    long long size() const;
    std::vector<int> point(long long idx) const;
    long long index(const std::vector<int>& digits) const;
    LocalElem local(long long idx) const;
    long long add(long long a, long long b) const;
    long long neg(long long a) const;
    bool operator==(const QuotientGrid& o) const {
        return *f == *o.f && Nw == o.Nw && M == o.M;
    }
};

struct StepFn {
    QuotientGrid grid;
    std::vector<Cyclo> vals; // one Cyclo per grid point

    static StepFn zero(const FieldParams& f, int Nw, int M);
};

struct Verdict {
    std::string criterion;
    bool pass = true;
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;
};

struct Report {
    std::vector<Verdict> criteria;
    int height = 0;
    bool certified = false;
};

// Exact per-criterion checks
Verdict check_spectral_orthonormality(const FieldParams& f, const SpectrumTable& spec);
Verdict check_mask_row_condition(const FieldParams& f, const MaskTable& m);
Verdict check_mask_validity(const FieldParams& f, const MaskTable& m, int M);
Verdict check_elementary_set(const FieldParams& f, const SpectrumTable& spec);
Verdict check_refinement(const FieldParams& f, const SpectrumTable& spec, const MaskTable& m);

/// Time-domain inner product <f, g> = cellMeasure * sum f * conj(g).
Cyclo inner_product(const StepFn& a, const StepFn& b);

/// phi(x + (-h)); the shift depth must fit inside the grid window.
StepFn translate(const StepFn& phi, const ShiftH0& h);

/// Brute-force delta_{h,g} over all shift pairs of depth <= N+1, on a grid
/// widened to Nw = 2N+1. Deeper shifts are disjoint-support zero a priori;
/// the verdict records that truncation.
Verdict check_shift_orthonormality(const StepFn& phi, int N);

/// Same check by translation differences only (O(q^{N+1}) inner products);
/// used for large sweeps.
Verdict check_shift_orthonormality_fast(const StepFn& phi, int N);

/// Forward finite transform of a step function supported in K_{-1}:
/// values on all cosets (K_{-1}^+)^perp zeta with digits at -1..M-1.
std::map<std::vector<int>, Cyclo> forward_transform(const StepFn& phi);

struct FullReportOptions {
    LambdaAssignment lambdas = {};
    bool fast_oracle = false; // difference-based shift check
    // Largest grid the time-domain oracles may allocate. Deeper trees keep
    // the (equivalent) spectral criteria and record that the redundant grid
    // oracle was skipped.
    long long max_cells = 1LL << 22;
    // Largest per-oracle operation count before an individual grid oracle
    // (shift orthonormality, transform round-trip) is skipped with a note.
    long long max_work = 1LL << 26;
};

/// Runs mask construction, both spectrum constructions, every criterion and
/// the synthesis round-trip for one tree.
Report full_report(const FieldParams& f, const RootedTree& t,
                   const FullReportOptions& opt = {});

} // namespace lfmra

#endif
