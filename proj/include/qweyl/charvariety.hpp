#pragma once

#include <string>
#include <vector>

#include "qweyl/algebra.hpp"

namespace qweyl {

/// Label (a,b) of the trace function tau_{a,b} of the torus curve L^a M^b.
struct TorusTrace {
    long a = 0;
    long b = 0;
};

/// Classical trace function as an element of the invariant group algebra:
/// the q=1 image of tau_lift.
CommPoly tau_poly(const RootData& rd, long a, long b);

/**
 * Goldman bracket of two torus trace functions, from the closed formulas
 *   {tau_{a,b}, tau_{c,d}} = det * (tau_{a+c,b+d} - tau_{a,b} tau_{c,d}/n)   (sl(n))
 *   {tau_{a,b}, tau_{c,d}} = det * (tau_{a+c,b+d} - tau_{a-c,b-d})           (sp/so)
 * with det = ad - bc, the signed intersection number.
 */
CommPoly goldman_bracket(const RootData& rd, const TorusTrace& t1, const TorusTrace& t2);

struct BracketMismatch {
    long a, b, c, d;
    std::string lhs; // quantized bracket
    std::string rhs; // Goldman bracket
};

struct BracketReport {
    std::string algebra;
    int range = 0;
    long checked = 0;
    bool pass = true;
    std::vector<BracketMismatch> failures; // capped
};

/**
 * Sweeps all |a|,|b|,|c|,|d| <= range and compares the first-order bracket
 * of the tau lifts against the Goldman formula, exactly. `workers` bounds
 * the number of threads; results are aggregated in canonical order.
 */
BracketReport compare_brackets(const RootData& rd, int range, int workers = 1);

} // namespace qweyl
