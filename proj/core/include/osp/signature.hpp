#pragma once

#include <vector>

namespace osp {

// Direction regime of a Levi index i: below the odd node, above it, or the odd node itself.
enum class Regime { lower, upper, odd };

// Per-factor data for the tensor product rule.
struct FactorStat {
    int eps = 0;
    int phi = 0;
    int pairing = 0;  // (wt(b)|alpha_m), read only in the odd regime
};

struct SignaturePick {
    int f_factor = -1;  // factor acted on by f~, -1 if f~ is zero
    int e_factor = -1;  // factor acted on by e~, -1 if e~ is zero
    int eps = 0;        // reduced counts; meaningful for lower/upper only
    int phi = 0;
};

// Signature rule on b_1 (x) ... (x) b_k.
// lower: factors read as (-^eps +^phi), (+,-) pairs cancel, f~ at the leftmost +, e~ at the rightmost -.
// upper: factors read as (+^phi -^eps), (-,+) pairs cancel, f~ at the rightmost +, e~ at the leftmost -.
// odd: the two-factor rule applied left-associatively; with nonnegative pairings this is the
// first factor with nonzero pairing, or the last factor if all pairings vanish.
// In the odd regime e_factor == f_factor and the caller decides whether the local move exists.
SignaturePick signature_rule(Regime regime, const std::vector<FactorStat>& factors);

}  // namespace osp
