#include "osp/signature.hpp"

namespace osp {

SignaturePick signature_rule(Regime regime, const std::vector<FactorStat>& factors) {
    SignaturePick out;
    const int k = static_cast<int>(factors.size());
    if (k == 0) return out;
    if (regime == Regime::odd) {
        // ((b_1 (x) b_2) (x) b_3) ...: descend while the left part pairs nontrivially
        int prefix = 0;
        int j = 0;
        for (int t = 0; t < k; ++t) {
            if (prefix == 0) j = t;
            prefix += factors[static_cast<std::size_t>(t)].pairing;
        }
        out.f_factor = j;
        out.e_factor = j;
        return out;
    }
    std::vector<int> open;       // uncancelled first-kind symbols, with their factors
    std::vector<int> unmatched;  // uncancelled second-kind symbols
    for (int t = 0; t < k; ++t) {
        const FactorStat& s = factors[static_cast<std::size_t>(t)];
        // lower: '-' then '+', a '-' cancels an open '+'; upper: '+' then '-', a '+' cancels an open '-'
        const int first = regime == Regime::lower ? s.eps : s.phi;
        const int second = regime == Regime::lower ? s.phi : s.eps;
        for (int x = 0; x < first; ++x) {
            if (!open.empty()) open.pop_back();
            else unmatched.push_back(t);
        }
        for (int x = 0; x < second; ++x) open.push_back(t);
    }
    if (regime == Regime::lower) {
        // unmatched are the surviving '-', open the surviving '+'
        out.eps = static_cast<int>(unmatched.size());
        out.phi = static_cast<int>(open.size());
        if (!open.empty()) out.f_factor = open.front();
        if (!unmatched.empty()) out.e_factor = unmatched.back();
    } else {
        // unmatched are the surviving '+', open the surviving '-'
        out.phi = static_cast<int>(unmatched.size());
        out.eps = static_cast<int>(open.size());
        if (!unmatched.empty()) out.f_factor = unmatched.back();
        if (!open.empty()) out.e_factor = open.front();
    }
    return out;
}

}  // namespace osp
