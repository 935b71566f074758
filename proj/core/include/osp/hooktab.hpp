#pragma once

#include "osp/roots.hpp"
#include "osp/signature.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace osp {

// Weakly decreasing positive parts; trailing zeros are dropped.
struct HookPartition {
    std::vector<int> parts;

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    int part(int k) const { return k < length() ? parts[static_cast<std::size_t>(k)] : 0; }
    std::string to_string() const;
    friend bool operator==(const HookPartition& a, const HookPartition& b) { return a.parts == b.parts; }
    friend bool operator<(const HookPartition& a, const HookPartition& b) { return a.parts < b.parts; }
};

std::vector<int> conjugate(const std::vector<int>& parts);
bool is_partition(const std::vector<int>& parts);
// lambda_{m+1} <= n
bool is_hook(const std::vector<int>& parts, int m, int n);
// validated (m|n)-hook partition; throws std::invalid_argument otherwise
HookPartition hook_partition(std::vector<int> parts, int m, int n);
// all (m|n)-hook partitions of size at most max_size
std::vector<HookPartition> hook_partitions(int m, int n, int max_size);

// Lambda_lambda = sum_{a<=m} lambda_a delta_a + sum_j mu_j delta_{m+j}, mu the conjugate of the tail
Weight hw_weight(int m, int n, const HookPartition& lambda);
// inverse of hw_weight, nullopt if the weight is not of that form
std::optional<HookPartition> partition_of_weight(int m, int n, const Weight& w);

// Letters 1..m+n; rows top to bottom.
struct HookTableau {
    HookPartition shape;
    std::vector<std::vector<int>> rows;

    std::string to_string() const;  // rows separated by '/'
    friend bool operator==(const HookTableau& a, const HookTableau& b) { return a.rows == b.rows; }
    friend bool operator<(const HookTableau& a, const HookTableau& b) { return a.rows < b.rows; }
};

// rows weakly increase, columns weakly increase, letters <= m strictly increase down columns,
// letters > m strictly increase along rows
bool is_semistandard(const HookTableau& t, int m, int n);
HookTableau tableau_from_rows(const std::vector<std::vector<int>>& rows, int m, int n);
// H_lambda: row a filled with a for a <= m, then the j-th remaining column with m + j
HookTableau genuine_hw(int m, int n, const HookPartition& lambda);
// brute-force enumeration of SST_{m|n}(lambda), sorted
std::vector<HookTableau> enumerate_sst(int m, int n, const HookPartition& lambda);

using LetterWord = std::vector<int>;
// columns right to left, each column top to bottom
LetterWord column_word(const HookTableau& t);
// (row, column) of each position of the column word
std::vector<std::pair<int, int>> column_word_positions(const HookTableau& t);

// The gl(m|n) crystal on words and tableaux, i in 1..m+n-1.
class HookCrystal {
public:
    HookCrystal(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int N() const { return m_ + n_; }
    Regime regime(int i) const;

    std::optional<LetterWord> f(int i, const LetterWord& w) const;
    std::optional<LetterWord> e(int i, const LetterWord& w) const;
    std::optional<HookTableau> f(int i, const HookTableau& t) const;
    std::optional<HookTableau> e(int i, const HookTableau& t) const;
    // (eps_i, phi_i) as string lengths
    std::pair<int, int> eps_phi(int i, const HookTableau& t) const;
    std::pair<int, int> eps_phi(int i, const LetterWord& w) const;
    // the same by iterating e~_i and f~_i
    std::pair<int, int> string_lengths(int i, const LetterWord& w) const;
    Weight weight(const HookTableau& t) const;
    Weight weight(const LetterWord& w) const;

private:
    int m_;
    int n_;
    void check_index(int i) const;
    // position in the word acted on, or -1
    int act_position(int i, const LetterWord& w, bool raise) const;
};

}  // namespace osp
