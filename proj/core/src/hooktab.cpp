#include "osp/hooktab.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace osp {

int HookPartition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string HookPartition::to_string() const {
    if (parts.empty()) return "()";
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "," : "") << parts[k];
    os << ')';
    return os.str();
}

std::vector<int> conjugate(const std::vector<int>& parts) {
    std::vector<int> out;
    if (parts.empty()) return out;
    for (int c = 1; c <= parts.front(); ++c) {
        int h = 0;
        for (int p : parts)
            if (p >= c) ++h;
        out.push_back(h);
    }
    return out;
}

bool is_partition(const std::vector<int>& parts) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] < 0) return false;
        if (k && parts[k] > parts[k - 1]) return false;
    }
    return true;
}

bool is_hook(const std::vector<int>& parts, int m, int n) {
    if (!is_partition(parts)) return false;
    return static_cast<int>(parts.size()) <= m || parts[static_cast<std::size_t>(m)] <= n;
}

HookPartition hook_partition(std::vector<int> parts, int m, int n) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (!is_partition(parts)) throw std::invalid_argument("not a partition");
    if (!is_hook(parts, m, n))
        throw std::invalid_argument("partition violates the hook condition lambda_{m+1} <= n");
    return HookPartition{parts};
}

std::vector<HookPartition> hook_partitions(int m, int n, int max_size) {
    std::vector<HookPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (is_hook(cur, m, n)) out.push_back(HookPartition{cur});
        else return;
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(max_size, max_size);
    std::sort(out.begin(), out.end(), [](const HookPartition& a, const HookPartition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.parts > b.parts;
    });
    return out;
}

Weight hw_weight(int m, int n, const HookPartition& lambda) {
    if (!is_hook(lambda.parts, m, n)) throw std::invalid_argument("partition violates the hook condition");
    Weight w(static_cast<std::size_t>(m + n), 0);
    for (int a = 0; a < m; ++a) w[static_cast<std::size_t>(a)] = lambda.part(a);
    std::vector<int> tail;
    for (int k = m; k < lambda.length(); ++k) tail.push_back(lambda.part(k));
    std::vector<int> mu = conjugate(tail);
    for (std::size_t j = 0; j < mu.size(); ++j) w[static_cast<std::size_t>(m) + j] = mu[j];
    return w;
}

std::optional<HookPartition> partition_of_weight(int m, int n, const Weight& w) {
    if (static_cast<int>(w.size()) != m + n) return std::nullopt;
    std::vector<int> head(w.begin(), w.begin() + m);
    std::vector<int> mu(w.begin() + m, w.end());
    if (!is_partition(head) || !is_partition(mu)) return std::nullopt;
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    std::vector<int> tail = conjugate(mu);
    std::vector<int> parts = head;
    parts.insert(parts.end(), tail.begin(), tail.end());
    if (!is_partition(parts)) return std::nullopt;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    // zero rows inside the head followed by a nonzero tail are rejected by is_partition above
    HookPartition p{parts};
    if (!is_hook(p.parts, m, n) || hw_weight(m, n, p) != w) return std::nullopt;
    return p;
}

std::string HookTableau::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) os << '/';
        for (std::size_t c = 0; c < rows[r].size(); ++c) os << (c ? " " : "") << rows[r][c];
    }
    return os.str();
}

bool is_semistandard(const HookTableau& t, int m, int n) {
    const int N = m + n;
    if (t.rows.size() != t.shape.parts.size()) return false;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (static_cast<int>(t.rows[r].size()) != t.shape.parts[r]) return false;
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            int x = t.rows[r][c];
            if (x < 1 || x > N) return false;
            if (c) {
                int y = t.rows[r][c - 1];
                if (y > x || (y == x && x > m)) return false;
            }
            if (r) {
                int y = t.rows[r - 1][c];
                if (y > x || (y == x && x <= m)) return false;
            }
        }
    }
    return true;
}

HookTableau tableau_from_rows(const std::vector<std::vector<int>>& rows, int m, int n) {
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    HookTableau t{hook_partition(parts, m, n), rows};
    while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
    if (!is_semistandard(t, m, n)) throw std::invalid_argument("not an (m|n)-hook semistandard tableau");
    return t;
}

HookTableau genuine_hw(int m, int n, const HookPartition& lambda) {
    if (!is_hook(lambda.parts, m, n)) throw std::invalid_argument("partition violates the hook condition");
    HookTableau t;
    t.shape = lambda;
    for (int r = 0; r < lambda.length(); ++r) {
        std::vector<int> row(static_cast<std::size_t>(lambda.part(r)));
        for (int c = 0; c < lambda.part(r); ++c) row[static_cast<std::size_t>(c)] = r < m ? r + 1 : m + c + 1;
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<HookTableau> enumerate_sst(int m, int n, const HookPartition& lambda) {
    const int N = m + n;
    std::vector<HookTableau> out;
    HookTableau t;
    t.shape = lambda;
    for (int p : lambda.parts) t.rows.emplace_back(static_cast<std::size_t>(p), 0);
    std::vector<std::pair<int, int>> boxes;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.part(r); ++c) boxes.emplace_back(r, c);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == boxes.size()) {
            out.push_back(t);
            return;
        }
        auto [r, c] = boxes[k];
        for (int x = 1; x <= N; ++x) {
            if (c) {
                int y = t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)];
                if (y > x || (y == x && x > m)) continue;
            }
            if (r) {
                int y = t.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
                if (y > x || (y == x && x <= m)) continue;
            }
            t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> column_word_positions(const HookTableau& t) {
    std::vector<std::pair<int, int>> pos;
    const int width = t.shape.part(0);
    for (int c = width - 1; c >= 0; --c)
        for (int r = 0; r < t.shape.length() && t.shape.part(r) > c; ++r) pos.emplace_back(r, c);
    return pos;
}

LetterWord column_word(const HookTableau& t) {
    LetterWord w;
    for (auto [r, c] : column_word_positions(t))
        w.push_back(t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    return w;
}

HookCrystal::HookCrystal(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0 || m + n < 2) throw std::invalid_argument("HookCrystal needs m + n >= 2");
}

Regime HookCrystal::regime(int i) const {
    if (i < m_) return Regime::lower;
    if (i > m_) return Regime::upper;
    return Regime::odd;
}

void HookCrystal::check_index(int i) const {
    if (i < 1 || i >= N()) throw std::invalid_argument("crystal index out of range 1..m+n-1");
}

int HookCrystal::act_position(int i, const LetterWord& w, bool raise) const {
    check_index(i);
    std::vector<FactorStat> st;
    st.reserve(w.size());
    for (int x : w) {
        FactorStat s;
        s.eps = x == i + 1 ? 1 : 0;
        s.phi = x == i ? 1 : 0;
        s.pairing = (x == i || x == i + 1) ? 1 : 0;
        st.push_back(s);
    }
    SignaturePick p = signature_rule(regime(i), st);
    int k = raise ? p.e_factor : p.f_factor;
    if (k < 0) return -1;
    int x = w[static_cast<std::size_t>(k)];
    if (raise ? x != i + 1 : x != i) return -1;
    return k;
}

std::optional<LetterWord> HookCrystal::f(int i, const LetterWord& w) const {
    int k = act_position(i, w, false);
    if (k < 0) return std::nullopt;
    LetterWord out = w;
    out[static_cast<std::size_t>(k)] = i + 1;
    return out;
}

std::optional<LetterWord> HookCrystal::e(int i, const LetterWord& w) const {
    int k = act_position(i, w, true);
    if (k < 0) return std::nullopt;
    LetterWord out = w;
    out[static_cast<std::size_t>(k)] = i;
    return out;
}

std::optional<HookTableau> HookCrystal::f(int i, const HookTableau& t) const {
    LetterWord w = column_word(t);
    int k = act_position(i, w, false);
    if (k < 0) return std::nullopt;
    auto [r, c] = column_word_positions(t)[static_cast<std::size_t>(k)];
    HookTableau out = t;
    out.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = i + 1;
    return out;
}

std::optional<HookTableau> HookCrystal::e(int i, const HookTableau& t) const {
    LetterWord w = column_word(t);
    int k = act_position(i, w, true);
    if (k < 0) return std::nullopt;
    auto [r, c] = column_word_positions(t)[static_cast<std::size_t>(k)];
    HookTableau out = t;
    out.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = i;
    return out;
}

std::pair<int, int> HookCrystal::eps_phi(int i, const LetterWord& w) const {
    check_index(i);
    if (regime(i) != Regime::odd) {
        std::vector<FactorStat> st;
        st.reserve(w.size());
        for (int x : w) st.push_back(FactorStat{x == i + 1 ? 1 : 0, x == i ? 1 : 0, 0});
        SignaturePick p = signature_rule(regime(i), st);
        return {p.eps, p.phi};
    }
    return string_lengths(i, w);
}

std::pair<int, int> HookCrystal::string_lengths(int i, const LetterWord& w) const {
    int eps = 0, phi = 0;
    for (std::optional<LetterWord> x = e(i, w); x; x = e(i, *x)) ++eps;
    for (std::optional<LetterWord> x = f(i, w); x; x = f(i, *x)) ++phi;
    return {eps, phi};
}

std::pair<int, int> HookCrystal::eps_phi(int i, const HookTableau& t) const { return eps_phi(i, column_word(t)); }

Weight HookCrystal::weight(const LetterWord& w) const {
    Weight out(static_cast<std::size_t>(N()), 0);
    for (int x : w) out[static_cast<std::size_t>(x - 1)]++;
    return out;
}

Weight HookCrystal::weight(const HookTableau& t) const { return weight(column_word(t)); }

}  // namespace osp
