#include "meshlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace meshlab {

namespace {

void check_is_permutation(const std::vector<int>& vals) {
    const int n = static_cast<int>(vals.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : vals) {
        if (v < 1 || v > n)
            raise(Errc::not_a_permutation,
                  "value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(v)])
            raise(Errc::not_a_permutation, "duplicate value " + std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
}

void check_cap(int n, int cap, const char* what) {
    if (n < 0)
        raise(Errc::domain_error, std::string(what) + ": n must be non-negative");
    if (n > cap || n > kHardNCeiling)
        raise(Errc::cap_exceeded, std::string(what) + ": n=" + std::to_string(n) +
                                      " exceeds cap " + std::to_string(std::min(cap, kHardNCeiling)));
}

} // namespace

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
    check_is_permutation(vals_);
}

Permutation Permutation::unchecked(std::vector<int> values) {
    Permutation p;
    p.vals_ = std::move(values);
    return p;
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return unchecked(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> vals;
    const bool has_space = text.find_first_of(" \t\r\n") != std::string_view::npos;
    if (has_space) {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) {
            size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                raise(Errc::parse_error, "malformed token '" + tok + "'");
            }
            if (used != tok.size())
                raise(Errc::parse_error, "malformed token '" + tok + "'");
            vals.push_back(v);
        }
    } else {
        if (text.empty())
            raise(Errc::parse_error, "empty permutation text");
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                raise(Errc::parse_error, std::string("malformed character '") + c + "'");
            vals.push_back(c - '0');
        }
    }
    return Permutation(std::move(vals));
}

std::string format_values(const std::vector<int>& vals) {
    const bool compact =
        vals.size() <= 9 && std::all_of(vals.begin(), vals.end(), [](int v) { return v <= 9; });
    std::string out;
    for (size_t i = 0; i < vals.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += std::to_string(vals[i]);
    }
    return out;
}

std::string Permutation::str() const { return format_values(vals_); }

std::vector<int> rlmax_positions(const std::vector<int>& vals) {
    std::vector<int> out;
    int best = 0;
    for (int i = static_cast<int>(vals.size()) - 1; i >= 0; --i) {
        if (vals[static_cast<size_t>(i)] > best) {
            best = vals[static_cast<size_t>(i)];
            out.push_back(i + 1);
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> right_to_left_maxima(const Permutation& p) { return rlmax_positions(p.values()); }

bool avoids_132(const std::vector<int>& vals) {
    const int n = static_cast<int>(vals.size());
    if (n < 3) return true;
    // pi avoids 132 iff pi = pi_1 n pi_2 with min(pi_1) > max(pi_2) and both
    // parts 132-avoiding; checked iteratively over (lo,hi) index ranges.
    std::vector<std::pair<int, int>> work{{0, n - 1}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        if (hi - lo < 2) continue;
        int arg = lo;
        for (int i = lo + 1; i <= hi; ++i)
            if (vals[static_cast<size_t>(i)] > vals[static_cast<size_t>(arg)]) arg = i;
        if (arg > lo && arg < hi) {
            int lmin = vals[static_cast<size_t>(lo)];
            for (int i = lo; i < arg; ++i)
                lmin = std::min(lmin, vals[static_cast<size_t>(i)]);
            int rmax = vals[static_cast<size_t>(arg + 1)];
            for (int i = arg + 1; i <= hi; ++i)
                rmax = std::max(rmax, vals[static_cast<size_t>(i)]);
            if (lmin < rmax) return false;
        }
        if (arg > lo) work.emplace_back(lo, arg - 1);
        if (arg < hi) work.emplace_back(arg + 1, hi);
    }
    return true;
}

bool avoids_132(const Permutation& p) { return avoids_132(p.values()); }

Permutation apply_symmetry(const Permutation& p, Symmetry kind) {
    const auto& v = p.values();
    const int n = p.size();
    std::vector<int> out(static_cast<size_t>(n));
    switch (kind) {
    case Symmetry::reverse:
        for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = v[static_cast<size_t>(n - 1 - i)];
        break;
    case Symmetry::complement:
        for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = n + 1 - v[static_cast<size_t>(i)];
        break;
    case Symmetry::inverse:
        for (int i = 0; i < n; ++i) out[static_cast<size_t>(v[static_cast<size_t>(i)] - 1)] = i + 1;
        break;
    }
    return Permutation::unchecked(std::move(out));
}

AllPermutations::AllPermutations(int n, const Caps& caps) {
    check_cap(n, caps.max_all_n, "all_permutations");
    vals_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vals_[static_cast<size_t>(i)] = i + 1;
}

AllPermutations::AllPermutations(int n, int first_value, const Caps& caps) : fixed_first_(true) {
    check_cap(n, caps.max_all_n, "all_permutations");
    if (n < 1 || first_value < 1 || first_value > n)
        raise(Errc::domain_error, "first value out of range");
    vals_.reserve(static_cast<size_t>(n));
    vals_.push_back(first_value);
    for (int v = 1; v <= n; ++v)
        if (v != first_value) vals_.push_back(v);
}

bool AllPermutations::next() {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        return true;
    }
    auto begin = vals_.begin() + (fixed_first_ ? 1 : 0);
    if (!std::next_permutation(begin, vals_.end())) {
        done_ = true;
        return false;
    }
    return true;
}

Av132Stream::Av132Stream(int n, const Caps& caps) : n_(n) {
    check_cap(n, caps.max_av132_n, "av132_permutations");
    code_.assign(static_cast<size_t>(n), 0);
    perms_.resize(static_cast<size_t>(n) + 1);
    rlmax_.resize(static_cast<size_t>(n) + 1);
}

Av132Stream::Av132Stream(int n, int first_value, const Caps& caps) : Av132Stream(n, caps) {
    if (n < 1 || first_value < 1 || first_value > n)
        raise(Errc::domain_error, "first value out of range");
    fixed_first_ = first_value;
}

const std::vector<int>& Av132Stream::values() const { return perms_[static_cast<size_t>(n_)]; }

// Slot constraints realizing the fixed-first-value partition: the fixed
// value must be inserted at the front and every larger value must not be.
int Av132Stream::min_slot(int value) const {
    return (fixed_first_ != 0 && value > fixed_first_) ? 1 : 0;
}

int Av132Stream::max_slot(int value) const {
    if (value == fixed_first_) return 0;
    return static_cast<int>(rlmax_[static_cast<size_t>(value) - 1].size());
}

void Av132Stream::place(int value, int slot) {
    code_[static_cast<size_t>(value) - 1] = slot;
    const auto& prev = perms_[static_cast<size_t>(value) - 1];
    const auto& prev_rl = rlmax_[static_cast<size_t>(value) - 1];
    auto& cur = perms_[static_cast<size_t>(value)];
    auto& cur_rl = rlmax_[static_cast<size_t>(value)];
    const int pos = slot == 0 ? 1 : prev_rl[static_cast<size_t>(slot) - 1] + 1; // 1-indexed
    cur.assign(prev.begin(), prev.end());
    cur.insert(cur.begin() + (pos - 1), value);
    cur_rl.clear();
    cur_rl.push_back(pos);
    for (int q : prev_rl)
        if (q >= pos) cur_rl.push_back(q + 1);
}

void Av132Stream::fill_min_from(int value) {
    for (int v = value; v <= n_; ++v) place(v, min_slot(v));
}

bool Av132Stream::next() {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        fill_min_from(1);
        return true;
    }
    for (int v = n_; v >= 1; --v) {
        if (code_[static_cast<size_t>(v) - 1] < max_slot(v)) {
            place(v, code_[static_cast<size_t>(v) - 1] + 1);
            fill_min_from(v + 1);
            return true;
        }
    }
    done_ = true;
    return false;
}

} // namespace meshlab
