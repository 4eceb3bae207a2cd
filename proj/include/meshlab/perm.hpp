#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "meshlab/error.hpp"

namespace meshlab {

// Positions and values are 1-indexed everywhere in the public surface; the
// backing vector is 0-indexed as usual.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);

    // Accepts whitespace-separated integers, or a contiguous digit string
    // (one digit per value, so only valid for n <= 9).
    static Permutation parse(std::string_view text);
    static Permutation identity(int n);
    // Caller guarantees the values already form a permutation of 1..n.
    static Permutation unchecked(std::vector<int> values);

    int size() const { return static_cast<int>(vals_.size()); }
    bool empty() const { return vals_.empty(); }
    int at(int pos) const { return vals_[static_cast<size_t>(pos) - 1]; }
    const std::vector<int>& values() const { return vals_; }

    // Values with >= 2 digits always use the whitespace-separated form.
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> vals_;
};

std::string format_values(const std::vector<int>& vals);

// Positions i such that vals[i] exceeds every later value, ascending.
std::vector<int> rlmax_positions(const std::vector<int>& vals);
std::vector<int> right_to_left_maxima(const Permutation& p);

// O(n log n) via the pi_1 n pi_2 decomposition (sparse min/max tables).
bool avoids_132(const std::vector<int>& vals);
bool avoids_132(const Permutation& p);

enum class Symmetry { reverse, complement, inverse };
Permutation apply_symmetry(const Permutation& p, Symmetry kind);

// Generation caps are configuration, not constants. The hard ceiling keeps
// occurrence counters inside uint64 and exists regardless of configuration.
struct Caps {
    int max_all_n = 12;
    int max_av132_n = 16;
};
inline constexpr int kHardNCeiling = 20;

// Lexicographic stream over S_n, optionally restricted to a fixed first
// value (the partitioning contract for parallel consumers).
//
//   AllPermutations s(n, caps);
//   while (s.next()) use(s.values());
class AllPermutations {
public:
    AllPermutations(int n, const Caps& caps);
    AllPermutations(int n, int first_value, const Caps& caps);
    bool next();
    const std::vector<int>& values() const { return vals_; }

private:
    std::vector<int> vals_;
    bool fresh_ = true;
    bool done_ = false;
    bool fixed_first_ = false;
};

// Stream over the 132-avoiding n-permutations, each exactly once. Walks the
// insertion-slot tree of the class (insert 1..n, each new maximum goes at
// the front or right after a right-to-left maximum), so memory is O(n^2)
// and advancing is O(n) amortized. Optionally restricted to a fixed first
// value for partitioned generation.
class Av132Stream {
public:
    Av132Stream(int n, const Caps& caps);
    Av132Stream(int n, int first_value, const Caps& caps);
    bool next();
    const std::vector<int>& values() const;

private:
    int n_ = 0;
    int fixed_first_ = 0; // 0 = unconstrained
    bool fresh_ = true;
    bool done_ = false;
    std::vector<int> code_;                  // code_[i] = slot chosen for value i+1
    std::vector<std::vector<int>> perms_;    // perms_[i] = sequence after inserting 1..i
    std::vector<std::vector<int>> rlmax_;    // rlmax_[i] = its right-to-left maxima positions

    int min_slot(int value) const;
    int max_slot(int value) const;
    void place(int value, int slot);
    void fill_min_from(int value);
};

} // namespace meshlab
