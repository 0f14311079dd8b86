#pragma once
// Permutations of [n] in one-line notation (1-based positions and values),
// their elementary symmetries, canonical cycle form, and lexicographic
// enumeration of S_n with prefix partitioning for parallel consumers.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permstat/set_spec.hpp"  // ParseError

namespace permstat {

class EnumerationCapError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Permutation {
public:
    Permutation() = default;  // the unique empty permutation
    // Validates that entries rearrange 1..n.
    explicit Permutation(std::vector<int> entries);
    static Permutation identity(int n);
    // Digits for n <= 9 (e.g. "61437258"), comma-separated otherwise.
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(entries_.size()); }
    int at(int i) const { return entries_[static_cast<size_t>(i) - 1]; }  // 1-based
    const std::vector<int>& entries() const { return entries_; }
    std::string to_string() const;

    Permutation reversed() const;
    Permutation inverse() const;

    auto operator<=>(const Permutation&) const = default;

private:
    struct Trusted {};
    Permutation(Trusted, std::vector<int> entries) : entries_(std::move(entries)) {}
    std::vector<int> entries_;

    friend void enumerate_sn(int, int, const std::function<void(const Permutation&)>&);
};

// Canonical cycle form: each cycle with its largest element last, cycles
// ordered by increasing largest element.
using CycleForm = std::vector<std::vector<int>>;

CycleForm to_cycles(const Permutation& p);
Permutation from_cycles(const CycleForm& cycles);  // validates the partition
std::string cycles_to_string(const CycleForm& cycles);  // "(34)(216)(57)(8)"

// Visits every permutation of [n] exactly once in lexicographic order.
// Refuses n > cap (n! items). The callback argument is only valid during
// the call.
void enumerate_sn(int n, int cap, const std::function<void(const Permutation&)>& fn);

// Lexicographic stream over the arrangements of a fixed element multiset-free
// buffer: `work` must be sorted ascending on entry past position `fixed`;
// positions [0, fixed) are held constant. Visits each arrangement via
// fn(const std::vector<int>&). Substrate for prefix-partitioned enumeration.
void for_each_arrangement(std::vector<int>& work, int fixed,
                          const std::function<void(const std::vector<int>&)>& fn);

}  // namespace permstat
