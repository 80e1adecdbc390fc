#pragma once

#include "fgcalc/rational.hpp"

#include <string>
#include <vector>

namespace fgc {

// An integer partition pi = 1^{r_1} 2^{r_2} ... of n, stored by its
// repetition vector (r_1, r_2, ...) with trailing zeros trimmed.
// Invariant: sum k * r_k = n. r(pi) = sum r_k is cached.
class Partition {
public:
    // reps[k-1] is the number of parts equal to k.
    static Partition from_reps(std::vector<unsigned> reps);
    // parts in any order, e.g. {3, 1, 1}.
    static Partition from_parts(const std::vector<unsigned>& parts);

    unsigned weight() const { return n_; }
    // r_k, 1-based; zero beyond the stored vector.
    unsigned rep(unsigned k) const;
    const std::vector<unsigned>& reps() const { return reps_; }
    // r(pi) = total number of parts.
    unsigned part_count() const { return rsum_; }
    unsigned max_part() const { return static_cast<unsigned>(reps_.size()); }
    // Parts in descending order, e.g. {3, 1, 1}.
    std::vector<unsigned> parts() const;

    // Multinomial weight r(pi)! / prod_k r_k!, always a positive integer.
    Int multinomial() const;

    // "1^2 2^1", empty partition prints "()".
    std::string str() const;

    bool operator==(const Partition& o) const { return reps_ == o.reps_; }

private:
    Partition(unsigned n, std::vector<unsigned> reps, unsigned rsum)
        : n_(n), reps_(std::move(reps)), rsum_(rsum) {}

    unsigned n_ = 0;
    std::vector<unsigned> reps_;
    unsigned rsum_ = 0;
};

// All partitions of n, each exactly once, in descending lexicographic order
// of part lists: [n], [n-1,1], ..., [1^n]. n = 0 yields the empty partition.
std::vector<Partition> enumerate_partitions(unsigned n);

} // namespace fgc
