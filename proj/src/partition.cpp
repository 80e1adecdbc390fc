#include "fgcalc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fgc {

Partition Partition::from_reps(std::vector<unsigned> reps) {
    while (!reps.empty() && reps.back() == 0) reps.pop_back();
    unsigned n = 0, rsum = 0;
    for (unsigned k = 0; k < reps.size(); ++k) {
        n += (k + 1) * reps[k];
        rsum += reps[k];
    }
    return Partition(n, std::move(reps), rsum);
}

Partition Partition::from_parts(const std::vector<unsigned>& parts) {
    unsigned maxp = 0;
    for (unsigned p : parts) {
        if (p == 0) throw std::invalid_argument("Partition: parts must be positive");
        maxp = std::max(maxp, p);
    }
    std::vector<unsigned> reps(maxp, 0);
    for (unsigned p : parts) ++reps[p - 1];
    return from_reps(std::move(reps));
}

unsigned Partition::rep(unsigned k) const {
    if (k == 0) throw std::invalid_argument("Partition: parts are 1-based");
    return k <= reps_.size() ? reps_[k - 1] : 0;
}

std::vector<unsigned> Partition::parts() const {
    std::vector<unsigned> out;
    out.reserve(rsum_);
    for (unsigned k = static_cast<unsigned>(reps_.size()); k >= 1; --k)
        for (unsigned i = 0; i < reps_[k - 1]; ++i) out.push_back(k);
    return out;
}

Int Partition::multinomial() const {
    Int r = factorial(rsum_);
    for (unsigned rk : reps_)
        if (rk > 1) r /= factorial(rk);
    return r;
}

std::string Partition::str() const {
    if (reps_.empty()) return "()";
    std::string s;
    for (unsigned k = 1; k <= reps_.size(); ++k) {
        if (reps_[k - 1] == 0) continue;
        if (!s.empty()) s += ' ';
        s += std::to_string(k) + "^" + std::to_string(reps_[k - 1]);
    }
    return s;
}

namespace {

// Descending part lists, largest first part first.
void emit(unsigned remaining, unsigned max_part, std::vector<unsigned>& stack,
          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::from_parts(stack));
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        emit(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> stack;
    emit(n, n == 0 ? 1 : n, stack, out);
    return out;
}

} // namespace fgc
