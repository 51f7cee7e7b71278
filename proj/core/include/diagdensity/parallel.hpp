#pragma once

#include <cstddef>
#include <functional>

namespace diagdensity {

// Runs fn(i) for i in [0, count) on up to `threads` workers.  Tasks are
// handed out by an atomic counter, so the execution order is unspecified;
// callers must write results into per-index slots and reduce afterwards in a
// fixed order.  That discipline is what makes every pipeline in this project
// bit-identical regardless of the thread count.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

// Kahan compensated accumulator.  Used for all floating-point reductions that
// feed reported numbers, always in a fixed (ascending prime / ascending index)
// order.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x)
    {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }

    double value() const { return sum; }
};

} // namespace diagdensity
