#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace indmorse {

using BigInt = boost::multiprecision::cpp_int;

// Per-dimension counts (index d = dimension d >= 0) with trailing zeros
// trimmed, so (1, 0) and (1) compare equal.
class CountVector {
public:
    CountVector() = default;
    CountVector(std::initializer_list<long long> init) {
        for (long long x : init) counts_.emplace_back(x);
        trim();
    }
    explicit CountVector(std::vector<BigInt> counts) : counts_(std::move(counts)) { trim(); }

    // Zero beyond the stored length.
    BigInt operator[](std::size_t d) const { return d < counts_.size() ? counts_[d] : BigInt(0); }

    void add(std::size_t d, const BigInt& amount) {
        if (d >= counts_.size()) counts_.resize(d + 1);
        counts_[d] += amount;
        trim();
    }

    std::size_t size() const noexcept { return counts_.size(); }
    bool empty() const noexcept { return counts_.empty(); }
    const std::vector<BigInt>& values() const noexcept { return counts_; }

    BigInt total() const {
        BigInt s = 0;
        for (const auto& c : counts_) s += c;
        return s;
    }

    // Alternating sum  sum_d (-1)^d c_d.
    BigInt euler() const {
        BigInt s = 0;
        for (std::size_t d = 0; d < counts_.size(); ++d) s += (d % 2 == 0) ? counts_[d] : BigInt(-counts_[d]);
        return s;
    }

    friend bool operator==(const CountVector& a, const CountVector& b) { return a.counts_ == b.counts_; }
    friend bool operator!=(const CountVector& a, const CountVector& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const CountVector& v) {
        os << '(';
        for (std::size_t i = 0; i < v.counts_.size(); ++i) os << (i ? "," : "") << v.counts_[i];
        return os << ')';
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < counts_.size(); ++i) s += (i ? "," : "") + counts_[i].str();
        return s + ")";
    }

private:
    void trim() {
        while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
    }

    std::vector<BigInt> counts_;
};

// Critical f-vector f_d^V of a discrete vector field.
using CriticalFVector = CountVector;

}  // namespace indmorse
