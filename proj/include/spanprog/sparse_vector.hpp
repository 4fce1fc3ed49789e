#pragma once

#include "spanprog/rational.hpp"

#include <map>
#include <stdexcept>

namespace spanprog {

// Sparse vector over the rationals. Only nonzero entries are stored; the
// entry map is ordered by basis index so iteration order is deterministic.
class SparseVector {
public:
    SparseVector() : dim_(0) {}
    explicit SparseVector(int dim) : dim_(dim) {
        if (dim < 0) throw std::invalid_argument("SparseVector: negative dimension");
    }

    static SparseVector basis(int dim, int index) {
        SparseVector v(dim);
        v.set(index, 1);
        return v;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return entries_.empty(); }
    const std::map<int, Rational>& entries() const { return entries_; }

    Rational at(int index) const {
        auto it = entries_.find(index);
        return it == entries_.end() ? Rational(0) : it->second;
    }

    void set(int index, Rational value) {
        if (index < 0 || index >= dim_)
            throw std::out_of_range("SparseVector: index out of range");
        if (value == 0)
            entries_.erase(index);
        else
            entries_[index] = std::move(value);
    }

    // this += c * other
    void axpy(const Rational& c, const SparseVector& other) {
        if (other.dim_ != dim_) throw std::invalid_argument("SparseVector: dimension mismatch");
        if (c == 0) return;
        for (const auto& [i, x] : other.entries_) {
            auto it = entries_.find(i);
            if (it == entries_.end()) {
                entries_.emplace(i, c * x);
            } else {
                it->second += c * x;
                if (it->second == 0) entries_.erase(it);
            }
        }
    }

    void scale(const Rational& c) {
        if (c == 0) {
            entries_.clear();
            return;
        }
        for (auto& [i, x] : entries_) x *= c;
    }

    Rational dot(const SparseVector& other) const {
        if (other.dim_ != dim_) throw std::invalid_argument("SparseVector: dimension mismatch");
        const SparseVector& a = entries_.size() <= other.entries_.size() ? *this : other;
        const SparseVector& b = entries_.size() <= other.entries_.size() ? other : *this;
        Rational acc(0);
        for (const auto& [i, x] : a.entries_) {
            auto it = b.entries_.find(i);
            if (it != b.entries_.end()) acc += x * it->second;
        }
        return acc;
    }

    Rational norm_sq() const {
        Rational acc(0);
        for (const auto& [i, x] : entries_) acc += x * x;
        return acc;
    }

    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    int dim_;
    std::map<int, Rational> entries_;
};

}  // namespace spanprog
