#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace algpath {

/// Dense n-by-n matrix over an arbitrary cell type, row-major, indexed
/// 0..n-1. The universal state of every closure algorithm in this library.
template <typename T>
class square_matrix {
public:
    explicit square_matrix(std::size_t n, const T& init = T{})
        : n_(n), cells_(checked_area(n), init) {}

    std::size_t size() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return cells_[i * n_ + j];
    }

    T& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return cells_[i * n_ + j];
    }
    const T& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return cells_[i * n_ + j];
    }

    const std::vector<T>& cells() const noexcept { return cells_; }

    friend bool operator==(const square_matrix& a, const square_matrix& b) {
        return a.n_ == b.n_ && a.cells_ == b.cells_;
    }

private:
    static std::size_t checked_area(std::size_t n) {
        if (n == 0) throw std::invalid_argument("square_matrix: n must be >= 1");
        return n * n;
    }
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= n_ || j >= n_) throw std::out_of_range("square_matrix index");
    }

    std::size_t n_;
    std::vector<T> cells_;
};

}  // namespace algpath
