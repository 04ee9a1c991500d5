#pragma once

#include <rnaname/error.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace rnaname {

// Dense row-major n x n matrix.
template <typename T>
class SquareMatrix {
public:
    using value_type = T;

    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

    // Builds from row-major values; throws unless values.size() is a perfect square.
    static SquareMatrix from_rows(std::size_t n, std::vector<T> values)
    {
        if (values.size() != n * n)
            throw Error(ErrorKind::bad_matrix, "matrix data does not match n x n");
        SquareMatrix m;
        m.n_ = n;
        m.data_ = std::move(values);
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

    std::span<T> row(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }
    std::span<const T> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }

    bool is_symmetric() const noexcept
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!((*this)(i, j) == (*this)(j, i)))
                    return false;
        return true;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

} // namespace rnaname
