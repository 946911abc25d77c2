#ifndef QMF_PARTITIONS_HPP
#define QMF_PARTITIONS_HPP

#include <qmf/numeric.hpp>

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

namespace qmf
{

// Integer partition with weakly decreasing, strictly positive parts.
class Partition
{
public:
    Partition() = default;
    // Throws std::invalid_argument unless parts are positive and weakly
    // decreasing.
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }

    Partition conjugate() const;
    // Side of the largest square fitting in the Young diagram.
    int durfee_size() const noexcept;

    friend bool operator==(const Partition &, const Partition &) = default;

private:
    friend class PartitionRange;

    std::vector<int> parts_;
    int size_ = 0;
};

// Stream of the partitions of d in decreasing lexicographic order:
// (d), (d-1, 1), (d-2, 2), (d-2, 1, 1), ..., (1, ..., 1).
class PartitionRange
{
public:
    class iterator
    {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition *;
        using reference = const Partition &;

        iterator() = default;

        reference operator*() const noexcept { return current_; }
        pointer operator->() const noexcept { return &current_; }
        iterator &operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator &a, const iterator &b) noexcept { return a.done_ == b.done_; }

    private:
        friend class PartitionRange;
        explicit iterator(int d);

        Partition current_;
        bool done_ = true;
    };

    explicit PartitionRange(int d);

    iterator begin() const { return iterator(d_); }
    iterator end() const { return iterator(); }

private:
    int d_;
};

// Throws std::invalid_argument for d < 0.
PartitionRange enumerate_partitions(int d);

// Frobenius coordinates of a partition along its Durfee diagonal.
// arms_x2[i] = 2*(l_i - i) - 1 and legs_x2[i] = 2*(l'_i - i) - 1 for
// i = 1..c: the arm and leg coordinates, doubled so they are odd integers.
// Both sequences are strictly decreasing, have length c, and
// (sum arms_x2 + sum legs_x2) / 2 equals the size of the partition.
struct FrobeniusCoords
{
    std::vector<int> arms_x2;
    std::vector<int> legs_x2;

    // Throws std::invalid_argument if the sets do not describe a partition.
    void validate() const;
    // Combined sum of A and B, i.e. the size of the partition.
    int combined_sum() const;

    friend bool operator==(const FrobeniusCoords &, const FrobeniusCoords &) = default;
};

FrobeniusCoords frobenius_coords(const Partition &p);
Partition from_frobenius(const FrobeniusCoords &f);

// lambda = (sum_{r in A} r^2 - sum_{s in B} s^2) / 2, always an integer.
Integer lambda_weight(const Partition &p);
Integer lambda_weight(const FrobeniusCoords &f);

// S_k(d) = sum over partitions l of d of lambda(l)^k, by enumerating the
// partitions and computing lambda from Frobenius coordinates.
Integer power_sum(int d, unsigned k);

// Distribution of lambda over the partitions of each d = 0..max_d, built by a
// single depth-first sweep over all partitions of size <= max_d. One sweep
// serves every power sum S_k(d).
//
// The sweep computes lambda as the sum of cell contents (column minus row)
// of the Young diagram, which equals the Frobenius form.
class LambdaDistribution
{
public:
    // Largest max_d accepted; beyond it the partition count makes the sweep
    // impractical.
    static constexpr int max_supported_degree = 100;

    // Throws std::invalid_argument for negative max_d and std::length_error
    // above max_supported_degree.
    explicit LambdaDistribution(int max_d);

    int max_degree() const noexcept { return max_d_; }

    // Number of partitions of d with the given lambda.
    std::uint64_t count(int d, std::int64_t lambda) const;
    // p(d)
    std::uint64_t partition_count(int d) const;
    Integer power_sum(int d, unsigned k) const;
    // (lambda, count) pairs with nonzero count, increasing lambda.
    std::vector<std::pair<std::int64_t, std::uint64_t>> support(int d) const;

    // |lambda| <= d(d-1)/2 for partitions of d.
    static std::int64_t lambda_bound(int d) noexcept
    {
        return static_cast<std::int64_t>(d) * (d - 1) / 2;
    }

private:
    void check_degree(int d) const;

    int max_d_;
    // histograms_[d][lambda + lambda_bound(d)]
    std::vector<std::vector<std::uint64_t>> histograms_;
};

} // namespace qmf

#endif
