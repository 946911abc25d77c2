#include <qmf/partitions.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qmf
{

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const
{
    if (parts_.empty()) {
        return {};
    }
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_) {
        for (int j = 0; j < part; ++j) {
            ++conj[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(conj));
}

int Partition::durfee_size() const noexcept
{
    int c = 0;
    while (static_cast<std::size_t>(c) < parts_.size() && parts_[static_cast<std::size_t>(c)] > c) {
        ++c;
    }
    return c;
}

// ---------------------------------------------------------------------------

PartitionRange::PartitionRange(int d) : d_(d)
{
    if (d < 0) {
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    }
}

PartitionRange::iterator::iterator(int d) : done_(false)
{
    current_.size_ = d;
    if (d > 0) {
        current_.parts_.push_back(d);
    }
}

PartitionRange::iterator &PartitionRange::iterator::operator++()
{
    auto &parts = current_.parts_;
    // Rightmost part larger than 1.
    std::size_t pos = parts.size();
    while (pos > 0 && parts[pos - 1] == 1) {
        --pos;
    }
    if (pos == 0) {
        done_ = true;
        current_ = Partition();
        return *this;
    }
    const int ones = static_cast<int>(parts.size() - pos);
    const int value = --parts[pos - 1];
    parts.resize(pos);
    // Redistribute the freed cell and the trailing ones greedily.
    int remainder = ones + 1;
    while (remainder > 0) {
        const int next = std::min(value, remainder);
        parts.push_back(next);
        remainder -= next;
    }
    return *this;
}

PartitionRange enumerate_partitions(int d)
{
    return PartitionRange(d);
}

// ---------------------------------------------------------------------------

void FrobeniusCoords::validate() const
{
    if (arms_x2.size() != legs_x2.size()) {
        throw std::invalid_argument("Frobenius coordinates need |A| = |B|");
    }
    for (const auto *seq : {&arms_x2, &legs_x2}) {
        for (std::size_t i = 0; i < seq->size(); ++i) {
            const int v = (*seq)[i];
            if (v <= 0 || v % 2 == 0) {
                throw std::invalid_argument("Frobenius coordinates must be positive half-integers");
            }
            if (i > 0 && v >= (*seq)[i - 1]) {
                throw std::invalid_argument("Frobenius coordinates must be strictly decreasing");
            }
        }
    }
}

int FrobeniusCoords::combined_sum() const
{
    const int twice = std::accumulate(arms_x2.begin(), arms_x2.end(), 0) +
                      std::accumulate(legs_x2.begin(), legs_x2.end(), 0);
    return twice / 2;
}

FrobeniusCoords frobenius_coords(const Partition &p)
{
    const Partition conj = p.conjugate();
    const int c = p.durfee_size();
    FrobeniusCoords f;
    f.arms_x2.reserve(static_cast<std::size_t>(c));
    f.legs_x2.reserve(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) {
        // 1-based row i+1: l_{i+1} - (i+1) + 1/2, doubled.
        f.arms_x2.push_back(2 * (p.parts()[static_cast<std::size_t>(i)] - i) - 1);
        f.legs_x2.push_back(2 * (conj.parts()[static_cast<std::size_t>(i)] - i) - 1);
    }
    return f;
}

Partition from_frobenius(const FrobeniusCoords &f)
{
    f.validate();
    const auto c = f.arms_x2.size();
    // Rows 1..c come from the arms; column lengths 1..c from the legs.
    std::vector<int> rows(c);
    std::vector<int> cols(c);
    for (std::size_t i = 0; i < c; ++i) {
        rows[i] = (f.arms_x2[i] + 1) / 2 + static_cast<int>(i);
        cols[i] = (f.legs_x2[i] + 1) / 2 + static_cast<int>(i);
    }
    // Rows below the Durfee square: row r > c has as many cells as there
    // are columns j <= c of length >= r.
    const int longest_col = c == 0 ? 0 : cols.front();
    for (int r = static_cast<int>(c) + 1; r <= longest_col; ++r) {
        const auto len = std::count_if(cols.begin(), cols.end(), [r](int col) { return col >= r; });
        rows.push_back(static_cast<int>(len));
    }
    Partition p(std::move(rows));
    if (frobenius_coords(p) != f) {
        throw std::invalid_argument("Frobenius coordinates do not describe a partition");
    }
    return p;
}

Integer lambda_weight(const FrobeniusCoords &f)
{
    // With a = arms_x2 / 2, b = legs_x2 / 2: lambda = (sum a^2 - sum b^2) / 2
    // = (sum arms_x2^2 - sum legs_x2^2) / 8.
    Integer twice_sq_diff = 0;
    for (int a : f.arms_x2) {
        twice_sq_diff += Integer(a) * a;
    }
    for (int b : f.legs_x2) {
        twice_sq_diff -= Integer(b) * b;
    }
    if (!mpz_divisible_ui_p(twice_sq_diff.get_mpz_t(), 8)) {
        // Odd squares are 1 mod 8 and |A| = |B|, so this cannot happen.
        throw std::logic_error("lambda weight is not an integer");
    }
    return twice_sq_diff / 8;
}

Integer lambda_weight(const Partition &p)
{
    return lambda_weight(frobenius_coords(p));
}

Integer power_sum(int d, unsigned k)
{
    Integer sum = 0;
    for (const Partition &p : enumerate_partitions(d)) {
        Integer term;
        const Integer lambda = lambda_weight(p);
        mpz_pow_ui(term.get_mpz_t(), lambda.get_mpz_t(), k);
        sum += term;
    }
    return sum;
}

// ---------------------------------------------------------------------------

namespace
{

struct SweepState
{
    int max_d;
    std::vector<std::vector<std::uint64_t>> *histograms;
};

// Visit the partition built so far (size `size`, `rows` rows, content sum
// `lambda`) and extend it by one more row of length <= max_part.
void sweep(const SweepState &st, int size, int rows, int max_part, std::int64_t lambda)
{
    (*st.histograms)[static_cast<std::size_t>(size)][static_cast<std::size_t>(lambda + LambdaDistribution::lambda_bound(size))] += 1;
    const int row = rows + 1;
    const int limit = std::min(max_part, st.max_d - size);
    for (int m = 1; m <= limit; ++m) {
        // Contents of row `row`: (1 - row) + (2 - row) + ... + (m - row).
        const std::int64_t row_content = static_cast<std::int64_t>(m) * (m + 1) / 2 - static_cast<std::int64_t>(m) * row;
        sweep(st, size + m, row, m, lambda + row_content);
    }
}

} // namespace

LambdaDistribution::LambdaDistribution(int max_d) : max_d_(max_d)
{
    if (max_d < 0) {
        throw std::invalid_argument("LambdaDistribution: negative degree");
    }
    if (max_d > max_supported_degree) {
        throw std::length_error("LambdaDistribution: degree " + std::to_string(max_d) + " exceeds the supported maximum " +
                                std::to_string(max_supported_degree));
    }
    histograms_.resize(static_cast<std::size_t>(max_d) + 1);
    for (int d = 0; d <= max_d; ++d) {
        histograms_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(2 * lambda_bound(d) + 1), 0);
    }
    sweep(SweepState{max_d, &histograms_}, 0, 0, max_d, 0);
}

void LambdaDistribution::check_degree(int d) const
{
    if (d < 0 || d > max_d_) {
        throw std::out_of_range("degree " + std::to_string(d) + " outside the computed range 0.." + std::to_string(max_d_));
    }
}

std::uint64_t LambdaDistribution::count(int d, std::int64_t lambda) const
{
    check_degree(d);
    const auto bound = lambda_bound(d);
    if (lambda < -bound || lambda > bound) {
        return 0;
    }
    return histograms_[static_cast<std::size_t>(d)][static_cast<std::size_t>(lambda + bound)];
}

std::uint64_t LambdaDistribution::partition_count(int d) const
{
    check_degree(d);
    const auto &h = histograms_[static_cast<std::size_t>(d)];
    return std::accumulate(h.begin(), h.end(), std::uint64_t{0});
}

Integer LambdaDistribution::power_sum(int d, unsigned k) const
{
    check_degree(d);
    const auto bound = lambda_bound(d);
    const auto &h = histograms_[static_cast<std::size_t>(d)];
    Integer sum = 0;
    Integer term;
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
        if (h[idx] == 0) {
            continue;
        }
        const Integer lambda(static_cast<long>(static_cast<std::int64_t>(idx) - bound));
        mpz_pow_ui(term.get_mpz_t(), lambda.get_mpz_t(), k);
        term *= static_cast<unsigned long>(h[idx]);
        sum += term;
    }
    return sum;
}

std::vector<std::pair<std::int64_t, std::uint64_t>> LambdaDistribution::support(int d) const
{
    check_degree(d);
    const auto bound = lambda_bound(d);
    const auto &h = histograms_[static_cast<std::size_t>(d)];
    std::vector<std::pair<std::int64_t, std::uint64_t>> out;
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
        if (h[idx] != 0) {
            out.emplace_back(static_cast<std::int64_t>(idx) - bound, h[idx]);
        }
    }
    return out;
}

} // namespace qmf
