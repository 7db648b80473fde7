#pragma once

// Partition of a family of width-k blocks of consecutive integers into k
// parts with one element per block and consecutive part sums.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace antimagic {

struct BlockFamily {
    std::vector<long long> starts;  // a_1..a_n; block i is [a_i, a_i+k-1]
    long long k = 1;                // block width
};

struct BlockPartition {
    // parts[j][i] is the element drawn from block i; parts are indexed so
    // that part sums ascend, making sum(parts[j]) = a_1 + j + (sum of all
    // elements outside block 1)/k for j = 0..k-1.
    std::vector<std::vector<long long>> parts;
};

inline long long part_sum(const std::vector<long long>& part) {
    return std::accumulate(part.begin(), part.end(), 0LL);
}

inline BlockPartition le_par_partition(const BlockFamily& f) {
    const long long n = static_cast<long long>(f.starts.size());
    const long long k = f.k;
    if (n < 1) throw std::invalid_argument("le_par_partition: need at least one block");
    if (k < 1) throw std::invalid_argument("le_par_partition: need width k >= 1");
    if (n % 2 == 0 && k % 2 == 0)
        throw std::invalid_argument("le_par_partition: n and k must not both be even");

    // Row i of the matrix holds block i: odd rows ascending, even rows
    // descending, so consecutive row pairs have constant column sums.
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(k));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < k; ++j)
            rows[i][j] = (i % 2 == 0) ? f.starts[i] + j : f.starts[i] + k - 1 - j;

    // Even n (k odd): replace row 2 by the rotation starting at a_2+(k+1)/2
    // so rows 1-2 give consecutive column sums.
    if (n % 2 == 0) {
        for (long long j = 0; j < k; ++j)
            rows[1][j] = f.starts[1] + (j + (k + 1) / 2) % k;
    }

    BlockPartition out;
    out.parts.assign(k, std::vector<long long>(n));
    for (long long j = 0; j < k; ++j)
        for (long long i = 0; i < n; ++i) out.parts[j][i] = rows[i][j];
    std::sort(out.parts.begin(), out.parts.end(),
              [](const auto& x, const auto& y) { return part_sum(x) < part_sum(y); });
    return out;
}

}  // namespace antimagic
