#pragma once

#include <string>
#include <vector>

namespace higgs::partitions {

// A partition = weakly decreasing list of positive row lengths.
using Partition = std::vector<int>;

// All partitions of n in reverse-lexicographic order; partitions_of(0) = {∅}.
std::vector<Partition> partitions_of(int n);

int size_of(const Partition& Y);
Partition transpose(const Partition& Y);
std::string str(const Partition& Y);

// Data attached to one box z = (i, j) of a Young diagram (1-based indices).
struct BoxData {
    int i, j;
    int row_len;  // Y_i
    int col_len;  // Y^t_j
    int arm;      // Y_i - j
    int leg;      // Y^t_j - i
    int hook;     // arm + leg + 1
};

// One record per box in row-major order.
std::vector<BoxData> box_data(const Partition& Y);

// The four aggregate box sums appearing in the asymptotic generating
// functions' monomial prefactors.
struct BoxSums {
    long sum_ij_minus2;       // Σ (i + j - 2)
    long sum_col_minus_row;   // Σ (-i + j)
    long sum_y_exponent;      // Σ (-2i + 2j + 1 - 2Y_i + Y^t_j)
    long sum_lambda_exponent; // Σ (2i + 2j - 1 - 2Y_i - Y^t_j)
};

BoxSums box_sums(const Partition& Y);

} // namespace higgs::partitions
