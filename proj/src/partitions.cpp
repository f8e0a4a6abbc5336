#include "higgs/partitions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace higgs::partitions {

namespace {

void gen(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        gen(n - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0 || n > 30) throw std::invalid_argument("partitions_of: n out of range");
    std::vector<Partition> out;
    Partition cur;
    gen(n, n == 0 ? 1 : n, cur, out);
    return out;
}

int size_of(const Partition& Y) {
    return std::accumulate(Y.begin(), Y.end(), 0);
}

Partition transpose(const Partition& Y) {
    Partition t;
    if (Y.empty()) return t;
    t.resize(Y[0], 0);
    for (int row : Y)
        for (int j = 0; j < row; ++j) ++t[j];
    return t;
}

std::string str(const Partition& Y) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < Y.size(); ++i) os << (i ? "," : "") << Y[i];
    os << ")";
    return os.str();
}

std::vector<BoxData> box_data(const Partition& Y) {
    std::vector<BoxData> out;
    Partition t = transpose(Y);
    for (size_t i = 1; i <= Y.size(); ++i)
        for (int j = 1; j <= Y[i - 1]; ++j) {
            BoxData b;
            b.i = static_cast<int>(i);
            b.j = j;
            b.row_len = Y[i - 1];
            b.col_len = t[j - 1];
            b.arm = b.row_len - j;
            b.leg = b.col_len - static_cast<int>(i);
            b.hook = b.arm + b.leg + 1;
            out.push_back(b);
        }
    return out;
}

BoxSums box_sums(const Partition& Y) {
    BoxSums s{0, 0, 0, 0};
    for (const BoxData& b : box_data(Y)) {
        s.sum_ij_minus2 += b.i + b.j - 2;
        s.sum_col_minus_row += -b.i + b.j;
        s.sum_y_exponent += -2 * b.i + 2 * b.j + 1 - 2 * b.row_len + b.col_len;
        s.sum_lambda_exponent += 2 * b.i + 2 * b.j - 1 - 2 * b.row_len - b.col_len;
    }
    return s;
}

} // namespace higgs::partitions
