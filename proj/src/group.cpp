#include "frobcheck/group.hpp"

#include <utility>

#include "frobcheck/error.hpp"

namespace frobcheck {

FiniteBase::FiniteBase(std::vector<std::string> labels, std::vector<std::vector<int>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
    const int n = static_cast<int>(labels_.size());
    if (n == 0) throw StructureError("group must have at least one element");
    if (static_cast<int>(table_.size()) != n)
        throw StructureError("multiplication table must have one row per element");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw StructureError("multiplication table must be square");
        for (int v : row)
            if (v < 0 || v >= n) throw StructureError("multiplication table entry out of range");
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (table_[i][j] != table_[j][i])
                throw StructureError("group is not commutative at (" + labels_[i] + ", " +
                                     labels_[j] + ")");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
                    throw StructureError("multiplication is not associative at (" + labels_[i] +
                                         ", " + labels_[j] + ", " + labels_[k] + ")");

    identity_ = -1;
    for (int e = 0; e < n; ++e) {
        bool unit = true;
        for (int i = 0; i < n; ++i)
            if (table_[e][i] != i || table_[i][e] != i) {
                unit = false;
                break;
            }
        if (unit) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw StructureError("group has no identity element");

    inverses_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (table_[i][j] == identity_) {
                inverses_[i] = j;
                break;
            }
        if (inverses_[i] < 0)
            throw StructureError("element " + labels_[i] + " has no inverse");
    }
}

FiniteBase FiniteBase::zmod(int n) {
    if (n < 1) throw StructureError("zmod requires n >= 1");
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return FiniteBase(std::move(labels), std::move(table));
}

int FiniteBase::checked(int a) const {
    if (a < 0 || a >= order()) throw StructureError("group element index out of range");
    return a;
}

int FiniteBase::mul(int a, int b) const { return table_[checked(a)][checked(b)]; }

int FiniteBase::inverse(int a) const { return inverses_[checked(a)]; }

const std::string& FiniteBase::label(int a) const { return labels_[checked(a)]; }

bool FiniteBase::operator==(const FiniteBase& other) const {
    return labels_ == other.labels_ && table_ == other.table_;
}

}  // namespace frobcheck
