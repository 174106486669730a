#pragma once

#include <string>
#include <vector>

namespace frobcheck {

// Finite abelian group presented by a complete multiplication table.
// The constructor validates associativity, commutativity, unit and inverses
// exhaustively and throws StructureError on any violation.
class FiniteBase {
public:
    FiniteBase(std::vector<std::string> labels, std::vector<std::vector<int>> table);

    static FiniteBase zmod(int n);

    int order() const { return static_cast<int>(labels_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const;
    int inverse(int a) const;
    const std::string& label(int a) const;

    bool operator==(const FiniteBase& other) const;
    bool operator!=(const FiniteBase& other) const { return !(*this == other); }

private:
    int checked(int a) const;

    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<int> inverses_;
};

}  // namespace frobcheck
