// Node-weighted quivers, their correspondence with modified exchange matrices
// with skew-symmetric principal part, weighted mutation and foldings.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gca/matrix.hpp"

namespace gca {

// Vertices 0..num_mutable-1 are mutable, the rest frozen. arrows(i, j) > 0
// counts arrows i -> j and arrows(j, i) = -arrows(i, j).
class NodeWeightedQuiver {
public:
    NodeWeightedQuiver() = default;
    NodeWeightedQuiver(std::vector<std::string> names, std::size_t num_mutable, std::vector<std::int64_t> weights,
                       IntMatrix arrows);

    std::size_t size() const { return names_.size(); }
    std::size_t num_mutable() const { return num_mutable_; }
    bool is_mutable(std::size_t v) const { return v < num_mutable_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    std::int64_t weight(std::size_t v) const { return weights_.at(v); }
    const IntMatrix& arrows() const { return arrows_; }
    std::int64_t arrows(std::size_t i, std::size_t j) const { return arrows_(i, j); }

    bool operator==(const NodeWeightedQuiver& other) const = default;

private:
    std::vector<std::string> names_;
    std::size_t num_mutable_ = 0;
    std::vector<std::int64_t> weights_;
    IntMatrix arrows_;
};

// Throws NotSkewSymmetric when the principal part is not skew-symmetric.
// Default vertex names are v1..vN followed by f1..fM.
NodeWeightedQuiver from_matrix(const ModifiedExchangeMatrix& bh, const DivisorVector& d,
                               std::vector<std::string> names = {});
ModifiedExchangeMatrix to_matrix(const NodeWeightedQuiver& q);
DivisorVector weights_of(const NodeWeightedQuiver& q);

// Applies the four arrow rules at mutable vertex k. Throws FrozenVertexMutation.
NodeWeightedQuiver weighted_mutation(const NodeWeightedQuiver& q, std::size_t k);

struct FoldingPartition {
    std::vector<std::vector<std::size_t>> classes;
};

struct FoldingWitness {
    // Number of classes whose vertices were group-mutated while checking
    // condition (2).
    std::size_t mutated_classes = 0;
};

// Throws ValidationError when the classes do not partition the vertex set and
// FoldingViolation (carrying the class index) when condition (1) or (2) fails.
FoldingWitness check_folding(const NodeWeightedQuiver& q, const FoldingPartition& p);

// Mutates every vertex of class j once. Throws FoldingViolation when the
// class carries an internal arrow.
NodeWeightedQuiver group_mutation_quiver(const NodeWeightedQuiver& q, const FoldingPartition& p, std::size_t j);
// Same mutation with an explicit vertex order.
NodeWeightedQuiver group_mutation_quiver(const NodeWeightedQuiver& q, const std::vector<std::size_t>& order);

// Text format, one declaration per line:
//   vertex <name> mutable <weight>
//   vertex <name> frozen
//   <name> -> <name> : <count>
// Mutable vertices must precede frozen ones. Lines starting with '#' are
// comments.
std::string format_quiver(const NodeWeightedQuiver& q);
NodeWeightedQuiver parse_quiver(std::string_view text);

}  // namespace gca
