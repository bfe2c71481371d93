#include "gca/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gca/checked.hpp"

namespace gca {

NodeWeightedQuiver::NodeWeightedQuiver(std::vector<std::string> names, std::size_t num_mutable,
                                       std::vector<std::int64_t> weights, IntMatrix arrows)
    : names_(std::move(names)), num_mutable_(num_mutable), weights_(std::move(weights)), arrows_(std::move(arrows)) {
    const std::size_t n = names_.size();
    if (num_mutable_ > n) throw ValidationError("more mutable vertices than vertices");
    if (weights_.size() != num_mutable_) throw ValidationError("one weight per mutable vertex is required");
    for (auto w : weights_)
        if (w < 1) throw ValidationError("vertex weights must be positive");
    if (arrows_.rows() != n || arrows_.cols() != n) throw ValidationError("arrow matrix must be square");
    std::set<std::string> seen;
    for (const auto& name : names_)
        if (!seen.insert(name).second) throw ValidationError("duplicate vertex '" + name + "'");
    for (std::size_t i = 0; i < n; ++i) {
        if (arrows_(i, i) != 0) throw ValidationError("loop at vertex '" + names_[i] + "'");
        for (std::size_t j = i + 1; j < n; ++j)
            if (arrows_(i, j) != -arrows_(j, i))
                throw ValidationError("arrow matrix is not antisymmetric at ('" + names_[i] + "','" + names_[j] + "')");
    }
}

NodeWeightedQuiver from_matrix(const ModifiedExchangeMatrix& bh, const DivisorVector& d,
                               std::vector<std::string> names) {
    const std::size_t n = bh.N(), m = bh.M();
    if (d.size() != n) throw InvalidDivisors("divisor vector length does not match the matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (bh(i, j) != -bh(j, i))
                throw NotSkewSymmetric("principal part is not skew-symmetric at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
    if (names.empty()) {
        for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
        for (std::size_t j = 0; j < m; ++j) names.push_back("f" + std::to_string(j + 1));
    }
    if (names.size() != n + m) throw ValidationError("wrong number of vertex names");
    IntMatrix arrows(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n + m; ++j) {
            if (j == i) continue;
            arrows(i, j) = bh(i, j);
            arrows(j, i) = -bh(i, j);
        }
    return NodeWeightedQuiver(std::move(names), n, d.values(), std::move(arrows));
}

ModifiedExchangeMatrix to_matrix(const NodeWeightedQuiver& q) {
    const std::size_t n = q.num_mutable();
    IntMatrix e(n, q.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < q.size(); ++j) e(i, j) = q.arrows(i, j);
    return ModifiedExchangeMatrix(std::move(e), n);
}

DivisorVector weights_of(const NodeWeightedQuiver& q) { return DivisorVector(q.weights()); }

NodeWeightedQuiver weighted_mutation(const NodeWeightedQuiver& q, std::size_t k) {
    if (k >= q.size()) throw IndexOutOfRange("vertex " + std::to_string(k) + " out of range");
    if (!q.is_mutable(k)) throw FrozenVertexMutation("vertex '" + q.names()[k] + "' is frozen");
    const std::size_t n = q.size();
    IntMatrix a = q.arrows();
    // Rules 1 and 2: for every path i -> k -> j add weighted arrows i -> j.
    // Adding to the signed matrix performs the cancellation of rule 4.
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k || q.arrows(i, k) <= 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k || j == i || q.arrows(k, j) <= 0) continue;
            const bool mi = q.is_mutable(i), mj = q.is_mutable(j);
            std::int64_t w;
            if (mi && mj)
                w = q.weight(k);
            else if (mi)
                w = q.weight(i);
            else if (mj)
                w = q.weight(j);
            else
                continue;
            const std::int64_t added = detail::checked_mul(w, detail::checked_mul(q.arrows(i, k), q.arrows(k, j)));
            a(i, j) = detail::checked_add(a(i, j), added);
            a(j, i) = detail::checked_add(a(j, i), -added);
        }
    }
    // Rule 3: reverse every arrow at k.
    for (std::size_t j = 0; j < n; ++j) {
        a(k, j) = -a(k, j);
        a(j, k) = -a(j, k);
    }
    return NodeWeightedQuiver(q.names(), q.num_mutable(), q.weights(), std::move(a));
}

namespace {

void check_partition(const NodeWeightedQuiver& q, const FoldingPartition& p) {
    std::vector<int> owner(q.size(), -1);
    for (std::size_t c = 0; c < p.classes.size(); ++c)
        for (auto v : p.classes[c]) {
            if (v >= q.size()) throw ValidationError("partition names vertex " + std::to_string(v) + " out of range");
            if (owner[v] != -1) throw ValidationError("vertex " + std::to_string(v) + " lies in two classes");
            owner[v] = static_cast<int>(c);
        }
    for (std::size_t v = 0; v < q.size(); ++v)
        if (owner[v] == -1) throw ValidationError("vertex " + std::to_string(v) + " is not covered by the partition");
}

void check_no_internal_arrows(const NodeWeightedQuiver& q, const FoldingPartition& p, const std::string& stage) {
    for (std::size_t c = 0; c < p.classes.size(); ++c)
        for (auto i : p.classes[c])
            for (auto j : p.classes[c])
                if (q.arrows(i, j) != 0)
                    throw FoldingViolation(stage + ": class " + std::to_string(c) + " contains the arrow '" +
                                               q.names()[i] + "' - '" + q.names()[j] + "'",
                                           c);
}

bool class_is_mutable(const NodeWeightedQuiver& q, const std::vector<std::size_t>& cls) {
    return !cls.empty() && std::all_of(cls.begin(), cls.end(), [&](auto v) { return q.is_mutable(v); });
}

}  // namespace

FoldingWitness check_folding(const NodeWeightedQuiver& q, const FoldingPartition& p) {
    check_partition(q, p);
    check_no_internal_arrows(q, p, "condition (1)");
    FoldingWitness witness;
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
        if (!class_is_mutable(q, p.classes[c])) continue;
        const auto mutated = group_mutation_quiver(q, p.classes[c]);
        check_no_internal_arrows(mutated, p, "condition (2) after mutating class " + std::to_string(c));
        ++witness.mutated_classes;
    }
    return witness;
}

NodeWeightedQuiver group_mutation_quiver(const NodeWeightedQuiver& q, const std::vector<std::size_t>& order) {
    NodeWeightedQuiver cur = q;
    for (auto v : order) cur = weighted_mutation(cur, v);
    return cur;
}

NodeWeightedQuiver group_mutation_quiver(const NodeWeightedQuiver& q, const FoldingPartition& p, std::size_t j) {
    if (j >= p.classes.size()) throw IndexOutOfRange("class " + std::to_string(j) + " out of range");
    const auto& cls = p.classes[j];
    for (auto a : cls)
        for (auto b : cls)
            if (a < q.size() && b < q.size() && q.arrows(a, b) != 0)
                throw FoldingViolation("class " + std::to_string(j) + " contains an internal arrow", j);
    auto result = group_mutation_quiver(q, cls);
#ifndef NDEBUG
    std::vector<std::size_t> reversed(cls.rbegin(), cls.rend());
    if (!(group_mutation_quiver(q, reversed) == result))
        throw FoldingViolation("group mutation of class " + std::to_string(j) + " depends on the order", j);
#endif
    return result;
}

std::string format_quiver(const NodeWeightedQuiver& q) {
    std::ostringstream out;
    for (std::size_t v = 0; v < q.size(); ++v) {
        out << "vertex " << q.names()[v];
        if (q.is_mutable(v))
            out << " mutable " << q.weight(v) << '\n';
        else
            out << " frozen\n";
    }
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (q.arrows(i, j) > 0) out << q.names()[i] << " -> " << q.names()[j] << " : " << q.arrows(i, j) << '\n';
    return out.str();
}

NodeWeightedQuiver parse_quiver(std::string_view text) {
    std::vector<std::string> names;
    std::vector<std::int64_t> weights;
    std::map<std::string, std::size_t> index;
    struct Arrow {
        std::string from, to;
        std::int64_t count;
        std::size_t line;
    };
    std::vector<Arrow> arrow_lines;
    std::size_t num_mutable = 0;
    bool seen_frozen = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "vertex") {
            std::string name, role;
            if (!(ls >> name >> role)) throw ParseError("expected 'vertex <name> <role>'", lineno, first + 1);
            if (index.count(name)) throw ParseError("duplicate vertex '" + name + "'", lineno, first + 1);
            if (role == "mutable") {
                if (seen_frozen) throw ParseError("mutable vertices must precede frozen ones", lineno, first + 1);
                std::int64_t w;
                if (!(ls >> w) || w < 1) throw ParseError("expected a positive weight", lineno, first + 1);
                weights.push_back(w);
                ++num_mutable;
            } else if (role == "frozen") {
                seen_frozen = true;
            } else {
                throw ParseError("role must be 'mutable' or 'frozen'", lineno, first + 1);
            }
            index[name] = names.size();
            names.push_back(name);
        } else {
            std::string arrow, colon;
            Arrow a{head, "", 0, lineno};
            if (!(ls >> arrow >> a.to >> colon >> a.count) || arrow != "->" || colon != ":" || a.count < 0)
                throw ParseError("expected '<from> -> <to> : <count>'", lineno, first + 1);
            arrow_lines.push_back(a);
        }
    }
    IntMatrix arrows(names.size(), names.size());
    for (const auto& a : arrow_lines) {
        auto i = index.find(a.from), j = index.find(a.to);
        if (i == index.end() || j == index.end()) throw ParseError("arrow names an undeclared vertex", a.line, 1);
        if (i->second == j->second) throw ParseError("loops are not allowed", a.line, 1);
        arrows(i->second, j->second) += a.count;
        arrows(j->second, i->second) -= a.count;
    }
    return NodeWeightedQuiver(std::move(names), num_mutable, std::move(weights), std::move(arrows));
}

}  // namespace gca
