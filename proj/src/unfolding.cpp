#include "gca/unfolding.hpp"

#include <algorithm>
#include <sstream>

#include "gca/checked.hpp"

namespace gca {

using detail::checked_add;
using detail::checked_mul;

GroupLayout::GroupLayout(DivisorVector d, std::size_t num_frozen) : d_(std::move(d)), m_(num_frozen) {
    for (std::size_t i = 0; i < d_.size(); ++i) {
        offset_.push_back(rows_);
        rows_ += static_cast<std::size_t>(d_[i]);
    }
}

std::size_t GroupLayout::t_col(std::size_t group, std::size_t member) const {
    return rows_ + m_ + 2 * offset_[group] + member;
}

std::size_t GroupLayout::s_col(std::size_t group, std::size_t member) const {
    return t_col(group, member) + size(group);
}

std::size_t GroupLayout::group_of_row(std::size_t row) const {
    for (std::size_t i = 0; i + 1 < offset_.size(); ++i)
        if (row < offset_[i + 1]) return i;
    return offset_.size() - 1;
}

FoldedMatrix::FoldedMatrix(IntMatrix entries, GroupLayout layout, std::int64_t multiplicity,
                           std::vector<std::size_t> history)
    : entries_(std::move(entries)), layout_(std::move(layout)), multiplicity_(multiplicity), history_(std::move(history)) {
    if (entries_.rows() != layout_.rows() || entries_.cols() != layout_.cols())
        throw ValidationError("folded matrix shape does not match its group layout");
}

std::size_t FoldedMatrix::times_mutated(std::size_t group) const {
    return static_cast<std::size_t>(std::count(history_.begin(), history_.end(), group));
}

FoldedMatrix build(const ExtendedExchangeMatrix& b, const DivisorVector& d, std::int64_t multiplicity) {
    validate_divisors(b, d);
    if (multiplicity == 0) multiplicity = d.total_multiplicity();
    for (std::size_t i = 0; i < d.size(); ++i)
        if (multiplicity % d[i] != 0)
            throw InvalidDivisors("multiplicity " + std::to_string(multiplicity) + " is not divisible by d_" +
                                  std::to_string(i + 1));
    GroupLayout layout(d, b.M());
    IntMatrix e(layout.rows(), layout.cols());
    for (std::size_t i = 0; i < b.N(); ++i) {
        for (std::size_t a = 0; a < layout.size(i); ++a) {
            const std::size_t row = layout.row(i, a);
            for (std::size_t j = 0; j < b.N(); ++j)
                for (std::size_t c = 0; c < layout.size(j); ++c) e(row, layout.principal_col(j, c)) = b(i, j) / d[i];
            for (std::size_t l = 0; l < b.M(); ++l)
                e(row, layout.frozen_col(l)) = checked_mul(multiplicity / d[i], b(i, b.N() + l));
            e(row, layout.t_col(i, a)) = 1;
            e(row, layout.s_col(i, a)) = -1;
        }
    }
    return FoldedMatrix(std::move(e), std::move(layout), multiplicity, {});
}

namespace {

void check_group(const FoldedMatrix& f, std::size_t k) {
    if (k >= f.layout().N())
        throw IndexOutOfRange("group " + std::to_string(k + 1) + " outside 1.." + std::to_string(f.layout().N()));
}

}  // namespace

FoldedMatrix group_mutate(const FoldedMatrix& f, std::size_t k) {
    check_group(f, k);
    const auto& layout = f.layout();
    for (std::size_t a = 0; a < layout.size(k); ++a)
        for (std::size_t c = 0; c < layout.size(k); ++c)
            if (f(layout.row(k, a), layout.principal_col(k, c)) != 0)
                throw StructureViolation("group " + std::to_string(k + 1) + " has a nonzero diagonal block");
    IntMatrix e = f.entries();
    for (std::size_t a = 0; a < layout.size(k); ++a) e = mutate_entries(e, layout.row(k, a));
    auto history = f.history();
    history.push_back(k);
    FoldedMatrix out(std::move(e), layout, f.multiplicity(), std::move(history));
#ifndef NDEBUG
    if (!(group_mutate_blockwise(f, k) == out))
        throw StructureViolation("sequential and blockwise group mutation disagree");
#endif
    return out;
}

FoldedMatrix group_mutate_sequence(const FoldedMatrix& f, const std::vector<std::size_t>& seq) {
    FoldedMatrix cur = f;
    for (auto k : seq) cur = group_mutate(cur, k);
    return cur;
}

FoldedMatrix group_mutate_blockwise(const FoldedMatrix& f, std::size_t k) {
    check_group(f, k);
    const auto& layout = f.layout();
    const auto& b = f.entries();
    const std::size_t R = b.rows(), C = b.cols();
    std::vector<bool> in_k_row(R, false), in_k_col(C, false);
    std::vector<std::size_t> k_rows;
    for (std::size_t a = 0; a < layout.size(k); ++a) {
        k_rows.push_back(layout.row(k, a));
        in_k_row[layout.row(k, a)] = true;
        in_k_col[layout.principal_col(k, a)] = true;
    }
    // P = |B^{.,K}| B^{K,.} and Q = B^{.,K} |B^{K,.}| as products of the
    // column strip and the row strip of group k.
    IntMatrix out(R, C);
    for (std::size_t y = 0; y < R; ++y) {
        for (std::size_t z = 0; z < C; ++z) {
            if (in_k_row[y] || in_k_col[z]) {
                out(y, z) = -b(y, z);
                continue;
            }
            std::int64_t p = 0, q = 0;
            for (auto kr : k_rows) {
                const std::int64_t left = b(y, kr);
                const std::int64_t right = b(kr, z);
                p = checked_add(p, checked_mul(std::abs(left), right));
                q = checked_add(q, checked_mul(left, std::abs(right)));
            }
            out(y, z) = checked_add(b(y, z), (p + q) / 2);
        }
    }
    auto history = f.history();
    history.push_back(k);
    return FoldedMatrix(std::move(out), layout, f.multiplicity(), std::move(history));
}

CheckResult hadamard_check(const FoldedMatrix& f, const ExtendedExchangeMatrix& b, const DivisorVector& d) {
    const auto& layout = f.layout();
    if (b.N() != layout.N() || b.M() != layout.M() || !(d == layout.divisors()))
        return CheckResult::fail("matrix or divisors do not match the folded layout");
    for (std::size_t i = 0; i < b.N(); ++i) {
        if (b(i, i) % d[i] != 0) return CheckResult::fail("d_i does not divide row " + std::to_string(i + 1));
        for (std::size_t a = 0; a < layout.size(i); ++a) {
            const std::size_t row = layout.row(i, a);
            for (std::size_t j = 0; j < b.N(); ++j) {
                if (b(i, j) % d[i] != 0)
                    return CheckResult::fail("d_" + std::to_string(i + 1) + " does not divide B'(" +
                                             std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                for (std::size_t c = 0; c < layout.size(j); ++c)
                    if (f(row, layout.principal_col(j, c)) != b(i, j) / d[i])
                        return CheckResult::fail("condition 1 fails in principal block (" + std::to_string(i + 1) +
                                                 "," + std::to_string(j + 1) + ")");
            }
            for (std::size_t l = 0; l < b.M(); ++l)
                if (f(row, layout.frozen_col(l)) != checked_mul(f.multiplicity() / d[i], b(i, b.N() + l)))
                    return CheckResult::fail("condition 2 fails in slack block (" + std::to_string(i + 1) + "," +
                                             std::to_string(l + 1) + ")");
        }
    }
    return CheckResult::pass();
}

DoubleConstantWitness double_constant_check(const FoldedMatrix& f) {
    const auto& layout = f.layout();
    const std::size_t n = layout.N();
    DoubleConstantWitness w;
    w.a.assign(n, std::vector<std::int64_t>(n, 0));
    w.c.assign(n, std::vector<std::int64_t>(n, 0));
    w.alpha.assign(n, 1);
    auto block_name = [](const char* which, std::size_t i, std::size_t j) {
        return std::string(which) + "I(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    };
    for (std::size_t i = 0; i < n; ++i) {
        // The diagonal sign flips with each group mutation of i; for groups
        // of size one it is not visible in the entries, so the history fixes
        // it, and for larger groups it is read off and cross-checked.
        const std::int64_t expected_alpha = f.times_mutated(i) % 2 == 0 ? 1 : -1;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t di = layout.size(i), dj = layout.size(j);
            auto one = [&](std::size_t a, std::size_t c) { return f(layout.row(i, a), layout.t_col(j, c)); };
            auto two = [&](std::size_t a, std::size_t c) { return f(layout.row(i, a), layout.s_col(j, c)); };
            std::int64_t alpha = 0, c = 0;
            if (i != j) {
                c = one(0, 0);
            } else if (di == 1) {
                alpha = expected_alpha;
                c = one(0, 0) - alpha;
            } else {
                c = one(0, 1);
                alpha = one(0, 0) - c;
                if (alpha != 1 && alpha != -1)
                    throw StructureViolation(block_name("1", i, j) + " is not a constant plus or minus the identity");
                if (alpha != expected_alpha)
                    throw StructureViolation(block_name("1", i, j) + " carries an unexpected diagonal sign");
            }
            const std::int64_t a = one(0, 0) + two(0, 0);
            for (std::size_t r = 0; r < di; ++r)
                for (std::size_t s = 0; s < dj; ++s) {
                    const std::int64_t diag = (i == j && r == s) ? alpha : 0;
                    if (one(r, s) != c + diag)
                        throw StructureViolation(block_name("1", i, j) + " is not of the form c*1 + alpha*Id");
                    if (one(r, s) + two(r, s) != a)
                        throw StructureViolation(block_name("1", i, j) + " + " + block_name("2", i, j) +
                                                 " is not a constant block");
                }
            w.a[i][j] = a;
            w.c[i][j] = c;
            if (i == j) w.alpha[i] = alpha;
        }
    }
    return w;
}

CheckResult unfolding_conditions_check(const FoldedMatrix& f, const ExtendedExchangeMatrix& b,
                                       const DivisorVector& d) {
    const auto& layout = f.layout();
    if (b.N() != layout.N() || !(d == layout.divisors()))
        return CheckResult::fail("matrix or divisors do not match the folded layout");
    for (std::size_t i = 0; i < b.N(); ++i)
        for (std::size_t j = 0; j < b.N(); ++j)
            for (std::size_t c = 0; c < layout.size(j); ++c) {
                std::int64_t sum = 0;
                for (std::size_t a = 0; a < layout.size(i); ++a) {
                    const auto v = f(layout.row(i, a), layout.principal_col(j, c));
                    sum = checked_add(sum, v);
                    if (b(i, j) > 0 && v < 0)
                        return CheckResult::fail("condition (2) fails in block (" + std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + ")");
                    if (b(i, j) < 0 && v > 0)
                        return CheckResult::fail("condition (2) fails in block (" + std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + ")");
                }
                if (sum != b(i, j))
                    return CheckResult::fail("condition (1) fails in block (" + std::to_string(i + 1) + "," +
                                             std::to_string(j + 1) + "): column sum " + std::to_string(sum) +
                                             " != " + std::to_string(b(i, j)));
            }
    return CheckResult::pass();
}

std::vector<std::vector<std::size_t>> column_groups(const GroupLayout& layout) {
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < layout.N(); ++i) {
        std::vector<std::size_t> g;
        for (std::size_t a = 0; a < layout.size(i); ++a) g.push_back(layout.principal_col(i, a));
        groups.push_back(std::move(g));
    }
    std::vector<std::size_t> fg;
    for (std::size_t l = 0; l < layout.M(); ++l) fg.push_back(layout.frozen_col(l));
    groups.push_back(std::move(fg));
    for (std::size_t i = 0; i < layout.N(); ++i) {
        std::vector<std::size_t> t, s;
        for (std::size_t a = 0; a < layout.size(i); ++a) {
            t.push_back(layout.t_col(i, a));
            s.push_back(layout.s_col(i, a));
        }
        groups.push_back(std::move(t));
        groups.push_back(std::move(s));
    }
    return groups;
}

std::string format_folded(const FoldedMatrix& f) {
    const auto& layout = f.layout();
    std::ostringstream out;
    out << "# folded matrix: " << layout.rows() << " rows, " << layout.cols() << " columns, multiplicity "
        << f.multiplicity() << '\n';
    auto range = [](std::size_t first, std::size_t count) {
        return std::to_string(first + 1) + "-" + std::to_string(first + count);
    };
    for (std::size_t i = 0; i < layout.N(); ++i)
        out << "# group D" << i + 1 << ": columns " << range(layout.principal_col(i, 0), layout.size(i)) << '\n';
    if (layout.M() > 0) out << "# group F: columns " << range(layout.frozen_col(0), layout.M()) << '\n';
    for (std::size_t i = 0; i < layout.N(); ++i) {
        out << "# group T" << i + 1 << ": columns " << range(layout.t_col(i, 0), layout.size(i)) << '\n';
        out << "# group S" << i + 1 << ": columns " << range(layout.s_col(i, 0), layout.size(i)) << '\n';
    }
    if (!f.history().empty()) {
        out << "# group mutations:";
        for (auto k : f.history()) out << ' ' << k + 1;
        out << '\n';
    }
    out << format_matrix(f.entries(), layout.rows());
    return out.str();
}

}  // namespace gca
