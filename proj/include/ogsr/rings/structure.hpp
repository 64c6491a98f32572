#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ogsr/detail/text.hpp"
#include "ogsr/ring.hpp"

namespace ogsr::detail {

// Solves sum_j lambda_j * cols[j] = target exactly over Q by reduced row
// echelon form, pinning free variables to zero. Returns nullopt only when
// the system is inconsistent (target outside the span). When the columns
// are linearly independent the returned solution is the unique one.
inline std::optional<Coords> solve_in_span(const std::vector<Coords>& cols, const Coords& target) {
    const std::size_t rows = target.size();
    const std::size_t k = cols.size();
    std::vector<Coords> m(rows, Coords(k + 1, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = cols[j][i];
        m[i][k] = target[i];
    }

    std::vector<std::size_t> pivot_row(k, rows);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < k && next_row < rows; ++col) {
        std::size_t sel = next_row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[next_row]);
        const Rat inv = m[next_row][col];
        for (std::size_t j = col; j <= k; ++j) m[next_row][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == next_row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[next_row][j];
        }
        pivot_row[col] = next_row;
        ++next_row;
    }

    for (std::size_t i = next_row; i < rows; ++i)
        if (m[i][k] != 0) return std::nullopt;

    Coords lambda(k, Rat(0));
    for (std::size_t col = 0; col < k; ++col)
        if (pivot_row[col] != rows) lambda[col] = m[pivot_row[col]][k];
    return lambda;
}

inline bool columns_independent(const std::vector<Coords>& cols, std::size_t rows) {
    if (cols.empty()) return true;
    if (cols.size() > rows) return false;
    // Independent iff no column lies in the span of the others.
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<Coords> others;
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (i != j) others.push_back(cols[i]);
        if (solve_in_span(others, cols[j])) return false;
    }
    return true;
}

} // namespace ogsr::detail

namespace ogsr {

// Finite-rank algebra given by structure constants: e_i * e_j =
// sum_k table[i][j][k] e_k, with a designated unit basis vector. The
// product is bilinear by construction and deliberately free to be
// nonassociative. Positivity is the cone generated by a finite list of
// elements; the list must be linearly independent, which makes membership
// an exact linear solve and makes the cone proper automatically. The
// default cone is {1}: x >= 0 iff x is a nonnegative rational multiple of
// the unit.
class StructureConstantAlgebra final : public Ring {
public:
    using Table = std::vector<std::vector<Coords>>;

    StructureConstantAlgebra(std::string id, std::size_t rank, std::size_t unit_index,
                             Table table, std::vector<Coords> cone_generators = {})
        : id_(std::move(id)), rank_(rank), unit_(unit_index), table_(std::move(table)),
          cone_(std::move(cone_generators)) {
        if (rank_ == 0) throw InvalidSpec("structure algebra rank must be positive");
        if (unit_ >= rank_) throw InvalidSpec("unit index out of range");
        if (table_.size() != rank_) throw InvalidSpec("structure table must have rank rows");
        for (const auto& row : table_) {
            if (row.size() != rank_) throw InvalidSpec("structure table must be square");
            for (const auto& entry : row)
                if (entry.size() != rank_)
                    throw InvalidSpec("structure table entries must have rank coordinates");
        }
        for (std::size_t i = 0; i < rank_; ++i) {
            if (table_[unit_][i] != basis_coords(i) || table_[i][unit_] != basis_coords(i))
                throw InvalidSpec("designated unit does not act as identity in the table");
        }
        if (cone_.empty()) cone_.push_back(basis_coords(unit_));
        for (const auto& g : cone_)
            if (g.size() != rank_)
                throw InvalidSpec("cone generator arity does not match rank");
        if (!detail::columns_independent(cone_, rank_))
            throw InvalidSpec("cone generators must be linearly independent");
    }

    std::string name() const override { return "sc:" + id_; }
    Carrier carrier() const override { return Carrier::StructureConstant; }
    OrderKind order_kind() const override { return OrderKind::ConeGenerated; }
    bool divisible_by_integers() const override { return true; }

    std::size_t rank() const { return rank_; }

    Payload zero_payload() const override { return Coords(rank_, Rat(0)); }
    Payload one_payload() const override { return basis_coords(unit_); }

    Payload add_payload(const Payload& a, const Payload& b) const override {
        const Coords& x = as_coords(a);
        const Coords& y = as_coords(b);
        Coords out(rank_, Rat(0));
        for (std::size_t i = 0; i < rank_; ++i) out[i] = x[i] + y[i];
        return out;
    }

    Payload neg_payload(const Payload& a) const override {
        Coords out = as_coords(a);
        for (auto& q : out) q = -q;
        return out;
    }

    Payload mul_payload(const Payload& a, const Payload& b) const override {
        const Coords& x = as_coords(a);
        const Coords& y = as_coords(b);
        Coords out(rank_, Rat(0));
        for (std::size_t i = 0; i < rank_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < rank_; ++j) {
                if (y[j] == 0) continue;
                const Rat f = x[i] * y[j];
                const Coords& cell = table_[i][j];
                for (std::size_t k = 0; k < rank_; ++k) out[k] += f * cell[k];
            }
        }
        return out;
    }

    Comparison compare_payload(const Payload& a, const Payload& b) const override {
        Coords d = as_coords(add_payload(a, neg_payload(b)));
        bool zero = true;
        for (const auto& q : d)
            if (q != 0) { zero = false; break; }
        if (zero) return Comparison::Equal;
        if (in_cone(d)) return Comparison::Greater;
        Coords nd = d;
        for (auto& q : nd) q = -q;
        if (in_cone(nd)) return Comparison::Less;
        return Comparison::Incomparable;
    }

    Payload parse_payload(std::string_view text) const override {
        std::string_view body =
            detail::strip_brackets(text, '{', '}', "a coordinate list {q0,...}");
        auto parts = detail::split_top_level(body);
        if (parts.size() != rank_)
            throw WrongArity(name() + ": expected " + std::to_string(rank_) +
                             " coordinates, got " + std::to_string(parts.size()));
        Coords out(rank_, Rat(0));
        for (std::size_t i = 0; i < rank_; ++i) out[i] = parse_rat(parts[i]);
        return out;
    }

    std::string render_payload(const Payload& p) const override {
        const Coords& x = as_coords(p);
        std::string out = "{";
        for (std::size_t i = 0; i < rank_; ++i) {
            if (i > 0) out += ',';
            out += render_rat(x[i]);
        }
        out += '}';
        return out;
    }

    Payload sample_payload(Sampler& s) const override {
        Coords out(rank_, Rat(0));
        for (auto& q : out) q = s.rational(6, 4);
        return out;
    }

    Payload sample_nonneg_payload(Sampler& s) const override {
        Coords out(rank_, Rat(0));
        for (const auto& g : cone_) {
            const Rat lambda = rat_abs(s.rational(4, 4));
            for (std::size_t i = 0; i < rank_; ++i) out[i] += lambda * g[i];
        }
        return out;
    }

    std::optional<Payload> divide_by_int_payload(const Payload& a, const Int& n) const override {
        if (n == 0) return std::nullopt;
        Coords out = as_coords(a);
        for (auto& q : out) q /= Rat(n);
        return Payload(out);
    }

private:
    Coords basis_coords(std::size_t i) const {
        Coords c(rank_, Rat(0));
        c[i] = 1;
        return c;
    }

    bool in_cone(const Coords& d) const {
        auto lambda = detail::solve_in_span(cone_, d);
        if (!lambda) return false;
        for (const auto& q : *lambda)
            if (q < 0) return false;
        return true;
    }

    std::string id_;
    std::size_t rank_;
    std::size_t unit_;
    Table table_;
    std::vector<Coords> cone_;
};

// Three-dimensional demonstration algebra on basis {1, a, b} with
// a*a = b, a*b = 1, b*a = 0, b*b = 0: right-nested powers of a cycle
// through a, b, 1 while left-nested powers hit zero at the third step.
inline RingPtr make_demo3() {
    auto C = [](Rat q0, Rat q1, Rat q2) { return Coords{std::move(q0), std::move(q1), std::move(q2)}; };
    StructureConstantAlgebra::Table t(3, std::vector<Coords>(3));
    t[0][0] = C(1, 0, 0); t[0][1] = C(0, 1, 0); t[0][2] = C(0, 0, 1);
    t[1][0] = C(0, 1, 0); t[1][1] = C(0, 0, 1); t[1][2] = C(1, 0, 0);
    t[2][0] = C(0, 0, 1); t[2][1] = C(0, 0, 0); t[2][2] = C(0, 0, 0);
    return std::make_shared<StructureConstantAlgebra>("demo3", 3, 0, std::move(t));
}

} // namespace ogsr
