#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pe {

enum class NodeKind { Atom, And, Or, Not };

/// AST node. An atom `dist(x_var, y_var) <= q` uses q, x_var, y_var; the
/// connectives use children (Not has exactly one).
struct FormulaNode {
    NodeKind kind = NodeKind::Atom;
    unsigned q = 0;
    unsigned x_var = 0;
    unsigned y_var = 0;
    std::vector<FormulaNode> children;

    static FormulaNode atom(unsigned q, unsigned x_var, unsigned y_var);
    static FormulaNode all_of(std::vector<FormulaNode> children);
    static FormulaNode any_of(std::vector<FormulaNode> children);
    static FormulaNode negation(FormulaNode child);

    friend bool operator==(const FormulaNode&, const FormulaNode&) = default;
};

/// Three-valued truth for evaluation over partially known distances.
enum class Truth : std::uint8_t { False, True, Unknown };

/// Boolean combination of distance atoms over `c` candidate variables and
/// `d` witness variables.
class DistanceFormula {
public:
    /// Validates index ranges and node arity.
    DistanceFormula(unsigned candidate_arity, unsigned witness_arity, FormulaNode root);

    unsigned candidate_arity() const noexcept { return c_; }
    unsigned witness_arity() const noexcept { return d_; }
    const FormulaNode& root() const noexcept { return root_; }

    /// Largest q over all atoms (0 when there are none).
    unsigned radius() const noexcept { return radius_; }
    /// Number of atoms.
    unsigned size() const noexcept { return size_; }
    bool is_positive() const noexcept { return positive_; }

    /// Evaluates with `cell(i, j)` returning the capped distance between
    /// candidate i and witness j (cap >= radius, anything above the cap is
    /// "far"), or a negative value when unknown.
    template <typename Cell>
    Truth evaluate_with(Cell&& cell) const
    {
        return eval_node(root_, cell);
    }

    friend bool operator==(const DistanceFormula&, const DistanceFormula&) = default;

private:
    template <typename Cell>
    static Truth eval_node(const FormulaNode& node, Cell& cell)
    {
        switch (node.kind) {
        case NodeKind::Atom: {
            const long v = cell(node.x_var, node.y_var);
            if (v < 0)
                return Truth::Unknown;
            return static_cast<unsigned long>(v) <= node.q ? Truth::True : Truth::False;
        }
        case NodeKind::And: {
            Truth acc = Truth::True;
            for (const auto& child : node.children) {
                Truth t = eval_node(child, cell);
                if (t == Truth::False)
                    return Truth::False;
                if (t == Truth::Unknown)
                    acc = Truth::Unknown;
            }
            return acc;
        }
        case NodeKind::Or: {
            Truth acc = Truth::False;
            for (const auto& child : node.children) {
                Truth t = eval_node(child, cell);
                if (t == Truth::True)
                    return Truth::True;
                if (t == Truth::Unknown)
                    acc = Truth::Unknown;
            }
            return acc;
        }
        case NodeKind::Not: {
            Truth t = eval_node(node.children.front(), cell);
            return t == Truth::Unknown ? t : (t == Truth::True ? Truth::False : Truth::True);
        }
        }
        return Truth::Unknown;
    }

    unsigned c_ = 0;
    unsigned d_ = 0;
    FormulaNode root_;
    unsigned radius_ = 0;
    unsigned size_ = 0;
    bool positive_ = true;
};

/// c x d matrix of capped distances; values above `cap` mean "farther than cap".
class DistanceMatrix {
public:
    DistanceMatrix(unsigned rows, unsigned cols, unsigned cap);
    DistanceMatrix(unsigned cap, std::vector<std::vector<unsigned>> rows);

    unsigned rows() const noexcept { return rows_; }
    unsigned cols() const noexcept { return cols_; }
    unsigned cap() const noexcept { return cap_; }
    unsigned inf() const noexcept { return cap_ + 1; }
    unsigned at(unsigned i, unsigned j) const { return cells_[i * cols_ + j]; }
    void set(unsigned i, unsigned j, unsigned value) { cells_[i * cols_ + j] = value > cap_ ? cap_ + 1 : value; }

private:
    unsigned rows_, cols_, cap_;
    std::vector<unsigned> cells_;
};

/// Throws InputError when the matrix shape does not match or cap < radius.
bool evaluate(const DistanceFormula& f, const DistanceMatrix& m);

/// Disjunction of k atoms dist(x_i, y_0) <= r (distance-r domination by k vertices).
DistanceFormula build_delta(unsigned k, unsigned r);

/// Conjunction over i < j of dist(x_i, y_0) + dist(x_j, y_0) > r, encoded as
/// NOT OR_{a=0..r} (dist(x_i,y_0) <= a AND dist(x_j,y_0) <= r-a).
DistanceFormula build_eta(unsigned k, unsigned r);

/// JSON: {"c":int,"d":int,"node":NODE}; NODE is {"atom":{"q","x","y"}},
/// {"and":[...]}, {"or":[...]}, or {"not":NODE}. Errors carry a JSON pointer.
DistanceFormula parse_formula(std::string_view json_text);
std::string serialize(const DistanceFormula& f);

/// Prefix form, e.g. "or(d1(x0,y0),d1(x1,y0))".
std::string to_string(const DistanceFormula& f);

}  // namespace pe
