#include "core/formula.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace pe {

using nlohmann::json;

FormulaNode FormulaNode::atom(unsigned q, unsigned x_var, unsigned y_var)
{
    FormulaNode node;
    node.kind = NodeKind::Atom;
    node.q = q;
    node.x_var = x_var;
    node.y_var = y_var;
    return node;
}

FormulaNode FormulaNode::all_of(std::vector<FormulaNode> children)
{
    FormulaNode node;
    node.kind = NodeKind::And;
    node.children = std::move(children);
    return node;
}

FormulaNode FormulaNode::any_of(std::vector<FormulaNode> children)
{
    FormulaNode node;
    node.kind = NodeKind::Or;
    node.children = std::move(children);
    return node;
}

FormulaNode FormulaNode::negation(FormulaNode child)
{
    FormulaNode node;
    node.kind = NodeKind::Not;
    node.children.push_back(std::move(child));
    return node;
}

namespace {

struct Stats {
    unsigned radius = 0;
    unsigned size = 0;
    bool positive = true;
};

void validate(const FormulaNode& node, unsigned c, unsigned d, Stats& stats)
{
    switch (node.kind) {
    case NodeKind::Atom:
        if (node.x_var >= c || node.y_var >= d)
            throw InputError("atom variable index out of range");
        if (!node.children.empty())
            throw InputError("atom must not have children");
        stats.radius = std::max(stats.radius, node.q);
        ++stats.size;
        return;
    case NodeKind::Not:
        if (node.children.size() != 1)
            throw InputError("negation takes exactly one operand");
        stats.positive = false;
        break;
    case NodeKind::And:
    case NodeKind::Or:
        break;
    }
    for (const auto& child : node.children)
        validate(child, c, d, stats);
}

}  // namespace

DistanceFormula::DistanceFormula(unsigned candidate_arity, unsigned witness_arity, FormulaNode root)
    : c_(candidate_arity), d_(witness_arity), root_(std::move(root))
{
    if (c_ == 0)
        throw InputError("formula needs at least one candidate variable");
    if (d_ == 0)
        throw InputError("formula needs at least one witness variable");
    Stats stats;
    validate(root_, c_, d_, stats);
    radius_ = stats.radius;
    size_ = stats.size;
    positive_ = stats.positive;
}

DistanceMatrix::DistanceMatrix(unsigned rows, unsigned cols, unsigned cap)
    : rows_(rows), cols_(cols), cap_(cap), cells_(static_cast<std::size_t>(rows) * cols, cap + 1)
{
}

DistanceMatrix::DistanceMatrix(unsigned cap, std::vector<std::vector<unsigned>> rows)
    : DistanceMatrix(static_cast<unsigned>(rows.size()), rows.empty() ? 0 : static_cast<unsigned>(rows[0].size()),
                     cap)
{
    for (unsigned i = 0; i < rows_; ++i) {
        if (rows[i].size() != cols_)
            throw InputError("distance matrix rows must have equal length");
        for (unsigned j = 0; j < cols_; ++j)
            set(i, j, rows[i][j]);
    }
}

bool evaluate(const DistanceFormula& f, const DistanceMatrix& m)
{
    if (m.rows() != f.candidate_arity() || m.cols() != f.witness_arity())
        throw InputError("distance matrix shape does not match the formula");
    if (m.cap() < f.radius())
        throw InputError("distance matrix cap is below the formula radius");
    return f.evaluate_with([&](unsigned i, unsigned j) { return static_cast<long>(m.at(i, j)); }) == Truth::True;
}

DistanceFormula build_delta(unsigned k, unsigned r)
{
    if (k == 0)
        throw InputError("delta needs k >= 1");
    std::vector<FormulaNode> atoms;
    for (unsigned i = 0; i < k; ++i)
        atoms.push_back(FormulaNode::atom(r, i, 0));
    if (k == 1)
        return DistanceFormula(1, 1, std::move(atoms.front()));
    return DistanceFormula(k, 1, FormulaNode::any_of(std::move(atoms)));
}

DistanceFormula build_eta(unsigned k, unsigned r)
{
    if (k < 2)
        throw InputError("eta needs k >= 2");
    if (r < 1)
        throw InputError("eta needs r >= 1");
    std::vector<FormulaNode> pairs;
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = i + 1; j < k; ++j) {
            std::vector<FormulaNode> splits;
            for (unsigned a = 0; a <= r; ++a)
                splits.push_back(FormulaNode::all_of({FormulaNode::atom(a, i, 0), FormulaNode::atom(r - a, j, 0)}));
            pairs.push_back(FormulaNode::negation(FormulaNode::any_of(std::move(splits))));
        }
    }
    if (pairs.size() == 1)
        return DistanceFormula(k, 1, std::move(pairs.front()));
    return DistanceFormula(k, 1, FormulaNode::all_of(std::move(pairs)));
}

namespace {

unsigned read_index(const json& object, const char* key, const std::string& where)
{
    auto it = object.find(key);
    if (it == object.end())
        throw ParseError((where.empty() ? "/" : where) + ": missing \"" + key + "\"");
    if (!it->is_number_integer())
        throw ParseError(where + "/" + key + ": expected an integer");
    const auto value = it->get<long long>();
    if (value < 0)
        throw ParseError(where + "/" + key + ": must be non-negative");
    if (value > 1'000'000)
        throw ParseError(where + "/" + key + ": value too large");
    return static_cast<unsigned>(value);
}

FormulaNode parse_node(const json& node, const std::string& where, unsigned depth)
{
    if (depth > 256)
        throw ParseError(where + ": nesting too deep");
    if (!node.is_object() || node.size() != 1)
        throw ParseError(where + ": expected an object with exactly one of atom/and/or/not");
    const auto first = node.begin();
    const std::string key = first.key();
    const json& value = first.value();
    const std::string here = where + "/" + key;
    if (key == "atom") {
        if (!value.is_object())
            throw ParseError(here + ": expected an object");
        return FormulaNode::atom(read_index(value, "q", here), read_index(value, "x", here),
                                 read_index(value, "y", here));
    }
    if (key == "and" || key == "or") {
        if (!value.is_array())
            throw ParseError(here + ": expected an array");
        std::vector<FormulaNode> children;
        for (std::size_t i = 0; i < value.size(); ++i)
            children.push_back(parse_node(value[i], here + "/" + std::to_string(i), depth + 1));
        return key == "and" ? FormulaNode::all_of(std::move(children)) : FormulaNode::any_of(std::move(children));
    }
    if (key == "not")
        return FormulaNode::negation(parse_node(value, here, depth + 1));
    throw ParseError(where + ": unknown node kind \"" + key + "\"");
}

json node_to_json(const FormulaNode& node)
{
    switch (node.kind) {
    case NodeKind::Atom:
        return {{"atom", {{"q", node.q}, {"x", node.x_var}, {"y", node.y_var}}}};
    case NodeKind::And:
    case NodeKind::Or: {
        json children = json::array();
        for (const auto& child : node.children)
            children.push_back(node_to_json(child));
        return {{node.kind == NodeKind::And ? "and" : "or", std::move(children)}};
    }
    case NodeKind::Not:
        return {{"not", node_to_json(node.children.front())}};
    }
    return nullptr;
}

void print_node(const FormulaNode& node, std::ostringstream& out)
{
    switch (node.kind) {
    case NodeKind::Atom:
        out << "d" << node.q << "(x" << node.x_var << ",y" << node.y_var << ")";
        return;
    case NodeKind::Not:
        out << "!";
        print_node(node.children.front(), out);
        return;
    case NodeKind::And:
    case NodeKind::Or: {
        out << (node.kind == NodeKind::And ? "and(" : "or(");
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i)
                out << ",";
            print_node(node.children[i], out);
        }
        out << ")";
        return;
    }
    }
}

}  // namespace

DistanceFormula parse_formula(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("/: expected an object");
    const unsigned c = read_index(doc, "c", "");
    const unsigned d = read_index(doc, "d", "");
    if (!doc.contains("node"))
        throw ParseError("/: missing \"node\"");
    FormulaNode root = parse_node(doc["node"], "/node", 0);
    try {
        return DistanceFormula(c, d, std::move(root));
    } catch (const InputError& e) {
        throw ParseError(std::string("/node: ") + e.what());
    }
}

std::string serialize(const DistanceFormula& f)
{
    json doc = {{"c", f.candidate_arity()}, {"d", f.witness_arity()}, {"node", node_to_json(f.root())}};
    return doc.dump();
}

std::string to_string(const DistanceFormula& f)
{
    std::ostringstream out;
    print_node(f.root(), out);
    return out.str();
}

}  // namespace pe
