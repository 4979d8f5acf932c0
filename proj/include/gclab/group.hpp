#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gclab {

// A finite group with elements 0..order-1 given either as a product of
// cyclic groups (mixed-radix element encoding) or as an explicit Cayley
// table. Tables are validated against the group axioms at construction.
// Immutable after construction; all operations are pure.
class Group {
  public:
    static Group cyclic_product(const std::vector<int>& moduli);
    static Group from_table(const std::vector<std::vector<int>>& table);
    static Group symmetric3();

    // "Z5", "Z2xZ4", "S3".
    static Group parse(const std::string& spec);
    // {"order": n, "table": [[...], ...]}
    static Group from_json(const nlohmann::json& j);

    int order() const { return order_; }
    int zero() const { return identity_; }
    int op(int a, int b) const {
        check_elem(a); check_elem(b);
        return op_[static_cast<std::size_t>(a) * order_ + b];
    }
    int inv(int a) const { check_elem(a); return inv_[a]; }
    // op(a, inv(b)): the "difference" used by edge constraints.
    int sub(int a, int b) const { return op(a, inv(b)); }

    // Each element exactly once, ascending index.
    std::vector<int> elements() const;

    bool abelian() const { return abelian_; }
    const std::string& name() const { return name_; }

    // Raw table access for solver hot loops (no bounds checks).
    const int* op_table() const { return op_.data(); }
    const int* inv_table() const { return inv_.data(); }

  private:
    Group() = default;
    void finish(); // derive inverse table, abelian flag; validate axioms
    void check_elem(int a) const;

    int order_ = 0;
    int identity_ = 0;
    bool abelian_ = true;
    std::vector<int> op_;
    std::vector<int> inv_;
    std::string name_;
};

} // namespace gclab
