#include "gclab/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gclab {

void Group::check_elem(int a) const {
    if (a < 0 || a >= order_)
        throw std::invalid_argument("group element out of range: " + std::to_string(a));
}

void Group::finish() {
    const int n = order_;
    // identity: two-sided, must exist and be unique
    identity_ = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = op_[static_cast<std::size_t>(e) * n + a] == a &&
                 op_[static_cast<std::size_t>(a) * n + e] == a;
        if (ok) {
            if (identity_ >= 0) throw std::invalid_argument("group table: two identities");
            identity_ = e;
        }
    }
    if (identity_ < 0) throw std::invalid_argument("group table: no identity element");

    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = op_[static_cast<std::size_t>(a) * n + b];
            for (int c = 0; c < n; ++c) {
                const int bc = op_[static_cast<std::size_t>(b) * n + c];
                if (op_[static_cast<std::size_t>(ab) * n + c] !=
                    op_[static_cast<std::size_t>(a) * n + bc])
                    throw std::invalid_argument("group table: not associative");
            }
        }

    // inverses
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (op_[static_cast<std::size_t>(a) * n + b] == identity_ &&
                op_[static_cast<std::size_t>(b) * n + a] == identity_) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] < 0) throw std::invalid_argument("group table: missing inverse");
    }

    abelian_ = true;
    for (int a = 0; a < n && abelian_; ++a)
        for (int b = a + 1; b < n; ++b)
            if (op_[static_cast<std::size_t>(a) * n + b] !=
                op_[static_cast<std::size_t>(b) * n + a]) {
                abelian_ = false;
                break;
            }
}

Group Group::cyclic_product(const std::vector<int>& moduli) {
    if (moduli.empty()) throw std::invalid_argument("cyclic product: no moduli");
    long long order = 1;
    for (int m : moduli) {
        if (m < 2) throw std::invalid_argument("cyclic product: modulus < 2");
        order *= m;
        if (order > 4096) throw std::invalid_argument("cyclic product: order too large");
    }
    Group g;
    g.order_ = static_cast<int>(order);
    g.op_.resize(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < g.order_; ++a)
        for (int b = 0; b < g.order_; ++b) {
            // mixed-radix componentwise addition, least significant first
            int ra = a, rb = b, out = 0, mul = 1;
            for (int m : moduli) {
                out += ((ra % m + rb % m) % m) * mul;
                ra /= m; rb /= m; mul *= m;
            }
            g.op_[static_cast<std::size_t>(a) * g.order_ + b] = out;
        }
    std::string nm;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i) nm += "x";
        nm += "Z" + std::to_string(moduli[i]);
    }
    g.name_ = nm;
    g.finish();
    return g;
}

Group Group::from_table(const std::vector<std::vector<int>>& table) {
    const std::size_t n = table.size();
    if (n == 0) throw std::invalid_argument("group table: empty");
    Group g;
    g.order_ = static_cast<int>(n);
    g.op_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw std::invalid_argument("group table: not square");
        for (std::size_t j = 0; j < n; ++j) {
            const int x = table[i][j];
            if (x < 0 || x >= static_cast<int>(n))
                throw std::invalid_argument("group table: entry out of range (closure)");
            g.op_[i * n + j] = x;
        }
    }
    g.name_ = "table" + std::to_string(n);
    g.finish();
    return g;
}

Group Group::symmetric3() {
    // permutations of {0,1,2} in lexicographic order; composition (p*q)(i) = p(q(i))
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> tab(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
            tab[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    Group g = from_table(tab);
    g.name_ = "S3";
    return g;
}

Group Group::parse(const std::string& spec) {
    if (spec == "S3") return symmetric3();
    std::vector<int> moduli;
    std::size_t i = 0;
    while (i < spec.size()) {
        if (spec[i] != 'Z') throw std::invalid_argument("bad group spec: " + spec);
        ++i;
        std::size_t j = i;
        while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) ++j;
        if (j == i) throw std::invalid_argument("bad group spec: " + spec);
        moduli.push_back(std::stoi(spec.substr(i, j - i)));
        i = j;
        if (i < spec.size()) {
            if (spec[i] != 'x') throw std::invalid_argument("bad group spec: " + spec);
            ++i;
        }
    }
    return cyclic_product(moduli);
}

Group Group::from_json(const nlohmann::json& j) {
    const int order = j.at("order").get<int>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != order)
        throw std::invalid_argument("group json: order/table mismatch");
    return from_table(table);
}

std::vector<int> Group::elements() const {
    std::vector<int> out(order_);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

} // namespace gclab
