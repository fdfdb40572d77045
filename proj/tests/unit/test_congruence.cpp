#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "mvpav/congruence.hpp"
#include "mvpav/errors.hpp"

using namespace mvpav;

namespace {

// Independent brute-force oracle: enumerate every partition of the carrier
// (restricted growth strings) and keep the ones compatible with all listed
// operations. Exponential; fine for carriers up to ~10.
std::vector<Partition> brute_force_congruences(
    const FiniteAlgebra& a, const std::vector<std::string>& names = {}) {
    std::vector<int> op_idx = a.op_indices(names);
    std::vector<Partition> out;
    Partition p(static_cast<std::size_t>(a.size), 0);
    std::function<void(int, int)> rec = [&](int i, int maxc) {
        if (i == a.size) {
            // compatibility check
            for (int oi : op_idx) {
                const FiniteAlgebra::Op& op =
                    a.ops[static_cast<std::size_t>(oi)];
                if (op.arity == 1) {
                    for (int x = 0; x < a.size; ++x)
                        for (int y = 0; y < a.size; ++y)
                            if (p[x] == p[y] &&
                                p[op.table[x]] != p[op.table[y]])
                                return;
                } else if (op.arity == 2) {
                    for (int x1 = 0; x1 < a.size; ++x1)
                        for (int y1 = 0; y1 < a.size; ++y1)
                            for (int x2 = 0; x2 < a.size; ++x2)
                                for (int y2 = 0; y2 < a.size; ++y2)
                                    if (p[x1] == p[x2] && p[y1] == p[y2] &&
                                        p[op.table[x1 * a.size + y1]] !=
                                            p[op.table[x2 * a.size + y2]])
                                        return;
                }
            }
            out.push_back(p);
            return;
        }
        for (int c = 0; c <= maxc + 1; ++c) {
            p[static_cast<std::size_t>(i)] = c;
            rec(i + 1, std::max(maxc, c));
        }
    };
    rec(1, 0);  // p[0] = 0 fixed: restricted growth
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("finite chains are simple (oracle agrees)") {
    for (int m = 2; m <= 6; ++m) {
        FiniteAlgebra chain = FiniteAlgebra::chain(m - 1);
        CongruenceSet cs = enumerate_congruences(chain);
        CHECK(cs.size() == 2);
        CHECK(cs.partitions == brute_force_congruences(chain));
    }
}

TEST_CASE("product of the 2- and 3-element chains has four congruences") {
    FiniteAlgebra prod = FiniteAlgebra::product(FiniteAlgebra::chain(1),
                                                FiniteAlgebra::chain(2));
    CongruenceSet cs = enumerate_congruences(prod);
    CHECK(cs.size() == 4);
    CHECK(cs.partitions == brute_force_congruences(prod));
}

TEST_CASE("single-element algebra has exactly one congruence") {
    FiniteAlgebra one;
    one.size = 1;
    one.ops.push_back({"impl", 2, {0}});
    CongruenceSet cs = enumerate_congruences(one);
    CHECK(cs.size() == 1);
}

TEST_CASE("congruence sets contain identity and total and are meet-closed") {
    FiniteAlgebra prod = FiniteAlgebra::product(FiniteAlgebra::chain(1),
                                                FiniteAlgebra::chain(2));
    CongruenceSet cs = enumerate_congruences(prod);
    Partition identity(static_cast<std::size_t>(prod.size));
    for (int i = 0; i < prod.size; ++i)
        identity[static_cast<std::size_t>(i)] = i;
    Partition total(static_cast<std::size_t>(prod.size), 0);
    CHECK(cs.contains(identity));
    CHECK(cs.contains(total));
    for (const Partition& a : cs.partitions)
        for (const Partition& b : cs.partitions)
            CHECK(cs.contains(partition_meet(a, b)));
}

TEST_CASE("adding a constant never disturbs the congruences") {
    // fixpoint-style constant on the 2x3 chain product: component value
    // (0, 1/2); nullary operations are compatible with every partition
    FiniteAlgebra prod = FiniteAlgebra::product(FiniteAlgebra::chain(1),
                                                FiniteAlgebra::chain(2));
    for (const auto& op : prod.ops) prod.reduct_ops.push_back(op.name);
    prod.ops.push_back({"k", 0, {1}});  // element (0, 1/2) = index 1
    for (const auto& op : prod.ops) prod.expansion_ops.push_back(op.name);
    CHECK(check_compatible_expansion(prod));
}

TEST_CASE("an incompatible unary expansion is detected") {
    // On the 2x3 product, the kernel of the first projection is a congruence
    // of the reduct. A unary op sending (0,0) to itself but (0,1/2) across
    // to (1,0) breaks it, so the expansion has strictly fewer congruences.
    FiniteAlgebra prod = FiniteAlgebra::product(FiniteAlgebra::chain(1),
                                                FiniteAlgebra::chain(2));
    for (const auto& op : prod.ops) prod.reduct_ops.push_back(op.name);
    // elements: (a,b) -> a*3 + b with a in {0,1}, b in {0,1,2}
    FiniteAlgebra::Op u{"u", 1, {0, 3, 0, 3, 3, 3}};
    prod.ops.push_back(u);
    for (const auto& op : prod.ops) prod.expansion_ops.push_back(op.name);
    CHECK_FALSE(check_compatible_expansion(prod));
    // simple algebras, by contrast, tolerate any expansion
    FiniteAlgebra chain = FiniteAlgebra::chain(3);
    for (const auto& op : chain.ops) chain.reduct_ops.push_back(op.name);
    chain.ops.push_back({"swapish", 1, {0, 2, 1, 3}});
    for (const auto& op : chain.ops) chain.expansion_ops.push_back(op.name);
    CHECK(check_compatible_expansion(chain));
}

TEST_CASE("size bound is enforced") {
    FiniteAlgebra big;
    big.size = 41;
    FiniteAlgebra::Op op{"id", 1, {}};
    for (int i = 0; i < big.size; ++i) op.table.push_back(i);
    big.ops.push_back(op);
    CHECK_THROWS_AS(enumerate_congruences(big), SizeBoundError);
}

TEST_CASE("algebra file round-trip") {
    FiniteAlgebra chain = FiniteAlgebra::chain(2);
    chain.reduct_ops = {"impl", "neg"};
    std::stringstream ss;
    chain.save(ss);
    FiniteAlgebra back = FiniteAlgebra::load(ss);
    CHECK(back.size == chain.size);
    REQUIRE(back.ops.size() == chain.ops.size());
    for (std::size_t i = 0; i < back.ops.size(); ++i) {
        CHECK(back.ops[i].name == chain.ops[i].name);
        CHECK(back.ops[i].table == chain.ops[i].table);
    }
    CHECK(back.reduct_ops == chain.reduct_ops);
}
