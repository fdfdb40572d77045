#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mvpav/eval.hpp"

namespace mvpav {

/// Finite algebra given by operation tables over carrier {0, ..., size-1}.
struct FiniteAlgebra {
    struct Op {
        std::string name;
        int arity = 0;              // 0, 1 or 2
        std::vector<int> table;     // 1, size, or size*size (row-major) entries
    };

    int size = 0;
    std::vector<Op> ops;
    // Optional named signature subsets for reduct/expansion comparison.
    std::vector<std::string> reduct_ops;
    std::vector<std::string> expansion_ops;

    const Op& op(const std::string& name) const;
    int apply(const Op& op, int a = 0, int b = 0) const;

    /// Indices of ops named in `names`; empty names = all ops.
    std::vector<int> op_indices(const std::vector<std::string>& names) const;

    /// The base-signature MV-chain with the given denominator
    /// (ops: impl, neg, odot, oplus, meet, join, zero, one).
    static FiniteAlgebra chain(int denom);
    /// Componentwise direct product; op sets must agree by name/arity.
    static FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

    /// File format:
    ///   carrier: m
    ///   op: name/arity
    ///   <table rows>             (arity 2: m rows of m entries;
    ///                             arity 1: one row of m; arity 0: one entry)
    ///   reduct: name1 name2 ...      (optional)
    ///   expansion: name1 name2 ...   (optional)
    /// Lines beginning with '#' are comments.
    static FiniteAlgebra load(std::istream& in);
    static FiniteAlgebra load_file(const std::string& path);
    void save(std::ostream& out) const;
};

/// Partition of the carrier as element -> class id, normalized so class ids
/// appear in first-occurrence order (0, 1, 2, ...).
using Partition = std::vector<int>;

Partition normalize_partition(Partition p);
Partition partition_meet(const Partition& a, const Partition& b);
std::string partition_blocks_str(const Partition& p);  // "{0,1}{2}" form

struct CongruenceSet {
    std::vector<Partition> partitions;  // sorted, deduplicated

    bool contains(const Partition& p) const;
    std::size_t size() const { return partitions.size(); }
};

/// All congruences of the algebra restricted to the listed operations
/// (all operations when `op_names` is empty). Generates each principal
/// congruence by operation/transitivity closure, then closes the set under
/// joins; every congruence is a join of principal ones, so the result is
/// exhaustive. Throws SizeBoundError if the carrier exceeds `size_bound`.
CongruenceSet enumerate_congruences(const FiniteAlgebra& a,
                                    const std::vector<std::string>& op_names = {},
                                    int size_bound = 40);

/// True iff the congruences of the reduct signature and of the expansion
/// signature coincide. Signatures default to the algebra's reduct_ops /
/// expansion_ops (all ops if the expansion list is empty).
bool check_compatible_expansion(const FiniteAlgebra& a, int size_bound = 40);

}  // namespace mvpav
