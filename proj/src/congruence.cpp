#include "mvpav/congruence.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "mvpav/errors.hpp"

namespace mvpav {

const FiniteAlgebra::Op& FiniteAlgebra::op(const std::string& name) const {
    for (const Op& o : ops)
        if (o.name == name) return o;
    throw Error("algebra has no operation named: " + name);
}

int FiniteAlgebra::apply(const Op& o, int a, int b) const {
    switch (o.arity) {
        case 0:
            return o.table[0];
        case 1:
            return o.table[a];
        case 2:
            return o.table[a * size + b];
        default:
            throw Error("unsupported arity");
    }
}

std::vector<int> FiniteAlgebra::op_indices(
    const std::vector<std::string>& names) const {
    std::vector<int> out;
    if (names.empty()) {
        out.resize(ops.size());
        std::iota(out.begin(), out.end(), 0);
        return out;
    }
    for (const std::string& n : names) {
        bool found = false;
        for (std::size_t i = 0; i < ops.size(); ++i)
            if (ops[i].name == n) {
                out.push_back(static_cast<int>(i));
                found = true;
                break;
            }
        if (!found) throw Error("algebra has no operation named: " + n);
    }
    return out;
}

FiniteAlgebra FiniteAlgebra::chain(int denom) {
    FiniteChain c(denom);
    FiniteAlgebra a;
    a.size = c.size();
    auto table2 = [&](const std::string& name, auto fn) {
        Op o{name, 2, {}};
        o.table.resize(a.size * a.size);
        for (int i = 0; i < a.size; ++i)
            for (int j = 0; j < a.size; ++j) o.table[i * a.size + j] = fn(i, j);
        a.ops.push_back(std::move(o));
    };
    table2("impl", [&](int i, int j) { return c.impl(i, j); });
    table2("odot", [&](int i, int j) { return c.odot(i, j); });
    table2("oplus", [&](int i, int j) { return c.oplus(i, j); });
    table2("meet", [&](int i, int j) { return c.meet(i, j); });
    table2("join", [&](int i, int j) { return c.join(i, j); });
    Op neg{"neg", 1, {}};
    neg.table.resize(a.size);
    for (int i = 0; i < a.size; ++i) neg.table[i] = c.neg(i);
    a.ops.push_back(std::move(neg));
    a.ops.push_back(Op{"zero", 0, {0}});
    a.ops.push_back(Op{"one", 0, {a.size - 1}});
    return a;
}

FiniteAlgebra FiniteAlgebra::product(const FiniteAlgebra& a,
                                     const FiniteAlgebra& b) {
    if (a.ops.size() != b.ops.size())
        throw Error("product: signature mismatch");
    FiniteAlgebra p;
    p.size = a.size * b.size;
    // element (i, j) -> i * b.size + j
    for (std::size_t k = 0; k < a.ops.size(); ++k) {
        const Op& oa = a.ops[k];
        const Op& ob = b.ops[k];
        if (oa.name != ob.name || oa.arity != ob.arity)
            throw Error("product: signature mismatch at " + oa.name);
        Op op{oa.name, oa.arity, {}};
        switch (oa.arity) {
            case 0:
                op.table = {oa.table[0] * b.size + ob.table[0]};
                break;
            case 1:
                op.table.resize(p.size);
                for (int i = 0; i < a.size; ++i)
                    for (int j = 0; j < b.size; ++j)
                        op.table[i * b.size + j] =
                            oa.table[i] * b.size + ob.table[j];
                break;
            case 2:
                op.table.resize(p.size * p.size);
                for (int i1 = 0; i1 < a.size; ++i1)
                    for (int j1 = 0; j1 < b.size; ++j1)
                        for (int i2 = 0; i2 < a.size; ++i2)
                            for (int j2 = 0; j2 < b.size; ++j2) {
                                int x = i1 * b.size + j1;
                                int y = i2 * b.size + j2;
                                op.table[x * p.size + y] =
                                    oa.table[i1 * a.size + i2] * b.size +
                                    ob.table[j1 * b.size + j2];
                            }
                break;
            default:
                throw Error("unsupported arity");
        }
        p.ops.push_back(std::move(op));
    }
    return p;
}

namespace {
std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string w;
    while (ss >> w) out.push_back(w);
    return out;
}
}  // namespace

FiniteAlgebra FiniteAlgebra::load(std::istream& in) {
    FiniteAlgebra a;
    std::string line;
    std::vector<int>* pending = nullptr;
    std::size_t pending_need = 0;
    while (std::getline(in, line)) {
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.rfind("carrier:", 0) == 0) {
            a.size = std::stoi(trim(s.substr(8)));
            if (a.size < 1) throw Error("carrier size must be >= 1");
            continue;
        }
        if (s.rfind("op:", 0) == 0) {
            if (pending && pending->size() != pending_need)
                throw Error("operation table incomplete");
            std::string rest = trim(s.substr(3));
            auto slash = rest.find('/');
            if (slash == std::string::npos)
                throw Error("op header must be 'op: name/arity'");
            Op o;
            o.name = trim(rest.substr(0, slash));
            o.arity = std::stoi(trim(rest.substr(slash + 1)));
            if (o.arity < 0 || o.arity > 2) throw Error("unsupported arity");
            a.ops.push_back(std::move(o));
            pending = &a.ops.back().table;
            pending_need = a.ops.back().arity == 0
                               ? 1
                               : (a.ops.back().arity == 1
                                      ? static_cast<std::size_t>(a.size)
                                      : static_cast<std::size_t>(a.size) *
                                            static_cast<std::size_t>(a.size));
            continue;
        }
        if (s.rfind("reduct:", 0) == 0) {
            a.reduct_ops = split_ws(s.substr(7));
            continue;
        }
        if (s.rfind("expansion:", 0) == 0) {
            a.expansion_ops = split_ws(s.substr(10));
            continue;
        }
        if (!pending) throw Error("table row outside an op block");
        for (const std::string& w : split_ws(s)) {
            int v = std::stoi(w);
            if (v < 0 || v >= a.size)
                throw Error("table entry out of carrier range: " + w);
            pending->push_back(v);
        }
    }
    if (pending && pending->size() != pending_need)
        throw Error("operation table incomplete");
    if (a.size == 0) throw Error("algebra file missing 'carrier:' header");
    return a;
}

FiniteAlgebra FiniteAlgebra::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open algebra file: " + path);
    return load(in);
}

void FiniteAlgebra::save(std::ostream& out) const {
    out << "carrier: " << size << "\n";
    for (const Op& o : ops) {
        out << "op: " << o.name << "/" << o.arity << "\n";
        if (o.arity == 2) {
            for (int i = 0; i < size; ++i) {
                for (int j = 0; j < size; ++j)
                    out << (j ? " " : "") << o.table[i * size + j];
                out << "\n";
            }
        } else {
            for (std::size_t i = 0; i < o.table.size(); ++i)
                out << (i ? " " : "") << o.table[i];
            out << "\n";
        }
    }
    auto emit = [&](const char* key, const std::vector<std::string>& names) {
        if (names.empty()) return;
        out << key << ":";
        for (const auto& n : names) out << " " << n;
        out << "\n";
    };
    emit("reduct", reduct_ops);
    emit("expansion", expansion_ops);
}

Partition normalize_partition(Partition p) {
    std::vector<int> remap(p.size(), -1);
    int next = 0;
    for (int& c : p) {
        if (remap[c] == -1) remap[c] = next++;
        c = remap[c];
    }
    return p;
}

Partition partition_meet(const Partition& a, const Partition& b) {
    Partition out(a.size());
    std::map<std::pair<int, int>, int> ids;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto key = std::make_pair(a[i], b[i]);
        auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
        out[i] = it->second;
    }
    return normalize_partition(std::move(out));
}

std::string partition_blocks_str(const Partition& p) {
    int classes = p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
    std::string out;
    for (int c = 0; c < classes; ++c) {
        out += '{';
        bool first = true;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] == c) {
                if (!first) out += ',';
                out += std::to_string(i);
                first = false;
            }
        out += '}';
    }
    return out;
}

bool CongruenceSet::contains(const Partition& p) const {
    return std::binary_search(partitions.begin(), partitions.end(), p);
}

namespace {

// Union-find over the carrier.
struct Uf {
    std::vector<int> parent;
    explicit Uf(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
    Partition partition() {
        Partition p(parent.size());
        for (std::size_t i = 0; i < parent.size(); ++i)
            p[i] = find(static_cast<int>(i));
        return normalize_partition(std::move(p));
    }
};

// Closes uf under compatibility with the listed operations: whenever two
// tuples are componentwise related, their images get merged.
void close_under_ops(const FiniteAlgebra& a, const std::vector<int>& op_idx,
                     Uf& uf) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int oi : op_idx) {
            const FiniteAlgebra::Op& op = a.ops[static_cast<std::size_t>(oi)];
            if (op.arity == 0) continue;
            if (op.arity == 1) {
                // group elements by class; merge images within a group
                std::map<int, int> rep;  // class -> image representative
                for (int x = 0; x < a.size; ++x) {
                    int c = uf.find(x);
                    int y = op.table[x];
                    auto it = rep.find(c);
                    if (it == rep.end())
                        rep.emplace(c, y);
                    else if (uf.merge(it->second, y))
                        changed = true;
                }
            } else {
                std::map<std::pair<int, int>, int> rep;
                for (int x = 0; x < a.size; ++x)
                    for (int y = 0; y < a.size; ++y) {
                        auto key = std::make_pair(uf.find(x), uf.find(y));
                        int z = op.table[x * a.size + y];
                        auto it = rep.find(key);
                        if (it == rep.end())
                            rep.emplace(key, z);
                        else if (uf.merge(it->second, z))
                            changed = true;
                    }
            }
        }
    }
}

Partition principal_congruence(const FiniteAlgebra& a,
                               const std::vector<int>& op_idx, int x, int y) {
    Uf uf(a.size);
    uf.merge(x, y);
    close_under_ops(a, op_idx, uf);
    return uf.partition();
}

// Join of two congruences = transitive closure of their union (which is
// again compatible, so no operation re-closure is needed).
Partition join_partitions(const Partition& p, const Partition& q) {
    Uf uf(static_cast<int>(p.size()));
    std::map<int, int> firstp, firstq;
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto [itp, freshp] = firstp.emplace(p[i], static_cast<int>(i));
        if (!freshp) uf.merge(itp->second, static_cast<int>(i));
        auto [itq, freshq] = firstq.emplace(q[i], static_cast<int>(i));
        if (!freshq) uf.merge(itq->second, static_cast<int>(i));
    }
    return uf.partition();
}

}  // namespace

CongruenceSet enumerate_congruences(const FiniteAlgebra& a,
                                    const std::vector<std::string>& op_names,
                                    int size_bound) {
    if (a.size > size_bound)
        throw SizeBoundError("carrier size " + std::to_string(a.size) +
                             " exceeds bound " + std::to_string(size_bound));
    std::vector<int> op_idx = a.op_indices(op_names);

    std::vector<Partition> found;
    Partition identity(a.size);
    std::iota(identity.begin(), identity.end(), 0);
    found.push_back(identity);

    for (int x = 0; x < a.size; ++x)
        for (int y = x + 1; y < a.size; ++y) {
            Partition p = principal_congruence(a, op_idx, x, y);
            found.push_back(std::move(p));
        }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    // close under joins
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Partition> fresh;
        for (std::size_t i = 0; i < found.size(); ++i)
            for (std::size_t j = i + 1; j < found.size(); ++j) {
                Partition joined = join_partitions(found[i], found[j]);
                if (!std::binary_search(found.begin(), found.end(), joined))
                    fresh.push_back(std::move(joined));
            }
        if (!fresh.empty()) {
            changed = true;
            found.insert(found.end(), fresh.begin(), fresh.end());
            std::sort(found.begin(), found.end());
            found.erase(std::unique(found.begin(), found.end()), found.end());
        }
    }

    CongruenceSet out;
    out.partitions = std::move(found);
    return out;
}

bool check_compatible_expansion(const FiniteAlgebra& a, int size_bound) {
    std::vector<std::string> reduct = a.reduct_ops;
    std::vector<std::string> expansion = a.expansion_ops;
    if (expansion.empty())
        for (const auto& o : a.ops) expansion.push_back(o.name);
    if (reduct.empty())
        throw PreconditionError(
            "compatible-expansion check needs a reduct signature");
    CongruenceSet cr = enumerate_congruences(a, reduct, size_bound);
    CongruenceSet ce = enumerate_congruences(a, expansion, size_bound);
    return cr.partitions == ce.partitions;
}

}  // namespace mvpav
