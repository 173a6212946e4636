#pragma once
#include "scy/matrix.hpp"
#include "scy/mono.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace scy {

struct GroupCapExceeded : std::runtime_error {
    GroupCapExceeded() : std::runtime_error("group not finite within cap") {}
};

template <class T> struct GroupOps;

template <> struct GroupOps<MonoTransform> {
    using Key = unsigned __int128;
    using Hash = KeyHash;
    static Key key(const MonoTransform& t) { return t.key(); }
    static MonoTransform mul(const MonoTransform& a, const MonoTransform& b) { return a * b; }
    static MonoTransform normalize(const MonoTransform& t, bool projective) { return projective ? t.normalized() : t; }
    static MonoTransform identity_like(const MonoTransform& t) { return MonoTransform::identity(t.n); }
};

template <> struct GroupOps<ExactMatrix> {
    using Key = std::string;
    using Hash = std::hash<std::string>;
    static Key key(const ExactMatrix& m) { return m.key(); }
    static ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b) { return a * b; }
    static ExactMatrix normalize(const ExactMatrix& m, bool projective)
    {
        if (!projective) return m;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero()) return m.scaled(m(i, j).inv());
        return m;
    }
    static ExactMatrix identity_like(const ExactMatrix& m) { return ExactMatrix::identity(m.rows()); }
};

enum class GroupMode { Linear, Projective };

// Finite group materialized by breadth-first closure; elements carry generator words.
template <class T> class FiniteGroup {
public:
    using Ops = GroupOps<T>;
    using Key = typename Ops::Key;

    static FiniteGroup closure(const std::vector<T>& gens, GroupMode mode, size_t cap = size_t(1) << 20,
                               const T* identity = nullptr)
    {
        FiniteGroup g;
        g.projective_ = mode == GroupMode::Projective;
        for (auto& x : gens) g.gens_.push_back(g.norm(x));
        T id = identity ? *identity : (gens.empty() ? T{} : Ops::identity_like(gens[0]));
        g.add(g.norm(id), -1, -1);
        for (size_t head = 0; head < g.elems_.size(); ++head) {
            for (size_t s = 0; s < g.gens_.size(); ++s) {
                T y = g.norm(Ops::mul(g.elems_[head], g.gens_[s]));
                if (g.index_.count(Ops::key(y))) continue;
                if (g.elems_.size() >= cap) throw GroupCapExceeded();
                g.add(std::move(y), int(head), int(s));
            }
        }
        return g;
    }

    size_t order() const { return elems_.size(); }
    bool projective() const { return projective_; }
    const std::vector<T>& elements() const { return elems_; }
    const T& operator[](size_t i) const { return elems_[i]; }
    const std::vector<T>& generators() const { return gens_; }
    T norm(const T& x) const { return Ops::normalize(x, projective_); }
    int index_of(const T& x) const
    {
        auto it = index_.find(Ops::key(norm(x)));
        return it == index_.end() ? -1 : it->second;
    }
    bool contains(const T& x) const { return index_of(x) >= 0; }
    int mul_index(int a, int b) const { return index_of(Ops::mul(elems_[a], elems_[b])); }
    // Generator indices whose product (left to right) gives element idx.
    std::vector<int> word(int idx) const
    {
        std::vector<int> w;
        while (parent_[idx] >= 0) {
            w.push_back(via_[idx]);
            idx = parent_[idx];
        }
        return {w.rbegin(), w.rend()};
    }
    int identity_index() const { return 0; }
    int inverse_index(int a) const
    {
        // x^-1 = x^(ord-1)
        T p = elems_[a];
        T prev = elems_[0];
        for (;;) {
            if (index_of(p) == 0) return index_of(prev);
            prev = p;
            p = norm(Ops::mul(p, elems_[a]));
        }
    }
    int element_order(int a) const
    {
        T p = elems_[a];
        int k = 1;
        while (index_of(p) != 0) {
            p = norm(Ops::mul(p, elems_[a]));
            ++k;
        }
        return k;
    }
    // Elements commuting with every generator.
    std::vector<int> center() const
    {
        std::vector<int> out;
        for (size_t a = 0; a < elems_.size(); ++a) {
            bool ok = true;
            for (auto& s : gens_)
                if (Ops::key(norm(Ops::mul(elems_[a], s))) != Ops::key(norm(Ops::mul(s, elems_[a])))) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(int(a));
        }
        return out;
    }
    // Permutation induced by right multiplication with x (index form).
    std::vector<int> conjugation_perm(const T& x) const
    {
        T xi = inverse_of(x);
        std::vector<int> p(elems_.size());
        for (size_t a = 0; a < elems_.size(); ++a) p[a] = index_of(Ops::mul(Ops::mul(xi, elems_[a]), x));
        return p;
    }
    T inverse_of(const T& x) const
    {
        T p = norm(x), prev = elems_[0];
        for (;;) {
            if (index_of(p) == 0) return prev;
            prev = p;
            p = norm(Ops::mul(p, norm(x)));
        }
    }

private:
    void add(T x, int parent, int via)
    {
        index_.emplace(Ops::key(x), int(elems_.size()));
        elems_.push_back(std::move(x));
        parent_.push_back(parent);
        via_.push_back(via);
    }
    bool projective_ = false;
    std::vector<T> gens_;
    std::vector<T> elems_;
    std::vector<int> parent_, via_;
    std::unordered_map<Key, int, typename Ops::Hash> index_;
};

using MonoGroup = FiniteGroup<MonoTransform>;
using MatrixGroup = FiniteGroup<ExactMatrix>;

// Subgroups of a small group given by its multiplication table, each as a sorted element list.
struct SubgroupLattice {
    std::vector<std::vector<int>> subgroups;
};
SubgroupLattice all_subgroups(const std::vector<std::vector<int>>& table, size_t max_order = 1024);
// Closure of a set of elements under a multiplication table.
std::vector<int> table_closure(const std::vector<std::vector<int>>& table, const std::vector<int>& gens);

// Conjugacy classes of order-2 subgroups: involution indices grouped by conjugation under gens.
template <class T>
std::vector<std::vector<int>> involution_classes(const FiniteGroup<T>& g)
{
    std::vector<int> inv;
    std::vector<int> pos(g.order(), -1);
    for (size_t a = 1; a < g.order(); ++a)
        if (g.mul_index(int(a), int(a)) == 0) {
            pos[a] = int(inv.size());
            inv.push_back(int(a));
        }
    std::vector<int> uf(inv.size());
    for (size_t i = 0; i < uf.size(); ++i) uf[i] = int(i);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (auto& s : g.generators()) {
        auto si = g.inverse_of(s);
        for (size_t i = 0; i < inv.size(); ++i) {
            int j = g.index_of(GroupOps<T>::mul(GroupOps<T>::mul(si, g[inv[i]]), s));
            int a = find(int(i)), b = find(pos[j]);
            if (a != b) uf[a] = b;
        }
    }
    std::unordered_map<int, std::vector<int>> cls;
    for (size_t i = 0; i < inv.size(); ++i) cls[find(int(i))].push_back(inv[i]);
    std::vector<std::vector<int>> out;
    for (auto& [r, v] : cls) out.push_back(v);
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.size() != b.size() ? a.size() < b.size() : a[0] < b[0]; });
    return out;
}

template <class T>
std::vector<std::vector<int>> multiplication_table(const FiniteGroup<T>& g)
{
    std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
    for (size_t a = 0; a < g.order(); ++a)
        for (size_t b = 0; b < g.order(); ++b) t[a][b] = g.mul_index(int(a), int(b));
    return t;
}

}  // namespace scy
