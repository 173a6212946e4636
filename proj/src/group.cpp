#include "scy/group.hpp"

#include <algorithm>
#include <set>

namespace scy {

std::vector<int> table_closure(const std::vector<std::vector<int>>& table, const std::vector<int>& gens)
{
    std::vector<char> in(table.size(), 0);
    std::vector<int> el{0};
    in[0] = 1;
    for (size_t h = 0; h < el.size(); ++h)
        for (int g : gens) {
            int y = table[el[h]][g];
            if (!in[y]) {
                in[y] = 1;
                el.push_back(y);
            }
        }
    std::sort(el.begin(), el.end());
    return el;
}

SubgroupLattice all_subgroups(const std::vector<std::vector<int>>& table, size_t max_order)
{
    size_t n = table.size();
    if (n > max_order) throw std::invalid_argument("group too large for subgroup enumeration");
    // inverses
    std::vector<int> inv(n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (table[a][b] == 0) inv[a] = int(b);
    // Cyclic extension: every subgroup L != 1 of a solvable group has a normal
    // subgroup K of prime index, so L = <K, g> with g normalizing K and g^p in K.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> layer{{0}};
    seen.insert({0});
    SubgroupLattice out;
    out.subgroups.push_back({0});
    while (!layer.empty()) {
        std::vector<std::vector<int>> next;
        for (auto& K : layer) {
            std::vector<char> inK(n, 0);
            for (int x : K) inK[x] = 1;
            for (size_t g = 0; g < n; ++g) {
                if (inK[g]) continue;
                // g normalizes K
                bool norm = true;
                for (int k : K)
                    if (!inK[table[table[inv[g]][k]][g]]) { norm = false; break; }
                if (!norm) continue;
                // g^p in K for a prime p
                int p = 0;
                int pw = int(g);
                for (int e = 1; e <= int(n); ++e) {
                    if (inK[pw]) { p = e; break; }
                    pw = table[pw][g];
                }
                bool prime = p > 1;
                for (int d = 2; d * d <= p && prime; ++d)
                    if (p % d == 0) prime = false;
                if (!prime) continue;
                std::vector<int> gens = K;
                gens.push_back(int(g));
                std::vector<int> L = table_closure(table, gens);
                if (seen.insert(L).second) {
                    next.push_back(L);
                    out.subgroups.push_back(L);
                }
            }
        }
        layer = std::move(next);
    }
    std::sort(out.subgroups.begin(), out.subgroups.end(),
              [](auto& a, auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    return out;
}

}  // namespace scy
