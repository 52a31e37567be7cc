#include "mz/series.hpp"

namespace mz {

std::vector<Exps> exponent_box(const Exps& bound) {
    std::vector<Exps> out;
    Exps e(bound.size(), 0);
    while (true) {
        out.push_back(e);
        size_t i = 0;
        while (i < e.size()) {
            if (++e[i] <= bound[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == e.size()) break;
    }
    std::stable_sort(out.begin(), out.end(), [](const Exps& a, const Exps& b) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

}  // namespace mz
