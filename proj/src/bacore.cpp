#include "locba/bacore.hpp"

namespace locba {

std::vector<Subset> ultrafilters(const BoolAlg& A) {
    std::vector<Subset> out;
    for (EIdx atom : A.atoms()) out.push_back(principal_ultrafilter(A, atom));
    return out;  // trivial algebra: no atoms, no ultrafilters
}

std::vector<Subset> bounded_ultrafilters(const BoolAlg& A, const Subset& I) {
    if (I.size() != A.size()) throw Error::validation("ideal size mismatch");
    std::vector<Subset> out;
    for (const Subset& u : ultrafilters(A)) {
        bool meets = false;
        for (std::size_t i = 0; i < u.size() && !meets; ++i)
            if (u[i] && I[i]) meets = true;
        if (meets) out.push_back(u);
    }
    return out;
}

std::vector<Subset> maximal_proper_filters_bruteforce(const BoolAlg& A) {
    const std::size_t n = A.size();
    if (n > 16) throw Error::scope("brute-force filter scan needs carrier size <= 16");
    std::vector<IdxMask> filters;
    const IdxMask all = (IdxMask{1} << n) - 1;
    for (IdxMask m = 1; m <= all; ++m) {
        Subset s = subset_from_mask(n, m);
        if (is_proper_filter(A, s)) filters.push_back(m);
    }
    std::vector<Subset> out;
    for (IdxMask m : filters) {
        bool maximal = true;
        for (IdxMask m2 : filters)
            if (m2 != m && (m & m2) == m) { maximal = false; break; }
        if (maximal) out.push_back(subset_from_mask(n, m));
    }
    return out;
}

std::vector<Subset> enumerate_dense_ideals(const BoolAlg& A, std::size_t cap) {
    std::vector<Subset> out;
    for (IdxMask m : enumerate_ideal_masks(A, cap)) {
        Subset s = subset_from_mask(A.size(), m);
        if (dense_subset_check(A, s).dense) out.push_back(s);
    }
    return out;
}

}  // namespace locba
