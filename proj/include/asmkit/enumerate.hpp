#ifndef ASMKIT_ENUMERATE_HPP
#define ASMKIT_ENUMERATE_HPP

#include <asmkit/asm_matrix.hpp>
#include <asmkit/numbers.hpp>

#include <map>

namespace asmkit {

enum class Provenance { BruteForce, ClosedForm, Convolution };

std::string provenance_name(Provenance p);

struct RefinedTable {
    SymmetryClass cls = SymmetryClass::Plain;
    int order = 0;
    BoundaryStat stat = BoundaryStat::FirstRowOne;
    std::map<int, Int> counts;  // position -> count, in-domain zeros included
    Provenance provenance = Provenance::BruteForce;

    Int total() const {
        Int t = 0;
        for (const auto& [p, c] : counts) t += c;
        return t;
    }
    Int at(int pos) const {
        auto it = counts.find(pos);
        return it == counts.end() ? Int(0) : it->second;
    }
    // pointwise sum; partitioned parallel searches merge with this
    void merge(const RefinedTable& o) {
        for (const auto& [p, c] : o.counts) counts[p] += c;
    }
};

bool class_order_compatible(SymmetryClass cls, int order);

// positions where the statistic can a priori be nonzero for the class
std::vector<int> stat_domain(SymmetryClass cls, int order, BoundaryStat stat);

void enumerate_asms(int n, const std::function<void(const Asm&)>& visit);
void enumerate_class(SymmetryClass cls, int order, const std::function<void(const Asm&)>& visit);
void enumerate_perverse(int n, const std::function<void(const PerverseAsm&)>& visit);

RefinedTable refined_table(SymmetryClass cls, int order, BoundaryStat stat, int jobs = 1);
Int count_total(SymmetryClass cls, int order, int jobs = 1);

}  // namespace asmkit

#endif
