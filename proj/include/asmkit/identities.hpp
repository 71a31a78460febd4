#ifndef ASMKIT_IDENTITIES_HPP
#define ASMKIT_IDENTITIES_HPP

#include <asmkit/closed_forms.hpp>
#include <asmkit/sixvertex.hpp>

#include <mutex>

namespace asmkit {

struct IdentityCheck {
    std::string name;
    int n = 0;  // the instance parameter (usually the matrix order)
    enum class Status { Pass, Fail, Skipped } status = Status::Skipped;
    std::string witness;     // failing monomial / mismatch data, or skip reason
    std::string provenance;  // what the two sides were built from
    uint64_t seed = 0;

    static IdentityCheck pass(std::string name, int n, std::string prov);
    static IdentityCheck fail(std::string name, int n, std::string prov, std::string witness);
    static IdentityCheck skip(std::string name, int n, std::string reason);
};

/// Lazily computed brute-force tables shared between checks in one run.
class TableCache {
public:
    explicit TableCache(int jobs = 1) : jobs_(jobs) {}
    const RefinedTable& get(SymmetryClass cls, int order, BoundaryStat stat);
    // inject a precomputed (or deliberately corrupted, in tests) table
    void prime(RefinedTable t);
    int jobs() const { return jobs_; }

private:
    int jobs_;
    std::mutex mu_;
    std::map<std::tuple<SymmetryClass, int, BoundaryStat>, RefinedTable> tables_;
};

// Theorem registry; each returns one record per verified instance/equation.
std::vector<IdentityCheck> check_vsasm(int n, TableCache& tc);   // product formula + shift/generating links to OS
std::vector<IdentityCheck> check_vh_4n3(int n, TableCache& tc);  // VHS generating identity, order 4n+3
std::vector<IdentityCheck> check_vh_4n1(int n, TableCache& tc);  // VHS generating identity, order 4n+1
std::vector<IdentityCheck> check_schur(int n, TableCache& tc, uint64_t seed);
std::vector<IdentityCheck> check_vhp(int n, TableCache& tc);     // perverse convolutions + generating identities
std::vector<IdentityCheck> check_oo(int n, TableCache& tc);      // OOS generating identities + VHS shift links
std::vector<IdentityCheck> check_vos(int n, TableCache& tc);     // VOS generating identities + product links
std::vector<IdentityCheck> check_vos(int n, TableCache& tc, int max_order);
std::vector<IdentityCheck> check_qt(int order, TableCache& tc);  // quarter-turn convolutions, all order classes
std::vector<IdentityCheck> check_qqt(int order, TableCache& tc); // quasi-quarter-turn convolution
std::vector<IdentityCheck> check_vs_first_col(int n, TableCache& tc);  // first-column refinement of VSASMs
std::vector<IdentityCheck> check_ht_reconciliation(TableCache& tc, int max_order);
std::vector<IdentityCheck> check_partition_links(uint64_t seed);

/// Run the named identity family ("all" for everything) up to max_order.
std::vector<IdentityCheck> run_identities(const std::string& which, int max_order, uint64_t seed,
                                          int jobs);

std::vector<std::string> identity_names();

}  // namespace asmkit

#endif
