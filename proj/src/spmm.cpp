#include "capsp/spmm.hpp"

#include <cmath>

namespace capsp {

std::uint64_t sparse_mul_rounds(double rho_s, double rho_t, double rho_st, int n) {
    double num = std::cbrt(rho_s * rho_t * rho_st);
    double den = std::pow(static_cast<double>(n), 2.0 / 3.0);
    double r = num / den;
    std::uint64_t rounds = static_cast<std::uint64_t>(std::ceil(r - 1e-12));
    if (rounds == 0) rounds = 1;  // ceil of a positive quantity, at least one
    return rounds + 1;
}

TropicalMatrix sparse_minplus_mul(const TropicalMatrix& s, const TropicalMatrix& t,
                                  double rho_st_bound, RoundLedger& ledger,
                                  const std::string& label) {
    if (s.n() != t.n()) throw PreconditionViolated("sparse mul: size mismatch");
    TropicalMatrix st = minplus_mul(s, t);
    if (st.density() > rho_st_bound + 1e-9)
        throw DensityViolation(label + ": product density " + std::to_string(st.density()) +
                               " exceeds declared bound " + std::to_string(rho_st_bound));
    LedgerEntry e;
    e.label = label;
    e.rounds = sparse_mul_rounds(s.density(), t.density(), rho_st_bound, s.n());
    ledger.append(std::move(e));
    return st;
}

}  // namespace capsp
