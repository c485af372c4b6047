#pragma once

#include "gradedgeom/clifford.hpp"
#include "gradedgeom/diffop.hpp"

#include <map>

namespace gg {

// Clifford-algebra-valued polynomial in the diagonal-normal coordinates
// u1..uk: blade bits -> coefficient polynomial.
using ClPoly = std::map<uint32_t, Poly>;

void clpoly_normalize(ClPoly &p);
ClPoly clpoly_add(const ClPoly &a, const ClPoly &b);
bool clpoly_equal(const ClPoly &a, const ClPoly &b);

// Flat local model of the Getzler calculus: base coordinates u1..uk with
// weight 1 each (trivial weighting along {u = 0}), fiber Cl(R^k) with
// vertical weights v_I = -|I|. Clifford multiplication and differentiation
// both have order -1.
class GetzlerOp {
public:
    explicit GetzlerOp(int k);

    int dim() const { return k_; }
    const WeightedChart &chart() const { return chart_; }
    const std::map<std::pair<uint32_t, Exps>, Poly> &terms() const { return terms_; }

    // coeff(u) * (left Clifford multiplication by cl) * d^beta
    void add_term(const Poly &coeff, const CliffordElt &cl, Exps beta);

    GetzlerOp operator+(const GetzlerOp &o) const;
    bool operator==(const GetzlerOp &o) const { return k_ == o.k_ && terms_ == o.terms_; }

    ClPoly apply(const ClPoly &s) const;
    GetzlerOp compose(const GetzlerOp &o) const;

private:
    int k_ = 0;
    WeightedChart chart_;
    std::map<std::pair<uint32_t, Exps>, Poly> terms_;
};

// min over terms and coefficient monomials of deg_u(coeff) - |blade| - |beta|.
FiltDegree getzler_order(const GetzlerOp &D);

// Exact-order-q part with Clifford factors acting by wedge on Lambda-valued
// polynomials. Requires getzler_order(D) >= q.
class GetzlerSymbol {
public:
    explicit GetzlerSymbol(int k) : k_(k) {}
    int dim() const { return k_; }
    const std::map<std::pair<uint32_t, Exps>, Poly> &terms() const { return terms_; }
    void add_term(const Poly &coeff, uint32_t blade, Exps beta);

    // Lambda-valued polynomials share the ClPoly representation.
    ClPoly apply(const ClPoly &s) const;
    bool operator==(const GetzlerSymbol &o) const { return k_ == o.k_ && terms_ == o.terms_; }

private:
    int k_;
    std::map<std::pair<uint32_t, Exps>, Poly> terms_;
};

GetzlerSymbol getzler_symbol(const GetzlerOp &D, long q);

// The rank-2^k bundle over the u-chart carrying frame E_I with v_I = -|I|.
WeightedBundle getzler_bundle(int k);

// Left-Clifford-multiplication matrix form of D on getzler_bundle(k).
DiffOp embed_as_diffop(const GetzlerOp &D);

// Wedge-action matrix form of a symbol on getzler_bundle(k).
DiffOp embed_symbol_as_diffop(const GetzlerSymbol &S);

// Flat Dirac operator sum_a c(e_a) d/du_a.
GetzlerOp flat_dirac(int k);

} // namespace gg
