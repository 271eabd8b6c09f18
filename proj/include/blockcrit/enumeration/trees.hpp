#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "blockcrit/error.hpp"
#include "blockcrit/exactalg/big_rational.hpp"
#include "blockcrit/exactalg/multi_poly.hpp"

namespace blockcrit::enumeration {

using exactalg::BigInt;
using exactalg::BigRational;
using TreePoly = exactalg::MultiPoly<BigRational>;

/// Degree specification of a labelled tree on n vertices: m[i-1] vertices of
/// degree i, for i = 1 .. n-1.
class DegreeSpec {
public:
    DegreeSpec(unsigned n, std::vector<unsigned> m) : n_(n), m_(std::move(m)) {
        if (n < 2) throw ValidationError("DegreeSpec: need n >= 2, got " + std::to_string(n));
        if (m_.size() != n - 1)
            throw ValidationError("DegreeSpec: expected " + std::to_string(n - 1) + " entries, got " +
                                  std::to_string(m_.size()));
        unsigned long vertices = 0, degree_sum = 0;
        for (std::size_t i = 0; i < m_.size(); ++i) {
            vertices += m_[i];
            degree_sum += static_cast<unsigned long>(i + 1) * m_[i];
        }
        if (vertices != n)
            throw ValidationError("DegreeSpec: vertex counts sum to " + std::to_string(vertices) +
                                  ", not " + std::to_string(n));
        if (degree_sum != 2ul * n - 2)
            throw ValidationError("DegreeSpec: degrees sum to " + std::to_string(degree_sum) +
                                  ", not 2n-2 = " + std::to_string(2 * n - 2));
    }

    unsigned n() const noexcept { return n_; }
    const std::vector<unsigned>& m() const noexcept { return m_; }

private:
    unsigned n_;
    std::vector<unsigned> m_;
};

/// Labelled trees with the given degree specification:
/// (n-2)! / prod ((i-1)!)^{m_i} * n! / prod m_i!.
inline BigInt tree_count(const DegreeSpec& spec) {
    const auto& m = spec.m();
    BigInt num = exactalg::factorial(spec.n() - 2) * exactalg::factorial(spec.n());
    BigInt den = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        BigInt fi = exactalg::factorial(static_cast<unsigned>(i));
        for (unsigned k = 0; k < m[i]; ++k) den *= fi;
        den *= exactalg::factorial(m[i]);
    }
    return num / den;
}

/// U_2 .. U_nmax, built by the leaf-removal recurrence
///   U_n = x_2 U_{n-1} + sum_{i=2}^{n-2} x_{i+1} int_0^{x_1} dU_{n-1}/dx_i.
/// Element k of the result is U_{k+2}, a polynomial of arity k+1.
inline std::vector<TreePoly> tree_gf_sequence(unsigned nmax) {
    if (nmax < 2) throw ValidationError("tree_gf: need n >= 2, got " + std::to_string(nmax));
    std::vector<TreePoly> out;
    out.reserve(nmax - 1);
    TreePoly u2(1);
    u2.add_term({2}, BigRational(1, 2));
    out.push_back(std::move(u2));

    for (unsigned n = 3; n <= nmax; ++n) {
        const std::size_t arity = n - 1;
        const TreePoly prev = out.back().with_arity(arity);
        TreePoly next = TreePoly::variable(arity, 2) * prev;
        for (std::size_t i = 2; i + 2 <= n; ++i)
            next += TreePoly::variable(arity, i + 1) * integrate_var1(partial(prev, i));
        out.push_back(std::move(next));
    }
    return out;
}

inline TreePoly tree_gf(unsigned n) { return tree_gf_sequence(n).back(); }

/// The degree specification encoded by a monomial of U_n.
inline DegreeSpec spec_of_monomial(const TreePoly::Exponents& e) {
    return DegreeSpec(static_cast<unsigned>(e.size() + 1), e);
}

} // namespace blockcrit::enumeration
