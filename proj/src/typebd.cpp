#include "hecke/typebd.hpp"

#include <string>

#include "hecke/qpoly.hpp"

namespace hecke {

namespace {

void require_argument(bool ok, const std::string& message) {
    if (!ok)
        throw precondition_error(message);
}

int reduced_power(int power, int l) {
    const int r = power % l;
    return r < 0 ? r + l : r;
}

// Is there an i in [1-n, n-1] congruent to residue mod l?
bool range_hits_residue(int n, int l, int residue) {
    const int low = 1 - n;
    const int high = n - 1;
    if (high - low + 1 >= l)
        return true;
    int first = low + reduced_power(residue - low, l);
    return first <= high;
}

std::string qspec_text(QSpec Q) {
    return std::string(Q.sign < 0 ? "-" : "+") + "q^" + std::to_string(Q.power);
}

// Reduction of a polynomial in q modulo the monic Phi_l.
IntPolynomial mod_cyclotomic(IntPolynomial value, int l) {
    const IntPolynomial& modulus = cyclotomic(l);
    while (value.degree() >= modulus.degree()) {
        const Int lead = value.coefficient(value.degree());
        value -= IntPolynomial::monomial(lead, value.degree() - modulus.degree()) * modulus;
    }
    return value;
}

// q^e reduced mod Phi_l, with e of any sign (q^l = 1 there).
IntPolynomial q_power(int e, int l) {
    return mod_cyclotomic(IntPolynomial::monomial(1, reduced_power(e, l)), l);
}

} // namespace

bool f_D_invertible(int n, int l) {
    require_argument(n >= 1, "f_D_invertible: n must be >= 1");
    require_argument(l >= 2, "f_D_invertible: l must be >= 2");
    // A factor 1 + q^i vanishes only when q^i = -1, i.e. l even and
    // i = l/2 mod l; the smallest positive such i is l/2 itself.
    if (l % 2 != 0)
        return true;
    return n - 1 < l / 2;
}

bool f_B_invertible(int n, int l, QSpec Q) {
    require_argument(n >= 1, "f_B_invertible: n must be >= 1");
    require_argument(l >= 2, "f_B_invertible: l must be >= 2");
    require_argument(Q.sign == 1 || Q.sign == -1, "f_B_invertible: sign must be +-1");
    const int m = reduced_power(Q.power, l);
    if (Q.sign < 0) {
        // -q^m + q^i = 0 iff i = m (mod l).
        return !range_hits_residue(n, l, m);
    }
    // q^m + q^i = 0 iff q^{i-m} = -1 iff l even and i = m + l/2 (mod l).
    if (l % 2 != 0)
        return true;
    return !range_hits_residue(n, l, m + l / 2);
}

bool f_D_invertible_eval(int n, int l) {
    require_argument(n >= 1, "f_D_invertible_eval: n must be >= 1");
    require_argument(l >= 2, "f_D_invertible_eval: l must be >= 2");
    IntPolynomial product = IntPolynomial::constant(2);
    for (int i = 1; i <= n - 1; ++i) {
        product *= IntPolynomial::constant(1) + q_power(i, l);
        product = mod_cyclotomic(std::move(product), l);
    }
    return !product.is_zero();
}

bool f_B_invertible_eval(int n, int l, QSpec Q) {
    require_argument(n >= 1, "f_B_invertible_eval: n must be >= 1");
    require_argument(l >= 2, "f_B_invertible_eval: l must be >= 2");
    const IntPolynomial q_value =
        IntPolynomial::constant(Q.sign) * q_power(Q.power, l);
    IntPolynomial product = IntPolynomial::constant(1);
    for (int i = 1 - n; i <= n - 1; ++i) {
        product *= q_value + q_power(i, l);
        product = mod_cyclotomic(std::move(product), l);
        if (product.is_zero())
            return false;
    }
    return !product.is_zero();
}

int morita_component(const Bipartition& bipartition) {
    return bipartition.left.size();
}

TypeBComplexity typeB_young_complexity(const Bipartition& bipartition, int l, QSpec Q) {
    const int n = bipartition.n();
    if (n >= 1 && !f_B_invertible(n, l, Q)) {
        // Name a vanishing factor for the error message.
        const int m = reduced_power(Q.power, l);
        int witness = 0;
        for (int i = 1 - n; i <= n - 1; ++i) {
            const int residue = Q.sign < 0 ? m : (l % 2 == 0 ? reduced_power(m + l / 2, l) : -1);
            if (residue >= 0 && reduced_power(i, l) == residue) {
                witness = i;
                break;
            }
        }
        throw precondition_error("typeB_young_complexity: f_" + std::to_string(n) +
                                 "(Q,q) vanishes for Q = " + qspec_text(Q) +
                                 " at the i = " + std::to_string(witness) +
                                 " factor Q + q^" + std::to_string(witness));
    }
    const int complexity = l_adic_expansion(bipartition.left, l).lambda1.size() +
                           l_adic_expansion(bipartition.right, l).lambda1.size();
    TypeBComplexity result;
    result.complexity = complexity;
    result.support = SupportDatum{n, l, complexity, n - l * complexity, complexity};
    return result;
}

int typeBD_trivial_complexity(int n, int l, ClassicalType type, std::optional<QSpec> Q) {
    require_argument(n >= 1, "typeBD_trivial_complexity: n must be >= 1");
    if (type == ClassicalType::B) {
        require_argument(Q.has_value(), "typeBD_trivial_complexity: type B needs Q");
        if (!f_B_invertible(n, l, *Q))
            throw precondition_error("typeBD_trivial_complexity: f_" + std::to_string(n) +
                                     "(Q,q) vanishes for Q = " + qspec_text(*Q));
    } else {
        if (!f_D_invertible(n, l))
            throw precondition_error("typeBD_trivial_complexity: f_" + std::to_string(n) +
                                     "(q) vanishes (l even, n - 1 >= l/2)");
    }
    return n / l;
}

int typeD_clifford_complexity(const Partition& left, const Partition& right, int l) {
    if (left.size() != right.size())
        throw precondition_error("typeD_clifford_complexity: labels must have equal size");
    return l_adic_expansion(left, l).lambda1.size() +
           l_adic_expansion(right, l).lambda1.size();
}

} // namespace hecke
