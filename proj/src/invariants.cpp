#include "gab/invariants.hpp"

namespace gab {

std::string Genericity::str() const {
    switch (kind) {
        case Generic: return "generic";
        case UndecidedParametric: return "undecided (parametric)";
        case RootOfUnity: {
            std::string s = "root of unity, order ";
            for (std::size_t i = 0; i < orders.size(); ++i)
                s += (i ? " or " : "") + std::to_string(orders[i]);
            return s;
        }
    }
    return "?";
}

InvariantReport invariant_report(const ScalarMatrix& A, const ScalarMatrix& B) {
    if (!A.is_square() || A.rows() != B.rows() || A.cols() != B.cols())
        throw shape_mismatch("invariant_report needs square matrices of equal size");
    if (!A.is_invertible() || !B.is_invertible()) throw singular_matrix();

    InvariantReport rep;
    ScalarMatrix schur = B.transpose() * A.transpose() * B * A;
    rep.mu = (A * B.transpose()).trace();
    if (auto lam = schur.as_scalar_multiple_of_identity(); lam && !lam->is_zero()) {
        rep.condition_ok = true;
        rep.lambda = *lam;
        rep.kappa = rep.mu * rep.mu / *lam;
        rep.genericity = genericity_of_kappa(*rep.kappa);
    }
    return rep;
}

Genericity genericity_of_kappa(const Scalar& kappa) {
    Genericity g;
    if (!kappa.is_constant()) {
        g.kind = Genericity::UndecidedParametric;
        return g;
    }
    GRat v = kappa.constant_value();
    if (!v.is_real()) return g; // non-real constant kappa: no root of unity of order >= 3
    // (q+q^{-1})^2 = 4cos^2(2πk/N) is rational for N >= 3 exactly at
    // kappa in {0,1,2,3}; kappa = 4 forces q = ±1, which is generic.
    if (v.re == 0) { g.kind = Genericity::RootOfUnity; g.orders = {4}; }
    else if (v.re == 1) { g.kind = Genericity::RootOfUnity; g.orders = {3, 6}; }
    else if (v.re == 2) { g.kind = Genericity::RootOfUnity; g.orders = {8}; }
    else if (v.re == 3) { g.kind = Genericity::RootOfUnity; g.orders = {12}; }
    return g;
}

MonoidalVerdict monoidal_equivalent(const ScalarMatrix& A, const ScalarMatrix& B,
                                    const ScalarMatrix& C, const ScalarMatrix& D) {
    MonoidalVerdict v;
    v.first = invariant_report(A, B);
    v.second = invariant_report(C, D);
    if (!v.first.condition_ok || !v.second.condition_ok)
        throw precondition_failed("a pair fails the Schur condition B^tA^tBA = lambda I");
    v.equivalent = (*v.first.kappa == *v.second.kappa);
    return v;
}

namespace {

/// Finds alpha with ref = alpha * base (entrywise), or reports the first
/// offending entry.
std::optional<Scalar> scalar_ratio(const ScalarMatrix& ref, const ScalarMatrix& base,
                                   std::string& failure) {
    std::optional<Scalar> alpha;
    for (int i = 0; i < ref.rows() && !alpha; ++i)
        for (int j = 0; j < ref.cols() && !alpha; ++j)
            if (!base.at(i, j).is_zero()) alpha = ref.at(i, j) / base.at(i, j);
    if (!alpha) {
        failure = base.is_zero() && ref.is_zero() ? "" : "base matrix is zero";
        if (failure.empty()) return Scalar(1);
        return std::nullopt;
    }
    for (int i = 0; i < ref.rows(); ++i)
        for (int j = 0; j < ref.cols(); ++j)
            if (ref.at(i, j) != *alpha * base.at(i, j)) {
                failure = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                return std::nullopt;
            }
    return alpha;
}

} // namespace

WitnessVerdict verify_iso_witness(const ScalarMatrix& A, const ScalarMatrix& B,
                                  const ScalarMatrix& C, const ScalarMatrix& D,
                                  const ScalarMatrix& P, WitnessOrientation orientation) {
    if (A.rows() != C.rows() || A.rows() != P.rows())
        throw shape_mismatch("witness sizes must agree");
    ScalarMatrix Pi = P.inverse();
    ScalarMatrix c_base, d_base;
    if (orientation == WitnessOrientation::Direct) {
        c_base = P.transpose() * A * P;
        d_base = Pi * B * Pi.transpose();
    } else {
        c_base = P.transpose() * B.inverse() * P;
        d_base = Pi * A.inverse() * Pi.transpose();
    }
    WitnessVerdict v;
    std::string fail_c, fail_d;
    auto alpha = scalar_ratio(C, c_base, fail_c);
    auto beta = scalar_ratio(D, d_base, fail_d);
    if (alpha && beta) {
        v.pass = true;
        v.alpha = *alpha;
        v.beta = *beta;
    } else {
        v.failure = !alpha ? "C mismatch at " + fail_c : "D mismatch at " + fail_d;
    }
    return v;
}

GaloisPairVerdict verify_galois_pair(const ScalarMatrix& A, const ScalarMatrix& B,
                                     const ScalarMatrix& C, const ScalarMatrix& D) {
    GaloisPairVerdict v;
    ScalarMatrix sab = B.transpose() * A.transpose() * B * A;
    ScalarMatrix scd = D.transpose() * C.transpose() * D * C;
    v.lambda_ab = sab.as_scalar_multiple_of_identity();
    v.lambda_cd = scd.as_scalar_multiple_of_identity();
    v.trace_ab = (A * B.transpose()).trace();
    v.trace_cd = (C * D.transpose()).trace();
    if (!v.lambda_ab) { v.failure = "B^tA^tBA is not scalar"; return v; }
    if (!v.lambda_cd) { v.failure = "D^tC^tDC is not scalar"; return v; }
    if (*v.lambda_ab != *v.lambda_cd) {
        v.failure = "lambda mismatch: " + v.lambda_ab->str() + " vs " + v.lambda_cd->str();
        return v;
    }
    if (v.trace_ab != v.trace_cd) {
        v.failure = "trace mismatch: " + v.trace_ab.str() + " vs " + v.trace_cd.str();
        return v;
    }
    v.pass = true;
    return v;
}

WitnessVerdict verify_galois_iso_witness(const ScalarMatrix& C1, const ScalarMatrix& D1,
                                         const ScalarMatrix& C2, const ScalarMatrix& D2,
                                         const ScalarMatrix& M) {
    if (C1.rows() != C2.rows() || C1.rows() != M.rows())
        throw shape_mismatch("witness sizes must agree");
    ScalarMatrix Mi = M.inverse();
    ScalarMatrix c_expect = Mi.transpose() * C1 * Mi;
    ScalarMatrix d_expect = M * D1 * M.transpose();
    WitnessVerdict v;
    v.alpha = Scalar(1);
    v.beta = Scalar(1);
    for (int i = 0; i < C1.rows(); ++i)
        for (int j = 0; j < C1.cols(); ++j) {
            if (C2.at(i, j) != c_expect.at(i, j)) {
                v.failure = "C2 entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                return v;
            }
            if (D2.at(i, j) != d_expect.at(i, j)) {
                v.failure = "D2 entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                return v;
            }
        }
    v.pass = true;
    return v;
}

namespace {

/// Exact rational square root, if any.
std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

ScalarMatrix basis_with_last_column(const std::vector<Scalar>& v, int n) {
    // Complete v (nonzero) to a basis: identity columns except the pivot row,
    // v as the last column.
    int pivot = 0;
    while (pivot < n && v[static_cast<std::size_t>(pivot)].is_zero()) ++pivot;
    ScalarMatrix P(n, n);
    int col = 0;
    for (int j = 0; j < n; ++j) {
        if (j == pivot) continue;
        P.at(j, col++) = Scalar(1);
    }
    for (int i = 0; i < n; ++i) P.at(i, n - 1) = v[static_cast<std::size_t>(i)];
    return P;
}

} // namespace

IsotropicResult isotropic_normalize(const ScalarMatrix& M) {
    if (!M.is_square() || M.rows() < 2) throw shape_mismatch("need a square matrix, n >= 2");
    int n = M.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!M.at(i, j).is_constant())
                throw precondition_failed("isotropic search needs parameter-free entries");
    if (!M.is_invertible()) throw singular_matrix();

    auto quad = [&](const std::vector<Scalar>& v) {
        Scalar s(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += v[static_cast<std::size_t>(i)] * M.at(i, j) * v[static_cast<std::size_t>(j)];
        return s;
    };

    // Standard basis vectors: v^tMv = M_ii.
    for (int i = 0; i < n; ++i) {
        if (M.at(i, i).is_zero()) {
            std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar(0));
            v[static_cast<std::size_t>(i)] = Scalar(1);
            return IsotropicFound{basis_with_last_column(v, n)};
        }
    }
    // Pairs e_i + t e_j: M_ii + t (M_ij + M_ji) + t^2 M_jj = 0 with rational t.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!M.at(j, j).is_rational_constant() ||
                !(M.at(i, j) + M.at(j, i)).is_rational_constant() ||
                !M.at(i, i).is_rational_constant())
                continue; // Gaussian entries: the pair search stays rational
            mpq_class a = M.at(j, j).constant_value().re; // nonzero (diagonal case above)
            mpq_class b = (M.at(i, j) + M.at(j, i)).constant_value().re;
            mpq_class c = M.at(i, i).constant_value().re;
            mpq_class disc = b * b - 4 * a * c;
            auto root = rational_sqrt(disc);
            if (!root) continue;
            std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar(0));
            v[static_cast<std::size_t>(i)] = Scalar(1);
            v[static_cast<std::size_t>(j)] = Scalar(GRat((-b + *root) / (2 * a)));
            if (!quad(v).is_zero())
                v[static_cast<std::size_t>(j)] = Scalar(GRat((-b - *root) / (2 * a)));
            if (quad(v).is_zero())
                return IsotropicFound{basis_with_last_column(v, n)};
        }
    return IsotropicNotFound{};
}

Positivity classify_positive(const Scalar& s) {
    if (s.is_constant())
        return s.is_positive_rational() ? Positivity::PositiveRational : Positivity::NotPositive;
    const Poly &num = s.num(), &den = s.den();
    if (num.terms().size() != 1 || den.terms().size() != 1) return Positivity::NotPositive;
    auto even = [](const Mono& m) {
        for (auto& [v, e] : m.powers)
            if (e % 2) return false;
        return true;
    };
    if (!even(num.leading_mono()) || !even(den.leading_mono())) return Positivity::NotPositive;
    GRat c = num.leading_coeff() / den.leading_coeff();
    if (!c.is_real() || !(c.re > 0)) return Positivity::NotPositive;
    return Positivity::ConditionallyPositive;
}

CqgVerdict cqg_condition(const ScalarMatrix& E) {
    if (!E.is_square()) throw shape_mismatch("cqg_condition needs a square matrix");
    if (!E.is_invertible()) throw singular_matrix();
    CqgVerdict v;
    ScalarMatrix Ebar = E.conj();
    auto lam = (Ebar.transpose() * E.transpose() * Ebar * E).as_scalar_multiple_of_identity();
    if (!lam) {
        v.failure = "conj(E)^t E^t conj(E) E is not a scalar matrix";
        return v;
    }
    v.lambda = *lam;
    switch (classify_positive(v.lambda)) {
        case Positivity::PositiveRational: v.pass = true; break;
        case Positivity::ConditionallyPositive: v.pass = true; v.conditionally_positive = true; break;
        case Positivity::NotPositive: v.failure = "lambda = " + v.lambda.str() + " is not positive"; break;
    }
    return v;
}

} // namespace gab
