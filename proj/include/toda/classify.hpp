#pragma once

#include <optional>

#include "toda/factorize.hpp"
#include "toda/grid.hpp"

namespace toda {

enum class VerdictKind {
    Constant,
    TransferMatrix,
    InverseTransferMatrix,
    TrivialSingular,
    EmptyDomain,
};

/// Extended real number x, represented projectively by (x, 1) or (1, 0).
struct ExtendedReal {
    bool at_infinity = false;
    Rational x;

    static ExtendedReal infinity() { return {true, Rational(0)}; }
    static ExtendedReal finite(Rational v) { return {false, std::move(v)}; }

    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
        return a.at_infinity == b.at_infinity && (a.at_infinity || a.x == b.x);
    }
};

/// Classification of a canonical factorization.  TransferMatrix and
/// InverseTransferMatrix carry the couplings (L_j, P_j); TrivialSingular
/// carries the single factor plus the unique boundary point x whose
/// representative spans N(P).
struct Verdict {
    VerdictKind kind;
    std::vector<std::pair<Rational, Projection>> couplings;
    std::optional<Factor> trivial;
    std::optional<ExtendedReal> boundary;
    Int boundary_v1 = 0;
    Int boundary_v2 = 0;
};

Verdict classify(const Factorization& f);

struct HpReport {
    std::vector<std::complex<double>> grid;
    double min_eigenvalue = 0.0;
    std::complex<double> witness;
    size_t witness_index = 0;
    bool passed = true;
};

/// Samples the positivity condition i(A*(z) J A(z) - J) >= 0 over the grid.
/// Each point passes when the smaller eigenvalue of the Hermitian sample
/// matrix M(z) is at least -1e-9 * (1 + ||M||_inf); the report carries the
/// global minimum and the first grid point attaining it.
HpReport hp_min_eigen_sample(const PolyMat& a, const SampleGrid& grid);

/// Single-threaded reference implementation with the identical contract.
HpReport hp_min_eigen_sample_serial(const PolyMat& a, const SampleGrid& grid);

/// Smaller eigenvalue of M(z) = i(A*(z) J A(z) - J) at one point, plus the
/// point's pass flag; shared by both scan implementations.
void hp_point(const PolyMat& a, std::complex<double> z, double& lambda_min, bool& ok);

/// Image of the closed upper half plane under a Moebius map: a closed disk,
/// or a closed half plane in the degenerate case.  Half planes store two
/// boundary points and an interior point instead of center/radius.
struct Disk {
    bool is_half_plane = false;
    std::complex<double> center;
    double radius = 0.0;
    std::complex<double> boundary1;
    std::complex<double> boundary2;
    std::complex<double> interior;
};

/// The Weyl disk A^-1(z) * closure(C+) for z strictly in C+.
Disk weyl_disk(const PolyMat& a, const ComplexPoint& z);

bool disk_contains_point(const Disk& d, std::complex<double> w, double tol);
bool disk_contains_disk(const Disk& outer, const Disk& inner, double tol);

}  // namespace toda
