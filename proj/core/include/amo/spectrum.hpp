#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace amo {

struct RotationNumber {
    int p = 1;
    int q = 2;

    double value() const { return static_cast<double>(p) / q; }
    friend bool operator==(const RotationNumber&, const RotationNumber&) = default;
    // Orders by (q, p), the order of butterfly rows.
    friend std::strong_ordering operator<=>(const RotationNumber& a, const RotationNumber& b)
    {
        if (auto c = a.q <=> b.q; c != 0)
            return c;
        return a.p <=> b.p;
    }
};

// Throws std::domain_error unless 1 <= p < q and gcd(p, q) = 1.
RotationNumber make_rotation(int p, int q);

struct ModelParams {
    RotationNumber theta;
    double lambda = 2.0;
    std::complex<double> z1{1.0, 0.0};
    std::complex<double> z2{1.0, 0.0};
};

// Throws std::domain_error on lambda <= 0 or |z| != 1 beyond 1e-12.
void validate(const ModelParams& params);

// Dense real polynomial, coefficient of x^i at index i.
class RealPoly {
public:
    RealPoly() = default;
    explicit RealPoly(std::vector<double> coeffs);

    const std::vector<double>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    double coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0.0; }
    double max_abs_coeff() const;
    double eval(double x) const;
    RealPoly negated_argument() const;

    // "x^4 - 8x^2 + 4"; coefficients below 1e-9 of the largest are dropped.
    std::string to_string(int digits = 12) const;

private:
    std::vector<double> c_;
};

// max |a_i - b_i| / max(1, max |a_i|).
double max_coeff_deviation(const RealPoly& a, const RealPoly& b);

struct ComplexPoly {
    std::vector<std::complex<double>> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::complex<double> eval(std::complex<double> x) const;
};

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    int size() const { return n_; }
    std::complex<double>& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    const std::complex<double>& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    const std::vector<std::complex<double>>& data() const { return a_; }

private:
    int n_ = 0;
    std::vector<std::complex<double>> a_;
};

// z1 u + (z1 u)^-1 + (lambda/2)(z2 v + (z2 v)^-1), 0-based storage of the
// 1-based model: u has ones at (i, i+1) and (q, 1); v = diag(rho, ..., rho^(q-1), 1).
ComplexMatrix build_h(const ModelParams& params);

// det(xI - m) by Hessenberg reduction and the Hessenberg minor recurrence.
// Throws std::domain_error for an empty matrix or size > 512.
ComplexPoly charpoly(const ComplexMatrix& m);

// Working precision used for the spectral routes at (q, lambda) when none
// is requested: enough to absorb cancellation of order (3 + 2 lambda)^q.
unsigned spectrum_precision_bits(int q, double lambda);

// Trace of A_1(x) ... A_q(x) in polynomial arithmetic. precision_bits = 0 is automatic.
RealPoly delta_transfer(RotationNumber theta, double lambda, unsigned precision_bits = 0);
// [[a_1, ..., a_q]] + 2((-1)^q + mu^q) with a_k = x - lambda cos(2 pi k p / q);
// q >= 3, else std::domain_error.
RealPoly delta_continuant(RotationNumber theta, double lambda, unsigned precision_bits = 0);
// Delta(x) and Delta'(x) by the scalar transfer product.
std::pair<double, double> delta_at(RotationNumber theta, double lambda, double x, unsigned precision_bits = 0);

// z1^q + z1^-q + mu^q (z2^q + z2^-q), real on the torus.
double coupling_term(int q, double lambda, std::complex<double> z1, std::complex<double> z2);

struct CouplingReport {
    // +1 or -1; det(xI - h) = Delta(x) + sign * coupling_term.
    int sign = 0;
    // Largest variance over x of det(xI - h) - Delta(x) at one torus point.
    double max_variance = 0.0;
    // Largest |offset - sign * coupling_term| under the chosen sign.
    double max_residual = 0.0;
    // The same for the rejected sign.
    double rejected_residual = 0.0;
    int samples = 0;
    int q_min = 0;
    int q_max = 0;
    std::uint64_t seed = 0;
    unsigned precision_bits = 0;
};

// Samples (z1, z2) and several x per sample; samples < 8 throws std::domain_error.
// Throws no_consistent_sign if neither sign fits within 1e-8.
CouplingReport resolve_coupling_sign(RotationNumber theta, double lambda, int samples, std::uint64_t seed = 1);
// The same for every q in [2, q_max] with `samples` draws of (p, lambda, z1, z2) each.
CouplingReport resolve_coupling_sign_global(int q_max = 32, int samples = 20, std::uint64_t seed = 1);
// The global convention: resolve_coupling_sign_global() run once and cached.
int coupling_sign();
const CouplingReport& coupling_sign_report();

struct ConstantTermReport {
    RotationNumber theta;
    double lambda = 0.0;
    int sign = 0;
    double delta0 = 0.0;
    // (-1)^(q/2) 2(1 + mu^q) for even q, 0 for odd q.
    double expected_delta0 = 0.0;
    double delta0_rel_err = 0.0;
    bool delta0_ok = false;
    // Same quantity built from the phaseless diagonal lambda cos(2 pi k p / q).
    double phaseless_delta0 = 0.0;
    // Worst |det(-h) - (sign * coupling_term + expected_delta0)| over the torus samples, relative.
    double coefficient_rel_err = 0.0;
    bool coefficient_ok = false;
    int samples = 0;

    bool passed() const { return delta0_ok && coefficient_ok; }
};

ConstantTermReport constant_term_check(RotationNumber theta, double lambda, int samples = 8, std::uint64_t seed = 1,
                                       double tol = 1e-9);

struct CoeffTerm {
    int mu_power = 0;
    double computed = 0.0;
    double formula = 0.0;
    double residual = 0.0;
};

struct CoeffReport {
    RotationNumber theta;
    double lambda = 0.0;
    int k = 0;
    double computed = 0.0;
    double formula = 0.0;
    double rel_err = 0.0;
    // k = 3: the table formula is conjectural and only residuals are reported.
    bool conjectural = false;
    bool passed = false;
    // Fitted coefficients of the powers of mu against the formula (k = 2, 3).
    std::vector<CoeffTerm> terms;
};

// Table formula for the coefficient of x^(q-2k), k in {1, 2, 3}.
double coeff_formula(int k, int q, double mu, double xi, double xi2);
// Throws std::domain_error unless 1 <= k <= 3 and q > 2k.
CoeffReport coeff_check(RotationNumber theta, double lambda, int k, double tol = 1e-9);

struct BandList {
    RotationNumber theta;
    double lambda = 0.0;
    std::vector<std::pair<double, double>> intervals;
    std::vector<std::string> flags;
    unsigned precision_bits = 0;

    bool flagged() const { return !flags.empty(); }
};

// Band edges are the eigenvalues of h at z1 = z2 = 1 and z1 = z2 = exp(i pi / q),
// Newton-polished on Delta(x) = +-2(1 + mu^q). Throws numeric_breakdown when
// an edge keeps a residual above 1e-8 max(1, c).
BandList bands(RotationNumber theta, double lambda, unsigned precision_bits = 0);
// The same without throwing: a failed row comes back with flags set.
BandList try_bands(RotationNumber theta, double lambda, unsigned precision_bits = 0);

struct ButterflyConfig {
    int q_max = 50;
    double lambda = 2.0;
    unsigned jobs = 0;
    unsigned precision_bits = 0;
};

// Every reduced p/q with 2 <= q <= q_max, ordered by (q, p). A row whose band
// computation breaks down at the automatic precision is retried at a higher
// one and flagged if it still fails.
std::vector<BandList> butterfly(const ButterflyConfig& cfg);

// p,q,theta,band_index,lower,upper with 12 significant digits; a trailing flags
// column is added only when some row is flagged.
void write_csv(std::ostream& os, const std::vector<BandList>& rows);
void write_json(std::ostream& os, const std::vector<BandList>& rows);
// Energy in [-(2 + lambda), 2 + lambda] across, theta in (0, 1) down.
void write_svg(std::ostream& os, const std::vector<BandList>& rows, double lambda, int size = 1000);

// One coefficient c + c_xi xi + c_xi2 xi_2 of x^power, xi_j = 2cos(2 pi j p / q).
struct TableCoeff {
    int power = 0;
    double c = 0.0;
    double c_xi = 0.0;
    double c_xi2 = 0.0;
};

struct DeltaTableRow {
    int q = 0;
    std::string text;
    std::vector<TableCoeff> coeffs;
};

struct DeltaTableErratum {
    int q = 0;
    int power = 0;
    TableCoeff printed;
    TableCoeff corrected;
    std::string note;
};

// Delta_{p/q, 2} for q = 2..9 as printed.
const std::vector<DeltaTableRow>& printed_delta_table();
const std::vector<DeltaTableErratum>& delta_table_errata();
// The printed row with the errata applied.
DeltaTableRow corrected_delta_row(int q);
RealPoly table_row_poly(const DeltaTableRow& row, int p);

} // namespace amo
