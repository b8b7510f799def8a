#include "amo/spectrum.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace amo {

namespace {

// Values are O(1); anything below 1e-13 is rounding noise around a zero edge.
std::string fmt12(double v)
{
    if (std::fabs(v) < 1e-13)
        v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt3(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string csv_flags(const BandList& r)
{
    std::string s;
    for (const auto& f : r.flags) {
        if (!s.empty())
            s += ';';
        for (char ch : f)
            s += ch == '"' ? '\'' : ch;
    }
    return "\"" + s + "\"";
}

} // namespace

void write_csv(std::ostream& os, const std::vector<BandList>& rows)
{
    bool flagged = false;
    for (const auto& r : rows)
        flagged = flagged || r.flagged();
    os << "p,q,theta,band_index,lower,upper" << (flagged ? ",flags" : "") << '\n';
    for (const auto& r : rows) {
        const std::string head = std::to_string(r.theta.p) + "," + std::to_string(r.theta.q) + "," + fmt12(r.theta.value());
        if (r.intervals.empty() && flagged) {
            os << head << ",,,," << csv_flags(r) << '\n';
            continue;
        }
        for (std::size_t i = 0; i < r.intervals.size(); ++i) {
            os << head << ',' << i << ',' << fmt12(r.intervals[i].first) << ',' << fmt12(r.intervals[i].second);
            if (flagged)
                os << ',' << csv_flags(r);
            os << '\n';
        }
    }
}

void write_json(std::ostream& os, const std::vector<BandList>& rows)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json bands = nlohmann::json::array();
        for (const auto& [lo, hi] : r.intervals)
            bands.push_back({lo, hi});
        arr.push_back({{"p", r.theta.p}, {"q", r.theta.q}, {"lambda", r.lambda}, {"bands", bands}, {"flags", r.flags}});
    }
    os << arr.dump(1) << '\n';
}

void write_svg(std::ostream& os, const std::vector<BandList>& rows, double lambda, int size)
{
    if (size <= 0)
        throw std::domain_error("write_svg: size must be positive");
    const double e = 2.0 + lambda;
    const double s = size;
    auto px = [&](double x) { return (x + e) / (2 * e) * s; };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
       << size << ' ' << size << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    os << "<g stroke=\"black\" stroke-width=\"1\">\n";
    for (const auto& r : rows) {
        const double y = r.theta.value() * s;
        for (const auto& [lo, hi] : r.intervals) {
            double x1 = px(lo);
            double x2 = px(hi);
            // Keep narrow bands visible.
            if (x2 - x1 < 0.5) {
                const double m = 0.5 * (x1 + x2);
                x1 = m - 0.25;
                x2 = m + 0.25;
            }
            os << "<line x1=\"" << fmt3(x1) << "\" y1=\"" << fmt3(y) << "\" x2=\"" << fmt3(x2) << "\" y2=\"" << fmt3(y)
               << "\"/>\n";
        }
    }
    os << "</g>\n</svg>\n";
}

const std::vector<DeltaTableRow>& printed_delta_table()
{
    static const std::vector<DeltaTableRow> table = {
        {2, "x^2 - 4", {{2, 1, 0, 0}, {0, -4, 0, 0}}},
        {3, "x^3 - 6x", {{3, 1, 0, 0}, {1, -6, 0, 0}}},
        {4, "x^4 - 8x^2 + 4", {{4, 1, 0, 0}, {2, -8, 0, 0}, {0, 4, 0, 0}}},
        {5, "x^5 - 10x^3 + 5(3 - xi)x", {{5, 1, 0, 0}, {3, -10, 0, 0}, {1, 15, -5, 0}}},
        {6, "x^6 - 12x^4 + 6(5 - xi)x^2 - 4", {{6, 1, 0, 0}, {4, -12, 0, 0}, {2, 30, -6, 0}, {0, -4, 0, 0}}},
        {7,
         "x^7 - 14x^5 + 7(7 - xi)x^3 - 7(6 - 2xi + 2xi_2)x",
         {{7, 1, 0, 0}, {5, -14, 0, 0}, {3, 49, -7, 0}, {1, -42, 14, -14}}},
        {8,
         "x^8 - 16x^6 + 8(9 - xi)x^4 - 8(12 - 4xi + 2xi_2)x^2 + 4",
         {{8, 1, 0, 0}, {6, -16, 0, 0}, {4, 72, -8, 0}, {2, -96, 32, -16}, {0, 4, 0, 0}}},
        {9,
         "x^9 - 18x^7 + 9(11 - xi)x^5 - 9(31/3 - 6xi + 2xi_2)x^3 + 9(14 - 8xi + 3xi_2)x",
         {{9, 1, 0, 0}, {7, -18, 0, 0}, {5, 99, -9, 0}, {3, -93, 54, -18}, {1, 126, -72, 27}}},
    };
    return table;
}

const std::vector<DeltaTableErratum>& delta_table_errata()
{
    static const std::vector<DeltaTableErratum> errata = {
        {9, 3, {3, -93, 54, -18}, {3, -186, 54, -18},
         "x^3 coefficient of the q = 9 row: -9(31/3 - 6xi + 2xi_2) should read -9(62/3 - 6xi + 2xi_2)"},
    };
    return errata;
}

DeltaTableRow corrected_delta_row(int q)
{
    for (const auto& row : printed_delta_table()) {
        if (row.q != q)
            continue;
        DeltaTableRow out = row;
        for (const auto& e : delta_table_errata()) {
            if (e.q != q)
                continue;
            for (auto& c : out.coeffs)
                if (c.power == e.power)
                    c = e.corrected;
        }
        return out;
    }
    throw std::out_of_range("corrected_delta_row: no table row for q = " + std::to_string(q));
}

RealPoly table_row_poly(const DeltaTableRow& row, int p)
{
    const double xi = 2.0 * std::cos(2.0 * std::numbers::pi * p / row.q);
    const double xi2 = 2.0 * std::cos(4.0 * std::numbers::pi * p / row.q);
    std::vector<double> c(static_cast<std::size_t>(row.q) + 1, 0.0);
    for (const auto& t : row.coeffs)
        c[static_cast<std::size_t>(t.power)] += t.c + t.c_xi * xi + t.c_xi2 * xi2;
    return RealPoly(std::move(c));
}

} // namespace amo
