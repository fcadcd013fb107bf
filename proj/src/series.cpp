#include "gci/series.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace gci {

namespace {

void check_finite(const Vector& v, const char* what) {
    if (!v.allFinite()) throw ValidationError(std::string(what) + " contains a non-finite value");
}

void check_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) throw ValidationError(std::string(what) + " contains a non-finite value");
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

ObservedSeries make_observed_series(Vector responses, Matrix features, int t1) {
    if (t1 < 1) throw ValidationError("need at least one future time point");
    const int t0 = static_cast<int>(responses.size());
    if (t0 < 1) throw ValidationError("need at least one observed response");
    if (features.rows() != t0 + t1)
        throw DimensionError("features must have T0 + T1 rows");
    check_finite(responses, "responses");
    check_finite(features, "features");
    return ObservedSeries{std::move(responses), std::move(features), t0, t1};
}

AugmentedSeries augment(const ObservedSeries& series, const Vector& candidate) {
    if (candidate.size() != series.t1)
        throw DimensionError("candidate length must equal T1");
    check_finite(candidate, "candidate");
    AugmentedSeries z;
    z.responses.resize(series.T());
    z.responses.head(series.t0) = series.responses;
    z.responses.tail(series.t1) = candidate;
    z.features = series.features;
    z.tail_len = series.t1;
    return z;
}

AugmentedSeries apply_permutation(const AugmentedSeries& z, const Permutation& pi) {
    if (pi.size() != z.T())
        throw DimensionError("permutation domain does not match series length");
    AugmentedSeries out;
    out.responses.resize(z.T());
    out.features.resize(z.features.rows(), z.features.cols());
    for (int t = 0; t < z.T(); ++t) {
        out.responses(t) = z.responses(pi(t));
        out.features.row(t) = z.features.row(pi(t));
    }
    out.tail_len = z.tail_len;
    return out;
}

ObservedSeries read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);

    std::string line;
    long lineno = 0;
    // skip comment lines before the header
    do {
        if (!std::getline(in, line)) throw ParseError("missing header row", lineno + 1);
        ++lineno;
    } while (!line.empty() && line[0] == '#');

    auto header = split_csv_line(line);
    if (header.size() < 3 || header[0] != "t" || header[1] != "y")
        throw ParseError("header must be t,y,x1,...,xp", lineno);
    const int p = static_cast<int>(header.size()) - 2;
    for (int j = 0; j < p; ++j)
        if (header[2 + j] != "x" + std::to_string(j + 1))
            throw ParseError("feature column " + std::to_string(j + 1) + " must be named x" +
                                 std::to_string(j + 1),
                             lineno);

    std::vector<double> ys;
    std::vector<std::vector<double>> xs;
    bool in_future = false;
    int t1 = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv_line(line);
        if (static_cast<int>(fields.size()) != p + 2)
            throw ParseError("expected " + std::to_string(p + 2) + " fields, got " +
                                 std::to_string(fields.size()),
                             lineno);
        const int expected_t = static_cast<int>(xs.size()) + 1;
        try {
            if (std::stoi(fields[0]) != expected_t)
                throw ParseError("t must be consecutive starting at 1 (expected " +
                                     std::to_string(expected_t) + ")",
                                 lineno);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("t is not an integer", lineno);
        }
        const bool empty_y = fields[1].empty();
        if (empty_y) {
            in_future = true;
            ++t1;
        } else if (in_future) {
            throw ParseError("observed row after a future (empty-y) row", lineno);
        }
        try {
            if (!empty_y) ys.push_back(std::stod(fields[1]));
            std::vector<double> row(p);
            for (int j = 0; j < p; ++j) row[j] = std::stod(fields[2 + j]);
            xs.push_back(std::move(row));
        } catch (const std::exception&) {
            throw ParseError("malformed numeric field", lineno);
        }
    }
    if (t1 == 0) throw ParseError("no future rows (empty y) found", lineno);
    if (ys.empty()) throw ParseError("no observed rows found", lineno);

    Vector responses(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) responses(i) = ys[i];
    Matrix features(xs.size(), p);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (int j = 0; j < p; ++j) features(i, j) = xs[i][j];
    return make_observed_series(std::move(responses), std::move(features), t1);
}

void write_series_csv(const std::string& path, const ObservedSeries& series,
                      const std::string& config_comment) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    if (!config_comment.empty()) out << "# " << config_comment << "\n";
    out << "t,y";
    for (int j = 1; j <= series.p(); ++j) out << ",x" << j;
    out << "\n";
    out.precision(17);
    for (int t = 0; t < series.T(); ++t) {
        out << (t + 1) << ",";
        if (t < series.t0) out << series.responses(t);
        for (int j = 0; j < series.p(); ++j) out << "," << series.features(t, j);
        out << "\n";
    }
}

}  // namespace gci
