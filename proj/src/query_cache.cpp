#include "agency/query_cache.hpp"

#include <cmath>

#include "agency/csv.hpp"
#include "agency/errors.hpp"

namespace agency {

QueryCache::QueryCache(SchemaPtr schema, std::vector<std::vector<double>> points,
                       std::vector<double> decisions, std::vector<double> weights)
    : schema_(std::move(schema)),
      points_(std::move(points)),
      decisions_(std::move(decisions)),
      weights_(std::move(weights)) {
    if (points_.empty()) throw ContractError("query cache: no points");
    if (points_.size() != decisions_.size())
        throw ContractError("query cache: points/decisions size mismatch");
    if (weights_.empty()) weights_.assign(schema_->size(), 1.0);
    if (weights_.size() != schema_->size())
        throw ContractError("query cache: weight count != schema size");
    for (std::size_t r = 0; r < points_.size(); ++r) {
        if (points_[r].size() != schema_->size())
            throw ContractError("query cache: row " + std::to_string(r + 1) +
                                " has wrong feature count");
        if (!(decisions_[r] > 0.0))
            throw ContractError("query cache: row " + std::to_string(r + 1) +
                                " has non-positive decision");
    }
    inv_range_.resize(schema_->size());
    for (std::size_t i = 0; i < schema_->size(); ++i) {
        const auto& s = schema_->at(i);
        double range = s.hi() - s.lo();
        inv_range_[i] = range > 0 ? 1.0 / range : 0.0;
    }
}

double QueryCache::distance(const FeatureVector& x, std::size_t row) const {
    double d = 0.0;
    const auto& p = points_[row];
    for (std::size_t i = 0; i < p.size(); ++i) {
        double lo = schema_->at(i).lo();
        double a = (x[i] - lo) * inv_range_[i];
        double b = (p[i] - lo) * inv_range_[i];
        d += weights_[i] * std::abs(a - b);
    }
    return d;
}

std::size_t QueryCache::nearest_index(const FeatureVector& x) const {
    std::size_t best = 0;
    double best_d = distance(x, 0);
    for (std::size_t r = 1; r < points_.size(); ++r) {
        double d = distance(x, r);
        if (d < best_d) {  // strict: ties keep the lowest row index
            best_d = d;
            best = r;
        }
    }
    return best;
}

double QueryCache::evaluate_raw(const FeatureVector& x) const {
    return decisions_[nearest_index(x)];
}

QueryCache load_query_cache(const std::string& path, SchemaPtr schema,
                            std::vector<double> weights) {
    csv::Table t = csv::read_file(path);
    if (t.rows.empty()) throw LoadError(path + ": cache has no data rows");
    if (t.header.size() != schema->size() + 1 || t.header.back() != "decision")
        throw LoadError(path + ": header must name the schema features then 'decision'");
    for (std::size_t i = 0; i < schema->size(); ++i)
        if (t.header[i] != schema->at(i).name)
            throw LoadError(path + ": header column " + std::to_string(i + 1) + " is '" +
                            t.header[i] + "', expected '" + schema->at(i).name + "'");

    std::vector<std::vector<double>> points;
    std::vector<double> decisions;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        std::vector<double> p;
        for (std::size_t i = 0; i < schema->size(); ++i) {
            auto v = csv::parse_double(row[i]);
            if (!v)
                throw LoadError(path + ": row " + std::to_string(r + 1) + ": bad value '" +
                                row[i] + "' for feature '" + schema->at(i).name + "'");
            if (!schema->value_ok(i, *v))
                throw LoadError(path + ": row " + std::to_string(r + 1) + ": feature '" +
                                schema->at(i).name + "' out of schema range");
            p.push_back(*v);
        }
        auto d = csv::parse_double(row.back());
        if (!d)
            throw LoadError(path + ": row " + std::to_string(r + 1) + ": bad decision value '" +
                            row.back() + "'");
        if (!(*d > 0.0))
            throw LoadError(path + ": row " + std::to_string(r + 1) +
                            ": decision must be positive");
        points.push_back(std::move(p));
        decisions.push_back(*d);
    }
    return QueryCache(std::move(schema), std::move(points), std::move(decisions),
                      std::move(weights));
}

}  // namespace agency
