#include "agency/synthetic.hpp"

#include <cmath>

#include "agency/errors.hpp"

namespace agency {

std::string to_string(SyntheticKind kind) {
    switch (kind) {
        case SyntheticKind::bimodal1d: return "bimodal1d";
        case SyntheticKind::curved2d_monotone: return "curved2d_monotone";
        case SyntheticKind::linear: return "linear";
        case SyntheticKind::logistic: return "logistic";
        case SyntheticKind::radial: return "radial";
    }
    return "?";
}

SyntheticKind synthetic_kind_from_string(const std::string& s) {
    if (s == "bimodal1d") return SyntheticKind::bimodal1d;
    if (s == "curved2d_monotone") return SyntheticKind::curved2d_monotone;
    if (s == "linear") return SyntheticKind::linear;
    if (s == "logistic") return SyntheticKind::logistic;
    if (s == "radial") return SyntheticKind::radial;
    throw ContractError("unknown synthetic kind '" + s + "'");
}

FeatureVector SyntheticFunction::point(std::vector<double> coords) const {
    auto sp = std::make_shared<FeatureSchema>(schema());
    return FeatureVector(std::move(sp), std::move(coords));
}

double SyntheticFunction::value_at(const std::vector<double>& coords) const {
    return evaluate(*this, point(coords));
}

namespace {

SchemaPtr box_schema(const std::vector<double>& lo, const std::vector<double>& hi) {
    std::vector<FeatureSpec> specs;
    for (std::size_t i = 0; i < lo.size(); ++i)
        specs.push_back(FeatureSpec::numeric("x" + std::to_string(i), lo[i], hi[i]));
    return std::make_shared<FeatureSchema>(std::move(specs));
}

std::vector<double> get_vec(const nlohmann::json& p, const std::string& key) {
    return p.at(key).get<std::vector<double>>();
}

class BimodalFn : public SyntheticFunction {
public:
    explicit BimodalFn(const nlohmann::json& p)
        : base_(p.at("base").get<double>()),
          lc_(p.at("left_center").get<double>()),
          lh_(p.at("left_height").get<double>()),
          ls_(p.at("left_sigma").get<double>()),
          rc_(p.at("right_center").get<double>()),
          rh_(p.at("right_height").get<double>()),
          rs_(p.at("right_sigma").get<double>()),
          start_{p.at("start").get<double>()} {
        double lo = p.at("min").get<double>();
        double hi = p.at("max").get<double>();
        schema_ = box_schema({lo}, {hi});
        if (base_ <= 0 || lh_ <= 0 || rh_ <= 0 || ls_ <= 0 || rs_ <= 0)
            throw ContractError("bimodal1d: base, heights and sigmas must be positive");
        validate_shape(lo, hi);
    }

    double mixture(double x) const {
        double dl = (x - lc_) / ls_;
        double dr = (x - rc_) / rs_;
        return base_ + lh_ * std::exp(-0.5 * dl * dl) + rh_ * std::exp(-0.5 * dr * dr);
    }

    double evaluate_raw(const FeatureVector& x) const override { return mixture(x[0]); }
    const FeatureSchema& schema() const override { return *schema_; }
    std::string name() const override { return "bimodal1d"; }
    SyntheticKind kind() const override { return SyntheticKind::bimodal1d; }
    const std::vector<double>& start() const override { return start_; }

private:
    void validate_shape(double lo, double hi) const {
        // Scan the box for strict local maxima of the mixture.
        const int n = 4000;
        std::vector<double> xs(n + 1), vs(n + 1);
        for (int i = 0; i <= n; ++i) {
            xs[i] = lo + (hi - lo) * i / n;
            vs[i] = mixture(xs[i]);
        }
        std::vector<double> maxima_x, maxima_v;
        for (int i = 1; i < n; ++i) {
            if (vs[i] > vs[i - 1] && vs[i] > vs[i + 1]) {
                maxima_x.push_back(xs[i]);
                maxima_v.push_back(vs[i]);
            }
        }
        if (maxima_x.size() != 2)
            throw ContractError("bimodal1d: expected exactly 2 local maxima, found " +
                                std::to_string(maxima_x.size()));
        if (maxima_v[0] == maxima_v[1])
            throw ContractError("bimodal1d: the two peaks may not have equal heights");
        std::size_t higher = maxima_v[0] > maxima_v[1] ? 0 : 1;
        double d_hi = std::abs(maxima_x[higher] - start_[0]);
        double d_lo = std::abs(maxima_x[1 - higher] - start_[0]);
        if (!(d_hi > d_lo))
            throw ContractError("bimodal1d: the higher peak must be farther from the start");
    }

    double base_, lc_, lh_, ls_, rc_, rh_, rs_;
    std::vector<double> start_;
    SchemaPtr schema_;
};

// Monotone in both coordinates, but investment in y pays off superlinearly
// and is amplified by x, so the gradient field bends.
class Curved2dFn : public SyntheticFunction {
public:
    explicit Curved2dFn(const nlohmann::json& p)
        : base_(p.at("base").get<double>()),
          slope_x_(p.at("slope_x").get<double>()),
          gain_y_(p.at("gain_y").get<double>()),
          y_scale_(p.at("y_scale").get<double>()),
          couple_(p.at("couple").get<double>()),
          x_scale_(p.at("x_scale").get<double>()),
          start_(get_vec(p, "start")) {
        auto lo = get_vec(p, "min");
        auto hi = get_vec(p, "max");
        if (lo.size() != 2 || hi.size() != 2 || start_.size() != 2)
            throw ContractError("curved2d_monotone: expects 2-dimensional box and start");
        schema_ = box_schema(lo, hi);
        if (base_ <= 0 || slope_x_ <= 0 || gain_y_ < 0 || y_scale_ <= 0 || couple_ < 0 ||
            x_scale_ <= 0)
            throw ContractError("curved2d_monotone: parameters violate monotone shape");
    }

    double evaluate_raw(const FeatureVector& v) const override {
        double x = v[0], y = v[1];
        double u = y / y_scale_;
        return base_ + slope_x_ * x + gain_y_ * u * u * u * u * (1.0 + couple_ * x / x_scale_);
    }
    const FeatureSchema& schema() const override { return *schema_; }
    std::string name() const override { return "curved2d_monotone"; }
    SyntheticKind kind() const override { return SyntheticKind::curved2d_monotone; }
    const std::vector<double>& start() const override { return start_; }

private:
    double base_, slope_x_, gain_y_, y_scale_, couple_, x_scale_;
    std::vector<double> start_;
    SchemaPtr schema_;
};

class LinearSyntheticFn : public SyntheticFunction {
public:
    explicit LinearSyntheticFn(const nlohmann::json& p)
        : weights_(get_vec(p, "weights")),
          intercept_(p.at("intercept").get<double>()),
          start_(get_vec(p, "start")) {
        auto lo = get_vec(p, "min");
        auto hi = get_vec(p, "max");
        if (lo.size() != weights_.size() || hi.size() != weights_.size() ||
            start_.size() != weights_.size())
            throw ContractError("linear: weights/box/start dimensions disagree");
        schema_ = box_schema(lo, hi);
        // Positivity over the whole box reduces to the worst corner.
        double worst = intercept_;
        for (std::size_t i = 0; i < weights_.size(); ++i)
            worst += std::min(weights_[i] * lo[i], weights_[i] * hi[i]);
        if (worst <= 0)
            throw ContractError("linear: function not positive over its domain box");
    }

    double evaluate_raw(const FeatureVector& x) const override {
        double v = intercept_;
        for (std::size_t i = 0; i < weights_.size(); ++i) v += weights_[i] * x[i];
        return v;
    }
    const FeatureSchema& schema() const override { return *schema_; }
    std::string name() const override { return "linear"; }
    SyntheticKind kind() const override { return SyntheticKind::linear; }
    const std::vector<double>& start() const override { return start_; }

private:
    std::vector<double> weights_;
    double intercept_;
    std::vector<double> start_;
    SchemaPtr schema_;
};

class LogisticFn : public SyntheticFunction {
public:
    explicit LogisticFn(const nlohmann::json& p)
        : weights_(get_vec(p, "weights")),
          bias_(p.at("bias").get<double>()),
          scale_(p.at("scale").get<double>()),
          offset_(p.at("offset").get<double>()),
          start_(get_vec(p, "start")) {
        auto lo = get_vec(p, "min");
        auto hi = get_vec(p, "max");
        if (lo.size() != weights_.size() || hi.size() != weights_.size())
            throw ContractError("logistic: weights/box dimensions disagree");
        schema_ = box_schema(lo, hi);
        if (scale_ <= 0 || offset_ < 0)
            throw ContractError("logistic: scale must be positive, offset nonnegative");
    }

    double evaluate_raw(const FeatureVector& x) const override {
        double z = bias_;
        for (std::size_t i = 0; i < weights_.size(); ++i) z += weights_[i] * x[i];
        return offset_ + scale_ / (1.0 + std::exp(-z));
    }
    const FeatureSchema& schema() const override { return *schema_; }
    std::string name() const override { return "logistic"; }
    SyntheticKind kind() const override { return SyntheticKind::logistic; }
    const std::vector<double>& start() const override { return start_; }

private:
    std::vector<double> weights_;
    double bias_, scale_, offset_;
    std::vector<double> start_;
    SchemaPtr schema_;
};

// f(x) = base + coeff * |x - center|^2: strictly increasing in the distance
// from the center, so ascent flow lines are straight rays.
class RadialFn : public SyntheticFunction {
public:
    explicit RadialFn(const nlohmann::json& p)
        : center_(get_vec(p, "center")),
          coeff_(p.at("coeff").get<double>()),
          base_(p.at("base").get<double>()),
          start_(get_vec(p, "start")) {
        auto lo = get_vec(p, "min");
        auto hi = get_vec(p, "max");
        if (lo.size() != center_.size() || hi.size() != center_.size() ||
            start_.size() != center_.size())
            throw ContractError("radial: center/box/start dimensions disagree");
        schema_ = box_schema(lo, hi);
        if (coeff_ <= 0 || base_ <= 0)
            throw ContractError("radial: coeff and base must be positive");
    }

    double evaluate_raw(const FeatureVector& x) const override {
        double r2 = 0;
        for (std::size_t i = 0; i < center_.size(); ++i) {
            double d = x[i] - center_[i];
            r2 += d * d;
        }
        return base_ + coeff_ * r2;
    }
    const FeatureSchema& schema() const override { return *schema_; }
    std::string name() const override { return "radial"; }
    SyntheticKind kind() const override { return SyntheticKind::radial; }
    const std::vector<double>& start() const override { return start_; }

private:
    std::vector<double> center_;
    double coeff_, base_;
    std::vector<double> start_;
    SchemaPtr schema_;
};

}  // namespace

SyntheticPtr make_synthetic(SyntheticKind kind, const nlohmann::json& params) {
    switch (kind) {
        case SyntheticKind::bimodal1d: return std::make_shared<BimodalFn>(params);
        case SyntheticKind::curved2d_monotone: return std::make_shared<Curved2dFn>(params);
        case SyntheticKind::linear: return std::make_shared<LinearSyntheticFn>(params);
        case SyntheticKind::logistic: return std::make_shared<LogisticFn>(params);
        case SyntheticKind::radial: return std::make_shared<RadialFn>(params);
    }
    throw ContractError("make_synthetic: bad kind");
}

nlohmann::json synthetic_preset_params(const std::string& name) {
    using json = nlohmann::json;
    if (name == "fig1_default") {
        // Left peak two unit steps from the start, right peak three steps out
        // and strictly higher.
        return json{{"base", 0.1},  {"left_center", -2.0}, {"left_height", 2.0},
                    {"left_sigma", 0.8}, {"right_center", 3.0}, {"right_height", 3.0},
                    {"right_sigma", 0.8}, {"start", 0.0}, {"min", -8.0}, {"max", 8.0}};
    }
    if (name == "fig2_default") {
        return json{{"base", 1.0},    {"slope_x", 0.2}, {"gain_y", 5.0}, {"y_scale", 6.0},
                    {"couple", 0.25}, {"x_scale", 6.0}, {"start", {0.0, 0.0}},
                    {"min", {0.0, 0.0}}, {"max", {8.0, 8.0}}};
    }
    if (name == "linear_default") {
        return json{{"weights", {0.8, 0.5}},
                    {"intercept", 16.0},
                    {"start", {0.0, 0.0}},
                    {"min", {-10.0, -10.0}},
                    {"max", {10.0, 10.0}}};
    }
    if (name == "logistic_default") {
        return json{{"weights", {0.3, 0.2}}, {"bias", -0.5}, {"scale", 10.0}, {"offset", 0.5},
                    {"start", {0.0, 0.0}},   {"min", {-10.0, -10.0}}, {"max", {10.0, 10.0}}};
    }
    if (name == "radial_default") {
        return json{{"center", {0.0, 0.0}},
                    {"coeff", 0.05},
                    {"base", 1.0},
                    {"start", {1.0, 0.5}},
                    {"min", {-10.0, -10.0}},
                    {"max", {10.0, 10.0}}};
    }
    throw ContractError("unknown synthetic preset '" + name + "'");
}

SyntheticPtr synthetic_preset(const std::string& name) {
    SyntheticKind kind;
    if (name == "fig1_default")
        kind = SyntheticKind::bimodal1d;
    else if (name == "fig2_default")
        kind = SyntheticKind::curved2d_monotone;
    else if (name == "linear_default")
        kind = SyntheticKind::linear;
    else if (name == "logistic_default")
        kind = SyntheticKind::logistic;
    else if (name == "radial_default")
        kind = SyntheticKind::radial;
    else
        throw ContractError("unknown synthetic preset '" + name + "'");
    return make_synthetic(kind, synthetic_preset_params(name));
}

std::vector<std::string> synthetic_preset_names() {
    return {"fig1_default", "fig2_default", "linear_default", "logistic_default",
            "radial_default"};
}

}  // namespace agency
