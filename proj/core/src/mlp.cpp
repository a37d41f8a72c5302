#include "sci/mlp.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <random>

#include <nlohmann/json.hpp>

#include "sci/errors.hpp"

namespace sci {

using nlohmann::json;

std::size_t TruthTable::input_width() const {
    return rows.empty() ? 0 : rows.front().inputs.size();
}

void TruthTable::validate() const {
    if (rows.empty()) throw ValidationError("truth table must not be empty");
    const std::size_t width = rows.front().inputs.size();
    if (width == 0) throw ValidationError("truth table rows must have at least one input");
    std::map<std::vector<double>, double> seen;
    for (const auto& row : rows) {
        if (row.inputs.size() != width) {
            throw ValidationError("truth table rows must share one input width");
        }
        for (double v : row.inputs) {
            if (v != 0.0 && v != 1.0) throw ValidationError("truth table inputs must be binary");
        }
        if (row.target != 0.0 && row.target != 1.0) {
            throw ValidationError("truth table targets must be binary");
        }
        auto [it, inserted] = seen.emplace(row.inputs, row.target);
        if (!inserted && it->second != row.target) {
            throw ValidationError("truth table has conflicting targets for one input row");
        }
    }
}

TruthTable rba_pair_table() {
    return TruthTable{{
        {{1, 1, 1}, 1},
        {{1, 0, 0}, 0},
        {{0, 1, 1}, 0},
        {{0, 1, 0}, 0},
        {{0, 0, 1}, 0},
        {{0, 0, 0}, 0},
    }};
}

TruthTable sba_branch_table() {
    return TruthTable{{
        {{1, 1}, 1},
        {{0, 1}, 0},
        {{0, 0}, 0},
    }};
}

TruthTable mtba_tie_table() {
    return TruthTable{{
        {{1, 1}, 1},
        {{1, 0}, 0},
        {{0, 1}, 0},
        {{0, 0}, 0},
    }};
}

const char* to_string(ModelRole role) {
    switch (role) {
        case ModelRole::Generic: return "generic";
        case ModelRole::MtbaTie: return "mtba_tie";
        case ModelRole::RbaPair: return "rba_pair";
        case ModelRole::SbaBranch: return "sba_branch";
    }
    return "?";
}

ModelRole model_role_from_string(const std::string& s) {
    if (s == "generic") return ModelRole::Generic;
    if (s == "mtba_tie") return ModelRole::MtbaTie;
    if (s == "rba_pair") return ModelRole::RbaPair;
    if (s == "sba_branch") return ModelRole::SbaBranch;
    throw ValidationError("unknown model role: " + s);
}

void MlpModel::validate() const {
    if (input_width == 0) throw ValidationError("model input width must be positive");
    if (hidden_width == 0) {
        if (!w1.empty() || !b1.empty()) {
            throw ValidationError("single-neuron model must not carry hidden weights");
        }
        if (w2.size() != input_width) {
            throw ValidationError("single-neuron weight count must equal input width");
        }
    } else {
        if (w1.size() != hidden_width * input_width || b1.size() != hidden_width ||
            w2.size() != hidden_width) {
            throw ValidationError("model weight dimensions are inconsistent");
        }
    }
    if (!(output_threshold > 0.0 && output_threshold < 1.0)) {
        throw ValidationError("output threshold must lie in (0, 1)");
    }
}

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

void check_width(const MlpModel& m, const std::vector<double>& inputs) {
    if (inputs.size() != m.input_width) {
        throw ValidationError("input width " + std::to_string(inputs.size()) +
                              " does not match model width " + std::to_string(m.input_width));
    }
    if (!m.trained()) throw ValidationError("model has no weights");
}

// Forward pass with the hidden activations exposed for backprop.
double forward(const MlpModel& m, const std::vector<double>& x, std::vector<double>* hidden) {
    if (m.hidden_width == 0) {
        double z = m.b2;
        for (std::size_t i = 0; i < m.input_width; ++i) z += m.w2[i] * x[i];
        return sigmoid(z);
    }
    std::vector<double> h(m.hidden_width);
    for (std::size_t j = 0; j < m.hidden_width; ++j) {
        double z = m.b1[j];
        const double* row = m.w1.data() + j * m.input_width;
        for (std::size_t i = 0; i < m.input_width; ++i) z += row[i] * x[i];
        h[j] = sigmoid(z);
    }
    double z = m.b2;
    for (std::size_t j = 0; j < m.hidden_width; ++j) z += m.w2[j] * h[j];
    if (hidden != nullptr) *hidden = std::move(h);
    return sigmoid(z);
}

// Uniform in [-0.5, 0.5), from the raw generator so initialization is
// reproducible across standard libraries.
double uniform_init(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
}

struct GradientBuffers {
    std::vector<double> w1, b1, w2;
    double b2 = 0.0;

    explicit GradientBuffers(const MlpModel& m)
        : w1(m.w1.size(), 0.0), b1(m.b1.size(), 0.0), w2(m.w2.size(), 0.0) {}
};

// Accumulates dL/dtheta for the mean-squared-error loss over the table.
void accumulate_gradient(const MlpModel& m, const TruthTable& table, GradientBuffers& g) {
    const double scale = 1.0 / static_cast<double>(table.rows.size());
    std::vector<double> hidden;
    for (const auto& row : table.rows) {
        const double y = forward(m, row.inputs, &hidden);
        const double delta_out = scale * 2.0 * (y - row.target) * y * (1.0 - y);
        if (m.hidden_width == 0) {
            for (std::size_t i = 0; i < m.input_width; ++i) {
                g.w2[i] += delta_out * row.inputs[i];
            }
            g.b2 += delta_out;
            continue;
        }
        for (std::size_t j = 0; j < m.hidden_width; ++j) {
            g.w2[j] += delta_out * hidden[j];
            const double delta_h = delta_out * m.w2[j] * hidden[j] * (1.0 - hidden[j]);
            double* row_grad = g.w1.data() + j * m.input_width;
            for (std::size_t i = 0; i < m.input_width; ++i) {
                row_grad[i] += delta_h * row.inputs[i];
            }
            g.b1[j] += delta_h;
        }
        g.b2 += delta_out;
    }
}

bool converged(const MlpModel& m, const TruthTable& table, double margin) {
    for (const auto& row : table.rows) {
        const double y = forward(m, row.inputs, nullptr);
        if ((y >= m.output_threshold) != (row.target >= 0.5)) return false;
        if (std::fabs(y - row.target) > margin) return false;
    }
    return true;
}

MlpModel run_training(const TruthTable& table, const TrainOptions& opts,
                      std::size_t hidden_width) {
    table.validate();
    MlpModel m;
    m.input_width = table.input_width();
    m.hidden_width = hidden_width;
    m.seed = opts.seed;
    m.learning_rate = opts.learning_rate;

    std::mt19937_64 rng(opts.seed);
    if (hidden_width == 0) {
        m.w2.resize(m.input_width);
        for (auto& w : m.w2) w = uniform_init(rng);
    } else {
        m.w1.resize(hidden_width * m.input_width);
        m.b1.resize(hidden_width);
        m.w2.resize(hidden_width);
        for (auto& w : m.w1) w = uniform_init(rng);
        for (auto& w : m.b1) w = uniform_init(rng);
        for (auto& w : m.w2) w = uniform_init(rng);
    }
    m.b2 = uniform_init(rng);

    for (std::size_t epoch = 0; epoch < opts.max_epochs; ++epoch) {
        if (converged(m, table, opts.convergence_margin)) {
            m.epochs_trained = epoch;
            m.final_loss = mse_loss(m, table);
            return m;
        }
        GradientBuffers g(m);
        accumulate_gradient(m, table, g);
        for (std::size_t i = 0; i < m.w1.size(); ++i) m.w1[i] -= opts.learning_rate * g.w1[i];
        for (std::size_t i = 0; i < m.b1.size(); ++i) m.b1[i] -= opts.learning_rate * g.b1[i];
        for (std::size_t i = 0; i < m.w2.size(); ++i) m.w2[i] -= opts.learning_rate * g.w2[i];
        m.b2 -= opts.learning_rate * g.b2;
    }
    m.epochs_trained = opts.max_epochs;
    m.final_loss = mse_loss(m, table);
    if (!converged(m, table, opts.convergence_margin)) {
        throw TrainingError("training did not converge after " +
                                std::to_string(opts.max_epochs) +
                                " epochs (loss " + std::to_string(m.final_loss) + ")",
                            m.final_loss);
    }
    return m;
}

}  // namespace

double infer_raw(const MlpModel& m, const std::vector<double>& inputs) {
    check_width(m, inputs);
    return forward(m, inputs, nullptr);
}

bool infer(const MlpModel& m, const std::vector<double>& inputs) {
    return infer_raw(m, inputs) >= m.output_threshold;
}

MlpModel train(const TruthTable& table, const TrainOptions& opts) {
    return run_training(table, opts, opts.hidden_width);
}

MlpModel train_single_neuron(const TruthTable& table, const TrainOptions& opts) {
    return run_training(table, opts, 0);
}

double mse_loss(const MlpModel& m, const TruthTable& table) {
    double sum = 0.0;
    for (const auto& row : table.rows) {
        const double err = forward(m, row.inputs, nullptr) - row.target;
        sum += err * err;
    }
    return sum / static_cast<double>(table.rows.size());
}

std::vector<double> mse_gradient(const MlpModel& m, const TruthTable& table) {
    GradientBuffers g(m);
    accumulate_gradient(m, table, g);
    std::vector<double> packed;
    packed.reserve(g.w1.size() + g.b1.size() + g.w2.size() + 1);
    packed.insert(packed.end(), g.w1.begin(), g.w1.end());
    packed.insert(packed.end(), g.b1.begin(), g.b1.end());
    packed.insert(packed.end(), g.w2.begin(), g.w2.end());
    packed.push_back(g.b2);
    return packed;
}

std::vector<double> pack_parameters(const MlpModel& m) {
    std::vector<double> packed;
    packed.reserve(m.w1.size() + m.b1.size() + m.w2.size() + 1);
    packed.insert(packed.end(), m.w1.begin(), m.w1.end());
    packed.insert(packed.end(), m.b1.begin(), m.b1.end());
    packed.insert(packed.end(), m.w2.begin(), m.w2.end());
    packed.push_back(m.b2);
    return packed;
}

void unpack_parameters(MlpModel& m, const std::vector<double>& params) {
    if (params.size() != m.w1.size() + m.b1.size() + m.w2.size() + 1) {
        throw ValidationError("parameter vector does not match model dimensions");
    }
    std::size_t at = 0;
    for (auto& w : m.w1) w = params[at++];
    for (auto& w : m.b1) w = params[at++];
    for (auto& w : m.w2) w = params[at++];
    m.b2 = params[at];
}

void save_model(const MlpModel& m, const std::string& path) {
    m.validate();
    json doc;
    doc["format"] = "sci-mlp-v1";
    doc["role"] = to_string(m.role);
    doc["input_width"] = m.input_width;
    doc["hidden_width"] = m.hidden_width;
    doc["w1"] = m.w1;
    doc["b1"] = m.b1;
    doc["w2"] = m.w2;
    doc["b2"] = m.b2;
    doc["activation"] = "sigmoid";
    doc["output_threshold"] = m.output_threshold;
    doc["meta"] = {{"seed", m.seed},
                   {"epochs", m.epochs_trained},
                   {"final_loss", m.final_loss},
                   {"learning_rate", m.learning_rate}};
    std::ofstream out(path);
    if (!out) throw IoError("cannot open model file for writing: " + path);
    out << doc.dump(2) << '\n';
    if (!out) throw IoError("failed writing model file: " + path);
}

MlpModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open model file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw IoError("malformed model file " + path + ": " + e.what());
    }
    try {
        if (doc.at("format") != "sci-mlp-v1") {
            throw IoError("unsupported model format in " + path);
        }
        if (doc.at("activation") != "sigmoid") {
            throw IoError("unsupported activation in " + path);
        }
        MlpModel m;
        m.role = model_role_from_string(doc.at("role"));
        m.input_width = doc.at("input_width");
        m.hidden_width = doc.at("hidden_width");
        m.w1 = doc.at("w1").get<std::vector<double>>();
        m.b1 = doc.at("b1").get<std::vector<double>>();
        m.w2 = doc.at("w2").get<std::vector<double>>();
        m.b2 = doc.at("b2");
        m.output_threshold = doc.at("output_threshold");
        const auto& meta = doc.at("meta");
        m.seed = meta.at("seed");
        m.epochs_trained = meta.at("epochs");
        m.final_loss = meta.at("final_loss");
        m.learning_rate = meta.at("learning_rate");
        m.validate();
        return m;
    } catch (const json::exception& e) {
        throw IoError("model file " + path + " is missing fields: " + e.what());
    }
}

}  // namespace sci
