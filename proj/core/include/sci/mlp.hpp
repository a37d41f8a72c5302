#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sci {

/// One training row: binary inputs and a binary target, presented as
/// {0.0, 1.0} reals.
struct TruthRow {
    std::vector<double> inputs;
    double target = 0.0;

    bool operator==(const TruthRow&) const = default;
};

struct TruthTable {
    std::vector<TruthRow> rows;

    std::size_t input_width() const;
    /// Consistent widths, binary values, no duplicate inputs with
    /// conflicting targets. Throws ValidationError.
    void validate() const;
};

// Built-in training tables for the three substation decisions.
//
// The ring-pair table carries the six listed (C, A, B) rows; the two
// remaining combinations (C=1 with exactly one live side) are physically
// infeasible and are verified, not trained. Likewise the branch table
// omits the infeasible (B=1, A=0) row.
TruthTable rba_pair_table();    // inputs (C, A, B) -> pair connected
TruthTable sba_branch_table();  // inputs (B, A)    -> branch connected
TruthTable mtba_tie_table();    // inputs (equal, both-energized) -> buses tied

/// Intended use of a trained model; checked when identifying frames.
enum class ModelRole { Generic, MtbaTie, RbaPair, SbaBranch };

const char* to_string(ModelRole role);
ModelRole model_role_from_string(const std::string& s);

/// Feed-forward sigmoid network with one hidden layer, thresholded to a
/// binary output. hidden_width == 0 bypasses the hidden layer: a single
/// neuron directly on the inputs.
struct MlpModel {
    std::size_t input_width = 0;
    std::size_t hidden_width = 0;
    std::vector<double> w1;  // hidden x input, row-major
    std::vector<double> b1;  // hidden
    std::vector<double> w2;  // 1 x hidden, or 1 x input when hidden_width == 0
    double b2 = 0.0;
    double output_threshold = 0.5;
    ModelRole role = ModelRole::Generic;

    // Training metadata.
    std::uint64_t seed = 0;
    std::size_t epochs_trained = 0;
    double final_loss = 0.0;
    double learning_rate = 0.0;

    bool trained() const { return !w2.empty(); }
    void validate() const;  // dimension consistency; throws ValidationError

    bool operator==(const MlpModel&) const = default;
};

/// Sigmoid output before thresholding. Throws ValidationError on width
/// mismatch.
double infer_raw(const MlpModel& m, const std::vector<double>& inputs);

/// Thresholded binary output.
bool infer(const MlpModel& m, const std::vector<double>& inputs);

struct TrainOptions {
    std::size_t hidden_width = 4;
    std::uint64_t seed = 42;
    double learning_rate = 0.5;
    std::size_t max_epochs = 20000;
    /// Stop once every thresholded output matches its target and every raw
    /// output is within this distance of it. The margin keeps the fitted
    /// surface decisive on input combinations outside the training rows.
    double convergence_margin = 0.2;
};

/// Full-batch gradient descent on mean squared error. Deterministic for a
/// given seed. Throws TrainingError (carrying the final loss) when the
/// convergence criterion is not met within max_epochs.
MlpModel train(const TruthTable& table, const TrainOptions& opts = {});

/// Hidden layer bypassed: fits a single neuron. Tables that are not
/// linearly separable cannot converge and raise TrainingError.
MlpModel train_single_neuron(const TruthTable& table, const TrainOptions& opts = {});

// Mean squared error over the table and its analytic gradient in the
// packed parameter order (w1, b1, w2, b2). Exposed so the gradient can be
// checked against finite differences independently of the trainer.
double mse_loss(const MlpModel& m, const TruthTable& table);
std::vector<double> mse_gradient(const MlpModel& m, const TruthTable& table);
std::vector<double> pack_parameters(const MlpModel& m);
void unpack_parameters(MlpModel& m, const std::vector<double>& params);

/// Persists dimensions, weights, threshold and training metadata. A loaded
/// model reproduces inference bit for bit.
void save_model(const MlpModel& m, const std::string& path);
MlpModel load_model(const std::string& path);

}  // namespace sci
