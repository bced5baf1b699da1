#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "relupatch/rational.hpp"

namespace relupatch {

struct AffineLayer {
    RatMat weights; // out_dim x in_dim
    RatVec bias;    // out_dim

    int out_dim() const { return static_cast<int>(weights.size()); }
    int in_dim() const { return weights.empty() ? 0 : static_cast<int>(weights[0].size()); }
};

enum class Activation { ReLU, HardTanh };

using Layer = std::variant<AffineLayer, Activation>;

inline bool is_affine(const Layer& l) { return std::holds_alternative<AffineLayer>(l); }

// Sequential piecewise-affine network: affine maps interleaved with
// componentwise ReLU / HardTanh activations. First layer must be affine
// (it defines the input dimension); activations preserve dimension.
struct Network {
    std::string name;
    std::vector<Layer> layers;
    std::vector<std::string> labels; // empty = unnamed classes

    int input_dim() const;
    int output_dim() const;
    int affine_layer_count() const;
};

struct ValidationIssue {
    int layer; // -1 for network-level issues
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

ValidationReport validate_network(const Network& net);

// Throws ValidationError if the report is not ok.
void require_valid(const Network& net);

// Exact rational composition of all layers. No rounding anywhere.
RatVec forward(const Network& net, const RatVec& x);

// Smallest index attaining the maximum.
int classify(const RatVec& y);

// classify() plus the label string when the network carries labels.
std::string class_label(const Network& net, int class_index);
std::optional<int> label_index(const Network& net, const std::string& label);

// Round every weight and bias to `significand_bits` bits (ties to even,
// unbounded exponent). Structure and dimensions are unchanged; idempotent
// at fixed bit count.
Network quantize_network(const Network& net, int significand_bits);

} // namespace relupatch
