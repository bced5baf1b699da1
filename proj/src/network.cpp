#include "relupatch/network.hpp"

#include <algorithm>

#include "relupatch/errors.hpp"

namespace relupatch {

int Network::input_dim() const {
    if (layers.empty() || !is_affine(layers.front())) return 0;
    return std::get<AffineLayer>(layers.front()).in_dim();
}

int Network::output_dim() const {
    // Walk the dimension chain; activations preserve it.
    int dim = input_dim();
    for (const Layer& l : layers)
        if (is_affine(l)) dim = std::get<AffineLayer>(l).out_dim();
    return dim;
}

int Network::affine_layer_count() const {
    int n = 0;
    for (const Layer& l : layers)
        if (is_affine(l)) ++n;
    return n;
}

ValidationReport validate_network(const Network& net) {
    ValidationReport rep;
    auto issue = [&rep](int layer, std::string msg) {
        rep.ok = false;
        rep.issues.push_back({layer, std::move(msg)});
    };

    if (net.layers.empty()) {
        issue(-1, "no layers");
        return rep;
    }
    if (!is_affine(net.layers.front())) {
        issue(0, "first layer is not affine: input dimension undefined");
        return rep;
    }

    int dim = -1;
    for (size_t k = 0; k < net.layers.size(); ++k) {
        const Layer& l = net.layers[k];
        if (is_affine(l)) {
            const auto& aff = std::get<AffineLayer>(l);
            if (aff.weights.empty() || aff.weights[0].empty()) {
                issue(static_cast<int>(k), "affine layer with empty weight matrix");
                continue;
            }
            for (size_t r = 1; r < aff.weights.size(); ++r)
                if (aff.weights[r].size() != aff.weights[0].size()) {
                    issue(static_cast<int>(k), "ragged weight matrix");
                    break;
                }
            if (aff.bias.size() != aff.weights.size())
                issue(static_cast<int>(k), "bias length != weight row count");
            if (dim >= 0 && aff.in_dim() != dim)
                issue(static_cast<int>(k),
                      "dimension chain broken: expects input dim " + std::to_string(aff.in_dim()) +
                          ", previous layer produces " + std::to_string(dim));
            dim = aff.out_dim();
        } else {
            if (dim < 0) issue(static_cast<int>(k), "activation before any affine layer");
            // activations preserve dim
        }
    }

    if (!net.labels.empty() && rep.ok) {
        int m = net.output_dim();
        if (static_cast<int>(net.labels.size()) != m)
            issue(-1, "labels length " + std::to_string(net.labels.size()) +
                          " != output dim " + std::to_string(m));
    }
    return rep;
}

void require_valid(const Network& net) {
    ValidationReport rep = validate_network(net);
    if (rep.ok) return;
    std::string msg = "invalid network '" + net.name + "':";
    for (const auto& i : rep.issues)
        msg += " [layer " + std::to_string(i.layer) + "] " + i.message + ";";
    throw ValidationError(msg);
}

static RatVec apply_activation(Activation act, const RatVec& x) {
    RatVec y(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (act == Activation::ReLU) {
            y[i] = x[i] > 0 ? x[i] : Rat(0);
        } else {
            if (x[i] > 1)
                y[i] = Rat(1);
            else if (x[i] < -1)
                y[i] = Rat(-1);
            else
                y[i] = x[i];
        }
    }
    return y;
}

RatVec forward(const Network& net, const RatVec& x) {
    require_valid(net);
    if (static_cast<int>(x.size()) != net.input_dim())
        throw ValidationError("forward: input length " + std::to_string(x.size()) +
                              " != network input dim " + std::to_string(net.input_dim()));
    RatVec v = x;
    for (const Layer& l : net.layers) {
        if (is_affine(l)) {
            const auto& aff = std::get<AffineLayer>(l);
            v = vec_add(mat_vec_mul(aff.weights, v), aff.bias);
        } else {
            v = apply_activation(std::get<Activation>(l), v);
        }
    }
    return v;
}

int classify(const RatVec& y) {
    if (y.empty()) throw ValidationError("classify: empty output vector");
    size_t best = 0;
    for (size_t i = 1; i < y.size(); ++i)
        if (y[i] > y[best]) best = i; // strict: lowest index wins ties
    return static_cast<int>(best);
}

std::string class_label(const Network& net, int class_index) {
    if (class_index >= 0 && class_index < static_cast<int>(net.labels.size()))
        return net.labels[class_index];
    return std::to_string(class_index);
}

std::optional<int> label_index(const Network& net, const std::string& label) {
    auto it = std::find(net.labels.begin(), net.labels.end(), label);
    if (it == net.labels.end()) return std::nullopt;
    return static_cast<int>(it - net.labels.begin());
}

Network quantize_network(const Network& net, int significand_bits) {
    if (significand_bits < 1) throw std::invalid_argument("significand bits must be >= 1");
    require_valid(net);
    Network out = net;
    for (Layer& l : out.layers) {
        if (!is_affine(l)) continue;
        auto& aff = std::get<AffineLayer>(l);
        for (auto& row : aff.weights)
            for (Rat& w : row) w = round_significand(w, significand_bits);
        for (Rat& b : aff.bias) b = round_significand(b, significand_bits);
    }
    return out;
}

} // namespace relupatch
