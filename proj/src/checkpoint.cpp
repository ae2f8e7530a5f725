#include "spssot/checkpoint.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace spssot {

namespace {

constexpr uint32_t kMagic = 0x544F5053;  // "SPOT"
constexpr uint32_t kVersion = 1;

void write_u32(std::ofstream& out, uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

void write_u64(std::ofstream& out, uint64_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

uint32_t read_u32(std::ifstream& in) {
    uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}

uint64_t read_u64(std::ifstream& in) {
    uint64_t v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}

void write_layer(std::ofstream& out, const AffineLayer& layer) {
    write_u64(out, static_cast<uint64_t>(layer.W.rows()));
    write_u64(out, static_cast<uint64_t>(layer.W.cols()));
    for (long i = 0; i < layer.W.rows(); ++i)
        for (long j = 0; j < layer.W.cols(); ++j) {
            const double v = layer.W(i, j);
            out.write(reinterpret_cast<const char*>(&v), sizeof(v));
        }
    write_u64(out, static_cast<uint64_t>(layer.b.size()));
    for (long j = 0; j < layer.b.size(); ++j) {
        const double v = layer.b(j);
        out.write(reinterpret_cast<const char*>(&v), sizeof(v));
    }
}

AffineLayer read_layer(std::ifstream& in) {
    AffineLayer layer;
    const uint64_t rows = read_u64(in);
    const uint64_t cols = read_u64(in);
    if (!in || rows == 0 || cols == 0 || rows > (1ull << 24) || cols > (1ull << 24))
        throw ValidationError("corrupt checkpoint: bad layer shape");
    layer.W.resize(static_cast<long>(rows), static_cast<long>(cols));
    for (uint64_t i = 0; i < rows; ++i)
        for (uint64_t j = 0; j < cols; ++j) {
            double v = 0;
            in.read(reinterpret_cast<char*>(&v), sizeof(v));
            layer.W(static_cast<long>(i), static_cast<long>(j)) = v;
        }
    const uint64_t blen = read_u64(in);
    if (!in || blen != cols) throw ValidationError("corrupt checkpoint: bad bias length");
    layer.b.resize(static_cast<long>(blen));
    for (uint64_t j = 0; j < blen; ++j) {
        double v = 0;
        in.read(reinterpret_cast<char*>(&v), sizeof(v));
        layer.b(static_cast<long>(j)) = v;
    }
    if (!in) throw ValidationError("corrupt checkpoint: truncated layer data");
    return layer;
}

void dump_layer_text(const AffineLayer& layer, const char* kind, size_t index,
                     std::ostream& out) {
    char buf[64];
    out << kind << " layer " << index << " shape " << layer.W.rows() << "x"
        << layer.W.cols() << "\n";
    for (long i = 0; i < layer.W.rows(); ++i) {
        for (long j = 0; j < layer.W.cols(); ++j) {
            snprintf(buf, sizeof(buf), "%.17g", layer.W(i, j));
            out << (j ? " " : "") << buf;
        }
        out << "\n";
    }
    out << "bias";
    for (long j = 0; j < layer.b.size(); ++j) {
        snprintf(buf, sizeof(buf), "%.17g", layer.b(j));
        out << " " << buf;
    }
    out << "\n";
}

}  // namespace

void save_checkpoint(const ModelParams& params, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_u32(out, kMagic);
    write_u32(out, kVersion);
    write_u32(out, static_cast<uint32_t>(params.g_layers.size()));
    write_u32(out, static_cast<uint32_t>(params.f_layers.size()));
    for (const auto& layer : params.g_layers) write_layer(out, layer);
    for (const auto& layer : params.f_layers) write_layer(out, layer);
    if (!out) throw IoError("failed writing checkpoint " + path);
}

ModelParams load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    if (read_u32(in) != kMagic) throw ValidationError("not a checkpoint file: " + path);
    const uint32_t version = read_u32(in);
    if (version != kVersion)
        throw ValidationError("unsupported checkpoint version " + std::to_string(version));
    const uint32_t n_g = read_u32(in);
    const uint32_t n_f = read_u32(in);
    if (!in || n_f == 0) throw ValidationError("corrupt checkpoint header");
    ModelParams params;
    for (uint32_t l = 0; l < n_g; ++l) params.g_layers.push_back(read_layer(in));
    for (uint32_t l = 0; l < n_f; ++l) params.f_layers.push_back(read_layer(in));
    return params;
}

void dump_checkpoint_text(const ModelParams& params, std::ostream& out) {
    out << "spssot checkpoint v" << kVersion << " g_layers "
        << params.g_layers.size() << " f_layers " << params.f_layers.size() << "\n";
    for (size_t l = 0; l < params.g_layers.size(); ++l)
        dump_layer_text(params.g_layers[l], "G", l, out);
    for (size_t l = 0; l < params.f_layers.size(); ++l)
        dump_layer_text(params.f_layers[l], "F", l, out);
}

}  // namespace spssot
