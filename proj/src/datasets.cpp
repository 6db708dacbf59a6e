#include "minmaxcert/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>

namespace minmax {

namespace {

std::uint32_t read_u32(const std::vector<std::uint8_t>& bytes, size_t at) {
    if (at + 4 > bytes.size()) throw std::runtime_error("idx: truncated header");
    return (std::uint32_t(bytes[at]) << 24) | (std::uint32_t(bytes[at + 1]) << 16) |
           (std::uint32_t(bytes[at + 2]) << 8) | std::uint32_t(bytes[at + 3]);
}

void append_u32(std::vector<std::uint8_t>& bytes, std::uint32_t v) {
    bytes.push_back(static_cast<std::uint8_t>(v >> 24));
    bytes.push_back(static_cast<std::uint8_t>(v >> 16));
    bytes.push_back(static_cast<std::uint8_t>(v >> 8));
    bytes.push_back(static_cast<std::uint8_t>(v));
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

} // namespace

LabeledSet parse_idx_images(const std::vector<std::uint8_t>& bytes) {
    if (read_u32(bytes, 0) != 0x00000803u)
        throw std::runtime_error("idx: bad image magic (expected 0x00000803)");
    const std::uint32_t count = read_u32(bytes, 4);
    const std::uint32_t rows = read_u32(bytes, 8);
    const std::uint32_t cols = read_u32(bytes, 12);
    const size_t expected = 16 + size_t(count) * rows * cols;
    if (bytes.size() != expected)
        throw std::runtime_error("idx: image payload size mismatch (expected " +
                                 std::to_string(expected) + " bytes, got " +
                                 std::to_string(bytes.size()) + ")");
    LabeledSet set;
    set.rows = static_cast<int>(rows);
    set.cols = static_cast<int>(cols);
    set.d = set.rows * set.cols;
    set.points.reserve(count);
    size_t at = 16;
    for (std::uint32_t q = 0; q < count; ++q) {
        Vector img(set.d);
        for (int p = 0; p < set.d; ++p) img(p) = bytes[at++] / 255.0;
        set.points.push_back(std::move(img));
    }
    return set;
}

std::vector<int> parse_idx_labels(const std::vector<std::uint8_t>& bytes) {
    if (read_u32(bytes, 0) != 0x00000801u)
        throw std::runtime_error("idx: bad label magic (expected 0x00000801)");
    const std::uint32_t count = read_u32(bytes, 4);
    if (bytes.size() != 8 + size_t(count))
        throw std::runtime_error("idx: label payload size mismatch (expected " +
                                 std::to_string(8 + size_t(count)) + " bytes, got " +
                                 std::to_string(bytes.size()) + ")");
    std::vector<int> labels(count);
    for (std::uint32_t q = 0; q < count; ++q) labels[q] = bytes[8 + q];
    return labels;
}

std::vector<std::uint8_t> write_idx_images(const LabeledSet& set) {
    if (set.d != set.rows * set.cols)
        throw std::invalid_argument("write_idx_images: set has no image geometry");
    std::vector<std::uint8_t> bytes;
    append_u32(bytes, 0x00000803u);
    append_u32(bytes, static_cast<std::uint32_t>(set.points.size()));
    append_u32(bytes, static_cast<std::uint32_t>(set.rows));
    append_u32(bytes, static_cast<std::uint32_t>(set.cols));
    for (const auto& img : set.points)
        for (int p = 0; p < set.d; ++p) {
            const double v = std::clamp(img(p), 0.0, 1.0);
            bytes.push_back(static_cast<std::uint8_t>(std::lround(v * 255.0)));
        }
    return bytes;
}

std::vector<std::uint8_t> write_idx_labels(const std::vector<int>& labels) {
    std::vector<std::uint8_t> bytes;
    append_u32(bytes, 0x00000801u);
    append_u32(bytes, static_cast<std::uint32_t>(labels.size()));
    for (int label : labels) {
        if (label < 0 || label > 255)
            throw std::invalid_argument("write_idx_labels: label out of byte range");
        bytes.push_back(static_cast<std::uint8_t>(label));
    }
    return bytes;
}

LabeledSet load_idx(const std::string& image_path, const std::string& label_path) {
    LabeledSet set = parse_idx_images(read_file(image_path));
    set.labels = parse_idx_labels(read_file(label_path));
    if (set.labels.size() != set.points.size())
        throw std::runtime_error("idx: image/label counts differ");
    return set;
}

void save_idx(const LabeledSet& set, const std::string& image_path,
              const std::string& label_path) {
    write_file(image_path, write_idx_images(set));
    write_file(label_path, write_idx_labels(set.labels));
}

LabeledSet filter_binary(const LabeledSet& set, int class_a, int class_b) {
    if (set.points.size() != set.labels.size())
        throw std::invalid_argument("filter_binary: unlabeled set");
    LabeledSet out;
    out.d = set.d;
    out.rows = set.rows;
    out.cols = set.cols;
    for (size_t q = 0; q < set.points.size(); ++q)
        if (set.labels[q] == class_a || set.labels[q] == class_b) {
            out.points.push_back(set.points[q]);
            out.labels.push_back(set.labels[q]);
        }
    return out;
}

LabeledSet downsample(const LabeledSet& set, int factor) {
    if (factor < 1) throw std::invalid_argument("downsample: factor must be >= 1");
    if (set.d != set.rows * set.cols)
        throw std::invalid_argument("downsample: set has no image geometry");
    if (factor == 1) return set;
    LabeledSet out;
    out.rows = (set.rows + factor - 1) / factor;
    out.cols = (set.cols + factor - 1) / factor;
    out.d = out.rows * out.cols;
    out.labels = set.labels;
    for (const auto& img : set.points) {
        Vector pooled(out.d);
        for (int r = 0; r < out.rows; ++r)
            for (int c = 0; c < out.cols; ++c) {
                double sum = 0.0;
                int n = 0;
                for (int dr = 0; dr < factor; ++dr)
                    for (int dc = 0; dc < factor; ++dc) {
                        const int rr = r * factor + dr, cc = c * factor + dc;
                        if (rr < set.rows && cc < set.cols) {
                            sum += img(rr * set.cols + cc);
                            ++n;
                        }
                    }
                pooled(r * out.cols + c) = sum / n;
            }
        out.points.push_back(std::move(pooled));
    }
    return out;
}

LabeledSet synth_two_gaussians(std::uint64_t seed, int n, int d, double separation) {
    if (n < 0 || d < 1) throw std::invalid_argument("synth_two_gaussians: bad n or d");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    LabeledSet set;
    set.d = d;
    for (int cls = 0; cls < 2; ++cls) {
        Vector mean = Vector::Zero(d);
        mean(0) = cls == 0 ? 0.0 : separation;
        for (int q = 0; q < n; ++q) {
            Vector x(d);
            for (int r = 0; r < d; ++r) x(r) = mean(r) + noise(rng);
            set.points.push_back(std::move(x));
            set.labels.push_back(cls);
        }
    }
    return set;
}

LabeledSet synth_digit_pair(std::uint64_t seed, int count_per_class) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-1.5, 1.5);
    std::uniform_real_distribution<double> noise(0.0, 0.12);
    std::uniform_real_distribution<double> thickness(1.2, 2.0);

    LabeledSet set;
    set.rows = 28;
    set.cols = 28;
    set.d = 28 * 28;

    // stroke skeletons on the canvas: an "8" is two stacked rings, a "3" the
    // right-hand halves of the same rings
    auto render = [&](int digit) {
        const double cx = 13.5 + jitter(rng);
        const double cy_top = 9.0 + jitter(rng);
        const double cy_bot = 18.5 + jitter(rng);
        const double rad = 4.6 + 0.6 * jitter(rng);
        const double th = thickness(rng);
        Vector img = Vector::Zero(set.d);
        for (int r = 0; r < 28; ++r)
            for (int c = 0; c < 28; ++c) {
                double intensity = 0.0;
                for (double cy : {cy_top, cy_bot}) {
                    const double dist = std::hypot(c - cx, r - cy);
                    const double ring = std::abs(dist - rad);
                    // a "3" keeps only the right side of each ring
                    if (digit == 3 && c < cx - 0.5) continue;
                    intensity = std::max(intensity, std::exp(-(ring * ring) / (th * th)));
                }
                img(r * 28 + c) = std::clamp(intensity + noise(rng) - 0.06, 0.0, 1.0);
            }
        return img;
    };

    for (int q = 0; q < count_per_class; ++q) {
        set.points.push_back(render(3));
        set.labels.push_back(3);
        set.points.push_back(render(8));
        set.labels.push_back(8);
    }
    return set;
}

void write_csv(const std::string& path, const std::vector<Vector>& xs,
               const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("write_csv: size mismatch");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    const int d = xs.empty() ? 0 : static_cast<int>(xs[0].size());
    for (int r = 0; r < d; ++r) out << "x_" << (r + 1) << ",";
    out << "target\n";
    char buf[32];
    for (size_t q = 0; q < xs.size(); ++q) {
        for (int r = 0; r < d; ++r) {
            std::snprintf(buf, sizeof buf, "%.17g", xs[q](r));
            out << buf << ",";
        }
        std::snprintf(buf, sizeof buf, "%.17g", ys[q]);
        out << buf << "\n";
    }
}

} // namespace minmax
