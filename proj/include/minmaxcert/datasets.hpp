#pragma once

#include "minmaxcert/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace minmax {

/// Labeled point set with pixels/features scaled to [0, 1] for image data.
struct LabeledSet {
    int d = 0;
    int rows = 0; // image height when applicable, else 0
    int cols = 0;
    std::vector<Vector> points;
    std::vector<int> labels;
};

/// Big-endian IDX containers: magic 0x00000803 + (count, rows, cols) header
/// for images, 0x00000801 + count for labels. Bytes scale by 1/255 on read
/// and the inverse (rounded) on write.
LabeledSet parse_idx_images(const std::vector<std::uint8_t>& bytes);
std::vector<int> parse_idx_labels(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> write_idx_images(const LabeledSet& set);
std::vector<std::uint8_t> write_idx_labels(const std::vector<int>& labels);

LabeledSet load_idx(const std::string& image_path, const std::string& label_path);
void save_idx(const LabeledSet& set, const std::string& image_path,
              const std::string& label_path);

/// Keeps only the two classes, recording them in order (class_a first).
LabeledSet filter_binary(const LabeledSet& set, int class_a = 3, int class_b = 8);

/// Mean pooling by an integer factor; trailing rows/cols that do not fill a
/// full window are pooled over the partial window.
LabeledSet downsample(const LabeledSet& set, int factor);

/// Two spherical clusters of n points each in dimension d, means separated
/// by `separation` along the first axis, labels 0/1 by cluster.
LabeledSet synth_two_gaussians(std::uint64_t seed, int n, int d, double separation);

/// Synthetic stylized digit glyphs (classes 3 and 8) on a 28x28 canvas with
/// per-sample jitter and pixel noise; a deterministic stand-in when the real
/// corpus is not on disk.
LabeledSet synth_digit_pair(std::uint64_t seed, int count_per_class);

/// CSV rows x_1,...,x_d,target with a header line.
void write_csv(const std::string& path, const std::vector<Vector>& xs,
               const std::vector<double>& ys);

} // namespace minmax
