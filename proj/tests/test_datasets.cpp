#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "minmaxcert/datasets.hpp"
#include "minmaxcert/train.hpp"

#include <cstdio>
#include <fstream>

using namespace minmax;

namespace {

LabeledSet tiny_images() {
    LabeledSet set;
    set.rows = 2;
    set.cols = 2;
    set.d = 4;
    Vector a(4), b(4);
    a << 0.0, 1.0, 0.0, 1.0;
    b << 1.0, 0.0, 1.0, 0.0;
    set.points = {a, b};
    set.labels = {3, 8};
    return set;
}

} // namespace

TEST_CASE("idx image header arithmetic") {
    std::vector<std::uint8_t> bytes = {0, 0, 8, 3, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2,
                                       0, 51, 102, 153, 204, 255, 0, 255};
    const LabeledSet set = parse_idx_images(bytes);
    CHECK(set.points.size() == 2);
    CHECK(set.rows == 2);
    CHECK(set.cols == 2);
    CHECK(set.points[0](0) == doctest::Approx(0.0));
    CHECK(set.points[0](1) == doctest::Approx(51.0 / 255.0));
    CHECK(set.points[1](1) == doctest::Approx(1.0)); // byte 255 -> exactly 1.0
    CHECK(set.points[1](2) == doctest::Approx(0.0)); // byte 0 -> exactly 0.0
}

TEST_CASE("idx label parsing") {
    std::vector<std::uint8_t> bytes = {0, 0, 8, 1, 0, 0, 0, 3, 3, 8, 5};
    const std::vector<int> labels = parse_idx_labels(bytes);
    REQUIRE(labels.size() == 3);
    CHECK(labels[0] == 3);
    CHECK(labels[1] == 8);
    CHECK(labels[2] == 5);
}

TEST_CASE("idx rejects bad magic and truncation") {
    std::vector<std::uint8_t> bad_magic = {0, 0, 8, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    CHECK_THROWS(parse_idx_images(bad_magic));
    std::vector<std::uint8_t> truncated = {0, 0, 8, 3, 0, 0, 0, 2, 0, 0, 0, 2,
                                           0, 0, 0, 2, 1, 2, 3, 4, 5, 6, 7}; // one byte short
    CHECK_THROWS_WITH_AS(parse_idx_images(truncated),
                         doctest::Contains("expected 24 bytes, got 23"), std::runtime_error);
    std::vector<std::uint8_t> short_labels = {0, 0, 8, 1, 0, 0, 0, 3, 3, 8};
    CHECK_THROWS(parse_idx_labels(short_labels));
}

TEST_CASE("idx data round-trips through the writer") {
    const LabeledSet set = synth_digit_pair(5, 3);
    const std::vector<std::uint8_t> img_bytes = write_idx_images(set);
    const std::vector<std::uint8_t> lbl_bytes = write_idx_labels(set.labels);
    const LabeledSet back = parse_idx_images(img_bytes);
    const std::vector<int> labels = parse_idx_labels(lbl_bytes);
    REQUIRE(back.points.size() == set.points.size());
    CHECK(labels == set.labels);
    for (size_t q = 0; q < set.points.size(); ++q)
        // quantization to bytes moves each pixel by at most half a level
        CHECK((back.points[q] - set.points[q]).cwiseAbs().maxCoeff() <= 0.5 / 255.0 + 1e-12);
    // a second round trip is exact: values are already on the byte lattice
    CHECK(write_idx_images(back) == img_bytes);
}

TEST_CASE("filter_binary keeps exactly the two classes") {
    LabeledSet set = tiny_images();
    set.points.push_back(Vector::Zero(4));
    set.labels.push_back(5);
    const LabeledSet filtered = filter_binary(set, 3, 8);
    REQUIRE(filtered.points.size() == 2);
    CHECK(filtered.labels == std::vector<int>{3, 8});
    const LabeledSet none = filter_binary(set, 1, 2);
    CHECK(none.points.empty());
}

TEST_CASE("downsample mean-pools and preserves range") {
    LabeledSet set;
    set.rows = 4;
    set.cols = 4;
    set.d = 16;
    Vector checker(16);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) checker(r * 4 + c) = (r + c) % 2 ? 1.0 : 0.0;
    set.points = {checker, Vector::Constant(16, 0.25)};
    set.labels = {0, 1};

    const LabeledSet same = downsample(set, 1);
    CHECK((same.points[0] - set.points[0]).norm() == 0.0);

    const LabeledSet pooled = downsample(set, 2);
    CHECK(pooled.d == 4);
    for (int p = 0; p < 4; ++p) CHECK(pooled.points[0](p) == doctest::Approx(0.5));
    for (int p = 0; p < 4; ++p) CHECK(pooled.points[1](p) == doctest::Approx(0.25));
}

TEST_CASE("two-gaussian generator is separable and deterministic") {
    const LabeledSet set = synth_two_gaussians(9, 50, 2, 10.0);
    REQUIRE(set.points.size() == 100);
    const LabeledSet again = synth_two_gaussians(9, 50, 2, 10.0);
    for (size_t q = 0; q < set.points.size(); ++q)
        CHECK((set.points[q] - again.points[q]).norm() == 0.0);

    std::vector<double> ys;
    for (int label : set.labels) ys.push_back(label == 0 ? -1.0 : 1.0);
    TrainConfig tc;
    tc.epochs = 100;
    tc.lr = 0.05;
    tc.seed = 1;
    tc.loss = Loss::Logistic;
    const TrainResult result = train(init_model(1, 2, 2, 1, -1.0, 1.0), set.points, ys, tc);
    int correct = 0;
    for (size_t q = 0; q < set.points.size(); ++q)
        if ((evaluate(result.model, set.points[q]) >= 0.0) == (set.labels[q] == 1)) ++correct;
    CHECK(correct == 100);

    CHECK(synth_two_gaussians(9, 0, 2, 10.0).points.empty());
}

TEST_CASE("synthetic digits have the expected geometry") {
    const LabeledSet set = synth_digit_pair(21, 10);
    REQUIRE(set.points.size() == 20);
    CHECK(set.d == 784);
    int threes = 0, eights = 0;
    for (size_t q = 0; q < set.points.size(); ++q) {
        CHECK(set.points[q].minCoeff() >= 0.0);
        CHECK(set.points[q].maxCoeff() <= 1.0);
        // mass on the left half separates the classes visibly
        double left = 0.0;
        for (int r = 0; r < 28; ++r)
            for (int c = 0; c < 11; ++c) left += set.points[q](r * 28 + c);
        if (set.labels[q] == 3) {
            ++threes;
            CHECK(left < 30.0);
        } else {
            ++eights;
            CHECK(left > 10.0);
        }
    }
    CHECK(threes == 10);
    CHECK(eights == 10);
}

TEST_CASE("csv export writes header and data rows") {
    const std::string path = "/tmp/minmaxcert_test_data.csv";
    std::vector<Vector> xs{Vector::Zero(2), Vector::Ones(2)};
    std::vector<double> ys{1.0, -1.0};
    write_csv(path, xs, ys);
    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "x_1,x_2,target");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
    std::remove(path.c_str());
}
