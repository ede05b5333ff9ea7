#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wectkit/metrics.hpp"
#include "wectkit/shapes.hpp"
#include "wectkit/wect.hpp"

namespace wectkit {

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double* row(std::size_t r) { return data.data() + r * cols; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }
    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

enum class SvmKernel { linear, rbf };

struct SvmConfig {
    double C = 20.0;
    SvmKernel kernel = SvmKernel::rbf;
    double gamma = 0.0;  // 0 -> 1/(cols * var(X)), the usual "scale" rule
    int max_epochs = 400;
    double tolerance = 1e-6;
};

// Soft-margin SVM trained by deterministic dual coordinate descent with the
// bias folded into the kernel (K+1), sweeping samples in index order.
struct SvmModel {
    SvmKernel kernel = SvmKernel::linear;
    double gamma = 0.0;
    std::vector<double> w;  // linear kernel
    double bias = 0.0;
    Matrix support;                // rbf kernel: rows with alpha > 0
    std::vector<double> alpha_y;   // alpha_i * y_i per support row

    double decision(const double* x, std::size_t dim) const;
    int predict(const double* x, std::size_t dim) const;  // +1 / -1
};

// Linear model minimizing 1/(2C) ||w||^2 + sum of hinge losses.
SvmModel train_svm(const Matrix& features, const std::vector<int>& labels, double C);
SvmModel train_svm(const Matrix& features, const std::vector<int>& labels,
                   const SvmConfig& config);

// Majority label among the K nearest training transforms under the WECT
// distance. K must be odd; ties at equal distance prefer the lower index.
int knn_classify(const std::vector<Wect>& train, const std::vector<int>& labels,
                 const Wect& query, int k,
                 const CurveMetric& metric = CurveMetric::L2(),
                 Aggregation aggregation = Aggregation::integral);

struct ClassifierSpec {
    enum class Method { svm, knn };

    Method method = Method::svm;
    SvmConfig svm;
    int k = 5;
    CurveMetric metric = CurveMetric::L2();
    Aggregation aggregation = Aggregation::integral;
};

struct ExperimentSpec {
    DatasetSpec class_a;
    DatasetSpec class_b;
    int n_s = 15;
    int n_v = 91;
    double t_min = 0.0;  // both 0 -> window from the grid size
    double t_max = 0.0;
    ClassifierSpec classifier;
    std::uint64_t seed = 0;
};

struct ExperimentResult {
    double accuracy = 0.0;
    int correct = 0;
    int total = 0;
    int true_a = 0, false_a = 0, true_b = 0, false_b = 0;
};

// Seed actually used for one class's dataset: mixes the experiment seed, the
// class index and the dataset's own seed, so the two classes of a control
// experiment never share a stream.
std::uint64_t effective_dataset_seed(std::uint64_t experiment_seed, int class_index,
                                     std::uint64_t dataset_seed);

// One vectorized WECT per image, rows in image order.
Matrix wect_feature_matrix(const std::vector<Image>& images, Extension extension,
                           int n_s, int n_v, double t_min, double t_max);

std::vector<Wect> wect_family(const std::vector<Image>& images, Extension extension,
                              int n_s);

// Optional reuse of generated datasets/features across experiments that
// share the same effective dataset seeds (e.g. sweeps). Not thread-safe;
// share only across sequentially run experiments.
class FeatureCache {
public:
    std::shared_ptr<const Dataset> dataset(const DatasetSpec& spec);
    std::shared_ptr<const Matrix> features(const DatasetSpec& spec, int n_s, int n_v,
                                           double t_min, double t_max);
    std::shared_ptr<const std::vector<Wect>> wects(const DatasetSpec& spec, int n_s);
    void clear();

private:
    struct Entry;
    std::vector<std::unique_ptr<Entry>> entries_;
    Entry& lookup(const std::string& key);
};

// Generates both datasets, trains on the 80% split and reports test
// accuracy. Deterministic under spec.seed.
ExperimentResult run_experiment(const ExperimentSpec& spec, FeatureCache* cache = nullptr);

// One run_experiment per direction count: uniform vs N(0.5, 0.25), average
// extension, identical seeds except for n_s.
std::vector<std::pair<int, ExperimentResult>> direction_sweep(
    const ShapeSpec& shape, const ClassifierSpec& classifier,
    const std::vector<int>& direction_counts, std::uint64_t seed,
    FeatureCache* cache = nullptr);

}  // namespace wectkit
